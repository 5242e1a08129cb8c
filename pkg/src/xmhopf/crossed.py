"""Crossed modules and the arrow calculus of their associated groupoid.

A crossed module is a group homomorphism xi: E -> H with an H-action on E
that is equivariant for conjugation and satisfies the Peiffer identity.
Arrows x -> xi(e)x labelled by e in E form a groupoid; its monoidal
product, composition, and antipode are exposed arrow by arrow (the full
arrow set is never materialized).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonComposableError, NotAbelianError
from .groups import (
    FiniteGroup,
    GroupAction,
    GroupHom,
    conjugation_action,
    cyclic,
    validate_action,
    validate_group,
    validate_hom,
)
from .report import Report


@dataclass(frozen=True)
class CrossedModule:
    E: FiniteGroup
    H: FiniteGroup
    xi: GroupHom  # E -> H
    action: GroupAction  # H on E

    def xi_of(self, e: int) -> int:
        return self.xi(e)

    def act(self, x: int, e: int) -> int:
        return self.action.act(x, e)


@dataclass(frozen=True)
class GroupoidArrow:
    source: int  # element of H
    label: int  # element of E
    target: int  # element of H


def validate_crossed_module(cm: CrossedModule) -> Report:
    """Equivariance and Peiffer, with witnesses.

    Component validity (groups, hom, action) is checked separately by
    validate_components.
    """
    rep = Report("crossed module")
    E, H = cm.E, cm.H

    equi = rep.check("equivariance xi(x.e) = x xi(e) x^-1")
    for x in H.elements():
        for e in E.elements():
            if cm.xi(cm.act(x, e)) != H.conj(x, cm.xi(e)):
                equi.add(f"x={x} e={e}")

    peiffer = rep.check("Peiffer identity xi(e).f = e f e^-1")
    for e in E.elements():
        xe = cm.xi(e)
        for f in E.elements():
            if cm.act(xe, f) != E.mul(E.mul(e, f), E.inv(e)):
                peiffer.add(f"e={e} f={f}")
    return rep


def validate_components(cm: CrossedModule) -> Report:
    rep = Report("crossed module components")
    rep.merge(validate_group(cm.E))
    rep.merge(validate_group(cm.H))
    rep.merge(validate_hom(cm.xi))
    rep.merge(validate_action(cm.action))
    return rep


# -- groupoid arrows -----------------------------------------------------------


def hom_set(cm: CrossedModule, x: int, y: int) -> list[GroupoidArrow]:
    """Arrows x -> y: labels e with y = xi(e) x."""
    return [
        GroupoidArrow(x, e, y)
        for e in cm.E.elements()
        if cm.H.mul(cm.xi(e), x) == y
    ]


def identity_arrow(cm: CrossedModule, x: int) -> GroupoidArrow:
    return GroupoidArrow(x, cm.E.identity, x)


def compose(cm: CrossedModule, f: GroupoidArrow, e: GroupoidArrow) -> GroupoidArrow:
    """Composite f . e (e first); label is the E-product f.label * e.label."""
    if f.source != e.target:
        raise NonComposableError(f"compose: middle objects {f.source} and {e.target} differ")
    return GroupoidArrow(e.source, cm.E.mul(f.label, e.label), f.target)


def arrow_tensor(cm: CrossedModule, a1: GroupoidArrow, a2: GroupoidArrow) -> GroupoidArrow:
    """Monoidal product: (x -> y, e) (x) (z -> t, f) = (xz -> yt, e . (x>f))."""
    label = cm.E.mul(a1.label, cm.act(a1.source, a2.label))
    return GroupoidArrow(
        cm.H.mul(a1.source, a2.source),
        label,
        cm.H.mul(a1.target, a2.target),
    )


def arrow_antipode(cm: CrossedModule, a: GroupoidArrow) -> GroupoidArrow:
    """(x -> y, e) goes to (x^-1 -> y^-1, (x^-1)>(e^-1)); involutive."""
    return GroupoidArrow(
        cm.H.inv(a.source),
        cm.act(cm.H.inv(a.source), cm.E.inv(a.label)),
        cm.H.inv(a.target),
    )


def arrow_is_valid(cm: CrossedModule, a: GroupoidArrow) -> bool:
    return cm.H.mul(cm.xi(a.label), a.source) == a.target


# -- kernel, image, cokernel ----------------------------------------------------


@dataclass(frozen=True)
class KernelImageCokernel:
    kernel: tuple[int, ...]  # elements of E, ascending
    image: tuple[int, ...]  # elements of H, ascending
    cokernel: FiniteGroup
    projection: tuple[int, ...]  # H index -> cokernel index
    section: tuple[int, ...]  # cokernel index -> least H representative
    report: Report


def kernel_image_cokernel(cm: CrossedModule) -> KernelImageCokernel:
    """Ker(xi), Im(xi), and the quotient H / Im(xi) with canonical projection.

    For a valid crossed module the kernel is central in E and the image is
    normal in H; both facts are re-checked and reported rather than trusted.
    """
    E, H = cm.E, cm.H
    rep = Report("kernel/image/cokernel")

    kernel = tuple(sorted(e for e in E.elements() if cm.xi(e) == H.identity))
    image = tuple(sorted({cm.xi(e) for e in E.elements()}))

    central = rep.check("kernel is central in E")
    for k in kernel:
        for e in E.elements():
            if E.mul(k, e) != E.mul(e, k):
                central.add(f"k={k} e={e}")

    normal = rep.check("image is normal in H")
    image_set = set(image)
    for x in H.elements():
        for i in image:
            if H.conj(x, i) not in image_set:
                normal.add(f"x={x} i={i}")

    # cosets of the image, each named by its least element
    coset_of = {}
    reps = []
    for x in H.elements():
        if x in coset_of:
            continue
        coset = sorted(H.mul(i, x) for i in image)
        least = coset[0]
        reps.append(least)
        for y in coset:
            coset_of[y] = least
    reps.sort()
    rep_index = {r: i for i, r in enumerate(reps)}
    projection = tuple(rep_index[coset_of[x]] for x in H.elements())

    m = len(reps)
    table = tuple(
        tuple(projection[H.mul(reps[a], reps[b])] for b in range(m)) for a in range(m)
    )
    inverses = tuple(projection[H.inv(reps[a])] for a in range(m))
    coker = FiniteGroup(table, projection[H.identity], inverses)

    welldef = rep.check("projection is a homomorphism")
    for x in H.elements():
        for y in H.elements():
            if projection[H.mul(x, y)] != coker.mul(projection[x], projection[y]):
                welldef.add(f"x={x} y={y}")

    return KernelImageCokernel(kernel, image, coker, projection, tuple(reps), rep)


def coker_action_on_kernel(cm: CrossedModule) -> tuple[tuple[tuple[int, ...], ...], Report]:
    """Action of Coker(xi) on Ker(xi) induced by the H-action.

    Well-definedness (independence of the coset representative) and closure
    (the kernel is stable) are checked exhaustively.
    """
    kic = kernel_image_cokernel(cm)
    rep = Report("cokernel action on kernel")
    kernel = kic.kernel
    kpos = {k: i for i, k in enumerate(kernel)}

    closed = rep.check("kernel is stable under the H-action")
    for x in cm.H.elements():
        for k in kernel:
            if cm.act(x, k) not in kpos:
                closed.add(f"x={x} k={k}")

    welldef = rep.check("action factors through the cokernel")
    for c in range(kic.cokernel.order):
        rep_x = kic.section[c]
        for x in cm.H.elements():
            if kic.projection[x] != c:
                continue
            for k in kernel:
                if cm.act(x, k) != cm.act(rep_x, k):
                    welldef.add(f"coset {c}: x={x} vs rep {rep_x} on k={k}")

    table = tuple(
        tuple(kpos.get(cm.act(kic.section[c], k), -1) for k in kernel)
        for c in range(kic.cokernel.order)
    )
    return table, rep


# -- constructors ----------------------------------------------------------------


def trivial_over(h: FiniteGroup) -> CrossedModule:
    """1 -> H with the only possible action."""
    e = cyclic(1)
    xi = GroupHom(e, h, (h.identity,))
    action = GroupAction.trivial(h, e)
    return CrossedModule(e, h, xi, action)


def abelian_to_point(e: FiniteGroup) -> CrossedModule:
    """E -> 1 for abelian E."""
    if not e.is_abelian():
        for a in e.elements():
            for b in e.elements():
                if e.mul(a, b) != e.mul(b, a):
                    raise NotAbelianError(f"elements {a}, {b} do not commute")
    point = cyclic(1)
    xi = GroupHom(e, point, tuple(0 for _ in e.elements()))
    action = GroupAction.trivial(point, e)
    return CrossedModule(e, point, xi, action)


def inclusion(embedding: GroupHom) -> CrossedModule:
    """Normal subgroup inclusion with the conjugation action."""
    action = conjugation_action(embedding.target, embedding)
    return CrossedModule(embedding.source, embedding.target, embedding, action)


def identity_cm(g: FiniteGroup) -> CrossedModule:
    """id: G -> G with the conjugation action."""
    return inclusion(GroupHom.identity(g))
