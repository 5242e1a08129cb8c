"""Structure-document format: parsing, validation, canonical serialization.

Documents are JSON with named objects: a ground field, groups, crossed
modules, Hopf structures (explicit structure constants or constructor
directives), graded modules, Hopf modules, and candidate grouplike or
integral families.  Scalars are written "a/b" (or bare integers) over the
rationals and residues 0..p-1 over GF(p).  Serialization is canonical:
parse(serialize(d)) reproduces d exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .crossed import (
    CrossedModule,
    abelian_to_point,
    identity_cm,
    inclusion,
    trivial_over,
)
from .errors import XmhopfError
from .groups import FiniteGroup, GroupHom, cyclic, direct_product, symmetric
from .hopf import ComponentAlgebra, GradedHopfCoalgebra, compute_antipode
from .hopfmod import HopfXiModule, dual_hopf_module, trivial_hopf_module
from .linalg import Field, Matrix
from .repcat import AModule, line_module, regular_module, unit_module
from .xihopf import (
    HopfXiCoalgebra,
    mk_bicharacter_group_algebra,
    mk_from_h_action,
    mk_from_pi_coalgebra,
    mk_trivial,
)


class DocumentError(XmhopfError):
    """Base class for document-level failures."""


class DocumentSyntaxError(DocumentError):
    """Malformed document; carries the JSON path of the offending value."""

    def __init__(self, message, where="document"):
        super().__init__(f"{where}: {message}")
        self.where = where


class UnknownNameError(DocumentError):
    """A referenced name does not exist in the document."""


class FieldMismatchError(DocumentError):
    """A scalar literal that belongs to a different ground field."""


@dataclass
class StructureDocument:
    field: Field
    groups: dict = dc_field(default_factory=dict)
    crossed_modules: dict = dc_field(default_factory=dict)
    hopf: dict = dc_field(default_factory=dict)
    modules: dict = dc_field(default_factory=dict)  # name -> (hopf name, AModule)
    hopf_modules: dict = dc_field(default_factory=dict)  # name -> (hopf name, HopfXiModule)
    grouplikes: dict = dc_field(default_factory=dict)  # name -> (hopf name, family)
    integrals: dict = dc_field(default_factory=dict)  # name -> (hopf name, side, family)
    element_names: dict = dc_field(default_factory=dict)  # group name -> tuple of labels

    def element_index(self, group, label: str):
        """Resolve an element label of a known group to its index.

        Labels live only at the document boundary; the kernel is index-based.
        """
        for gname, known in self.groups.items():
            if known == group and gname in self.element_names:
                names = self.element_names[gname]
                if label in names:
                    return names.index(label)
        raise UnknownNameError(f"no element named {label!r}")

    def lookup(self, name: str):
        """Resolve a name across all sections; returns (section, object)."""
        for section in (
            "groups",
            "crossed_modules",
            "hopf",
            "modules",
            "hopf_modules",
            "grouplikes",
            "integrals",
        ):
            table = getattr(self, section)
            if name in table:
                return section, table[name]
        raise UnknownNameError(f"no object named {name!r} in the document")

    def all_names(self):
        names = []
        for section in (
            "groups",
            "crossed_modules",
            "hopf",
            "modules",
            "hopf_modules",
            "grouplikes",
            "integrals",
        ):
            names.extend(sorted(getattr(self, section).keys()))
        return names


# -- scalar and matrix parsing ------------------------------------------------------------


def _parse_scalar(f: Field, raw, where):
    try:
        return f.parse(raw)
    except ValueError as exc:
        # distinguish a literal of the other field from outright garbage
        other = Field.rational() if f.kind == "prime" else None
        if f.kind == "prime":
            try:
                other.parse(raw)
                raise FieldMismatchError(f"{where}: rational literal {raw!r} in a GF({f.p}) document")
            except ValueError:
                pass
            if isinstance(raw, int):
                raise FieldMismatchError(f"{where}: residue {raw} out of range for GF({f.p})")
        raise DocumentSyntaxError(str(exc), where)


def _parse_vector(f: Field, raw, where, length=None):
    if not isinstance(raw, list):
        raise DocumentSyntaxError("expected a list of scalars", where)
    if length is not None and len(raw) != length:
        raise DocumentSyntaxError(f"expected {length} entries, got {len(raw)}", where)
    return tuple(_parse_scalar(f, v, f"{where}[{i}]") for i, v in enumerate(raw))


def _parse_matrix(f: Field, raw, where, rows=None, cols=None) -> Matrix:
    if not isinstance(raw, list) or (raw and not all(isinstance(r, list) for r in raw)):
        raise DocumentSyntaxError("expected a row-major list of lists", where)
    if rows is not None and len(raw) != rows:
        raise DocumentSyntaxError(f"expected {rows} rows, got {len(raw)}", where)
    data = [
        [_parse_scalar(f, v, f"{where}[{i}][{j}]") for j, v in enumerate(r)]
        for i, r in enumerate(raw)
    ]
    if data and cols is not None and any(len(r) != cols for r in data):
        raise DocumentSyntaxError(f"expected {cols} columns", where)
    if rows is not None and cols is not None:
        return Matrix(f, data, rows, cols)
    return Matrix(f, data)


def _expect(raw, typ, where, what):
    if not isinstance(raw, typ):
        raise DocumentSyntaxError(f"expected {what}", where)
    return raw


# -- section parsers -------------------------------------------------------------------------


def _parse_field(raw) -> Field:
    spec = _expect(raw, dict, "field", "an object")
    kind = spec.get("kind")
    if kind == "rational":
        return Field.rational()
    if kind == "prime":
        p = spec.get("characteristic")
        if not isinstance(p, int):
            raise DocumentSyntaxError("prime field needs an integer characteristic", "field")
        try:
            return Field.prime(p)
        except ValueError as exc:
            raise DocumentSyntaxError(str(exc), "field")
    raise DocumentSyntaxError("field kind must be 'rational' or 'prime'", "field")


def _parse_group(doc: StructureDocument, name: str, raw) -> FiniteGroup:
    where = f"groups.{name}"
    spec = _expect(raw, dict, where, "an object")
    group = _parse_group_body(doc, spec, where)
    if "elements" in spec:
        labels = _expect(spec["elements"], list, f"{where}.elements", "a list of labels")
        if len(labels) != group.order or len(set(labels)) != group.order:
            raise DocumentSyntaxError("need one distinct label per element", f"{where}.elements")
        if not all(isinstance(l, str) for l in labels):
            raise DocumentSyntaxError("labels must be strings", f"{where}.elements")
        doc.element_names[name] = tuple(labels)
    return group


def _parse_group_body(doc: StructureDocument, spec, where) -> FiniteGroup:
    if "cyclic" in spec:
        return cyclic(_expect(spec["cyclic"], int, where, "an integer"))
    if "symmetric" in spec:
        return symmetric(_expect(spec["symmetric"], int, where, "an integer"))
    if "product" in spec:
        pair = _expect(spec["product"], list, where, "a pair of names")
        if len(pair) != 2:
            raise DocumentSyntaxError("product needs exactly two factors", where)
        return direct_product(_get_group(doc, pair[0], where), _get_group(doc, pair[1], where))
    if "table" in spec:
        table = _expect(spec["table"], list, where, "a multiplication table")
        n = spec.get("order", len(table))
        if n != len(table) or any(not isinstance(r, list) or len(r) != n for r in table):
            raise DocumentSyntaxError("table is not order x order", where)
        for i, row in enumerate(table):
            for j, v in enumerate(row):
                if not isinstance(v, int):
                    raise DocumentSyntaxError("table entries must be indices", f"{where}.table[{i}][{j}]")
        return FiniteGroup.from_table(table)
    raise DocumentSyntaxError("unknown group constructor", where)


def _get_group(doc: StructureDocument, name, where) -> FiniteGroup:
    if not isinstance(name, str) or name not in doc.groups:
        raise UnknownNameError(f"{where}: unknown group {name!r}")
    return doc.groups[name]


def _get_cm(doc: StructureDocument, name, where) -> CrossedModule:
    if not isinstance(name, str) or name not in doc.crossed_modules:
        raise UnknownNameError(f"{where}: unknown crossed module {name!r}")
    return doc.crossed_modules[name]


def _get_hopf(doc: StructureDocument, name, where) -> HopfXiCoalgebra:
    if not isinstance(name, str) or name not in doc.hopf:
        raise UnknownNameError(f"{where}: unknown Hopf structure {name!r}")
    return doc.hopf[name]


def _parse_int_list(raw, where, length=None):
    lst = _expect(raw, list, where, "a list of indices")
    if length is not None and len(lst) != length:
        raise DocumentSyntaxError(f"expected {length} entries", where)
    for v in lst:
        if not isinstance(v, int):
            raise DocumentSyntaxError("entries must be integers", where)
    return lst


def _parse_crossed_module(doc: StructureDocument, name: str, raw) -> CrossedModule:
    where = f"crossed_modules.{name}"
    spec = _expect(raw, dict, where, "an object")
    if "trivial_over" in spec:
        return trivial_over(_get_group(doc, spec["trivial_over"], where))
    if "to_point" in spec:
        return abelian_to_point(_get_group(doc, spec["to_point"], where))
    if "identity" in spec:
        return identity_cm(_get_group(doc, spec["identity"], where))
    if "inclusion" in spec:
        inc = _expect(spec["inclusion"], dict, where, "an object")
        src = _get_group(doc, inc.get("source"), where)
        tgt = _get_group(doc, inc.get("target"), where)
        emb = GroupHom(src, tgt, tuple(_parse_int_list(inc.get("map"), f"{where}.map", src.order)))
        return inclusion(emb)
    if "E" in spec and "H" in spec:
        e_grp = _get_group(doc, spec["E"], where)
        h_grp = _get_group(doc, spec["H"], where)
        xi = GroupHom(e_grp, h_grp, tuple(_parse_int_list(spec.get("xi"), f"{where}.xi", e_grp.order)))
        act_raw = _expect(spec.get("action"), list, f"{where}.action", "a table")
        if len(act_raw) != h_grp.order:
            raise DocumentSyntaxError("action table needs one row per H element", f"{where}.action")
        action_table = tuple(
            tuple(_parse_int_list(row, f"{where}.action[{i}]", e_grp.order))
            for i, row in enumerate(act_raw)
        )
        from .groups import GroupAction

        return CrossedModule(e_grp, h_grp, xi, GroupAction(h_grp, e_grp, action_table))
    raise DocumentSyntaxError("unknown crossed module constructor", where)


def _parse_hopf(doc: StructureDocument, name: str, raw) -> HopfXiCoalgebra:
    where = f"hopf.{name}"
    spec = _expect(raw, dict, where, "an object")
    f = doc.field
    if "trivial" in spec:
        return mk_trivial(_get_cm(doc, spec["trivial"], where), f)
    if "bicharacter" in spec:
        b = _expect(spec["bicharacter"], dict, where, "an object")
        e_grp = _get_group(doc, b.get("E"), where)
        g_grp = _get_group(doc, b.get("G"), where)
        omega_raw = _expect(b.get("omega"), list, f"{where}.omega", "a table")
        omega = [
            [_parse_scalar(f, v, f"{where}.omega[{i}][{j}]") for j, v in enumerate(row)]
            for i, row in enumerate(omega_raw)
        ]
        return mk_bicharacter_group_algebra(f, e_grp, g_grp, omega)
    if "from_h_action" in spec:
        d = _expect(spec["from_h_action"], dict, where, "an object")
        cm = _get_cm(doc, d.get("cm"), where)
        classical = _get_hopf(doc, d.get("algebra"), where)
        rho_raw = _expect(d.get("rho"), list, f"{where}.rho", "a list of matrices")
        dim = classical.dim(0)
        rho = [
            _parse_matrix(f, m, f"{where}.rho[{i}]", dim, dim) for i, m in enumerate(rho_raw)
        ]
        return mk_from_h_action(cm, classical.base, rho)
    if "from_pi_coalgebra" in spec:
        d = _expect(spec["from_pi_coalgebra"], dict, where, "an object")
        cm = _get_cm(doc, d.get("cm"), where)
        base = _get_hopf(doc, d.get("base"), where)
        return mk_from_pi_coalgebra(cm, base.base)
    # explicit structure constants
    cm = _get_cm(doc, spec.get("cm"), where)
    H = cm.H
    comps_raw = _expect(spec.get("components"), list, f"{where}.components", "a list")
    if len(comps_raw) != H.order:
        raise DocumentSyntaxError("one component per group element required", f"{where}.components")
    comps = []
    for x, c in enumerate(comps_raw):
        cw = f"{where}.components[{x}]"
        c = _expect(c, dict, cw, "an object")
        mul_raw = _expect(c.get("mul"), list, f"{cw}.mul", "a structure tensor")
        dim = len(mul_raw)
        tensor = []
        for i, plane in enumerate(mul_raw):
            plane = _expect(plane, list, f"{cw}.mul[{i}]", "a list")
            if len(plane) != dim:
                raise DocumentSyntaxError("structure tensor is not cubic", f"{cw}.mul[{i}]")
            tensor.append(
                [
                    _parse_vector(f, row, f"{cw}.mul[{i}][{j}]", dim)
                    for j, row in enumerate(plane)
                ]
            )
        unit = _parse_vector(f, c.get("unit"), f"{cw}.unit", dim)
        comps.append(ComponentAlgebra.from_structure_constants(f, tensor, unit))
    coproduct = {}
    cop_raw = _expect(spec.get("coproduct"), dict, f"{where}.coproduct", "an object keyed 'x,y'")
    for x in H.elements():
        for y in H.elements():
            key = f"{x},{y}"
            if key not in cop_raw:
                raise DocumentSyntaxError(f"missing coproduct entry {key}", f"{where}.coproduct")
            coproduct[(x, y)] = _parse_matrix(
                f,
                cop_raw[key],
                f"{where}.coproduct[{key}]",
                comps[x].dim * comps[y].dim,
                comps[H.mul(x, y)].dim,
            )
    counit = Matrix.row(f, _parse_vector(f, spec.get("counit"), f"{where}.counit", comps[H.identity].dim))
    antipode = None
    if spec.get("antipode") is not None:
        anti_raw = _expect(spec["antipode"], list, f"{where}.antipode", "a list of matrices")
        if len(anti_raw) != H.order:
            raise DocumentSyntaxError("one antipode component per group element", f"{where}.antipode")
        antipode = tuple(
            _parse_matrix(f, m, f"{where}.antipode[{x}]", comps[x].dim, comps[H.inv(x)].dim)
            for x, m in enumerate(anti_raw)
        )
    base = GradedHopfCoalgebra(f, H, tuple(comps), coproduct, counit, antipode)
    if antipode is None:
        computed = compute_antipode(base)
        if computed is not None:
            base = base.with_antipode(computed)
    act_raw = _expect(spec.get("action"), dict, f"{where}.action", "an object keyed 'x,e'")
    action = {}
    for x in H.elements():
        for e in cm.E.elements():
            key = f"{x},{e}"
            if key not in act_raw:
                raise DocumentSyntaxError(f"missing action entry {key}", f"{where}.action")
            tgt = H.mul(cm.xi_of(e), x)
            action[(x, e)] = _parse_matrix(
                f, act_raw[key], f"{where}.action[{key}]", comps[tgt].dim, comps[x].dim
            )
    return HopfXiCoalgebra(cm, base, action)


def _parse_module(doc: StructureDocument, name: str, raw):
    where = f"modules.{name}"
    spec = _expect(raw, dict, where, "an object")
    over = spec.get("over")
    a = _get_hopf(doc, over, where)
    f = doc.field
    if "line" in spec:
        d = _expect(spec["line"], dict, where, "an object")
        x = _expect(d.get("degree"), int, f"{where}.degree", "an integer")
        character = Matrix.row(
            f, _parse_vector(f, d.get("character"), f"{where}.character", a.dim(x))
        )
        return over, line_module(a, x, character)
    if "regular" in spec:
        return over, regular_module(a, _expect(spec["regular"], int, where, "an integer"))
    if spec.get("unit"):
        return over, unit_module(a)
    dims = tuple(_parse_int_list(spec.get("dims"), f"{where}.dims", a.H.order))
    act_raw = _expect(spec.get("actions"), list, f"{where}.actions", "a list of matrices")
    actions = tuple(
        _parse_matrix(f, m, f"{where}.actions[{x}]", dims[x], a.dim(x) * dims[x])
        for x, m in enumerate(act_raw)
    )
    return over, AModule(a, dims, actions)


def _parse_hopf_module(doc: StructureDocument, name: str, raw):
    where = f"hopf_modules.{name}"
    spec = _expect(raw, dict, where, "an object")
    over = spec.get("over")
    a = _get_hopf(doc, over, where)
    f = doc.field
    if "trivial" in spec:
        return over, trivial_hopf_module(a, _expect(spec["trivial"], int, where, "an integer"))
    if spec.get("dual"):
        return over, dual_hopf_module(a)
    H, E = a.H, a.E
    dims = tuple(_parse_int_list(spec.get("dims"), f"{where}.dims", H.order))
    r = tuple(
        _parse_matrix(f, m, f"{where}.r[{x}]", dims[x], a.dim(x) * dims[x])
        for x, m in enumerate(_expect(spec.get("r"), list, f"{where}.r", "a list"))
    )
    rho_raw = _expect(spec.get("rho"), dict, f"{where}.rho", "an object keyed 'x,y'")
    rho = {}
    for x in H.elements():
        for y in H.elements():
            key = f"{x},{y}"
            if key not in rho_raw:
                raise DocumentSyntaxError(f"missing coaction entry {key}", f"{where}.rho")
            rho[(x, y)] = _parse_matrix(
                f, rho_raw[key], f"{where}.rho[{key}]", a.dim(x) * dims[y], dims[H.mul(x, y)]
            )
    psi_raw = _expect(spec.get("psi"), dict, f"{where}.psi", "an object keyed 'x,e'")
    psi = {}
    for x in H.elements():
        for e in E.elements():
            key = f"{x},{e}"
            if key not in psi_raw:
                raise DocumentSyntaxError(f"missing psi entry {key}", f"{where}.psi")
            tgt = H.mul(a.cm.xi_of(e), x)
            psi[(x, e)] = _parse_matrix(f, psi_raw[key], f"{where}.psi[{key}]", dims[tgt], dims[x])
    return over, HopfXiModule(a, dims, r, rho, psi)


def _parse_grouplike(doc: StructureDocument, name: str, raw):
    where = f"grouplikes.{name}"
    spec = _expect(raw, dict, where, "an object")
    a = _get_hopf(doc, spec.get("in"), where)
    fam_raw = _expect(spec.get("family"), list, f"{where}.family", "a list of vectors")
    if len(fam_raw) != a.H.order:
        raise DocumentSyntaxError("one vector per group element required", f"{where}.family")
    family = tuple(
        _parse_vector(doc.field, v, f"{where}.family[{x}]", a.dim(x))
        for x, v in enumerate(fam_raw)
    )
    return spec.get("in"), family


def _parse_integral(doc: StructureDocument, name: str, raw):
    where = f"integrals.{name}"
    spec = _expect(raw, dict, where, "an object")
    a = _get_hopf(doc, spec.get("in"), where)
    side = spec.get("side", "left")
    if side not in ("left", "right"):
        raise DocumentSyntaxError("side must be 'left' or 'right'", where)
    fam_raw = _expect(spec.get("family"), list, f"{where}.family", "a list of covectors")
    if len(fam_raw) != a.H.order:
        raise DocumentSyntaxError("one covector per group element required", f"{where}.family")
    family = tuple(
        _parse_vector(doc.field, v, f"{where}.family[{x}]", a.dim(x))
        for x, v in enumerate(fam_raw)
    )
    return spec.get("in"), side, family


def parse(data: bytes) -> StructureDocument:
    """Parse and resolve a structure document; raises DocumentError subclasses."""
    try:
        raw = json.loads(data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DocumentSyntaxError(f"invalid JSON: {exc}", "document")
    if not isinstance(raw, dict):
        raise DocumentSyntaxError("top level must be an object", "document")
    if "field" not in raw:
        raise DocumentSyntaxError("missing field specification", "document")
    doc = StructureDocument(field=_parse_field(raw["field"]))

    seen = set()

    def claim(name, where):
        if not isinstance(name, str) or not name:
            raise DocumentSyntaxError("names must be nonempty strings", where)
        if name in seen:
            raise DocumentSyntaxError(f"duplicate name {name!r}", where)
        seen.add(name)

    for name, spec in raw.get("groups", {}).items():
        claim(name, "groups")
        doc.groups[name] = _parse_group(doc, name, spec)
    for name, spec in raw.get("crossed_modules", {}).items():
        claim(name, "crossed_modules")
        doc.crossed_modules[name] = _parse_crossed_module(doc, name, spec)
    for name, spec in raw.get("hopf", {}).items():
        claim(name, "hopf")
        doc.hopf[name] = _parse_hopf(doc, name, spec)
    for name, spec in raw.get("modules", {}).items():
        claim(name, "modules")
        doc.modules[name] = _parse_module(doc, name, spec)
    for name, spec in raw.get("hopf_modules", {}).items():
        claim(name, "hopf_modules")
        doc.hopf_modules[name] = _parse_hopf_module(doc, name, spec)
    for name, spec in raw.get("grouplikes", {}).items():
        claim(name, "grouplikes")
        doc.grouplikes[name] = _parse_grouplike(doc, name, spec)
    for name, spec in raw.get("integrals", {}).items():
        claim(name, "integrals")
        doc.integrals[name] = _parse_integral(doc, name, spec)
    return doc


# -- serialization ----------------------------------------------------------------------------


def _show_matrix(f: Field, m: Matrix):
    return [[f.show(v) for v in row] for row in m.data]


def _show_vector(f: Field, v):
    return [f.show(x) for x in v]


def _group_json(g: FiniteGroup):
    return {"order": g.order, "table": [list(r) for r in g.table]}


def _find_group_name(doc: StructureDocument, g: FiniteGroup) -> Optional[str]:
    for name, known in doc.groups.items():
        if known == g:
            return name
    return None


def serialize(doc: StructureDocument) -> bytes:
    """Canonical explicit serialization (constructor directives are materialized)."""
    f = doc.field
    out = {}
    out["field"] = (
        {"kind": "rational"} if f.kind == "rational" else {"kind": "prime", "characteristic": f.p}
    )
    groups = {}
    extra = {}

    def group_ref(g: FiniteGroup, hint: str) -> str:
        name = _find_group_name(doc, g)
        if name is not None:
            return name
        if hint in extra and extra[hint] == g:
            return hint
        n = hint
        i = 0
        while n in doc.groups or (n in extra and extra[n] != g):
            i += 1
            n = f"{hint}_{i}"
        extra[n] = g
        return n

    for name in sorted(doc.groups):
        groups[name] = _group_json(doc.groups[name])
        if name in doc.element_names:
            groups[name]["elements"] = list(doc.element_names[name])

    cms = {}
    extra_cms = {}

    def cm_json(cm: CrossedModule, hint: str):
        return {
            "E": group_ref(cm.E, f"{hint}_E"),
            "H": group_ref(cm.H, f"{hint}_H"),
            "xi": list(cm.xi.map),
            "action": [list(r) for r in cm.action.table],
        }

    for name in sorted(doc.crossed_modules):
        cms[name] = cm_json(doc.crossed_modules[name], name)

    def cms_equal(a: CrossedModule, b: CrossedModule) -> bool:
        return a.E == b.E and a.H == b.H and a.xi == b.xi and a.action == b.action

    def cm_ref(cm: CrossedModule, hint: str) -> str:
        for name, known in doc.crossed_modules.items():
            if known is cm or cms_equal(known, cm):
                return name
        for name, known in extra_cms.items():
            if cms_equal(known, cm):
                return name
        n, i = hint, 0
        while n in doc.crossed_modules or n in extra_cms:
            i += 1
            n = f"{hint}_{i}"
        extra_cms[n] = cm
        return n

    hopfs = {}
    for name in sorted(doc.hopf):
        a = doc.hopf[name]
        comps = []
        for x in a.H.elements():
            c = a.component(x)
            comps.append(
                {
                    "mul": [
                        [_show_vector(f, row) for row in plane]
                        for plane in c.structure_constants()
                    ],
                    "unit": _show_vector(f, c.unit),
                }
            )
        spec = {
            "cm": cm_ref(a.cm, f"{name}_cm"),
            "components": comps,
            "coproduct": {
                f"{x},{y}": _show_matrix(f, a.delta(x, y))
                for x in a.H.elements()
                for y in a.H.elements()
            },
            "counit": _show_vector(f, a.counit.data[0]),
            "action": {
                f"{x},{e}": _show_matrix(f, a.phi(x, e))
                for x in a.H.elements()
                for e in a.E.elements()
            },
        }
        if a.base.antipode is not None:
            spec["antipode"] = [_show_matrix(f, a.S(x)) for x in a.H.elements()]
        hopfs[name] = spec

    modules = {}
    for name in sorted(doc.modules):
        over, m = doc.modules[name]
        modules[name] = {
            "over": over,
            "dims": list(m.dims),
            "actions": [_show_matrix(f, m.r(x)) for x in m.algebra.H.elements()],
        }

    hopf_modules = {}
    for name in sorted(doc.hopf_modules):
        over, m = doc.hopf_modules[name]
        a = m.algebra
        hopf_modules[name] = {
            "over": over,
            "dims": list(m.dims),
            "r": [_show_matrix(f, m.r[x]) for x in a.H.elements()],
            "rho": {
                f"{x},{y}": _show_matrix(f, m.rho[(x, y)])
                for x in a.H.elements()
                for y in a.H.elements()
            },
            "psi": {
                f"{x},{e}": _show_matrix(f, m.psi[(x, e)])
                for x in a.H.elements()
                for e in a.E.elements()
            },
        }

    grouplikes = {}
    for name in sorted(doc.grouplikes):
        over, fam = doc.grouplikes[name]
        grouplikes[name] = {"in": over, "family": [_show_vector(f, v) for v in fam]}

    integrals = {}
    for name in sorted(doc.integrals):
        over, side, fam = doc.integrals[name]
        integrals[name] = {
            "in": over,
            "side": side,
            "family": [_show_vector(f, v) for v in fam],
        }

    for name in sorted(extra_cms):
        cms[name] = cm_json(extra_cms[name], name)
    for name in sorted(extra):
        groups[name] = _group_json(extra[name])

    for key, value in (
        ("groups", groups),
        ("crossed_modules", cms),
        ("hopf", hopfs),
        ("modules", modules),
        ("hopf_modules", hopf_modules),
        ("grouplikes", grouplikes),
        ("integrals", integrals),
    ):
        if value:
            out[key] = value
    return (json.dumps(out, indent=2, sort_keys=True) + "\n").encode("utf-8")
