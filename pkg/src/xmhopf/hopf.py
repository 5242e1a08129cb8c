"""Group-graded coalgebras, bicoalgebras, and Hopf coalgebras over an exact field.

A graded Hopf coalgebra is a family of structure-constant algebras A_x
indexed by a finite group H, a coproduct family Delta_{x,y}: A_{xy} ->
A_x (x) A_y, a counit on A_1, and an antipode family S_x: A_{x^-1} -> A_x.
All structure maps are stored as exact matrices; every axiom is an exact
matrix identity checked with witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    MissingAntipodeError,
    NotGrouplikeError,
    ShapeMismatchError,
)
from .groups import FiniteGroup, cyclic
from .linalg import Field, Matrix, linear_map_matrix
from .report import Report


def vec_kron(field: Field, u: Sequence, v: Sequence) -> tuple:
    """Coordinates of u (x) v in the left-major flattening."""
    return tuple(field.mul(a, b) for a in u for b in v)


@dataclass(frozen=True, eq=False)
class ComponentAlgebra:
    """Finite-dimensional unital algebra given by structure constants.

    mul is the multiplication as a matrix A (x) A -> A (dim x dim^2),
    column index i*dim + j for e_i e_j; unit is the coordinate vector of 1.
    """

    field: Field
    dim: int
    mul: Matrix
    unit: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("component algebras must be nonzero")
        if self.mul.rows != self.dim or self.mul.cols != self.dim * self.dim:
            raise ShapeMismatchError("multiplication tensor has wrong shape")
        if len(self.unit) != self.dim:
            raise ShapeMismatchError("unit vector has wrong length")

    @staticmethod
    def from_structure_constants(field: Field, c, unit) -> "ComponentAlgebra":
        """c[i][j][k] is the coefficient of e_k in e_i e_j."""
        dim = len(c)
        rows = [[field.zero] * (dim * dim) for _ in range(dim)]
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    rows[k][i * dim + j] = c[i][j][k]
        return ComponentAlgebra(field, dim, Matrix(field, rows), tuple(unit))

    def structure_constants(self):
        return [
            [
                [self.mul[k, i * self.dim + j] for k in range(self.dim)]
                for j in range(self.dim)
            ]
            for i in range(self.dim)
        ]

    def unit_col(self) -> Matrix:
        return Matrix.col(self.field, self.unit)

    def multiply(self, u: Sequence, v: Sequence) -> tuple:
        return self.mul.apply(vec_kron(self.field, u, v))

    def left_mult_matrix(self, u: Sequence) -> Matrix:
        """Matrix of v -> u . v."""
        return self.mul @ Matrix.col(self.field, u).kron(Matrix.identity(self.field, self.dim))

    def right_mult_matrix(self, u: Sequence) -> Matrix:
        """Matrix of v -> v . u."""
        return self.mul @ Matrix.identity(self.field, self.dim).kron(Matrix.col(self.field, u))

    def validate(self) -> Report:
        rep = Report("component algebra")
        f = self.field
        ident = Matrix.identity(f, self.dim)
        assoc = rep.check("associativity")
        lhs = self.mul @ self.mul.kron(ident)
        rhs = self.mul @ ident.kron(self.mul)
        if lhs != rhs:
            for j in range(lhs.cols):
                if lhs.column(j) != rhs.column(j):
                    assoc.add(f"basis triple index {j}")
        unital = rep.check("two-sided unit")
        if self.mul @ self.unit_col().kron(ident) != ident:
            unital.add("1 . v != v")
        if self.mul @ ident.kron(self.unit_col()) != ident:
            unital.add("v . 1 != v")
        return rep


@dataclass(frozen=True, eq=False)
class GradedHopfCoalgebra:
    """Family {A_x} with coproduct, counit, and optional antipode.

    coproduct[(x, y)] is Delta_{x,y}: A_{xy} -> A_x (x) A_y as a
    (dim_x * dim_y) x dim_xy matrix; counit is 1 x dim_1; antipode[x] is
    S_x: A_{x^-1} -> A_x, or None until computed.
    """

    field: Field
    H: FiniteGroup
    components: tuple[ComponentAlgebra, ...]
    coproduct: dict
    counit: Matrix
    antipode: Optional[tuple[Matrix, ...]] = None

    def dim(self, x: int) -> int:
        return self.components[x].dim

    def delta(self, x: int, y: int) -> Matrix:
        return self.coproduct[(x, y)]

    def S(self, x: int) -> Matrix:
        if self.antipode is None:
            raise MissingAntipodeError("antipode has not been computed")
        return self.antipode[x]

    def with_antipode(self, antipode: Sequence[Matrix]) -> "GradedHopfCoalgebra":
        return GradedHopfCoalgebra(
            self.field, self.H, self.components, self.coproduct, self.counit, tuple(antipode)
        )

    def check_shapes(self) -> None:
        H = self.H
        if len(self.components) != H.order:
            raise ShapeMismatchError("one component algebra per group element required")
        for x in H.elements():
            for y in H.elements():
                if (x, y) not in self.coproduct:
                    raise ShapeMismatchError(f"missing coproduct component ({x},{y})")
                d = self.coproduct[(x, y)]
                if d.rows != self.dim(x) * self.dim(y) or d.cols != self.dim(H.mul(x, y)):
                    raise ShapeMismatchError(f"coproduct ({x},{y}) has wrong shape")
        if self.counit.rows != 1 or self.counit.cols != self.dim(H.identity):
            raise ShapeMismatchError("counit has wrong shape")
        if self.antipode is not None:
            if len(self.antipode) != H.order:
                raise ShapeMismatchError("one antipode component per group element required")
            for x in H.elements():
                s = self.antipode[x]
                if s.rows != self.dim(x) or s.cols != self.dim(H.inv(x)):
                    raise ShapeMismatchError(f"antipode component {x} has wrong shape")


# -- validators ------------------------------------------------------------------


def validate_h_coalgebra(a: GradedHopfCoalgebra) -> Report:
    """Coassociativity and counit laws, exact, for all index triples."""
    a.check_shapes()
    rep = Report("graded coalgebra")
    H, f = a.H, a.field

    coassoc = rep.check("coassociativity")
    for x in H.elements():
        for y in H.elements():
            xy = H.mul(x, y)
            for z in H.elements():
                lhs = a.delta(x, y).kron(Matrix.identity(f, a.dim(z))) @ a.delta(xy, z)
                rhs = Matrix.identity(f, a.dim(x)).kron(a.delta(y, z)) @ a.delta(x, H.mul(y, z))
                if lhs != rhs:
                    coassoc.add(f"(x,y,z)=({x},{y},{z})")

    counit = rep.check("counit laws")
    one = H.identity
    for x in H.elements():
        ident = Matrix.identity(f, a.dim(x))
        if ident.kron(a.counit) @ a.delta(x, one) != ident:
            counit.add(f"(id (x) eps) Delta_({x},1) != id")
        if a.counit.kron(ident) @ a.delta(one, x) != ident:
            counit.add(f"(eps (x) id) Delta_(1,{x}) != id")
    return rep


def validate_bicoalgebra(a: GradedHopfCoalgebra) -> Report:
    """Each component is an algebra and Delta, eps are algebra maps."""
    a.check_shapes()
    rep = Report("graded bicoalgebra")
    H, f = a.H, a.field

    for x in H.elements():
        comp_rep = a.components[x].validate()
        comp_rep.title = f"component {x}"
        rep.merge(comp_rep)

    mult = rep.check("coproduct is multiplicative")
    unit = rep.check("coproduct preserves units")
    for x in H.elements():
        for y in H.elements():
            xy = H.mul(x, y)
            ax, ay = a.components[x], a.components[y]
            lhs = a.delta(x, y) @ a.components[xy].mul
            mid = (
                Matrix.identity(f, ax.dim)
                .kron(Matrix.flip(f, ay.dim, ax.dim))
                .kron(Matrix.identity(f, ay.dim))
            )
            rhs = ax.mul.kron(ay.mul) @ mid @ a.delta(x, y).kron(a.delta(x, y))
            if lhs != rhs:
                mult.add(f"(x,y)=({x},{y})")
            if a.delta(x, y) @ a.components[xy].unit_col() != ax.unit_col().kron(ay.unit_col()):
                unit.add(f"(x,y)=({x},{y})")

    eps = rep.check("counit is an algebra map")
    one = H.identity
    if a.counit @ a.components[one].mul != a.counit.kron(a.counit):
        eps.add("eps mu_1 != eps (x) eps")
    if a.counit @ a.components[one].unit_col() != Matrix(f, [[f.one]]):
        eps.add("eps(1_1) != 1")
    return rep


def antipode_solve_details(a: GradedHopfCoalgebra, x: int):
    """Solve the left antipode identity for S_x; returns (matrix or None, unique flag).

    The unknown S_x: A_{x^-1} -> A_x enters mu_x (S_x (x) id) Delta_{x^-1,x}
    = eta_x eps linearly; the system is assembled by evaluating on
    elementary matrices, then solved by exact elimination.
    """
    H, f = a.H, a.field
    xinv = H.inv(x)
    dx, dxi = a.dim(x), a.dim(xinv)
    delta = a.delta(xinv, x)
    mul = a.components[x].mul
    target = a.components[x].unit_col() @ a.counit

    def image_of(flat):
        s = Matrix(f, [flat[r * dxi:(r + 1) * dxi] for r in range(dx)], dx, dxi)
        out = mul @ s.kron(Matrix.identity(f, dx)) @ delta
        return [out[i, j] for i in range(out.rows) for j in range(out.cols)]

    system = linear_map_matrix(f, dx * dxi, image_of)
    rhs = [target[i, j] for i in range(target.rows) for j in range(target.cols)]
    solved = system.solve(tuple(rhs))
    if solved is None:
        return None, False
    flat, unique = solved
    s = Matrix(f, [flat[r * dxi:(r + 1) * dxi] for r in range(dx)], dx, dxi)
    return s, unique


def compute_antipode(a: GradedHopfCoalgebra) -> Optional[tuple[Matrix, ...]]:
    """Convolution inverse of the identity, or None when it does not exist.

    Solves the left identity per component, then checks the right identity
    and invertibility; any failure means the bicoalgebra is not Hopf.
    """
    a.check_shapes()
    H, f = a.H, a.field
    out = []
    for x in H.elements():
        s, _unique = antipode_solve_details(a, x)
        if s is None:
            return None
        xinv = H.inv(x)
        right = (
            a.components[x].mul
            @ Matrix.identity(f, a.dim(x)).kron(s)
            @ a.delta(x, xinv)
        )
        if right != a.components[x].unit_col() @ a.counit:
            return None
        if not s.is_invertible():
            return None
        out.append(s)
    return tuple(out)


def validate_antipode(a: GradedHopfCoalgebra) -> Report:
    """Both defining convolution identities plus bijectivity."""
    a.check_shapes()
    if a.antipode is None:
        raise MissingAntipodeError("validate_antipode needs an antipode")
    rep = Report("antipode axioms")
    H, f = a.H, a.field
    left = rep.check("left identity mu (S (x) id) Delta = eta eps")
    right = rep.check("right identity mu (id (x) S) Delta = eta eps")
    bij = rep.check("bijectivity")
    for x in H.elements():
        xinv = H.inv(x)
        ident = Matrix.identity(f, a.dim(x))
        target = a.components[x].unit_col() @ a.counit
        if a.components[x].mul @ a.S(x).kron(ident) @ a.delta(xinv, x) != target:
            left.add(f"x={x}")
        if a.components[x].mul @ ident.kron(a.S(x)) @ a.delta(x, xinv) != target:
            right.add(f"x={x}")
        if not a.S(x).is_invertible():
            bij.add(f"x={x}")
    return rep


def antipode_properties(a: GradedHopfCoalgebra) -> Report:
    """Derived properties: anti-multiplicative and anti-comultiplicative."""
    a.check_shapes()
    if a.antipode is None:
        raise MissingAntipodeError("antipode_properties needs an antipode")
    rep = Report("antipode properties")
    H, f = a.H, a.field

    antimul = rep.check("anti-multiplicativity")
    units = rep.check("unit preservation")
    for x in H.elements():
        xinv = H.inv(x)
        lhs = a.S(x) @ a.components[xinv].mul
        rhs = a.components[x].mul @ Matrix.flip(f, a.dim(x), a.dim(x)) @ a.S(x).kron(a.S(x))
        if lhs != rhs:
            antimul.add(f"x={x}")
        if a.S(x) @ a.components[xinv].unit_col() != a.components[x].unit_col():
            units.add(f"x={x}")

    anticomul = rep.check("anti-comultiplicativity")
    for x in H.elements():
        for y in H.elements():
            xy = H.mul(x, y)
            xinv, yinv = H.inv(x), H.inv(y)
            lhs = a.delta(x, y) @ a.S(xy)
            rhs = (
                a.S(x).kron(a.S(y))
                @ Matrix.flip(f, a.dim(yinv), a.dim(xinv))
                @ a.delta(yinv, xinv)
            )
            if lhs != rhs:
                anticomul.add(f"(x,y)=({x},{y})")

    counit = rep.check("counit compatibility")
    if a.counit @ a.S(a.H.identity) != a.counit:
        counit.add("eps S_1 != eps")
    return rep


def convolution_product(
    a: GradedHopfCoalgebra, f: Matrix, x: int, g: Matrix, y: int, target_mul: Matrix
) -> Matrix:
    """(f * g) = m_B (f (x) g) Delta_{x,y} for maps f: A_x -> B, g: A_y -> B.

    target_mul is the product of B as a matrix B (x) B -> B; for B = k pass
    scalar_mul(a.field).
    """
    if f.cols != a.dim(x) or g.cols != a.dim(y):
        raise ShapeMismatchError("convolution factors do not match the components")
    if f.rows != g.rows or target_mul.cols != f.rows * g.rows or target_mul.rows != f.rows:
        raise ShapeMismatchError("convolution target algebra mismatch")
    return target_mul @ f.kron(g) @ a.delta(x, y)


def scalar_mul(field: Field) -> Matrix:
    """Multiplication of the ground field viewed as a 1x1 target algebra."""
    return Matrix(field, [[field.one]])


# -- grouplike machinery ------------------------------------------------------------


GrouplikeFamily = tuple  # tuple of per-component coordinate tuples


def is_grouplike(a: GradedHopfCoalgebra, G: GrouplikeFamily) -> bool:
    H, f = a.H, a.field
    if len(G) != H.order or any(len(G[x]) != a.dim(x) for x in H.elements()):
        return False
    if a.counit.apply(G[H.identity])[0] != f.one:
        return False
    for x in H.elements():
        for y in H.elements():
            xy = H.mul(x, y)
            if a.delta(x, y).apply(G[xy]) != vec_kron(f, G[x], G[y]):
                return False
    return True


def grouplike_product(a: GradedHopfCoalgebra, G1: GrouplikeFamily, G2: GrouplikeFamily):
    return tuple(a.components[x].multiply(G1[x], G2[x]) for x in a.H.elements())


def grouplike_report(a: GradedHopfCoalgebra, G: GrouplikeFamily) -> Report:
    """Witness-reporting version of is_grouplike for candidate families."""
    rep = Report("grouplike candidate")
    H, f = a.H, a.field
    shape = rep.check("shape")
    if len(G) != H.order or any(len(G[x]) != a.dim(x) for x in H.elements()):
        shape.add("family has wrong component dimensions")
        return rep
    counit = rep.check("counit normalization eps(G_1) = 1")
    if a.counit.apply(G[H.identity])[0] != f.one:
        counit.add(f"eps(G_1) = {f.show(a.counit.apply(G[H.identity])[0])}")
    coprod = rep.check("Delta_{x,y}(G_xy) = G_x (x) G_y")
    for x in H.elements():
        for y in H.elements():
            xy = H.mul(x, y)
            if a.delta(x, y).apply(G[xy]) != vec_kron(f, G[x], G[y]):
                coprod.add(f"(x,y)=({x},{y})")
    return rep


def grouplike_inverse(a: GradedHopfCoalgebra, G: GrouplikeFamily) -> GrouplikeFamily:
    """Pointwise inverse G_x^-1 = S_x(G_{x^-1}), verified against the units."""
    if not is_grouplike(a, G):
        raise NotGrouplikeError("grouplike_inverse: family is not grouplike")
    H = a.H
    inv = tuple(a.S(x).apply(G[H.inv(x)]) for x in H.elements())
    for x in H.elements():
        comp = a.components[x]
        if comp.multiply(G[x], inv[x]) != comp.unit or comp.multiply(inv[x], G[x]) != comp.unit:
            raise NotGrouplikeError(f"component {x} of the family is not invertible")
    return inv


def enumerate_grouplikes(a: GradedHopfCoalgebra) -> list[GrouplikeFamily]:
    """All grouplike families supported on +-basis vectors.

    Grouplike enumeration in general is a polynomial-variety problem; this
    deliberately searches only sign-scaled basis vectors, which covers every
    example in this package's scope.
    """
    H, f = a.H, a.field
    per_component = []
    for x in H.elements():
        cands = []
        for i in range(a.dim(x)):
            v = tuple(f.one if j == i else f.zero for j in range(a.dim(x)))
            cands.append(v)
            neg = tuple(f.neg(c) for c in v)
            if neg != v:
                cands.append(neg)
        per_component.append(cands)

    found = []

    def search(x, partial):
        if x == H.order:
            g = tuple(partial)
            if is_grouplike(a, g):
                found.append(g)
            return
        for cand in per_component[x]:
            search(x + 1, partial + [cand])

    search(0, [])
    return found


def is_pivotal_element(a: GradedHopfCoalgebra, G: GrouplikeFamily) -> Report:
    """Check S_x S_{x^-1}(v) = G_x v G_x^-1 on every basis vector."""
    if not is_grouplike(a, G):
        raise NotGrouplikeError("pivotal candidate must be grouplike")
    ginv = grouplike_inverse(a, G)
    rep = Report("pivotal element")
    H, f = a.H, a.field
    chk = rep.check("S_x S_{x^-1} equals conjugation by G")
    for x in H.elements():
        comp = a.components[x]
        ss = a.S(x) @ a.S(H.inv(x))
        for i in range(comp.dim):
            basis = tuple(f.one if j == i else f.zero for j in range(comp.dim))
            if ss.apply(basis) != comp.multiply(comp.multiply(G[x], basis), ginv[x]):
                chk.add(f"x={x} basis={i}")
    return rep


# -- small constructors ---------------------------------------------------------------


def classical_hopf(
    field: Field,
    algebra: ComponentAlgebra,
    delta: Matrix,
    counit: Matrix,
    antipode: Optional[Matrix] = None,
) -> GradedHopfCoalgebra:
    """A classical Hopf algebra as a coalgebra graded by the trivial group."""
    return GradedHopfCoalgebra(
        field,
        cyclic(1),
        (algebra,),
        {(0, 0): delta},
        counit,
        (antipode,) if antipode is not None else None,
    )


def group_algebra(field: Field, g: FiniteGroup) -> GradedHopfCoalgebra:
    """k[G]: basis indexed by group elements, Delta(g) = g (x) g, S(g) = g^-1."""
    n = g.order
    z, o = field.zero, field.one
    mul_rows = [[z] * (n * n) for _ in range(n)]
    for i in range(n):
        for j in range(n):
            mul_rows[g.mul(i, j)][i * n + j] = o
    unit = tuple(o if i == g.identity else z for i in range(n))
    algebra = ComponentAlgebra(field, n, Matrix(field, mul_rows), unit)

    delta_rows = [[z] * n for _ in range(n * n)]
    for i in range(n):
        delta_rows[i * n + i][i] = o
    delta = Matrix(field, delta_rows)
    counit = Matrix.row(field, [o] * n)
    s_rows = [[z] * n for _ in range(n)]
    for i in range(n):
        s_rows[g.inv(i)][i] = o
    return classical_hopf(field, algebra, delta, counit, Matrix(field, s_rows))


def component_hopf_at_identity(a: GradedHopfCoalgebra) -> GradedHopfCoalgebra:
    """The classical Hopf algebra (A_1, Delta_{1,1}, eps, S_1) sitting inside a."""
    one = a.H.identity
    return classical_hopf(
        a.field,
        a.components[one],
        a.delta(one, one),
        a.counit,
        a.S(one) if a.antipode is not None else None,
    )
