from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from xmhopf.errors import DivisionByZeroError, MixedFieldsError, ShapeMismatchError
from xmhopf.linalg import Field, Matrix

QQ = Field.rational()
GF5 = Field.prime(5)
GF7 = Field.prime(7)

rationals = st.builds(
    Fraction,
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=20),
)
gf7_elems = st.integers(min_value=0, max_value=6)


def test_fraction_arithmetic():
    assert QQ.add(QQ.parse("1/2"), QQ.parse("1/3")) == Fraction(5, 6)
    assert QQ.sub(QQ.one, QQ.parse("1/4")) == Fraction(3, 4)
    assert QQ.div(QQ.parse("2/3"), QQ.parse("4/9")) == Fraction(3, 2)


def test_gf7_inverse_against_brute_force():
    # oracle: scan all residues for 3 * x = 1 mod 7
    expected = next(x for x in range(7) if (3 * x) % 7 == 1)
    assert expected == 5
    assert GF7.inv(3) == 5
    for a in range(1, 7):
        oracle = next(x for x in range(7) if (a * x) % 7 == 1)
        assert GF7.inv(a) == oracle


def test_multiplicative_identity():
    for f in (QQ, GF7):
        for raw in range(-3, 4):
            a = f.of(raw)
            assert f.mul(a, f.one) == a


def test_division_by_zero():
    with pytest.raises(DivisionByZeroError):
        QQ.inv(QQ.zero)
    with pytest.raises(DivisionByZeroError):
        GF5.div(GF5.one, 0)


def test_field_validation():
    with pytest.raises(ValueError):
        Field.prime(6)
    with pytest.raises(ValueError):
        Field("rational", 3)


@given(a=rationals, b=rationals, c=rationals)
def test_field_axioms_rational(a, b, c):
    f = QQ
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == f.zero
    if a != f.zero:
        assert f.mul(a, f.inv(a)) == f.one


@given(a=gf7_elems, b=gf7_elems, c=gf7_elems)
def test_field_axioms_gf7(a, b, c):
    f = GF7
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == f.zero
    if a != 0:
        assert f.mul(a, f.inv(a)) == f.one


def mat(field, rows):
    return Matrix(field, [[field.of(v) for v in row] for row in rows])


def test_matmul_identity_and_involution():
    m = mat(QQ, [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert Matrix.identity(QQ, 3) @ m == m
    swap = mat(QQ, [[0, 1], [1, 0]])
    assert swap @ swap == Matrix.identity(QQ, 2)


def naive_mul(a: Matrix, b: Matrix) -> Matrix:
    f = a.field
    out = [[f.zero] * b.cols for _ in range(a.rows)]
    for i in range(a.rows):
        for j in range(b.cols):
            for k in range(a.cols):
                out[i][j] = f.add(out[i][j], f.mul(a[i, k], b[k, j]))
    return Matrix(f, out)


@given(st.lists(st.integers(min_value=0, max_value=4), min_size=32, max_size=32))
def test_matmul_matches_naive_oracle_gf5(entries):
    a = Matrix(GF5, [entries[4 * i:4 * i + 4] for i in range(4)])
    b = Matrix(GF5, [entries[16 + 4 * i:16 + 4 * i + 4] for i in range(4)])
    assert a @ b == naive_mul(a, b)


def test_matmul_shape_and_field_errors():
    with pytest.raises(ShapeMismatchError):
        mat(QQ, [[1, 2]]) @ mat(QQ, [[1, 2]])
    with pytest.raises(MixedFieldsError):
        Matrix.identity(QQ, 2) @ Matrix.identity(GF5, 2)


def test_kron_identities():
    assert Matrix.identity(QQ, 2).kron(Matrix.identity(QQ, 3)) == Matrix.identity(QQ, 6)
    m = mat(QQ, [[1, 2], [3, 4]])
    assert mat(QQ, [[2]]).kron(m) == m.scale(QQ.of(2))


def test_kron_index_convention():
    # row index of the composite is i * b.rows + j (left factor major)
    a = mat(QQ, [[0, 1], [0, 0]])
    b = mat(QQ, [[5, 0], [0, 7]])
    k = a.kron(b)
    assert k[0, 2] == 5 and k[1, 3] == 7
    assert k[2, 0] == 0


@given(st.lists(st.integers(min_value=-3, max_value=3), min_size=16, max_size=16))
def test_kron_mixed_product(entries):
    ms = [mat(QQ, [entries[4 * i:4 * i + 2], entries[4 * i + 2:4 * i + 4]]) for i in range(4)]
    a, b, c, d = ms
    assert a.kron(b) @ c.kron(d) == (a @ c).kron(b @ d)


def test_kernel_trivial_cases():
    assert Matrix.identity(QQ, 4).kernel_basis() == []
    basis = Matrix.zeros(QQ, 2, 3).kernel_basis()
    assert len(basis) == 3
    assert basis[0] == (Fraction(1), Fraction(0), Fraction(0))


def test_kernel_hand_oracle():
    # [[1,1,0],[0,0,1]]: by hand, x0 = -x1 and x2 = 0, so the kernel is
    # the line through (1,-1,0).
    m = mat(QQ, [[1, 1, 0], [0, 0, 1]])
    basis = m.kernel_basis()
    assert len(basis) == 1
    v = basis[0]
    assert m.apply(v) == (Fraction(0), Fraction(0))
    assert v[0] * Fraction(-1) == v[1] and v[2] == 0 and v != (0, 0, 0)


@given(st.lists(st.integers(min_value=-2, max_value=2), min_size=12, max_size=12))
def test_kernel_rank_nullity_and_exactness(entries):
    m = Matrix(QQ, [[Fraction(v) for v in entries[3 * i:3 * i + 3]] for i in range(4)])
    basis = m.kernel_basis()
    assert len(basis) == m.cols - m.rank()
    zero = tuple(Fraction(0) for _ in range(m.rows))
    for v in basis:
        assert m.apply(v) == zero


def test_solve_cases():
    ident = Matrix.identity(QQ, 3)
    v = (Fraction(1), Fraction(2), Fraction(3))
    assert ident.solve(v) == (v, True)
    sol = mat(QQ, [[1, 1]]).solve((Fraction(2),))
    assert sol == ((Fraction(2), Fraction(0)), False)
    assert mat(QQ, [[0]]).solve((Fraction(1),)) is None


def test_solve_shape_error():
    with pytest.raises(ShapeMismatchError):
        Matrix.identity(QQ, 2).solve((Fraction(1),))


def test_inverse():
    m = mat(QQ, [[2, 1], [1, 1]])
    inv = m.inverse()
    assert m @ inv == Matrix.identity(QQ, 2)
    assert mat(QQ, [[1, 1], [1, 1]]).inverse() is None


def test_zero_dimension_edges():
    z = Matrix.zeros(QQ, 0, 3)
    assert z.T.rows == 3 and z.T.cols == 0
    assert len(z.kernel_basis()) == 3
    empty = Matrix.zeros(QQ, 2, 0)
    assert (empty @ Matrix.zeros(QQ, 0, 5)).is_zero()


def test_determinism_bit_identical():
    rows = [[3, 1, 4, 1], [5, 9, 2, 6], [5, 3, 5, 8]]
    a = mat(QQ, rows)
    first = (a.kernel_basis(), a.rank(), a.solve((Fraction(1), Fraction(0), Fraction(2))))
    second = (a.kernel_basis(), a.rank(), a.solve((Fraction(1), Fraction(0), Fraction(2))))
    assert first == second
