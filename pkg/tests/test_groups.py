from itertools import permutations

import pytest

from xmhopf.errors import NotNormalError
from xmhopf.groups import (
    FiniteGroup,
    GroupAction,
    GroupHom,
    conjugation_action,
    cyclic,
    direct_product,
    is_injective,
    symmetric,
    validate_action,
    validate_group,
    validate_hom,
)


def test_z2_table_valid():
    g = FiniteGroup.from_table([[0, 1], [1, 0]])
    assert validate_group(g).ok


def test_broken_table_reports_witnesses():
    g = FiniteGroup.from_table([[0, 1], [1, 1]])
    rep = validate_group(g)
    assert not rep.ok
    names = {c.name for c in rep.failures}
    assert "inverses" in names or "identity" in names


def oracle_s3_table():
    """Independent construction: permutations as dicts, composed pointwise."""
    perms = sorted(permutations(range(3)))
    as_dict = [dict(enumerate(p)) for p in perms]
    index = {tuple(d[i] for i in range(3)): k for k, d in enumerate(as_dict)}

    def compose(p, q):
        return tuple(p[q[i]] for i in range(3))

    return [[index[compose(as_dict[a], as_dict[b])] for b in range(6)] for a in range(6)]


def test_symmetric3_matches_permutation_oracle():
    s3 = symmetric(3)
    assert [list(r) for r in s3.table] == oracle_s3_table()
    assert validate_group(s3).ok
    assert s3.order == 6 and not s3.is_abelian()


def test_constructors():
    assert cyclic(1).order == 1
    k4 = direct_product(cyclic(2), cyclic(2))
    assert validate_group(k4).ok
    # exponent 2: every square is the identity
    assert all(k4.mul(a, a) == k4.identity for a in k4.elements())
    with pytest.raises(ValueError):
        cyclic(0)
    with pytest.raises(ValueError):
        symmetric(5)


def test_constructor_outputs_always_validate():
    for g in (cyclic(1), cyclic(4), symmetric(4), direct_product(cyclic(2), cyclic(3))):
        assert validate_group(g).ok


def test_element_orders():
    z4 = cyclic(4)
    assert z4.element_order(1) == 4
    assert z4.element_order(2) == 2


def test_hom_validation():
    z3 = cyclic(3)
    assert validate_hom(GroupHom.identity(z3)).ok
    bad = GroupHom(z3, cyclic(2), (0, 1, 1))
    rep = validate_hom(bad)
    assert not rep.ok
    assert any(c.name == "multiplicative" for c in rep.failures)


def test_action_validation_conjugation_s3():
    s3 = symmetric(3)
    act = conjugation_action(s3, GroupHom.identity(s3))
    assert validate_action(act).ok
    # conjugation by a transposition is a nontrivial automorphism
    assert any(act.table[x] != tuple(s3.elements()) for x in s3.elements())


def test_action_multiplicativity_exhaustive():
    s3 = symmetric(3)
    act = conjugation_action(s3, GroupHom.identity(s3))
    for x in s3.elements():
        for y in s3.elements():
            for e in s3.elements():
                assert act.act(x, act.act(y, e)) == act.act(s3.mul(x, y), e)


def test_trivial_action():
    act = GroupAction.trivial(cyclic(2), cyclic(3))
    assert validate_action(act).ok


def test_conjugation_on_normal_z3():
    from tests.conftest import z3_in_s3

    emb = z3_in_s3()
    assert validate_hom(emb).ok and is_injective(emb)
    act = conjugation_action(symmetric(3), emb)
    assert validate_action(act).ok
    # transpositions invert the 3-cycles, so the action is nontrivial
    assert any(row != (0, 1, 2) for row in act.table)


def test_conjugation_on_central_subgroup_is_trivial():
    k4 = direct_product(cyclic(2), cyclic(2))
    emb = GroupHom(cyclic(2), k4, (0, 1))
    act = conjugation_action(k4, emb)
    assert act.table == tuple((0, 1) for _ in k4.elements())


def test_conjugation_non_normal_raises():
    s3 = symmetric(3)
    # an order-2 subgroup generated by a transposition is not normal
    t = next(g for g in s3.elements() if s3.element_order(g) == 2)
    emb = GroupHom(cyclic(2), s3, (0, t))
    assert validate_hom(emb).ok
    with pytest.raises(NotNormalError):
        conjugation_action(s3, emb)
