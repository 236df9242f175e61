import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import quaternion_units
from workbench.errors import NotAGroup
from workbench.groups import (build, cyclic, dihedral, direct_product, element_order, from_table,
                              quaternion8, semidirect_z3sq_z4, subgroup_generated)


def assert_group_axioms(G):
    e = G.identity
    for g in range(G.order):
        assert G.mul(e, g) == g == G.mul(g, e)
        assert G.mul(g, G.inv(g)) == e
    for a, b, c in itertools.product(range(G.order), repeat=3):
        assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


@pytest.mark.parametrize("G", [cyclic(4), dihedral(2), dihedral(3), quaternion8(),
                               direct_product(cyclic(4), cyclic(2))], ids=str)
def test_axioms(G):
    assert_group_axioms(G)


def test_semidirect_order_36_axioms():
    G = semidirect_z3sq_z4()
    assert G.order == 36 and not G.is_abelian()
    for a, b in itertools.product(range(36), repeat=2):
        assert G.mul(a, G.inv(a)) == G.identity
        c = (a * 7 + b) % 36
        assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


def test_build_kinds():
    assert build({"kind": "dihedral", "n": 2}).order == 4
    Q = build({"kind": "quaternion8"})
    assert Q.mul(Q.element("i"), Q.element("i")) == Q.element("-1")
    T = build({"kind": "product", "factors": [{"kind": "cyclic", "n": 4}, {"kind": "cyclic", "n": 2}]})
    assert T.order == 8 and T.is_abelian()
    assert sorted(element_order(T, g) for g in range(8)) == [1, 2, 2, 2, 4, 4, 4, 4]


def test_quaternion_table_matches_hamilton():
    names, qmul = quaternion_units()
    Q = quaternion8()
    for a, b in itertools.product(names, repeat=2):
        prod = qmul(names[a], names[b])
        assert Q.name(Q.mul(Q.element(a), Q.element(b))) == next(n for n, v in names.items() if v == prod)


def test_subgroups_and_orders():
    D4 = dihedral(2)
    a, b = D4.element("a"), D4.element("b")
    assert subgroup_generated(D4, {a}) == frozenset({D4.identity, a})
    D6 = dihedral(3)
    assert len(subgroup_generated(D6, {D6.element("a"), D6.element("b")})) == 6
    assert element_order(D6, D6.element("ba")) == 3
    Q = quaternion8()
    assert {Q.name(g) for g in subgroup_generated(Q, {Q.element("i")})} == {"1", "i", "-1", "-i"}
    assert element_order(Q, Q.element("i")) == 4
    assert element_order(Q, Q.identity) == 1


def test_table_validation():
    with pytest.raises(NotAGroup):
        from_table(["e", "x"], [[0, 1], [1, 1]])


@given(st.integers(1, 12), st.integers(0, 50))
def test_cyclic_power(n, k):
    G = cyclic(n)
    g = G.element("1") if n > 1 else G.identity
    assert G.name(G.power(g, k)) == str(k % n)
