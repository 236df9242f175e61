import itertools

import pytest

from oracles import identity_component_dims
from workbench.errors import InvalidGrading, UnsupportedFamily
from workbench.grading import (Grading, component_basis, component_dims, hdet, resolution_terms,
                               validate_grading, verify_resolution_euler, word_degree)
from workbench.groups import cyclic, dihedral, quaternion8
from workbench.rewrite import builtin, custom

D01 = builtin("downup", {"alpha": 0, "beta": 1})


def grade(pres, G, mapping):
    return Grading.from_names(pres, G, mapping)


def test_dihedral_grading_of_downup_is_valid():
    for n in (2, 3, 4):
        check = validate_grading(D01, grade(D01, dihedral(n), {"d": "a", "u": "b"}))
        assert check.valid and check.inner_faithful


def test_downup_alpha_one_with_D6_is_invalid():
    D11 = builtin("downup", {"alpha": 1, "beta": 1})
    check = validate_grading(D11, grade(D11, dihedral(3), {"d": "a", "u": "b"}))
    assert not check.valid
    assert check.violations[0]["degrees"]


def test_F_with_D6_has_no_valid_generator_pair():
    F = builtin("F")
    D6 = dihedral(3)
    assert not validate_grading(F, grade(F, D6, {"x": "a", "y": "b"})).valid
    inner = [(g, h) for g, h in itertools.product(D6.names, repeat=2)
             if validate_grading(F, grade(F, D6, {"x": g, "y": h})).valid
             and grade(F, D6, {"x": g, "y": h}).inner_faithful()]
    assert inner == []


def test_word_degree():
    G = dihedral(2)
    gr = grade(D01, G, {"d": "a", "u": "b"})
    assert word_degree(gr, D01.word("du")) == G.mul(G.element("a"), G.element("b"))
    assert word_degree(gr, ()) == G.identity
    F = builtin("F")
    D = dihedral(3)
    gF = Grading(D, [D.element("a"), D.element("b")], ("x", "y"))
    g1, g2 = D.element("a"), D.element("b")
    assert word_degree(gF, F.word("yx^3")) == D.mul(g2, g1, g1, g1)


def test_component_basis():
    gr = grade(D01, dihedral(2), {"d": "a", "u": "b"})
    assert sorted(D01.alphabet.format(w) for w in component_basis(D01, gr, 2, "1")) == ["d^2", "u^2"]
    assert component_basis(D01, gr, 0, "1") == [()]
    assert component_basis(D01, gr, 0, "a") == []


@pytest.mark.parametrize("n", [2, 3])
def test_identity_component_against_oracle(n):
    gr = grade(D01, dihedral(n), {"d": "a", "u": "b"})
    G = gr.group
    got = [component_dims(D01, gr, m)[G.identity] for m in range(11)]
    assert got == identity_component_dims(n, 10)


def test_hdet_closed_forms():
    D4 = dihedral(2)
    h, trivial = hdet(D01, grade(D01, D4, {"d": "a", "u": "b"}))
    assert trivial and h == D4.identity
    Q = quaternion8()
    assert hdet(D01, grade(D01, Q, {"d": "i", "u": "k"}))[1]
    F = builtin("F")
    Z4 = cyclic(4)
    assert hdet(F, grade(F, Z4, {"x": "1", "y": "1"})) == (Z4.identity, True)
    P = custom(["x", "y"], ["yx - xy"])
    with pytest.raises(UnsupportedFamily):
        hdet(P, grade(P, cyclic(2), {"x": "1", "y": "0"}))


def test_hdet_agrees_with_word_degree():
    gr = grade(D01, dihedral(3), {"d": "a", "u": "b"})
    assert hdet(D01, gr)[0] == word_degree(gr, D01.word("d^2u^2"))


def test_euler_check_passes_and_detects_corruption():
    G = dihedral(3)
    gr = grade(D01, G, {"d": "a", "u": "b"})
    assert verify_resolution_euler(D01, gr, 10)
    terms = resolution_terms(D01, gr)
    g1, g2 = gr.degrees
    bad = [(k, g2 if (k == 1 and h == g1) else h, s) for k, h, s in terms]
    witness = []
    assert not verify_resolution_euler(D01, gr, 10, terms=bad, witness=witness)
    assert witness[0][0] <= 4


def test_unknown_generator_rejected():
    with pytest.raises(InvalidGrading):
        grade(D01, cyclic(2), {"d": "1"})
