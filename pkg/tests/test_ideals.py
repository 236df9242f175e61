import itertools

import pytest

from workbench.exactla import SpanBasis
from workbench.grading import Grading
from workbench.groups import cyclic, dihedral, quaternion8, semidirect_z3sq_z4
from workbench.ideals import (block_suffix_cover_certificate, build_ideal,
                              cross_check_certificates, ideal_closure, intersection_generators,
                              left_component, left_components, member_via_equivalence,
                              suffix_cover_certificate)
from workbench.rewrite import builtin, complete

D01 = builtin("downup", {"alpha": 0, "beta": 1})
F = builtin("F")


@pytest.fixture(scope="module")
def D4grading():
    return Grading.from_names(D01, dihedral(2), {"d": "a", "u": "b"})


def fmt_set(pres, span):
    return sorted(pres.alphabet.format(w) for w in span.pivots())


def test_left_components_small_degrees(D4grading):
    assert fmt_set(D01, left_component(D01, D4grading, "a", 1)) == ["d"]
    # the Klein four group is abelian, so ud has degree ab as well
    assert fmt_set(D01, left_component(D01, D4grading, "ab", 2)) == ["d*u", "u*d"]
    D6 = Grading.from_names(D01, dihedral(3), {"d": "a", "u": "b"})
    assert fmt_set(D01, left_component(D01, D6, "ab", 2)) == ["d*u"]


def test_identity_left_component_is_everything(D4grading):
    left = left_components(D01, D4grading, 6)
    e = D4grading.group.identity
    for n in range(7):
        assert left[(e, n)].rank == len(D01.normal_words(n))


def test_intersection_degree_zero(D4grading):
    assert intersection_generators(D01, D4grading, 3)[0].rank == 0
    triv = Grading.from_names(D01, cyclic(1), {"d": "0", "u": "0"})
    gens = intersection_generators(D01, triv, 4)
    assert [g.rank for g in gens] == [len(D01.normal_words(n)) for n in range(5)]


def test_closure_of_nothing_and_of_degree_one():
    empty = [SpanBasis(D01.normal_words(n), D01.field) for n in range(5)]
    J0 = ideal_closure(empty, D01, 4)
    assert all(J0.rank(n) == 0 for n in range(5))
    gens = [SpanBasis(D01.normal_words(0), D01.field),
            SpanBasis(D01.normal_words(1), D01.field).extend([{(0,): D01.field.one},
                                                              {(1,): D01.field.one}])]
    J1 = ideal_closure(gens, D01, 5)
    assert J1.quotient_dims() == [1, 0, 0, 0, 0, 0]


def test_ideal_is_two_sided_within_truncation(D4grading):
    J = build_ideal(D01, D4grading, 8)
    one = D01.field.one
    for n in range(1, 8):
        for p in J.pivots(n):
            row = J.spans[n].row(p)
            poly = sum((D01.poly(D01.alphabet.format(w)).scale(c) for w, c in row.items()),
                       D01.poly("0"))
            for letter in ("d", "u"):
                assert J.contains(D01.poly(letter) * poly)[0]
                assert J.contains(poly * D01.poly(letter))[0]


def test_truncation_stability(D4grading):
    small = build_ideal(D01, Grading.from_names(D01, dihedral(2), {"d": "a", "u": "b"}), 6)
    big = build_ideal(D01, D4grading, 9)
    for n in range(7):
        assert small.pivots(n) == big.pivots(n)


def test_explain_reaches_a_generator(D4grading):
    J = build_ideal(D01, D4grading, 8)
    n = 8
    chain = J.explain(n, J.pivots(n)[0])
    assert chain[-1]["from"] == "generator"
    assert chain[0]["degree"] == n


def test_suffix_cover_examples():
    gr = Grading.from_names(D01, cyclic(2), {"d": "1", "u": "0"})
    cert = suffix_cover_certificate(gr, D01.word("d^2"))
    assert cert is not None and {name for _, name in cert} == {"0", "1"}
    assert suffix_cover_certificate(gr, ()) is None
    trivial = Grading.from_names(D01, cyclic(1), {"d": "0", "u": "0"})
    assert suffix_cover_certificate(trivial, ()) == [(0, "0")]


def test_member_via_equivalence_trivial_cases():
    assert member_via_equivalence(F.word("yxy"), F.word("yxy"), F) == (True, F.field.one)
    assert member_via_equivalence(F.word("yxy"), F.word("x^3"), F)[0]
    assert member_via_equivalence(F.word("xy"), F.word("yx"), F) == (False, None)


def _phi_segments(j, k, i, n=3):
    V = [F.word(w) for w in ("yx^3", "xyx^2", "x^2yx", "x^3y")]
    W = [F.word(w) for w in ("y^2x^2", "xy^2x", "x^2y^2", "yx^2y")]
    X = [F.word("x"), F.word("y")]
    segs = []
    for t in range(4):
        segs.append([(V[j[t]], n), (W[k[t]], n)])
        if t < 3:
            segs.append(X[i[t]])
    return segs


def test_certificate_chain_for_F():
    G = semidirect_z3sq_z4()
    gr = Grading.from_names(F, G, {"x": "0.0.1", "y": "0.1.1"})
    phi = block_suffix_cover_certificate(F, gr, _phi_segments((0, 3, 2, 1), (3, 2, 1, 0), (1, 0, 0)))
    phi2 = block_suffix_cover_certificate(F, gr, _phi_segments((0, 3, 2, 1), (0, 3, 2, 1), (1, 1, 0)))
    assert phi and phi2 and phi["degree"] == 99
    assert len(phi["suffixes"]) == 36
    first = F.word("yx^3") * 12 + F.word("yx^2") + F.word("y^2x^2") * 12
    second = F.word("yx^3") * 12 + F.word("y^2x^2") * 13
    assert member_via_equivalence(first, phi["word"], F)[0]
    assert member_via_equivalence(second, phi2["word"], F, right=F.word("x"))[0]


def test_block_cover_rejects_noncommuting_blocks():
    gr = Grading.from_names(F, semidirect_z3sq_z4(), {"x": "0.0.1", "y": "0.1.1"})
    assert block_suffix_cover_certificate(F, gr, [[(F.word("xy"), 2), (F.word("y"), 2)]]) is None


@pytest.mark.parametrize("family,params,G,mapping", [
    ("downup", {"alpha": 0, "beta": 1}, dihedral(2), {"d": "a", "u": "b"}),
    ("downup", {"alpha": 0, "beta": 1}, dihedral(3), {"d": "a", "u": "b"}),
    ("downup", {"alpha": 0, "beta": 1}, quaternion8(), {"d": "i", "u": "k"}),
    ("B", {}, quaternion8(), {"x": "i", "y": "j", "z": "-1"}),
], ids=["D4", "D6", "Q8", "B"])
def test_certificates_are_sound(family, params, G, mapping):
    P = builtin(family, params)
    res = cross_check_certificates(P, Grading.from_names(P, G, mapping), 8)
    assert res["failures"] == []
    assert res["suffix_cover_checked"] > 0
