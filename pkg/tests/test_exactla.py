from hypothesis import given, settings, strategies as st

from workbench.exactla import SpanBasis, contains, echelon, intersect
from workbench.freealg import Alphabet, parse_poly
from workbench.scalars import QQ_FIELD

A = Alphabet(("d", "u"))
AMB = [A.word(w) for w in ("d^2", "du", "ud", "u^2")]


def P(t):
    return parse_poly(t, A)


def test_echelon_basics():
    s = echelon([P("d^2 + u^2"), P("u^2")], AMB)
    assert s.rank == 2 and set(s.pivots()) == {A.word("d^2"), A.word("u^2")}
    assert echelon([P("du"), P("2du")], AMB).rank == 1
    assert echelon([], AMB).rank == 0


def test_intersection():
    U = echelon([P("d^2"), P("u^2")], AMB)
    W = echelon([P("u^2"), P("du")], AMB)
    I = intersect([U, W])
    assert I.rank == 1 and I.pivots() == [A.word("u^2")]
    assert intersect([U]).rank == U.rank
    full = echelon([P(w) for w in ("d^2", "du", "ud", "u^2")], AMB)
    assert intersect([U, full]).pivots() == U.pivots()


def test_contains_with_coordinates():
    s = echelon([P("u^2")], AMB)
    ok, coords = contains(s, P("3u^2"))
    assert ok and coords == {A.word("u^2"): QQ_FIELD(3)}
    assert not contains(s, P("d^2"))[0]
    assert contains(echelon([], AMB), {})[0]


vec = st.lists(st.integers(-3, 3), min_size=4, max_size=4).map(
    lambda cs: {w: QQ_FIELD(c) for w, c in zip(AMB, cs) if c})


@settings(max_examples=80, deadline=None)
@given(st.lists(vec, max_size=4), st.lists(vec, max_size=4))
def test_intersection_lies_in_both(us, ws):
    U, W = echelon(us, AMB), echelon(ws, AMB)
    I = intersect([U, W])
    for row in I.basis():
        assert U.contains(row)[0] and W.contains(row)[0]
    # dimension formula with the sum
    S = echelon(us + ws, AMB)
    assert I.rank == U.rank + W.rank - S.rank


@settings(max_examples=80, deadline=None)
@given(st.lists(vec, max_size=5))
def test_rows_are_reduced(vs):
    s = SpanBasis(AMB).extend(vs)
    for p in s.pivots():
        for q in s.pivots():
            if p != q:
                assert p not in s.row(q)
        assert s.row(p)[p] == 1
    for v in vs:
        assert s.contains(v)[0]
