"""Identity components, their generators, Hilbert functions and identity checks."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy import Poly, Symbol, sympify

from .errors import SeriesDenominatorZeroConstant
from .exactla import SpanBasis
from .freealg import NcPoly, Word
from .grading import Grading, component_basis
from .rewrite import Presentation

__all__ = [
    "identity_component",
    "minimal_generators",
    "check_generation",
    "hilbert_function",
    "expand_series",
    "compare_series",
    "verify_identity",
    "expand_definitions",
]


def identity_component(pres: Presentation, grading: Grading, N: int) -> List[List[Word]]:
    G = grading.group
    return [component_basis(pres, grading, n, G.identity) for n in range(N + 1)]


def hilbert_function(pres: Presentation, grading: Grading, N: int) -> List[int]:
    return [len(b) for b in identity_component(pres, grading, N)]


def _mul_rows(pres: Presentation, a: Dict[Word, object], b: Dict[Word, object]):
    acc: Dict[Word, object] = {}
    for u, cu in a.items():
        for v, cv in b.items():
            for w, cw in pres.nf_word(u + v).items():
                s = acc.get(w)
                t = cu * cv * cw
                acc[w] = t if s is None else s + t
    return {w: c for w, c in acc.items() if not c.is_zero()}


def minimal_generators(pres: Presentation, grading: Grading, N: int,
                       witness: Optional[list] = None) -> List[Word]:
    """Degree-ascending sweep for monomial generators of the identity component.

    At degree n the span S_n of products of earlier generators is put in
    echelon form; identity-degree normal words that are not pivots of S_n
    are taken as new generators.  Minimality is relative to the truncation.
    When ``witness`` is a list it receives ``(n, rank of S_n, dim)`` per degree.
    """
    basis = identity_component(pres, grading, N)
    one = pres.field.one
    spans: List[SpanBasis] = []
    gens: List[Word] = []
    for n in range(N + 1):
        span = SpanBasis(basis[n], pres.field)
        if n == 0:
            span.add({(): one})
        else:
            for g in gens:
                k = len(g)
                if 0 < k <= n:
                    for row in spans[n - k].basis():
                        if span.is_full():
                            break
                        span.add(_mul_rows(pres, {g: one}, row))
        fresh = [w for w in basis[n] if not span.has_pivot(w)]
        for w in fresh:
            span.add({w: one})
        gens.extend(fresh)
        spans.append(span)
        if witness is not None:
            witness.append((n, span.rank - len(fresh), len(basis[n])))
    return gens


def check_generation(pres: Presentation, grading: Grading, gens: Sequence[Word], N: int) -> bool:
    """Independent re-check: products of ``gens`` span every identity component up to N."""
    basis = identity_component(pres, grading, N)
    one = pres.field.one
    spans: List[SpanBasis] = []
    for n in range(N + 1):
        span = SpanBasis(basis[n], pres.field)
        if n == 0:
            span.add({(): one})
        for g in gens:
            k = len(g)
            if 0 < k <= n:
                for row in spans[n - k].basis():
                    span.add(_mul_rows(pres, row, {g: one}))
        if span.rank != len(basis[n]):
            return False
        spans.append(span)
    return True


_T = Symbol("t")


def _series_poly(text) -> List[Fraction]:
    if isinstance(text, (list, tuple)):
        return [Fraction(c) for c in text]
    expr = sympify(str(text).replace("^", "**"), locals={"t": _T})
    p = Poly(expr, _T)
    coeffs = [Fraction(0)] * (p.degree() + 1 if not p.is_zero else 1)
    for (k,), c in p.terms():
        coeffs[k] = Fraction(int(c.p), int(c.q))
    return coeffs


def expand_series(numerator, denominator, N: int) -> List[Fraction]:
    """Power series coefficients of numerator/denominator up to t^N.

    Both arguments are coefficient lists or polynomial strings in ``t``.
    """
    num, den = _series_poly(numerator), _series_poly(denominator)
    if den[0] == 0:
        raise SeriesDenominatorZeroConstant("series denominator has zero constant term")
    out: List[Fraction] = []
    for n in range(N + 1):
        s = num[n] if n < len(num) else Fraction(0)
        for k in range(1, min(n, len(den) - 1) + 1):
            s -= den[k] * out[n - k]
        out.append(s / den[0])
    return out


def compare_series(values: Sequence[int], numerator, denominator) -> Tuple[bool, Optional[int]]:
    """``(True, None)`` on exact agreement, else ``(False, first mismatching degree)``."""
    expected = expand_series(numerator, denominator, len(values) - 1)
    for n, (a, b) in enumerate(zip(values, expected)):
        if a != b:
            return False, n
    return True, None


def expand_definitions(text: str, definitions: Optional[Mapping[str, str]]) -> str:
    """Replace whole-word macro names by their parenthesised definitions."""
    if not definitions:
        return text
    names = sorted(definitions, key=len, reverse=True)
    pattern = re.compile(r"\b(" + "|".join(re.escape(n) for n in names) + r")\b")
    for _ in range(10):
        new = pattern.sub(lambda m: "(" + definitions[m.group(1)] + ")", text)
        if new == text:
            break
        text = new
    return text


def verify_identity(pres: Presentation, lhs, rhs, definitions: Optional[Mapping[str, str]] = None) -> bool:
    """True iff lhs - rhs has normal form zero.  Strings are parsed in the presentation."""
    def as_poly(p):
        if isinstance(p, NcPoly):
            return p
        return pres.poly(expand_definitions(str(p), definitions))

    diff = as_poly(lhs) - as_poly(rhs)
    pres.require(max(diff.degree(), 0))
    return pres.nf(diff).is_zero()
