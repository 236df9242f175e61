"""Truncated computation of the ideal generated by the intersection of the left ideals A*A_g.

Everything is computed one length-degree at a time inside the normal-word
basis of a presentation.  High-degree memberships are handled separately by
two certificates that avoid linear algebra: a suffix cover of the group, and
proportionality of normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .exactla import SpanBasis, intersect
from .freealg import NcPoly, Word
from .grading import Grading, component_basis, suffix_degrees
from .parallel import parallel_map
from .rewrite import Presentation
from .scalars import Scalar

__all__ = [
    "left_component",
    "left_components",
    "intersection_generators",
    "ideal_closure",
    "TruncatedIdeal",
    "build_ideal",
    "suffix_cover_certificate",
    "block_suffix_cover_certificate",
    "member_via_equivalence",
    "cross_check_certificates",
]


def _times_letter(pres: Presentation, row: Dict[Word, Scalar], letter: int, left: bool):
    acc: Dict[Word, Scalar] = {}
    for w, c in row.items():
        for v, cv in pres.nf_word((letter,) + w if left else w + (letter,)).items():
            s = acc.get(v)
            acc[v] = c * cv if s is None else s + c * cv
    return {w: c for w, c in acc.items() if not c.is_zero()}


def _cache(pres: Presentation, grading: Grading) -> dict:
    store = grading.__dict__.setdefault("_ideal_cache", {})
    return store.setdefault(id(pres), {"left": {}, "gens": {}})


def left_components(pres: Presentation, grading: Grading, N: int) -> Dict[Tuple[int, int], SpanBasis]:
    """``(A*A_g)_n`` for every group element ``g`` and ``n <= N``.

    Uses ``(A A_g)_n = A_1 (A A_g)_(n-1) + A_(n,g)``, valid because A is
    generated in degree one.
    """
    pres.require(N)
    cache = _cache(pres, grading)["left"]
    G = grading.group
    letters = range(len(pres.alphabet))

    def build(g: int):
        out = []
        prev = None
        for n in range(N + 1):
            if (g, n) in cache:
                prev = cache[(g, n)]
                out.append(prev)
                continue
            span = SpanBasis(pres.normal_words(n), pres.field)
            if prev is not None:
                for row in prev.basis():
                    for a in letters:
                        if span.is_full():
                            break
                        span.add(_times_letter(pres, row, a, left=True))
            for w in component_basis(pres, grading, n, g):
                span.add({w: pres.field.one})
            out.append(span)
            prev = span
        return out

    results = parallel_map(build, range(G.order))
    for g, spans in enumerate(results):
        for n, s in enumerate(spans):
            cache[(g, n)] = s
    return {(g, n): cache[(g, n)] for g in range(G.order) for n in range(N + 1)}


def left_component(pres: Presentation, grading: Grading, g, n: int) -> SpanBasis:
    g = grading.group.element(g)
    return left_components(pres, grading, n)[(g, n)]


def intersection_generators(pres: Presentation, grading: Grading, N: int) -> List[SpanBasis]:
    """Per-degree basis of the intersection over all g of (A*A_g)_n, for n <= N."""
    cache = _cache(pres, grading)["gens"]
    if all(n in cache for n in range(N + 1)):
        return [cache[n] for n in range(N + 1)]
    left = left_components(pres, grading, N)
    G = grading.group
    todo = [n for n in range(N + 1) if n not in cache]
    spans = parallel_map(lambda n: intersect([left[(g, n)] for g in range(G.order)]), todo)
    for n, s in zip(todo, spans):
        cache[n] = s
    return [cache[n] for n in range(N + 1)]


@dataclass
class TruncatedIdeal:
    pres: Presentation
    grading: Optional[Grading]
    N: int
    gens: List[SpanBasis]
    spans: List[SpanBasis]
    provenance: List[Dict[Word, tuple]] = dc_field(default_factory=list)

    def rank(self, n: int) -> int:
        return self.spans[n].rank

    def quotient_dims(self) -> List[int]:
        return [len(self.pres.normal_words(n)) - self.spans[n].rank for n in range(self.N + 1)]

    def pivots(self, n: int) -> List[Word]:
        return self.spans[n].pivots()

    def contains(self, p) -> Tuple[bool, object]:
        """Membership of a homogeneous polynomial or word, reduced to normal form first."""
        if isinstance(p, tuple):
            p = NcPoly.monomial(self.pres.alphabet, p, 1, self.pres.field)
        q = self.pres.nf(p)
        if q.is_zero():
            return True, {}
        if not q.is_homogeneous():
            raise ValueError("membership is tested one length-degree at a time")
        n = q.degree()
        if n > self.N:
            raise ValueError(f"degree {n} exceeds the truncation degree {self.N}")
        return self.spans[n].contains(q)

    def explain(self, n: int, pivot: Word) -> list:
        """Chain of products leading from a generator of J to the given pivot."""
        fmt = self.pres.alphabet.format
        names = self.pres.alphabet.names
        chain = []
        while True:
            src = self.provenance[n].get(pivot)
            if src is None or src[0] == "generator":
                chain.append({"degree": n, "pivot": fmt(pivot), "from": "generator"})
                return chain
            side, letter, parent = src
            chain.append({"degree": n, "pivot": fmt(pivot),
                          "from": f"{side} multiplication by {names[letter]}"})
            n, pivot = n - 1, parent


def ideal_closure(gens: Sequence[SpanBasis], pres: Presentation, N: int,
                  grading: Optional[Grading] = None) -> TruncatedIdeal:
    """Two-sided ideal generated by per-degree generator spans, truncated at ``N``.

    ``J_n = gens_n + A_1 J_(n-1) + J_(n-1) A_1``.
    """
    pres.require(N)
    spans: List[SpanBasis] = []
    prov: List[Dict[Word, tuple]] = []
    letters = range(len(pres.alphabet))
    for n in range(N + 1):
        span = SpanBasis(pres.normal_words(n), pres.field)
        origin: Dict[Word, tuple] = {}
        if n < len(gens):
            for row in gens[n].basis():
                if span.add(row):
                    origin[span.last_pivot] = ("generator",)
        if n > 0:
            for ppiv in spans[n - 1].pivots():
                row = spans[n - 1].row(ppiv)
                for a in letters:
                    for left in (True, False):
                        if span.is_full():
                            break
                        if span.add(_times_letter(pres, row, a, left)):
                            origin[span.last_pivot] = ("left" if left else "right", a, ppiv)
        spans.append(span)
        prov.append(origin)
    return TruncatedIdeal(pres, grading, N, list(gens), spans, prov)


def build_ideal(pres: Presentation, grading: Grading, N: int) -> TruncatedIdeal:
    """The ideal J generated by the intersection of the A*A_g, truncated at ``N``."""
    return ideal_closure(intersection_generators(pres, grading, N), pres, N, grading)


def suffix_cover_certificate(grading: Grading, w: Word) -> Optional[List[Tuple[int, str]]]:
    """Witness that every group element is the degree of a suffix of ``w``.

    Returns ``[(suffix length, element name), ...]``, one entry per element,
    or ``None`` when some element is missed.  A covered word lies in every
    A*A_g and hence in J.
    """
    G = grading.group
    seen: Dict[int, int] = {}
    for length, g in enumerate(suffix_degrees(grading, tuple(w))):
        seen.setdefault(g, length)
    if len(seen) < G.order:
        return None
    return [(seen[g], G.name(g)) for g in range(G.order)]


def _commute(pres: Presentation, u: Word, v: Word) -> bool:
    pres.require(len(u) + len(v))
    return pres.nf_word(u + v) == pres.nf_word(v + u)


def block_suffix_cover_certificate(pres: Presentation, grading: Grading, segments) -> Optional[dict]:
    """Suffix cover up to rearranging pairwise commuting powers.

    ``segments`` lists, left to right, either a plain word or a list of
    ``(word, exponent)`` factors that pairwise commute in A (checked by normal
    forms).  A commuting segment can be reordered so that any product
    ``u1^a1 ... uk^ak`` with ``ai <= exponent`` ends it, so the whole word
    equals, in A, a word whose suffix has that degree.  Returns a dict with
    the flattened word and one suffix description per group element, or
    ``None`` if some element is missed or a commutation fails.
    """
    G = grading.group
    word: Word = ()
    for seg in segments:
        if isinstance(seg, list):
            for i, (u, _) in enumerate(seg):
                for v, _ in seg[i + 1:]:
                    if not _commute(pres, tuple(u), tuple(v)):
                        return None
            for u, e in seg:
                word += tuple(u) * e
        else:
            word += tuple(seg)
    fmt = pres.alphabet.format
    # reachable: element -> description of a suffix (as a word) with that degree
    reach: Dict[int, Word] = {G.identity: ()}
    tail: Word = ()
    for seg in reversed(segments):
        tail_deg = grading.degree(tail)
        if isinstance(seg, list):
            combos = [()]
            for u, e in seg:
                combos = [c + tuple(u) * a for c in combos for a in range(e + 1)]
            pieces = combos
            block = ()
            for u, e in seg:
                block += tuple(u) * e
        else:
            block = tuple(seg)
            pieces = [block[len(block) - k:] for k in range(len(block) + 1)]
        for p in pieces:
            g = G.mul(grading.degree(p), tail_deg)
            reach.setdefault(g, p + tail)
        tail = block + tail
    if len(reach) < G.order:
        return None
    return {"word": word, "degree": len(word),
            "suffixes": [(G.name(g), fmt(reach[g]) if reach[g] else "1") for g in range(G.order)]}


def member_via_equivalence(target: Word, certified: Word, pres: Presentation,
                           left: Word = (), right: Word = ()):
    """``(True, lam)`` if nf(target) = lam * nf(left + certified + right), lam nonzero.

    ``left`` and ``right`` are optional multiplier words: when ``certified``
    lies in J so does ``left*certified*right``.  Returns ``(False, None)``
    when the normal forms are not proportional.
    """
    source = tuple(left) + tuple(certified) + tuple(right)
    pres.require(max(len(target), len(source)))
    a = pres.nf_word(tuple(target))
    b = pres.nf_word(source)
    if not a or not b or a.keys() != b.keys():
        return False, None
    lam = None
    for w, c in b.items():
        ratio = a[w] / c
        if lam is None:
            lam = ratio
        elif ratio != lam:
            return False, None
    return True, lam


def cross_check_certificates(pres: Presentation, grading: Grading, N: int = 8,
                             J: Optional[TruncatedIdeal] = None) -> dict:
    """Confirm cheap certificates against linear-algebra membership up to degree N.

    Every word of length <= N with a suffix cover must lie in J_n.  For
    proportionality, each covered word is compared with every word of the same
    length whose normal form is a nonzero multiple of its own; those must lie
    in J_n as well.  Returns counts and the list of failures (empty if sound).
    """
    if J is None:
        J = build_ideal(pres, grading, N)
    k = len(pres.alphabet)
    failures = []
    covers = proportional = 0
    layer: List[Word] = [()]
    for n in range(1, N + 1):
        layer = [w + (a,) for w in layer for a in range(k)]
        covered = [w for w in layer if suffix_cover_certificate(grading, w) is not None]
        covers += len(covered)
        for w in covered:
            if not J.contains(w)[0]:
                failures.append(("suffix_cover", pres.alphabet.format(w)))
        # group words by normal form up to scaling
        classes: Dict[tuple, List[Word]] = {}
        for w in layer:
            nf = pres.nf_word(w)
            if not nf:
                continue
            lead = max(nf)
            c = nf[lead]
            key = tuple(sorted((v, str(x / c)) for v, x in nf.items()))
            classes.setdefault(key, []).append(w)
        cov = set(covered)
        for group in classes.values():
            src = next((w for w in group if w in cov), None)
            if src is None:
                continue
            for w in group:
                if w in cov:
                    continue
                ok, _ = member_via_equivalence(w, src, pres)
                if ok:
                    proportional += 1
                    if not J.contains(w)[0]:
                        failures.append(("equivalence", pres.alphabet.format(w)))
    return {"degree": N, "suffix_cover_checked": covers,
            "equivalence_checked": proportional, "failures": failures}
