"""Homogeneous rewriting systems: normal forms, ambiguities and bounded completion.

A rule ``lhs -> rhs`` replaces an occurrence of the word ``lhs`` by the
polynomial ``rhs`` whose words are all deglex-smaller.  All relations handled
here are homogeneous for word length, so the diamond lemma applies degree by
degree: if every ambiguity of degree at most ``n`` resolves, the normal words
of degree ``n`` form a basis of the degree-``n`` component.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    CompletionBudgetExceeded,
    IncompletePresentation,
    InvalidParams,
    WorkbenchError,
)
from .freealg import Alphabet, NcPoly, Word, deglex_key, parse_poly
from .scalars import QQ_FIELD, Scalar, ScalarField

__all__ = [
    "RewriteRule",
    "Presentation",
    "Ambiguity",
    "FAMILIES",
    "builtin",
    "custom",
    "normal_form",
    "overlaps",
    "complete",
    "dim_component",
    "normal_words",
]

FAMILIES = ("downup", "F", "H", "B", "downup_xy", "custom")


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: NcPoly

    def __post_init__(self):
        key = deglex_key(self.lhs)
        for w in self.rhs.terms:
            if deglex_key(w) >= key:
                raise ValueError("rule right-hand side must be deglex-smaller than its lhs")

    def relation(self) -> NcPoly:
        return NcPoly.monomial(self.rhs.alphabet, self.lhs, 1, self.rhs.field) - self.rhs

    def __str__(self):
        return f"{self.rhs.alphabet.format(self.lhs)} -> {self.rhs}"


def rule_from_relation(rel: NcPoly) -> RewriteRule:
    """Orient a nonzero relation by its deglex-leading word and make it monic."""
    lw = rel.leading_word
    inv = rel.leading_coeff.inverse()
    rhs = NcPoly(rel.alphabet, rel.field,
                 {w: -c * inv for w, c in rel.terms.items() if w != lw})
    return RewriteRule(lw, rhs)


class Presentation:
    """An alphabet with a list of monic rules, tagged by family.

    ``verified_to`` is the degree up to which all ambiguities are known to
    resolve (``math.inf`` once every ambiguity of the finite rule set has been
    checked), or ``None`` when nothing has been checked.
    """

    def __init__(self, alphabet: Alphabet, rules: Sequence[RewriteRule], family: str = "custom",
                 params: Optional[Mapping] = None, field: ScalarField = QQ_FIELD,
                 verified_to=None, gkdim: int = 3):
        self.alphabet = alphabet
        self.rules: Tuple[RewriteRule, ...] = tuple(rules)
        self.family = family
        self.params = dict(params or {})
        self.field = field
        self.verified_to = verified_to
        self.gkdim = gkdim
        lhs = [r.lhs for r in self.rules]
        if len(set(lhs)) != len(lhs):
            raise InvalidParams("rules must have pairwise distinct left-hand sides")
        self._lhs: Dict[Word, Dict[Word, Scalar]] = {r.lhs: r.rhs.terms for r in self.rules}
        self._lens = sorted({len(w) for w in lhs})
        self._step: Dict[Word, Optional[Tuple]] = {}
        self._nf: Dict[Word, Dict[Word, Scalar]] = {}
        self._normal_words: List[List[Word]] = [[()]]

    # status -------------------------------------------------------------------
    @property
    def status(self) -> str:
        if self.verified_to is None:
            return "unknown"
        if self.verified_to == math.inf:
            return "complete"
        return f"verified_to_degree {self.verified_to}"

    def require(self, n: int):
        if self.verified_to is None or self.verified_to < n:
            raise IncompletePresentation(
                f"{self.family} presentation is {self.status}; degree {n} needs complete(pres, {n})")

    def max_ambiguity_degree(self) -> int:
        lens = [len(r.lhs) for r in self.rules]
        if not lens:
            return 0
        top = sorted(lens)[-2:]
        # a single rule can still overlap itself
        return sum(top) - 1 if len(top) == 2 else 2 * top[0] - 1

    def __repr__(self):
        return f"Presentation({self.family}, {len(self.rules)} rules, {self.status})"

    # reduction ------------------------------------------------------------------
    def poly(self, text: str) -> NcPoly:
        return parse_poly(text, self.alphabet, field=self.field)

    def word(self, text: str) -> Word:
        return self.alphabet.word(text)

    def _find(self, w: Word):
        """Leftmost occurrence of a rule lhs in ``w`` as (position, lhs), or None."""
        step = self._step.get(w, False)
        if step is not False:
            return step
        found = None
        lhs = self._lhs
        for i in range(len(w)):
            for L in self._lens:
                if i + L > len(w):
                    break
                if w[i:i + L] in lhs:
                    found = (i, w[i:i + L])
                    break
            if found:
                break
        self._step[w] = found
        return found

    def is_normal(self, w: Word) -> bool:
        return self._find(tuple(w)) is None

    def reduce_terms(self, terms: Mapping[Word, Scalar]) -> Dict[Word, Scalar]:
        """Normal form of a coefficient map; words are processed greatest first."""
        acc: Dict[Word, Scalar] = {}
        heap = []
        for w, c in terms.items():
            if not c.is_zero():
                acc[w] = c
                heapq.heappush(heap, (-len(w), tuple(-x for x in w), w))
        out: Dict[Word, Scalar] = {}
        nf_cache = self._nf
        lhs = self._lhs
        while heap:
            _, _, w = heapq.heappop(heap)
            c = acc.pop(w)
            if c.is_zero():
                continue
            cached = nf_cache.get(w)
            if cached is not None:
                targets = cached.items()
            else:
                hit = self._find(w)
                if hit is None:
                    s = out.get(w)
                    out[w] = c if s is None else s + c
                    continue
                i, l = hit
                pre, post = w[:i], w[i + len(l):]
                for v, cv in lhs[l].items():
                    nw = pre + v + post
                    s = acc.get(nw)
                    if s is None:
                        acc[nw] = c * cv
                        heapq.heappush(heap, (-len(nw), tuple(-x for x in nw), nw))
                    else:
                        acc[nw] = s + c * cv
                continue
            for v, cv in targets:
                s = out.get(v)
                out[v] = c * cv if s is None else s + c * cv
        return {w: c for w, c in out.items() if not c.is_zero()}

    def nf_word(self, w: Word) -> Dict[Word, Scalar]:
        w = tuple(w)
        got = self._nf.get(w)
        if got is None:
            got = self.reduce_terms({w: self.field.one})
            self._nf[w] = got
        return got

    def nf(self, p: NcPoly) -> NcPoly:
        if p.alphabet != self.alphabet:
            raise WorkbenchError("polynomial alphabet differs from the presentation alphabet")
        terms = p.terms
        if len(terms) == 1:
            (w, c), = terms.items()
            reduced = self.nf_word(w)
            q = NcPoly(self.alphabet, self.field)
            q.terms = {v: cv * c for v, cv in reduced.items()}
            return q
        q = NcPoly(self.alphabet, self.field)
        q.terms = self.reduce_terms(terms)
        return q

    def nf_product(self, u: Word, v: Word) -> Dict[Word, Scalar]:
        return self.nf_word(tuple(u) + tuple(v))

    # normal words ---------------------------------------------------------------
    def normal_words(self, n: int) -> List[Word]:
        """All normal words of length ``n`` in increasing deglex order."""
        self.require(n)
        while len(self._normal_words) <= n:
            prev = self._normal_words[-1]
            nxt = []
            for w in prev:
                for a in range(len(self.alphabet)):
                    cand = w + (a,)
                    if not any(cand[len(cand) - L:] in self._lhs
                               for L in self._lens if L <= len(cand)):
                        nxt.append(cand)
            nxt.sort()
            self._normal_words.append(nxt)
        return self._normal_words[n]

    def count_normal_words(self, n: int) -> int:
        """Number of normal words of length ``n`` by a suffix-state count."""
        self.require(n)
        if n < len(self._normal_words):
            return len(self._normal_words[n])
        k = max(self._lens[-1] - 1, 0) if self._lens else 0
        # states: the last k letters of a normal word (shorter at the start)
        states: Dict[Word, int] = {(): 1}
        for step in range(n):
            nxt: Dict[Word, int] = {}
            for s, cnt in states.items():
                for a in range(len(self.alphabet)):
                    cand = s + (a,)
                    if any(cand[len(cand) - L:] in self._lhs for L in self._lens if L <= len(cand)):
                        continue
                    key = cand[-k:] if k else ()
                    nxt[key] = nxt.get(key, 0) + cnt
            states = nxt
        return sum(states.values())


def normal_form(p: NcPoly, pres: Presentation) -> NcPoly:
    return pres.nf(p)


def normal_words(pres: Presentation, n: int) -> List[Word]:
    return pres.normal_words(n)


def dim_component(pres: Presentation, n: int) -> int:
    pres.require(n)
    return pres.count_normal_words(n)


# ---------------------------------------------------------------------------
# ambiguities


@dataclass
class Ambiguity:
    word: Word
    first: int
    second: int
    kind: str  # "overlap" or "inclusion"
    resolved: bool
    residue: NcPoly = dc_field(repr=False)

    def describe(self, alphabet: Alphabet) -> dict:
        return {"word": alphabet.format(self.word), "kind": self.kind,
                "rules": [self.first, self.second], "resolved": self.resolved,
                "residue": str(self.residue)}


def _ambiguity_pairs(rules: Sequence[RewriteRule], maxdeg: int, only_new_from: int = 0):
    """Yield (word, i, j, kind, way1, way2) for ambiguities up to ``maxdeg``.

    With ``only_new_from`` set, pairs with both indices below it are skipped.
    """
    for i, r1 in enumerate(rules):
        l1 = r1.lhs
        for j, r2 in enumerate(rules):
            if i < only_new_from and j < only_new_from:
                continue
            l2 = r2.lhs
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k] and len(l1) + len(l2) - k <= maxdeg:
                    a, c = l1[:-k], l2[k:]
                    yield l1 + c, i, j, "overlap", (r1.rhs, (), c), (r2.rhs, a, ())
            if i != j and len(l2) < len(l1) and len(l1) <= maxdeg:
                for p in range(len(l1) - len(l2) + 1):
                    if l1[p:p + len(l2)] == l2:
                        yield l1, i, j, "inclusion", (r1.rhs, (), ()), (r2.rhs, l1[:p], l1[p + len(l2):])


def _wrap(rhs: NcPoly, a: Word, c: Word) -> Dict[Word, Scalar]:
    return {a + w + c: v for w, v in rhs.terms.items()}


def _residue(pres: Presentation, way1, way2) -> NcPoly:
    t = _wrap(*way1)
    for w, v in _wrap(*way2).items():
        s = t.get(w)
        t[w] = -v if s is None else s - v
    q = NcPoly(pres.alphabet, pres.field)
    q.terms = pres.reduce_terms({w: c for w, c in t.items() if not c.is_zero()})
    return q


def overlaps(pres: Presentation, maxdeg: int) -> List[Ambiguity]:
    """Every overlap and inclusion ambiguity of degree at most ``maxdeg``, reduced both ways."""
    out = []
    for word, i, j, kind, way1, way2 in _ambiguity_pairs(pres.rules, maxdeg):
        res = _residue(pres, way1, way2)
        out.append(Ambiguity(word, i, j, kind, res.is_zero(), res))
    out.sort(key=lambda a: (len(a.word), a.word, a.first, a.second))
    return out


def check(pres: Presentation, maxdeg: Optional[int] = None) -> Presentation:
    """Record the degree to which ``pres`` is verified, without adding rules."""
    if maxdeg is None:
        maxdeg = pres.max_ambiguity_degree()
    amb = overlaps(pres, maxdeg)
    bad = [a for a in amb if not a.resolved]
    if bad:
        verified = min(len(a.word) for a in bad) - 1
    elif pres.max_ambiguity_degree() <= maxdeg:
        verified = math.inf
    else:
        verified = maxdeg
    pres.verified_to = verified
    return pres


def complete(pres: Presentation, maxdeg: int, max_rules: int = 2000) -> Presentation:
    """Bounded homogeneous completion.

    Ambiguities are processed degree by degree; unresolved residues of one
    degree are inter-reduced and added as new monic rules before the next
    degree is examined.  The result is verified through ``maxdeg`` and is
    marked complete if no ambiguity of the final rule set exceeds ``maxdeg``.
    """
    if pres.verified_to is not None and pres.verified_to >= maxdeg:
        return pres
    rules = list(pres.rules)
    work = Presentation(pres.alphabet, rules, pres.family, pres.params, pres.field, None, pres.gkdim)
    checked: set = set()
    for d in range(1, maxdeg + 1):
        new_rels: List[NcPoly] = []
        for word, i, j, kind, way1, way2 in _ambiguity_pairs(work.rules, d):
            if len(word) != d:
                continue
            key = (word, i, j, kind, way2[1])
            if key in checked:
                continue
            checked.add(key)
            res = _residue(work, way1, way2)
            if not res.is_zero():
                new_rels.append(res)
        if not new_rels:
            continue
        added = []
        for rel in new_rels:
            scratch = Presentation(work.alphabet, list(work.rules) + added, work.family,
                                   work.params, work.field)
            rel = scratch.nf(rel)
            if rel.is_zero():
                continue
            added.append(rule_from_relation(rel))
        if len(work.rules) + len(added) > max_rules:
            raise CompletionBudgetExceeded(
                f"completion of {pres.family} exceeded {max_rules} rules at degree {d}")
        work = Presentation(work.alphabet, list(work.rules) + added, work.family,
                            work.params, work.field, None, work.gkdim)
    work.verified_to = math.inf if work.max_ambiguity_degree() <= maxdeg else maxdeg
    return work


# ---------------------------------------------------------------------------
# built-in families


def _scalar(value, field: ScalarField) -> Scalar:
    if isinstance(value, Scalar):
        return value if value.field == field else field(value)
    if isinstance(value, str):
        return field.parse(value)
    return field(value)


def _generic_nonzero(s: Scalar) -> bool:
    return not s.is_zero()


def builtin(family: str, params: Optional[Mapping] = None,
            field: Optional[ScalarField] = None) -> Presentation:
    """Presentation of a built-in family with rules oriented by deglex.

    ``params`` values may be integers, fractions, scalars, or strings in the
    scalar grammar; symbolic parameters must be declared in ``field``.
    """
    params = dict(params or {})
    if field is None:
        field = next((v.field for v in params.values() if isinstance(v, Scalar)), QQ_FIELD)
    if family == "downup":
        for key in ("alpha", "beta"):
            if key not in params:
                raise InvalidParams(f"downup needs parameter {key!r}")
        alpha, beta = _scalar(params["alpha"], field), _scalar(params["beta"], field)
        if beta.is_zero():
            raise InvalidParams("downup needs beta != 0 (the algebra is noetherian iff beta != 0)")
        A = Alphabet(("d", "u"))
        binv, ab = beta.inverse(), alpha / beta
        rules = [
            RewriteRule((1, 0, 0), NcPoly(A, field, {(0, 0, 1): binv, (0, 1, 0): -ab})),
            RewriteRule((1, 1, 0), NcPoly(A, field, {(0, 1, 1): binv, (1, 0, 1): -ab})),
        ]
        pres = Presentation(A, rules, "downup", {"alpha": alpha, "beta": beta}, field)
        return check(pres)
    if family == "F":
        A = Alphabet(("x", "y"))
        P = lambda t: parse_poly(t, A, field=field)
        rules = [
            RewriteRule(A.word("y^3"), P("xyx")),
            RewriteRule(A.word("yxy"), P("x^3")),
            RewriteRule(A.word("y^2x^3"), P("xyx^2y")),
            RewriteRule(A.word("yx^2yx"), P("x^3y^2")),
            RewriteRule(A.word("yx^4"), P("x^4y")),
        ]
        return check(Presentation(A, rules, "F", {}, field))
    if family == "H":
        A = Alphabet(("x", "y"))
        P = lambda t: parse_poly(t, A, field=field)
        rels = [P("x^2y + yx^2 - 2y^3"), P("-2x^3 + xy^2 + y^2x")]
        return Presentation(A, [rule_from_relation(r) for r in rels], "H", {}, field)
    if family == "B":
        A = Alphabet(("x", "y", "z"))
        P = lambda t: parse_poly(t, A, field=field)
        rules = [
            RewriteRule(A.word("y^2"), P("x^2")),
            RewriteRule(A.word("yx^2"), P("x^2y")),
            RewriteRule(A.word("zx"), P("-xz")),
            RewriteRule(A.word("zy"), P("-yz")),
        ]
        return check(Presentation(A, rules, "B", {}, field))
    if family == "downup_xy":
        if "alpha" not in params:
            raise InvalidParams("downup_xy needs parameter 'alpha'")
        alpha = _scalar(params["alpha"], field)
        two = field(2)
        if (alpha - two).is_zero():
            raise InvalidParams("downup_xy needs alpha != 2")
        A = Alphabet(("x", "y"))
        x, y = NcPoly.monomial(A, (0,), 1, field), NcPoly.monomial(A, (1,), 1, field)
        r1 = (x * x * y).scale(alpha) + (x * y * x).scale(-two - alpha) \
            + (y * x * x).scale(alpha) + (y * y * y).scale(two - alpha)
        r2 = (x * x * x).scale(two - alpha) + (x * y * y).scale(alpha) \
            + (y * x * y).scale(-two - alpha) + (y * y * x).scale(alpha)
        rules = [rule_from_relation(r1), rule_from_relation(r2)]
        return Presentation(A, rules, "downup_xy", {"alpha": alpha}, field)
    raise InvalidParams(f"unknown family {family!r}; expected one of {FAMILIES[:-1]}")


def custom(generators: Sequence[str], relations: Sequence[str],
           field: ScalarField = QQ_FIELD, gkdim: int = 3) -> Presentation:
    """Presentation from homogeneous relation strings such as ``"d^2u - dud - ud^2"``."""
    A = Alphabet(generators)
    rels = []
    for text in relations:
        if "=" in text:
            lhs, rhs = text.split("=", 1)
            rel = parse_poly(lhs, A, field=field) - parse_poly(rhs, A, field=field)
        else:
            rel = parse_poly(text, A, field=field)
        if rel.is_zero():
            raise InvalidParams(f"relation {text!r} is zero")
        if not rel.is_homogeneous():
            raise InvalidParams(f"relation {text!r} is not homogeneous")
        rels.append(rel)
    rules: List[RewriteRule] = []
    for rel in rels:
        scratch = Presentation(A, rules, "custom", {}, field)
        rel = scratch.nf(rel)
        if not rel.is_zero():
            rules.append(rule_from_relation(rel))
    return Presentation(A, rules, "custom", {}, field, None, gkdim)
