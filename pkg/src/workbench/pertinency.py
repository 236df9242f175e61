"""Growth of A/J and certified lower bounds for the pertinency GKdim A - GKdim A/J.

Two kinds of certificate bound GKdim A/J from above:

* family patterns: the presence in J of elements with prescribed leading
  words (down-up algebras) or of prescribed monomials (F and B);
* monomial obstructions: the leading words of J together with the rule
  left-hand sides define a monomial algebra whose degree-n dimension bounds
  dim (A/J)_n from above; its growth is read off a finite graph.

Dimension data alone is only ever reported as evidence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .freealg import Alphabet, Word
from .grading import Grading
from .ideals import TruncatedIdeal, build_ideal
from .rewrite import Presentation

__all__ = [
    "GrowthProfile",
    "PertinencyReport",
    "quotient_growth",
    "obstruction_growth",
    "pattern_certificate",
    "pertinency_report",
    "avoiding_word_counts",
    "spanning_words_check",
]


@dataclass
class GrowthProfile:
    dims: List[int]
    kind: str  # eventually_zero | bounded | unbounded_evidence
    zero_from: Optional[int] = None
    bound: Optional[int] = None
    window: Optional[Tuple[int, int]] = None

    def to_json(self) -> dict:
        out = {"dims": self.dims, "classification": self.kind, "truncation": len(self.dims) - 1}
        if self.zero_from is not None:
            out["zero_from"] = self.zero_from
        if self.bound is not None:
            out["bound"] = self.bound
            out["window"] = list(self.window)
        return out


def classify_growth(dims: Sequence[int], group_order: int) -> GrowthProfile:
    """Classify a dimension sequence of A/J truncated at N = len(dims) - 1.

    Bounded means the maximum over the last k = min(|G| + 2, N/2) degrees does
    not exceed the maximum over all earlier degrees; the reported bound is the
    maximum over [N - 2|G| - 4, N].  This is evidence, not proof.
    """
    dims = list(dims)
    N = len(dims) - 1
    for n0 in range(1, N - 1):
        if dims[n0] == 0 and all(d == 0 for d in dims[n0:]):
            return GrowthProfile(dims, "eventually_zero", zero_from=n0)
    k = max(1, min(group_order + 2, N // 2))
    lo = max(0, N - 2 * group_order - 4)
    last, before = dims[N - k + 1:], dims[:N - k + 1]
    if before and max(last) <= max(before):
        return GrowthProfile(dims, "bounded", bound=max(dims[lo:]), window=(lo, N))
    return GrowthProfile(dims, "unbounded_evidence")


def quotient_growth(pres: Presentation, J: TruncatedIdeal, N: Optional[int] = None) -> GrowthProfile:
    N = J.N if N is None else min(N, J.N)
    order = J.grading.group.order if J.grading is not None else 1
    return classify_growth(J.quotient_dims()[:N + 1], order)


# ---------------------------------------------------------------------------
# monomial obstructions


def minimal_obstructions(words: Iterable[Word]) -> List[Word]:
    """Drop every word that contains a shorter (or equal, earlier) one as a factor."""
    out: List[Word] = []
    for w in sorted(set(words), key=lambda v: (len(v), v)):
        n = len(w)
        if not any(any(w[i:i + len(o)] == o for i in range(n - len(o) + 1)) for o in out):
            out.append(w)
    return out


def obstruction_growth(obstructions: Iterable[Word], alphabet_size: int,
                       max_states: int = 50000) -> Optional[dict]:
    """Growth degree of the monomial algebra with the given forbidden factors.

    Returns ``{"gk_bound": d, "states": m}`` where d is the polynomial growth
    degree (0 for finite dimension), ``{"gk_bound": None}`` for exponential
    growth, or ``None`` if the state graph would exceed ``max_states``.
    """
    obs = minimal_obstructions(obstructions)
    if not obs:
        return {"gk_bound": None, "states": 1, "reason": "free algebra"}
    L = max(len(o) for o in obs)
    obs_set = set(obs)
    lens = sorted({len(o) for o in obs})

    def clean(w):
        return not any(w[len(w) - l:] in obs_set for l in lens if l <= len(w))

    layer: List[Word] = [()]
    for _ in range(L - 1):
        nxt = []
        for w in layer:
            for a in range(alphabet_size):
                c = w + (a,)
                if clean(c):
                    nxt.append(c)
        layer = nxt
        if len(layer) > max_states:
            return None
    states = {w: i for i, w in enumerate(layer)}
    edges: List[List[int]] = [[] for _ in layer]
    for w, i in states.items():
        for a in range(alphabet_size):
            c = w + (a,)
            if clean(c):
                j = states.get(c[1:])
                if j is not None:
                    edges[i].append(j)
    comp = _scc(edges)
    ncomp = max(comp, default=-1) + 1
    size = [0] * ncomp
    inner = [0] * ncomp
    for i, c in enumerate(comp):
        size[c] += 1
        inner[c] += sum(1 for j in edges[i] if comp[j] == c)
    cyclic = [inner[c] > 0 for c in range(ncomp)]
    for c in range(ncomp):
        if cyclic[c] and inner[c] != size[c]:
            return {"gk_bound": None, "states": len(layer), "reason": "two cycles share a vertex"}
    # longest chain of cyclic components in the condensation
    cedges: Dict[int, set] = {c: set() for c in range(ncomp)}
    for i, js in enumerate(edges):
        for j in js:
            if comp[i] != comp[j]:
                cedges[comp[i]].add(comp[j])
    best: Dict[int, int] = {}

    def chain(c0: int) -> int:
        stack = [(c0, False)]
        while stack:
            c, done = stack.pop()
            if c in best:
                continue
            if done:
                best[c] = (1 if cyclic[c] else 0) + max((best[d] for d in cedges[c]), default=0)
                continue
            stack.append((c, True))
            for d in cedges[c]:
                if d not in best:
                    stack.append((d, False))
        return best[c0]

    d = max((chain(c) for c in range(ncomp)), default=0)
    return {"gk_bound": d, "states": len(layer)}


def _scc(edges: List[List[int]]) -> List[int]:
    """Tarjan's algorithm, iterative; returns a component id per vertex."""
    n = len(edges)
    index = [-1] * n
    low = [0] * n
    on = [False] * n
    comp = [-1] * n
    stack: List[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work.pop()
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on[v] = True
            recurse = False
            for k in range(pos, len(edges[v])):
                w = edges[v][k]
                if index[w] == -1:
                    work.append((v, k + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if on[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
    return comp


def avoiding_word_counts(forbidden: Iterable[Word], alphabet_size: int, N: int) -> List[int]:
    """Number of words of each length 0..N with no factor in ``forbidden``."""
    obs = minimal_obstructions(forbidden)
    L = max((len(o) for o in obs), default=1)
    obs_set = set(obs)
    counts: Dict[Word, int] = {(): 1}
    out = [1]
    for _ in range(N):
        nxt: Dict[Word, int] = {}
        for tail, c in counts.items():
            for a in range(alphabet_size):
                w = tail + (a,)
                if any(w[len(w) - len(o):] in obs_set for o in obs if len(o) <= len(w)):
                    continue
                key = w[-(L - 1):] if L > 1 else ()
                nxt[key] = nxt.get(key, 0) + c
        counts = nxt
        out.append(sum(counts.values()))
    return out


def spanning_words_check(pres: Presentation, J: TruncatedIdeal, forbidden: Sequence[Word]) -> dict:
    """Check that A/J is spanned by the words avoiding ``forbidden``.

    A is spanned by normal words, so a forbidden word is harmless if it is not
    normal (it contains a rule left-hand side) or if it lies in J.  Then
    dim (A/J)_n is at most the number of avoiding words, which is compared.
    """
    fmt = pres.alphabet.format
    reasons = {}
    for w in forbidden:
        w = tuple(w)
        if not pres.is_normal(w):
            reasons[fmt(w)] = "not normal"
        elif J.contains(w)[0]:
            reasons[fmt(w)] = "in J"
        else:
            reasons[fmt(w)] = None
    counts = avoiding_word_counts(forbidden, len(pres.alphabet), J.N)
    dims = J.quotient_dims()
    ok = all(reasons.values()) and all(d <= c for d, c in zip(dims, counts))
    return {"forbidden": reasons, "avoiding_counts": counts, "quotient_dims": dims,
            "reproduced": ok}


# ---------------------------------------------------------------------------
# family patterns


def _shape(alphabet: Alphabet, w: Word) -> str:
    return "".join(alphabet.names[a] for a in w) if all(len(n) == 1 for n in alphabet.names) else ""


def _find(regex: str, words: Iterable[Word], alphabet: Alphabet) -> Optional[Word]:
    pat = re.compile(regex)
    for w in sorted(words, key=lambda v: (len(v), v)):
        if w and pat.fullmatch(_shape(alphabet, w)):
            return w
    return None


DOWNUP_PATTERNS = {
    "any": ("d*(ud)*", "u+", "leading words d^s(ud)^i and u^t"),
    "alpha0": ("(dd)*(du)*", "(ud)*(uu)*", "leading words d^(2s)(du)^i and (ud)^j u^(2t)"),
}


def _block_words(blocks: Sequence[Tuple[str, bool]], n: int, alphabet: Alphabet) -> List[Word]:
    """Words of length n made of the blocks in order; starred blocks repeat any number of times."""
    out = []

    def rec(i: int, acc: str):
        if i == len(blocks):
            if len(acc) == n:
                out.append(tuple(alphabet.names.index(c) for c in acc))
            return
        text, star = blocks[i]
        if not star:
            rec(i + 1, acc + text)
            return
        k = 0
        while len(acc) + k * len(text) <= n:
            rec(i + 1, acc + text * k)
            k += 1

    rec(0, "")
    return out


def _monomials_in_J(J: Optional[TruncatedIdeal], blocks, members: Sequence[Word],
                    alphabet: Alphabet) -> Optional[Tuple[Word, str]]:
    regex = "".join(f"({t})*" if star else t for t, star in blocks)
    hit = _find(regex, members, alphabet)
    if hit is not None:
        return hit, "certificate"
    if J is None:
        return None
    for n in range(1, J.N + 1):
        for w in _block_words(blocks, n, alphabet):
            if J.contains(w)[0]:
                return w, "linear algebra"
    return None


F_PATTERNS = ([("yxxx", True), ("yyxx", True)], [("yxxx", True), ("yxx", False), ("yyxx", True)])
B_PATTERNS = ([("xx", True), ("yx", True)], [("xy", True), ("z", True)])


def pattern_certificate(pres: Presentation, J: Optional[TruncatedIdeal],
                        members: Sequence[Word] = (), use_obstructions: bool = True) -> Optional[dict]:
    """Search for a certificate that GKdim A/J <= 1 (or = 0).

    ``members`` are words already certified to lie in J, possibly beyond the
    truncation of ``J``.  Returns ``None`` when nothing applies.
    """
    A = pres.alphabet
    fmt = A.format
    pivots: List[Word] = []
    if J is not None:
        for n in range(1, J.N + 1):
            pivots.extend(J.pivots(n))
    leading = list(pivots) + [tuple(m) for m in members]

    if pres.family == "downup":
        keys = ["any"]
        if pres.params.get("alpha") is not None and pres.params["alpha"].is_zero():
            keys.append("alpha0")
        for key in keys:
            r1, r2, label = DOWNUP_PATTERNS[key]
            w1, w2 = _find(r1, leading, A), _find(r2, leading, A)
            if w1 is not None and w2 is not None:
                return {"kind": "pattern", "pattern": label, "gk_bound": 1,
                        "witnesses": [fmt(w1), fmt(w2)],
                        "beyond_truncation": any(len(w) > (J.N if J else 0) for w in (w1, w2))}
    elif pres.family in ("F", "B"):
        pats = F_PATTERNS if pres.family == "F" else B_PATTERNS
        label = ("monomials (yx^3)^a(y^2x^2)^b and (yx^3)^a'(yx^2)(y^2x^2)^b' in J"
                 if pres.family == "F" else "monomials x^(2s)(yx)^i and (xy)^j z^t in J")
        found = [_monomials_in_J(J, p, members, A) for p in pats]
        if all(f is not None for f in found):
            return {"kind": "pattern", "pattern": label, "gk_bound": 1,
                    "witnesses": [fmt(w) for w, _ in found],
                    "methods": [how for _, how in found],
                    "beyond_truncation": any(len(w) > (J.N if J else 0) for w, _ in found)}
    if use_obstructions and J is not None:
        words = [r.lhs for r in pres.rules] + leading
        res = obstruction_growth(words, len(A))
        if res is not None and res.get("gk_bound") is not None and res["gk_bound"] <= 1:
            used = [w for w in minimal_obstructions(words) if w not in {r.lhs for r in pres.rules}]
            return {"kind": "obstruction", "pattern": "monomial obstructions from leading words of J",
                    "gk_bound": res["gk_bound"], "states": res["states"],
                    "witnesses": [fmt(w) for w in used],
                    "beyond_truncation": any(len(w) > J.N for w in members)}
    return None


# ---------------------------------------------------------------------------
# report


@dataclass
class PertinencyReport:
    gkdim: int
    growth: GrowthProfile
    certificate: Optional[dict]
    pty_ge_2: str
    pty_eq_3: str
    isolated_singularity: bool
    lower_bound: Optional[int]
    status: str
    notes: List[str] = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "gkdim_A": self.gkdim,
            "growth": self.growth.to_json(),
            "certificate": self.certificate,
            "pty": {"lower_bound": self.lower_bound, "status": self.status,
                    "pty_ge_2": self.pty_ge_2, "pty_eq_3": self.pty_eq_3},
            "isolated_singularity": self.isolated_singularity,
            "notes": self.notes,
        }


def pertinency_report(pres: Presentation, grading: Grading, N: int,
                      members: Sequence[Word] = (), J: Optional[TruncatedIdeal] = None) -> PertinencyReport:
    """Combine the growth of A/J with certificates into pertinency flags.

    Pty = 3 is certified when (A/J)_n vanishes from some n0 <= N - 2 on, since A
    is generated in degree one.  Pty >= 2 is certified only by a pattern or
    obstruction certificate; bounded dimension data alone counts as evidence.
    """
    if J is None:
        J = build_ideal(pres, grading, N)
    growth = quotient_growth(pres, J, N)
    notes: List[str] = []
    cert = pattern_certificate(pres, J, members)
    gk = pres.gkdim
    if growth.kind == "eventually_zero":
        notes.append(f"(A/J)_n = 0 for n >= {growth.zero_from}; A/J is finite dimensional")
        return PertinencyReport(gk, growth, cert or {"kind": "finite_dimension",
                                                    "zero_from": growth.zero_from, "gk_bound": 0},
                                "certified", "certified", True, gk, "certified", notes)
    if cert is not None:
        if not cert.get("beyond_truncation") and growth.kind != "bounded":
            raise AssertionError("certificate and growth classification disagree")
        if cert.get("beyond_truncation"):
            notes.append("certificate uses members of J beyond the truncation degree; "
                         "growth data up to the truncation cannot reflect them")
        bound = gk - cert["gk_bound"]
        eq3 = "certified" if cert["gk_bound"] == 0 else "false"
        return PertinencyReport(gk, growth, cert, "certified", eq3, cert["gk_bound"] == 0,
                                bound, "certified", notes)
    if growth.kind == "bounded":
        notes.append("dimensions of A/J look bounded; no certificate found")
        return PertinencyReport(gk, growth, None, "evidence", "false", False, gk - 1, "evidence", notes)
    return PertinencyReport(gk, growth, None, "false", "false", False, None, "none", notes)
