"""Group gradings of presented algebras.

The degree of a word is the product of its letter degrees read left to
right, so the degrees of the suffixes of ``w`` are the right-hand partial
products.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import InvalidGrading, UnsupportedFamily
from .freealg import Word
from .groups import FiniteGroup, subgroup_generated
from .rewrite import Presentation

__all__ = [
    "Grading",
    "GradingCheck",
    "validate_grading",
    "word_degree",
    "component_basis",
    "component_dims",
    "hdet",
    "resolution_terms",
    "verify_resolution_euler",
]


class Grading:
    """Assignment of a group element (by index) to each generator."""

    def __init__(self, group: FiniteGroup, degrees: Sequence[int], generator_names: Sequence[str]):
        if len(degrees) != len(generator_names):
            raise InvalidGrading("one degree per generator is required")
        self.group = group
        self.degrees: Tuple[int, ...] = tuple(group.element(g) for g in degrees)
        self.generator_names = tuple(generator_names)
        self._components: Dict[Tuple[int, int], Dict[int, List[Word]]] = {}

    @classmethod
    def from_names(cls, pres: Presentation, group: FiniteGroup, assignment: Mapping[str, str]):
        names = pres.alphabet.names
        missing = [g for g in names if g not in assignment]
        if missing:
            raise InvalidGrading(f"no degree given for generators {missing}")
        extra = [g for g in assignment if g not in names]
        if extra:
            raise InvalidGrading(f"degrees given for unknown generators {extra}")
        try:
            degs = [group.element(assignment[g]) for g in names]
        except KeyError as exc:
            raise InvalidGrading(str(exc.args[0])) from None
        return cls(group, degs, names)

    def degree(self, w: Word) -> int:
        return word_degree(self, w)

    def describe(self) -> Dict[str, str]:
        return {g: self.group.name(d) for g, d in zip(self.generator_names, self.degrees)}

    def inner_faithful(self) -> bool:
        return len(subgroup_generated(self.group, self.degrees)) == self.group.order


def word_degree(grading: Grading, w: Word) -> int:
    G = grading.group
    t, degs = G.table, grading.degrees
    out = G.identity
    for a in w:
        out = t[out][degs[a]]
    return out


def suffix_degrees(grading: Grading, w: Word) -> List[int]:
    """Degrees of the suffixes of ``w`` from the empty suffix to ``w`` itself."""
    G = grading.group
    out = [G.identity]
    acc = G.identity
    for a in reversed(w):
        acc = G.table[grading.degrees[a]][acc]
        out.append(acc)
    return out


@dataclass
class GradingCheck:
    valid: bool
    inner_faithful: bool
    violations: List[dict] = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {"valid": self.valid, "inner_faithful": self.inner_faithful,
                "violations": self.violations}


def validate_grading(pres: Presentation, grading: Grading) -> GradingCheck:
    """Every rule must be homogeneous; violations list the offending monomial degrees."""
    G = grading.group
    violations = []
    for idx, rule in enumerate(pres.rules):
        words = [rule.lhs] + rule.rhs.words()
        degs = {pres.alphabet.format(w): G.name(word_degree(grading, w)) for w in words}
        if len(set(degs.values())) > 1:
            violations.append({"rule": idx, "relation": str(rule.relation()), "degrees": degs})
    return GradingCheck(not violations, grading.inner_faithful(), violations)


def _components(pres: Presentation, grading: Grading, n: int) -> Dict[int, List[Word]]:
    key = (id(pres), n)
    got = grading._components.get(key)
    if got is None:
        pres.require(n)
        got = {}
        for w in pres.normal_words(n):
            got.setdefault(word_degree(grading, w), []).append(w)
        grading._components[key] = got
    return got


def component_basis(pres: Presentation, grading: Grading, n: int, g) -> List[Word]:
    """Normal words of length ``n`` and group degree ``g``."""
    g = grading.group.element(g)
    return list(_components(pres, grading, n).get(g, []))


def component_dims(pres: Presentation, grading: Grading, n: int) -> List[int]:
    comp = _components(pres, grading, n)
    return [len(comp.get(g, ())) for g in range(grading.group.order)]


def hdet(pres: Presentation, grading: Grading) -> Tuple[int, bool]:
    """Homological codeterminant by closed formula: g1^2 g2^2 for down-up, g1^4 otherwise."""
    G = grading.group
    if pres.family == "downup":
        g1, g2 = grading.degrees
        h = G.mul(g1, g1, g2, g2)
    elif pres.family in ("F", "H", "downup_xy"):
        g1 = grading.degrees[0]
        h = G.power(g1, 4)
    else:
        raise UnsupportedFamily(
            f"no closed-form codeterminant for family {pres.family!r}; use verify_resolution_euler")
    return h, h == G.identity


def resolution_terms(pres: Presentation, grading: Grading) -> List[Tuple[int, int, int]]:
    """(length shift, group shift, sign) for the free resolution of the trivial module.

    Shape 0 -> A(top) -> A(r1) + A(r2) -> A(x1) + A(x2) -> A, with the two
    cubic relations taken from the first two rules.
    """
    if pres.family not in ("downup", "F", "H", "downup_xy"):
        raise UnsupportedFamily(f"no default resolution shape for family {pres.family!r}")
    G = grading.group
    g1, g2 = grading.degrees
    r1 = word_degree(grading, pres.rules[0].lhs)
    r2 = word_degree(grading, pres.rules[1].lhs)
    top, _ = hdet(pres, grading)
    return [(0, G.identity, 1), (1, g1, -1), (1, g2, -1), (3, r1, 1), (3, r2, 1), (4, top, -1)]


def verify_resolution_euler(pres: Presentation, grading: Grading, N: int,
                            terms: Optional[Sequence[Tuple[int, int, int]]] = None,
                            witness: Optional[list] = None) -> bool:
    """Check that the alternating sum of shifted component dimensions is the trivial module.

    A term ``(k, h, s)`` contributes ``s * dim A_(n - k, g h^-1)`` at bidegree ``(n, g)``.
    When ``witness`` is a list, the first failing ``(n, g, value)`` is appended to it.
    """
    if terms is None:
        terms = resolution_terms(pres, grading)
    pres.require(N)
    G = grading.group
    dims = [component_dims(pres, grading, n) for n in range(N + 1)]
    for n in range(N + 1):
        for g in range(G.order):
            total = 0
            for k, h, sign in terms:
                if n - k >= 0:
                    total += sign * dims[n - k][G.mul(g, G.inv(h))]
            expected = 1 if (n == 0 and g == G.identity) else 0
            if total != expected:
                if witness is not None:
                    witness.append((n, G.name(g), total))
                return False
    return True
