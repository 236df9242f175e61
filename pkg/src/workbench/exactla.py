"""Exact reduced row echelon spans keyed by words.

Columns are ordered by decreasing deglex, so the pivot of every row is its
leading word.  Rows are kept fully reduced: a pivot word occurs in no other
row.
"""

from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import AmbientMismatch, WordOutsideAmbient
from .freealg import Alphabet, NcPoly, Word, deglex_key
from .scalars import QQ_FIELD, Scalar, ScalarField

__all__ = ["SpanBasis", "echelon", "intersect", "contains"]

Vector = Dict[Hashable, Scalar]


class SpanBasis:
    """Subspace of the span of ``ambient`` in reduced row echelon form.

    ``ambient`` may be ``None`` for an unchecked column set.  ``key`` orders
    columns; the pivot of a row is its key-largest column.
    """

    def __init__(self, ambient: Optional[Iterable] = None, field: ScalarField = QQ_FIELD,
                 key: Callable = deglex_key):
        self.key = key
        self.field = field
        if ambient is not None:
            self.ambient: Optional[Tuple] = tuple(sorted(set(ambient), key=key, reverse=True))
            self._ambient_set = frozenset(self.ambient)
        else:
            self.ambient = None
            self._ambient_set = None
        self.rows: Dict[Hashable, Vector] = {}  # pivot -> row
        self.last_pivot = None

    # construction ---------------------------------------------------------------
    def _vector(self, v) -> Vector:
        if isinstance(v, NcPoly):
            v = v.terms
        if self._ambient_set is not None:
            for w in v:
                if w not in self._ambient_set:
                    raise WordOutsideAmbient(f"word {w!r} is not among the ambient columns")
        return dict(v)

    def _reduce(self, v: Vector) -> Vector:
        rows = self.rows
        for p in [w for w in v if w in rows]:
            c = v.get(p)
            if c is None or c.is_zero():
                continue
            for w, rc in rows[p].items():
                s = v.get(w)
                s = -c * rc if s is None else s - c * rc
                if s.is_zero():
                    v.pop(w, None)
                else:
                    v[w] = s
        return {w: c for w, c in v.items() if not c.is_zero()}

    def add(self, v) -> bool:
        """Insert a vector; returns True if the rank grew."""
        v = self._reduce(self._vector(v))
        if not v:
            return False
        p = max(v, key=self.key)
        inv = v[p].inverse()
        if inv != 1:
            v = {w: c * inv for w, c in v.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c is not None:
                for w, vc in v.items():
                    s = row.get(w)
                    s = -c * vc if s is None else s - c * vc
                    if s.is_zero():
                        row.pop(w, None)
                    else:
                        row[w] = s
        self.rows[p] = v
        self.last_pivot = p
        return True

    def extend(self, vectors: Iterable) -> SpanBasis:
        for v in vectors:
            self.add(v)
        return self

    def copy(self) -> SpanBasis:
        out = SpanBasis(None, self.field, self.key)
        out.ambient, out._ambient_set = self.ambient, self._ambient_set
        out.rows = {p: dict(r) for p, r in self.rows.items()}
        return out

    # queries ------------------------------------------------------------------
    @property
    def rank(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def pivots(self) -> List:
        return sorted(self.rows, key=self.key, reverse=True)

    def basis(self) -> List[Vector]:
        return [self.rows[p] for p in self.pivots()]

    def has_pivot(self, w) -> bool:
        return w in self.rows

    def row(self, pivot) -> Vector:
        return self.rows[pivot]

    def residue(self, v) -> Vector:
        return self._reduce(self._vector(v))

    def contains(self, v) -> Tuple[bool, object]:
        """``(True, {pivot: coordinate})`` or ``(False, nonzero residue)``."""
        vec = self._vector(v)
        res = self._reduce(dict(vec))
        if res:
            return False, res
        return True, {p: vec[p] for p in self.pivots() if p in vec}

    def is_full(self) -> bool:
        return self.ambient is not None and self.rank == len(self.ambient)

    def __repr__(self):
        return f"SpanBasis(rank={self.rank})"


def echelon(vectors: Sequence, ambient: Optional[Iterable] = None,
            field: ScalarField = QQ_FIELD) -> SpanBasis:
    return SpanBasis(ambient, field).extend(vectors)


def contains(span: SpanBasis, v) -> Tuple[bool, object]:
    return span.contains(v)


def _intersect_two(U: SpanBasis, W: SpanBasis) -> SpanBasis:
    # Zassenhaus: rows (u | u) and (w | 0); rows with zero left half span U n W
    if len(U) > len(W):
        U, W = W, U
    key = U.key

    def dkey(c):
        half, w = c
        return (half, key(w))

    big = SpanBasis(None, U.field, dkey)
    for u in U.basis():
        vec = {(1, w): c for w, c in u.items()}
        vec.update({(0, w): c for w, c in u.items()})
        big.add(vec)
    for w_row in W.basis():
        big.add({(1, w): c for w, c in w_row.items()})
    out = SpanBasis(None, U.field, key)
    out.ambient, out._ambient_set = U.ambient, U._ambient_set
    for p, row in big.rows.items():
        if p[0] == 0:
            out.add({w: c for (half, w), c in row.items()})
    return out


def intersect(spans: Sequence[SpanBasis]) -> SpanBasis:
    if not spans:
        raise ValueError("intersection of no spans")
    amb = spans[0].ambient
    for s in spans[1:]:
        if s.ambient != amb and amb is not None and s.ambient is not None:
            raise AmbientMismatch("spans have different ambient columns")
    ordered = sorted(spans, key=len)
    result = ordered[0].copy()
    for s in ordered[1:]:
        if result.rank == 0:
            break
        if s.is_full():
            continue
        result = _intersect_two(result, s)
    return result
