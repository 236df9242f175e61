"""Finite groups as validated Cayley tables with named elements."""

from __future__ import annotations

from itertools import product as iproduct
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import NotAGroup

__all__ = [
    "FiniteGroup",
    "cyclic",
    "dihedral",
    "quaternion8",
    "direct_product",
    "from_table",
    "build",
    "subgroup_generated",
    "element_order",
    "semidirect_z3sq_z4",
]


class FiniteGroup:
    """Named elements plus a full multiplication table, checked at construction."""

    def __init__(self, names: Sequence[str], table: Sequence[Sequence[int]], label: str = ""):
        names = [str(n) for n in names]
        n = len(names)
        if n == 0:
            raise NotAGroup("a group has at least one element")
        if len(set(names)) != n:
            raise NotAGroup("element names must be distinct", witness=names)
        if len(table) != n or any(len(row) != n for row in table):
            raise NotAGroup(f"table must be {n}x{n}")
        tab = [list(map(int, row)) for row in table]
        for i, row in enumerate(tab):
            for j, k in enumerate(row):
                if not 0 <= k < n:
                    raise NotAGroup("table entry out of range", witness=(names[i], names[j]))
        ident = next((e for e in range(n)
                      if all(tab[e][g] == g and tab[g][e] == g for g in range(n))), None)
        if ident is None:
            raise NotAGroup("no identity element")
        for a, b, c in iproduct(range(n), repeat=3):
            if tab[tab[a][b]][c] != tab[a][tab[b][c]]:
                raise NotAGroup("associativity fails", witness=(names[a], names[b], names[c]))
        inv = []
        for g in range(n):
            h = next((h for h in range(n) if tab[g][h] == ident), None)
            if h is None:
                raise NotAGroup("element without inverse", witness=(names[g],))
            inv.append(h)
        self.names: Tuple[str, ...] = tuple(names)
        self.table = tuple(tuple(r) for r in tab)
        self.identity = ident
        self.inverses = tuple(inv)
        self.label = label or f"group of order {n}"
        self._index = {nm: i for i, nm in enumerate(names)}

    @property
    def order(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return f"FiniteGroup({self.label})"

    def element(self, name) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.order:
                raise KeyError(name)
            return name
        try:
            return self._index[str(name)]
        except KeyError:
            raise KeyError(f"no element named {name!r} in {self.label}") from None

    def name(self, g: int) -> str:
        return self.names[g]

    def mul(self, *gs: int) -> int:
        out = self.identity
        for g in gs:
            out = self.table[out][g]
        return out

    def inv(self, g: int) -> int:
        return self.inverses[g]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inverses[g], -k
        out = self.identity
        for _ in range(k):
            out = self.table[out][g]
        return out

    def order_of(self, g: int) -> int:
        return element_order(self, g)

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))


def element_order(G: FiniteGroup, g: int) -> int:
    k, x = 1, g
    while x != G.identity:
        x = G.table[x][g]
        k += 1
    return k


def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> frozenset:
    """Closure of ``gens`` under multiplication (inverses come for free in a finite group)."""
    gens = list(gens)
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = G.table[h][g]
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return frozenset(seen)


def cyclic(n: int) -> FiniteGroup:
    """Z/n written additively, elements named "0" .. "n-1"."""
    if n < 1:
        raise NotAGroup("cyclic group needs n >= 1")
    return FiniteGroup([str(i) for i in range(n)],
                       [[(i + j) % n for j in range(n)] for i in range(n)], f"Z/{n}")


def _shortlex_names(n_elems: int, gens: Dict[str, int], mul, identity: int) -> List[str]:
    names = {identity: "1"}
    frontier = [(identity, "")]
    while frontier and len(names) < n_elems:
        nxt = []
        for g, w in frontier:
            for letter, h in gens.items():
                k = mul(g, h)
                if k not in names:
                    names[k] = w + letter
                    nxt.append((k, w + letter))
        frontier = nxt
    return [names[i] for i in range(n_elems)]


def dihedral(n: int) -> FiniteGroup:
    """D_{2n} = <a, b | a^2 = b^2 = (ba)^n = 1>, elements named by shortest words in a, b.

    Elements are pairs (e, k) standing for x -> e*x + k on Z/n, with
    a = (-1, 0) and b = (-1, 1); the sign is kept formally so that n = 1, 2
    still give groups of order 2n.
    """
    if n < 1:
        raise NotAGroup("dihedral group needs n >= 1")
    elems = [(e, k) for e in (1, -1) for k in range(n)]
    idx = {el: i for i, el in enumerate(elems)}

    def compose(f, g):
        # (f*g)(x) = f(g(x))
        (e1, k1), (e2, k2) = elems[f], elems[g]
        return idx[(e1 * e2, (e1 * k2 + k1) % n)]

    size = len(elems)
    table = [[compose(f, g) for g in range(size)] for f in range(size)]
    a, b, ident = idx[(-1, 0)], idx[(-1, 1 % n)], idx[(1, 0)]
    names = _shortlex_names(size, {"a": a, "b": b}, lambda g, h: table[g][h], ident)
    return FiniteGroup(names, table, f"D_{2 * n}")


def quaternion8() -> FiniteGroup:
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    # unit quaternions as (sign, axis)
    prod = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def parse(nm):
        return (-1, nm[1:]) if nm.startswith("-") else (1, nm)

    def fmt(s, ax):
        return ax if s == 1 else "-" + ax

    table = []
    for p in names:
        s1, a1 = parse(p)
        row = []
        for q in names:
            s2, a2 = parse(q)
            s3, a3 = prod[(a1, a2)]
            row.append(names.index(fmt(s1 * s2 * s3, a3)))
        table.append(row)
    return FiniteGroup(names, table, "Q_8")


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """Elements named "(g,h,...)" with the factor names."""
    if not groups:
        raise NotAGroup("product of no groups")
    tuples = list(iproduct(*[range(G.order) for G in groups]))
    idx = {t: i for i, t in enumerate(tuples)}
    table = [[idx[tuple(G.table[x][y] for G, x, y in zip(groups, s, t))] for t in tuples]
             for s in tuples]
    names = ["(" + ",".join(G.names[x] for G, x in zip(groups, t)) + ")" for t in tuples]
    return FiniteGroup(names, table, " x ".join(G.label for G in groups))


def from_table(names: Sequence[str], table: Sequence[Sequence], label: str = "") -> FiniteGroup:
    """Table entries may be element names or indices."""
    index = {str(n): i for i, n in enumerate(names)}
    rows = []
    for r, row in enumerate(table):
        out = []
        for c, v in enumerate(row):
            if isinstance(v, int) and not isinstance(v, bool):
                out.append(v)
            elif str(v) in index:
                out.append(index[str(v)])
            else:
                raise NotAGroup(f"unknown element {v!r} in table", witness=(r, c))
        rows.append(out)
    return FiniteGroup(names, rows, label)


def build(spec: dict) -> FiniteGroup:
    """Build a group from a config dictionary such as ``{"kind": "dihedral", "n": 4}``.

    ``dihedral`` takes ``n`` with order ``2n``; ``product`` takes ``factors``;
    ``table`` takes ``elements`` and ``table``; ``semidirect_z3sq_z4`` takes nothing.
    """
    kind = spec.get("kind")
    if kind == "cyclic":
        return cyclic(int(spec["n"]))
    if kind == "dihedral":
        return dihedral(int(spec["n"]))
    if kind in ("quaternion8", "quaternion"):
        return quaternion8()
    if kind == "product":
        return direct_product(*[build(f) for f in spec["factors"]])
    if kind == "semidirect_z3sq_z4":
        return semidirect_z3sq_z4()
    if kind == "table":
        return from_table(spec["elements"], spec["table"], spec.get("label", ""))
    raise KeyError(f"unknown group kind {kind!r}")


def semidirect_z3sq_z4() -> FiniteGroup:
    """(Z/3 x Z/3) x| Z/4 where the generator of Z/4 acts by (p, q) -> (q, -p).

    Elements are triples (p, q, r); named by their coordinates "p.q.r".
    """
    elems = [(p, q, r) for r in range(4) for p in range(3) for q in range(3)]
    idx = {e: i for i, e in enumerate(elems)}

    def act(r, p, q):
        for _ in range(r % 4):
            p, q = q, (-p) % 3
        return p, q

    table = []
    for (p1, q1, r1) in elems:
        row = []
        for (p2, q2, r2) in elems:
            p, q = act(r1, p2, q2)
            row.append(idx[((p1 + p) % 3, (q1 + q) % 3, (r1 + r2) % 4)])
        table.append(row)
    names = [f"{p}.{q}.{r}" for (p, q, r) in elems]
    return FiniteGroup(names, table, "(Z/3 x Z/3) x| Z/4")
