"""Words and noncommutative polynomials over a finite ordered alphabet.

Words are plain tuples of generator indices; the empty tuple is the unit.
Comparison is degree-lexicographic with the generator order fixed by the
:class:`Alphabet` (``Alphabet(["d", "u"])`` means ``d < u``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import AlphabetMismatch, ParseError, UnknownSymbol
from .scalars import QQ_FIELD, Scalar, ScalarField

Word = Tuple[int, ...]

__all__ = [
    "Alphabet",
    "Word",
    "NcPoly",
    "deglex_key",
    "deglex_compare",
    "multiply",
    "substitute",
    "parse_poly",
    "parse_scalar",
]


def deglex_key(w: Word):
    return (len(w), w)


def deglex_compare(w1: Word, w2: Word) -> int:
    """-1, 0 or 1 as ``w1`` is less than, equal to or greater than ``w2``."""
    k1, k2 = (len(w1), w1), (len(w2), w2)
    return (k1 > k2) - (k1 < k2)


def is_subword(needle: Word, hay: Word) -> bool:
    n = len(needle)
    return any(hay[i:i + n] == needle for i in range(len(hay) - n + 1))


@dataclass(frozen=True)
class Alphabet:
    names: Tuple[str, ...]
    _index: Dict[str, int] = dc_field(default=None, compare=False, hash=False, repr=False)

    def __init__(self, names: Iterable[str]):
        names = tuple(str(n) for n in names)
        if len(set(names)) != len(names) or any(not n for n in names):
            raise ValueError(f"generator names must be distinct and nonempty: {names}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownSymbol(f"unknown generator {name!r}") from None

    def split(self, ident: str):
        """Split a juxtaposed identifier such as ``udu`` into generator indices."""
        if ident in self._index:
            return (self._index[ident],)
        best = None
        # longest-match with backtracking; generator names are usually single letters
        stack = [(0, ())]
        while stack:
            pos, acc = stack.pop()
            if pos == len(ident):
                best = acc
                break
            for n in sorted(self.names, key=len):
                if ident.startswith(n, pos):
                    stack.append((pos + len(n), acc + (self._index[n],)))
        return best

    def word(self, text: str) -> Word:
        """Parse a monomial like ``"d^2*u"`` or ``"udu^5"`` (no coefficient)."""
        p = parse_poly(text, self)
        if len(p.terms) != 1:
            raise ParseError(f"{text!r} is not a single word", text, 0)
        (w, c), = p.terms.items()
        if c != 1:
            raise ParseError(f"{text!r} carries a coefficient", text, 0)
        return w

    def format(self, w: Word) -> str:
        if not w:
            return "1"
        out = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            name = self.names[w[i]]
            out.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(out)


class NcPoly:
    """Finitely supported map Word -> Scalar; zero coefficients are never stored."""

    __slots__ = ("alphabet", "field", "terms")

    def __init__(self, alphabet: Alphabet, field: ScalarField = QQ_FIELD, terms=None):
        self.alphabet = alphabet
        self.field = field
        self.terms: Dict[Word, Scalar] = {}
        if terms:
            for w, c in terms.items():
                if not isinstance(c, Scalar):
                    c = field(c)
                if not c.is_zero():
                    self.terms[tuple(w)] = c

    @classmethod
    def monomial(cls, alphabet, word: Word, coeff=1, field: ScalarField = QQ_FIELD):
        return cls(alphabet, field, {tuple(word): coeff})

    @classmethod
    def constant(cls, alphabet, value, field: ScalarField = QQ_FIELD):
        return cls(alphabet, field, {(): value})

    def _new(self, terms):
        p = NcPoly(self.alphabet, self.field)
        p.terms = terms
        return p

    def _check(self, other: NcPoly):
        if other.alphabet != self.alphabet:
            raise AlphabetMismatch(f"{self.alphabet.names} vs {other.alphabet.names}")

    # inspection -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def words(self):
        return sorted(self.terms, key=deglex_key, reverse=True)

    def items(self):
        return [(w, self.terms[w]) for w in self.words()]

    def coefficient(self, word) -> Scalar:
        if isinstance(word, str):
            word = self.alphabet.word(word)
        return self.terms.get(tuple(word), self.field.zero)

    @property
    def leading_word(self) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self.terms, key=deglex_key)

    @property
    def leading_coeff(self) -> Scalar:
        return self.terms[self.leading_word]

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self.terms}) <= 1

    def homogeneous_component(self, n: int) -> NcPoly:
        return self._new({w: c for w, c in self.terms.items() if len(w) == n})

    def is_constant(self) -> bool:
        return all(not w for w in self.terms)

    def constant_value(self) -> Scalar:
        return self.terms.get((), self.field.zero)

    # arithmetic ---------------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        return NcPoly.constant(self.alphabet, other, self.field)

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(w, None)
            else:
                terms[w] = s
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> NcPoly:
        if not isinstance(c, Scalar):
            c = self.field(c)
        if c.is_zero():
            return self._new({})
        return self._new({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NcPoly):
            return self.scale(other)
        self._check(other)
        terms: Dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = terms.get(w)
                terms[w] = c1 * c2 if s is None else s + c1 * c2
        return self._new({w: c for w, c in terms.items() if not c.is_zero()})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = NcPoly.constant(self.alphabet, 1, self.field)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.alphabet == other.alphabet and self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    def specialize(self, bindings) -> NcPoly:
        return NcPoly(self.alphabet, self.field,
                      {w: c.specialize(bindings) for w, c in self.terms.items()})

    def substitute(self, images: Mapping, target: Alphabet | None = None) -> NcPoly:
        return substitute(self, images, target)

    # text -------------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            wtext = self.alphabet.format(w)
            if c.is_constant:
                if c == 1:
                    t = wtext
                elif c == -1:
                    t = "-" + wtext if w else "-1"
                else:
                    ctext = str(c)
                    if "/" in ctext:
                        ctext = ctext[1:] if ctext.startswith("-") else ctext
                        sign = "-" if c.to_rational() < 0 else ""
                        ctext = f"{sign}({ctext})"
                    t = ctext if not w else f"{ctext}*{wtext}"
            else:
                ctext = str(c)
                if "/(" in ctext:
                    ctext = f"({ctext})"
                t = ctext if not w else f"{ctext}*{wtext}"
            parts.append(t)
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"NcPoly({str(self)!r})"


def multiply(p: NcPoly, q: NcPoly) -> NcPoly:
    return p * q


def substitute(p: NcPoly, images: Mapping, target: Alphabet | None = None) -> NcPoly:
    """Extend ``generator -> polynomial`` multiplicatively and linearly to ``p``.

    Keys of ``images`` may be generator names or indices.  Every generator
    occurring in ``p`` must have an image.
    """
    imgs = {}
    for k, v in images.items():
        imgs[p.alphabet.index(k) if isinstance(k, str) else k] = v
    if target is None:
        target = next(iter(imgs.values())).alphabet if imgs else p.alphabet
    for v in imgs.values():
        if v.alphabet != target:
            raise AlphabetMismatch("images live in different alphabets")
    one = NcPoly.constant(target, 1, p.field)
    cache: Dict[Word, NcPoly] = {(): one}

    def image(w: Word) -> NcPoly:
        got = cache.get(w)
        if got is None:
            head = image(w[:-1])
            try:
                got = head * imgs[w[-1]]
            except KeyError:
                raise AlphabetMismatch(f"no image for generator {p.alphabet.names[w[-1]]!r}") from None
            cache[w] = got
        return got

    result = NcPoly(target, p.field)
    for w, c in p.terms.items():
        for k in range(1, len(w)):
            image(w[:k])
        result = result + image(w).scale(c)
    return result


# --------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, alphabet, field, parameters):
        self.text = text
        self.alphabet = alphabet
        self.field = field
        self.parameters = set(parameters)
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, msg, cls=ParseError):
        raise cls(msg, self.text, self.tok[2])

    def take(self, kind):
        if self.tok[0] != kind:
            self.error(f"expected {kind!r}, found {self.tok[1]!r}")
        t = self.tok
        self.i += 1
        return t

    def const(self, value):
        return NcPoly.constant(self.alphabet, value, self.field)

    def parse(self) -> NcPoly:
        if self.tok[0] == "end":
            self.error("empty expression")
        value = self.expr()
        if self.tok[0] != "end":
            self.error(f"unexpected {self.tok[1]!r}")
        return value

    def expr(self):
        sign = 1
        if self.tok[0] in "+-" and len(self.tok[0]) == 1:
            sign = -1 if self.take(self.tok[0])[0] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.tok[0] in ("+", "-"):
            op = self.take(self.tok[0])[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def starts_factor(self):
        return self.tok[0] in ("num", "ident", "(")

    def term(self):
        value = self.power()
        while True:
            if self.tok[0] == "*":
                self.take("*")
                value = value * self.power()
            elif self.tok[0] == "/":
                pos = self.tok[2]
                self.take("/")
                divisor = self.power()
                if not divisor.is_constant():
                    raise ParseError("division by a non-scalar", self.text, pos)
                c = divisor.constant_value()
                if c.is_zero():
                    raise ParseError("division by zero", self.text, pos)
                value = value.scale(c.inverse())
            elif self.starts_factor():
                value = value * self.power()
            else:
                return value

    def power(self):
        if self.tok[0] == "-":
            self.take("-")
            return -self.power()
        letters = None
        if self.tok[0] == "ident":
            name = self.tok[1]
            if name in self.parameters:
                self.i += 1
                base = self.const(self.field.param(name))
            else:
                split = self.alphabet.split(name) if len(self.alphabet) else None
                if split is None:
                    self.error(f"unknown symbol {name!r}", UnknownSymbol)
                self.i += 1
                letters = split
                base = None
        elif self.tok[0] == "num":
            base = self.const(int(self.take("num")[1]))
        elif self.tok[0] == "(":
            self.take("(")
            base = self.expr()
            self.take(")")
        else:
            self.error(f"unexpected {self.tok[1]!r}")
        exponent = 1
        if self.tok[0] == "^":
            self.take("^")
            neg = False
            if self.tok[0] == "-":
                self.take("-")
                neg = True
            exponent = int(self.take("num")[1])
            if neg:
                if letters is not None or not base.is_constant():
                    self.error("negative powers are only allowed on scalars")
                c = base.constant_value()
                if c.is_zero():
                    self.error("zero to a negative power")
                return self.const(c ** (-exponent))
        if letters is not None:
            word = letters[:-1] + (letters[-1],) * exponent
            return NcPoly.monomial(self.alphabet, word, 1, self.field)
        if exponent == 1:
            return base
        if base.is_constant():
            return self.const(base.constant_value() ** exponent)
        return base ** exponent


def parse_poly(text: str, alphabet: Alphabet, parameters: Sequence[str] | None = None,
               field: ScalarField | None = None) -> NcPoly:
    """Parse ``text`` into an :class:`NcPoly`.

    ``*`` and juxtaposition are the noncommutative product, ``^`` raises the
    preceding generator (or parenthesised expression) to a natural power, and
    ``/`` divides by a nonzero scalar.  Identifiers are parameters if declared,
    otherwise generators; an identifier like ``udu`` is split into letters.
    """
    if field is None:
        field = ScalarField(parameters) if parameters else QQ_FIELD
    if parameters is None:
        parameters = field.parameters
    unknown = set(parameters) - set(field.parameters)
    if unknown:
        raise UnknownSymbol(f"parameters {sorted(unknown)} are not declared in {field!r}", text, 0)
    clash = set(parameters) & set(alphabet.names)
    if clash:
        raise ParseError(f"names {sorted(clash)} are both parameters and generators", text, 0)
    return _Parser(text, alphabet, field, parameters).parse()


_EMPTY = Alphabet(())


def parse_scalar(text: str, field: ScalarField = QQ_FIELD) -> Scalar:
    p = _Parser(text, _EMPTY, field, field.parameters).parse()
    return p.constant_value()
