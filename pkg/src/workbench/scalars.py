"""Exact coefficients: rationals, free parameters, and one optional algebraic parameter.

A :class:`ScalarField` is the per-session declaration of parameter names.  Every
:class:`Scalar` it produces is stored canonically, either as a plain rational
(``gmpy2.mpq``, the fast path used by all specialised computations) or as a
reduced fraction of two polynomials over the rationals.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq
from sympy import QQ, Poly, Symbol, invert, parse_expr
from sympy.polys.rings import ring

from .errors import (
    DenominatorVanishes,
    DivisionByZero,
    InvalidParams,
    MixedAlgebraicRelations,
    WorkbenchError,
)

__all__ = ["ScalarField", "Scalar", "QQ_FIELD", "arith", "specialize", "is_zero"]


def _to_mpq(value) -> mpq:
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if type(value).__name__ == "mpq":
        return value
    if isinstance(value, Rational):
        return mpq(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot interpret {value!r} as a rational number")


class ScalarField:
    """Declared parameters of a session, plus at most one algebraic relation.

    ``algebraic`` is ``(name, minimal_polynomial)`` where the polynomial is a
    monic univariate string such as ``"a^2 - 2"``.  The name is added to the
    parameter list if it is not already there.
    """

    def __init__(self, parameters=(), algebraic=None):
        names = [str(p) for p in parameters]
        if len(set(names)) != len(names):
            raise InvalidParams(f"duplicate parameter names in {names}")
        self._minpoly_text = None
        if algebraic is not None:
            pname, mtext = algebraic
            if pname not in names:
                names.append(pname)
            self._minpoly_text = str(mtext).replace(" ", "")
        self.parameters = tuple(names)
        self.ring = ring(",".join(names), QQ)[0] if names else None
        self.algebraic = None
        if algebraic is not None:
            pname = algebraic[0]
            expr = parse_expr(str(algebraic[1]).replace("^", "**"),
                              local_dict={n: Symbol(n) for n in names})
            m = self.ring.from_expr(expr)
            idx = self.parameters.index(pname)
            if any(any(e for j, e in enumerate(mon) if j != idx) for mon in m.keys()):
                raise InvalidParams("minimal polynomial must be univariate")
            if m.degree(idx) < 1 or m.coeff(self.ring.gens[idx] ** m.degree(idx)) != 1:
                raise InvalidParams("minimal polynomial must be monic of positive degree")
            self.algebraic = (pname, m)
        self._key = (self.parameters, self._minpoly_text)
        self.zero = Scalar(self, mpq(0))
        self.one = Scalar(self, mpq(1))

    def __eq__(self, other):
        return isinstance(other, ScalarField) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.algebraic:
            return f"ScalarField({list(self.parameters)!r}, algebraic=({self.algebraic[0]!r}, {self._minpoly_text!r}))"
        return f"ScalarField({list(self.parameters)!r})"

    def __call__(self, value) -> Scalar:
        if isinstance(value, Scalar):
            return value if value.field == self else self._adopt(value)
        if isinstance(value, str):
            return self.parse(value)
        return Scalar(self, _to_mpq(value))

    def param(self, name: str) -> Scalar:
        if name not in self.parameters:
            raise InvalidParams(f"undeclared parameter {name!r}")
        g = self.ring.gens[self.parameters.index(name)]
        return self._make(g, self.ring.one)

    def parse(self, text: str) -> Scalar:
        from .freealg import parse_scalar

        return parse_scalar(text, self)

    def _adopt(self, s: Scalar) -> Scalar:
        if s.is_constant:
            return Scalar(self, s._v)
        if s.field.algebraic != self.algebraic and s.field.algebraic is not None:
            raise MixedAlgebraicRelations(f"{s.field!r} vs {self!r}")
        if not set(s.field.parameters) <= set(self.parameters):
            raise WorkbenchError(f"scalar from {s.field!r} uses parameters undeclared in {self!r}")
        num, den = s._v
        return self._make(num.set_ring(self.ring), den.set_ring(self.ring))

    # canonical construction -------------------------------------------------
    def _make(self, num, den) -> Scalar:
        if not den:
            raise DivisionByZero("zero denominator")
        if self.algebraic is not None:
            num, den = self._reduce_algebraic(num, den)
        if not num:
            return Scalar(self, mpq(0))
        if den.is_ground:
            if num.is_ground:
                return Scalar(self, mpq(num.LC) / mpq(den.LC))
            num = num.quo_ground(den.LC)
            den = self.ring.one
        else:
            num, den = num.cancel(den)
            lc = den.LC
            if lc != 1:
                num = num.quo_ground(lc)
                den = den.quo_ground(lc)
            if den.is_ground and num.is_ground:
                return Scalar(self, mpq(num.LC) / mpq(den.LC))
        return Scalar(self, (num, den))

    def _reduce_algebraic(self, num, den):
        pname, m = self.algebraic
        idx = self.parameters.index(pname)
        num = num.rem(m)
        den = den.rem(m)
        if not den:
            raise DivisionByZero("denominator vanishes modulo the algebraic relation")
        if den.degree(idx) <= 0:
            return num, den
        # invert den in K[p]/(m) with K the fraction field of the other parameters
        others = [n for n in self.parameters if n != pname]
        syms = {n: Symbol(n) for n in self.parameters}
        p = syms[pname]
        dom = QQ.frac_field(*[syms[n] for n in others]) if others else QQ
        den_poly = Poly(den.as_expr(*[syms[n] for n in self.parameters]), p, domain=dom)
        m_poly = Poly(m.as_expr(*[syms[n] for n in self.parameters]), p, domain=dom)
        try:
            inv = invert(den_poly, m_poly)
        except Exception as exc:  # sympy raises NotInvertible
            raise DivisionByZero("denominator is a zero divisor modulo the algebraic relation") from exc
        prod = (Poly(num.as_expr(*[syms[n] for n in self.parameters]), p, domain=dom) * inv).rem(m_poly)
        from sympy import fraction, together

        n_expr, d_expr = fraction(together(prod.as_expr()))
        return self.ring.from_expr(n_expr).rem(m), self.ring.from_expr(d_expr)


class Scalar:
    """Immutable exact field element; use a :class:`ScalarField` to create one."""

    __slots__ = ("field", "_v")

    def __init__(self, field: ScalarField, v):
        self.field = field
        self._v = v

    # structure --------------------------------------------------------------
    @property
    def is_constant(self) -> bool:
        return type(self._v) is not tuple

    @property
    def numerator(self):
        if self.is_constant:
            return self._v.numerator
        return self._v[0]

    @property
    def denominator(self):
        if self.is_constant:
            return self._v.denominator
        return self._v[1]

    def is_zero(self) -> bool:
        return self.is_constant and self._v == 0

    def __bool__(self):
        return not self.is_zero()

    def to_rational(self) -> Fraction:
        if not self.is_constant:
            raise WorkbenchError(f"{self} is not a rational constant")
        return Fraction(int(self._v.numerator), int(self._v.denominator))

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is self.field or other.field == self.field:
                return self.field, other
            if other.is_constant:
                return self.field, Scalar(self.field, other._v)
            if self.is_constant:
                return other.field, other
            if self.field.algebraic != other.field.algebraic:
                raise MixedAlgebraicRelations(f"{self.field!r} vs {other.field!r}")
            raise WorkbenchError(f"scalars from different sessions: {self.field!r} vs {other.field!r}")
        return self.field, Scalar(self.field, _to_mpq(other))

    def _polys(self, field):
        if self.is_constant:
            return field.ring(self._v), field.ring.one
        if self.field is not field and self.field != field:
            num, den = self._v
            return num.set_ring(field.ring), den.set_ring(field.ring)
        return self._v

    def __add__(self, other):
        try:
            field, other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._v, other._v
        if type(a) is not tuple and type(b) is not tuple:
            return Scalar(field, a + b)
        n1, d1 = self._polys(field)
        n2, d2 = other._polys(field)
        if d1 == d2:
            return field._make(n1 + n2, d1)
        return field._make(n1 * d2 + n2 * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        if self.is_constant:
            return Scalar(self.field, -self._v)
        return Scalar(self.field, (-self._v[0], self._v[1]))

    def __sub__(self, other):
        try:
            field, other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            field, other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._v, other._v
        if type(a) is not tuple and type(b) is not tuple:
            return Scalar(field, a * b)
        n1, d1 = self._polys(field)
        n2, d2 = other._polys(field)
        return field._make(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise DivisionByZero("division by zero scalar")
        if self.is_constant:
            return Scalar(self.field, 1 / self._v)
        num, den = self._v
        return self.field._make(den, num)

    def __truediv__(self, other):
        try:
            field, other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison -------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            a, b = self._v, other._v
            if type(a) is not tuple and type(b) is not tuple:
                return a == b
            if type(a) is tuple and type(b) is tuple:
                return self.field == other.field and a == b
            return False
        try:
            q = _to_mpq(other)
        except TypeError:
            return NotImplemented
        return self.is_constant and self._v == q

    def __hash__(self):
        if self.is_constant:
            return hash(self._v)
        return hash((self.field, tuple(sorted(self._v[0].items())), tuple(sorted(self._v[1].items()))))

    # substitution -------------------------------------------------------------
    def specialize(self, bindings) -> Scalar:
        if self.is_constant or not bindings:
            return self
        field = self.field
        pairs = []
        for name, value in bindings.items():
            if name not in field.parameters:
                raise InvalidParams(f"undeclared parameter {name!r}")
            q = _to_mpq(value)
            if field.algebraic and field.algebraic[0] == name:
                if field.algebraic[1].subs(field.ring.gens[field.parameters.index(name)], q):
                    raise InvalidParams(f"{name}={q} does not satisfy the algebraic relation")
            pairs.append((field.ring.gens[field.parameters.index(name)], q))
        num, den = self._v
        num, den = num.subs(pairs), den.subs(pairs)
        if not den:
            raise DenominatorVanishes(f"specializing {self} at {dict(bindings)} gives a zero denominator")
        return field._make(num, den)

    # text -------------------------------------------------------------------
    def __str__(self):
        if self.is_constant:
            q = self._v
            if q.denominator == 1:
                return str(q.numerator)
            return f"{q.numerator}/{q.denominator}"
        num, den = self._v
        ntext = "(" + str(num).replace("**", "^") + ")"
        if den == 1:
            return ntext
        return ntext + "/(" + str(den).replace("**", "^") + ")"

    def __repr__(self):
        return f"Scalar({str(self)!r})"


QQ_FIELD = ScalarField()


def arith(lhs: Scalar, rhs: Scalar, op: str) -> Scalar:
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    raise ValueError(f"unknown operation {op!r}")


def specialize(s: Scalar, bindings) -> Scalar:
    return s.specialize(bindings)


def is_zero(s: Scalar) -> bool:
    return s.is_zero()
