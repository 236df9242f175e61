from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from workbench.errors import DenominatorVanishes
from workbench.scalars import QQ_FIELD, ScalarField, arith, is_zero, specialize

rationals = st.fractions(max_denominator=50)


def test_rational_product():
    half = QQ_FIELD.parse("1/2")
    assert arith(half, half, "mul") == QQ_FIELD.parse("1/4")


def test_algebraic_relation_reduces():
    K = ScalarField(algebraic=("a", "a^2 - 2"))
    a = K.param("a")
    assert a * a == K(2)
    assert is_zero(a * a - 2)


def test_parametric_additive_inverse():
    F = ScalarField(["alpha"])
    s = F.parse("alpha/(2 - alpha)")
    assert (s + F.parse("-alpha/(2 - alpha)")).is_zero()


def test_specialize():
    F = ScalarField(["alpha", "beta"])
    assert specialize(F.parse("1/(2 - alpha)"), {"alpha": 0}) == F.parse("1/2")
    assert specialize(F.param("beta"), {"beta": -1}) == F(-1)
    with pytest.raises(DenominatorVanishes):
        specialize(F.parse("1/(2 - alpha)"), {"alpha": 2})


def test_free_parameter_is_not_zero():
    F = ScalarField(["beta"])
    assert not is_zero(F.param("beta"))
    assert is_zero(F.parse("0"))


def test_printing_wraps_sums():
    F = ScalarField(["alpha"])
    assert str(F.parse("alpha + 1")) == "(alpha + 1)"
    assert str(QQ_FIELD.parse("3/6")) == "1/2"


@given(rationals, rationals, rationals)
def test_field_axioms_over_q(a, b, c):
    x, y, z = QQ_FIELD(a), QQ_FIELD(b), QQ_FIELD(c)
    assert (x + y) * z == x * z + y * z
    assert (x * y).to_rational() == a * b
    if b != 0:
        assert (x / y).to_rational() == Fraction(a) / b


@given(st.integers(-6, 6), st.integers(-6, 6))
def test_specialize_commutes_with_arithmetic(p, q):
    F = ScalarField(["alpha"])
    al = F.param("alpha")
    expr = (al + 1) * (al - 3) + al
    assert specialize(expr, {"alpha": p}).to_rational() == (p + 1) * (p - 3) + p
    if q != 2:
        assert specialize(F(1) / (F(2) - al), {"alpha": q}).to_rational() == Fraction(1, 2 - q)
