from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hatlab.exact import (
    SurdNumber,
    irrationality_witness,
    phi,
    phi_squared,
    surd_arith,
    surd_sign,
    to_decimal,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)
surds = st.builds(SurdNumber, rationals, rationals)
nonzero_surds = surds.filter(bool)


def test_phi_components():
    p = phi()
    assert (p.r, p.s) == (Fraction(1, 2), Fraction(1, 2))


def test_phi_defining_equation():
    p = phi()
    assert p * p - p - 1 == SurdNumber(0)
    assert 1 / p == p - 1


@pytest.mark.parametrize(
    "a, b, op, want",
    [
        (SurdNumber(0), phi(), "+", SurdNumber(Fraction(1, 2), Fraction(1, 2))),
        (phi(), phi(), "×", SurdNumber(Fraction(3, 2), Fraction(1, 2))),
        (phi() * phi(), phi(), "−", SurdNumber(1, 0)),
        (SurdNumber(1), phi(), "÷", phi() - 1),
    ],
)
def test_surd_arith(a, b, op, want):
    assert surd_arith(a, b, op) == want


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        surd_arith(phi(), SurdNumber(0), "/")


def test_unknown_operator():
    with pytest.raises(ValueError):
        surd_arith(phi(), phi(), "^")


def test_sign_examples():
    assert surd_sign(SurdNumber(0)) == 0
    # 5(1 + sqrt5) vs 16: phi is above 1.6 and below 1.625
    assert surd_sign(phi() - Fraction(8, 5)) == 1
    assert surd_sign(phi() - Fraction(13, 8)) == -1
    assert surd_sign(SurdNumber(-3, 1)) == -1  # sqrt5 < 3
    assert surd_sign(SurdNumber(3, -1)) == 1


@pytest.mark.parametrize(
    "value, digits, want",
    [
        (phi(), 10, "1.6180339887"),
        (phi_squared(), 11, "2.61803398875"),
        (SurdNumber(1, 0), 3, "1.000"),
        (-phi(), 3, "-1.618"),
        (Fraction(1, 8), 2, "0.13"),
        (Fraction(-1, 8), 2, "-0.13"),
        (Fraction(-1, 1000), 2, "0.00"),
        (Fraction(2, 3), 5, "0.66667"),
    ],
)
def test_to_decimal(value, digits, want):
    assert to_decimal(value, digits) == want


def test_to_decimal_rejects_zero_digits():
    with pytest.raises(ValueError):
        to_decimal(phi(), 0)


def test_to_decimal_long_expansion():
    # 50 digits of phi, checked against Decimal's own square root
    with localcontext() as ctx:
        ctx.prec = 80
        ref = ((1 + Decimal(5).sqrt()) / 2).quantize(Decimal(10) ** -50, rounding=ROUND_HALF_UP)
    assert to_decimal(phi(), 50) == str(ref)


def test_witness_small():
    assert irrationality_witness(1) == (1, (1, 1))


def test_witness_brute_force_100():
    best = min(abs(p * p - p * q - q * q) for p in range(1, 101) for q in range(1, 101))
    assert best == 1
    assert irrationality_witness(100)[0] == 1


def test_witness_fibonacci_pair():
    assert 8 * 8 - 8 * 5 - 5 * 5 == -1


@pytest.mark.parametrize("max_q", [1, 10, 100, 1000])
def test_witness_is_one(max_q):
    assert irrationality_witness(max_q)[0] == 1


def test_witness_rejects_zero():
    with pytest.raises(ValueError):
        irrationality_witness(0)


@settings(max_examples=300)
@given(surds, surds, surds)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == SurdNumber(0)


@given(nonzero_surds)
def test_multiplicative_inverse(a):
    assert a * a.inverse() == SurdNumber(1)


def _decimal_sign(a: SurdNumber) -> int:
    with localcontext() as ctx:
        ctx.prec = 50
        x = Decimal(a.r.numerator) / a.r.denominator + Decimal(a.s.numerator) / a.s.denominator * Decimal(5).sqrt()
    return (x > 0) - (x < 0)


@settings(max_examples=1000)
@given(surds)
def test_sign_matches_decimal(a):
    assert surd_sign(a) == _decimal_sign(a)


@given(surds, st.integers(min_value=1, max_value=12))
def test_rounding_consistent_with_longer_expansion(a, d):
    longer = to_decimal(a, d + 5)
    shorter = to_decimal(a, d)
    # rounding the longer expansion again can only differ at an exact tie
    again = to_decimal(Fraction(longer), d)
    if again != shorter:
        tail = longer.split(".")[1][d:]
        assert tail.startswith("5")


@given(surds, surds)
def test_ordering_matches_sign(a, b):
    assert (a < b) == ((a - b).sign() < 0)
