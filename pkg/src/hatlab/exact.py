"""Exact arithmetic in quadratic fields Q(sqrt d).

Integers are plain Python ints and rationals are :class:`fractions.Fraction`;
both are already arbitrary precision and canonical. This module adds the
field elements ``r + s*sqrt(d)`` used for the golden ratio (d = 5) and for
hexagonal geometry (d = 3), plus exact decimal conversion.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import isqrt

Rational = Fraction


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def _floor_sqrt_times(q: Fraction, d: int) -> int:
    """floor(q * sqrt(d)) for a rational q."""
    n, m = q.numerator, q.denominator
    root = isqrt(d * n * n)
    if n >= 0:
        return root // m
    # q*sqrt(d) = -sqrt(d n^2)/m; floor of a negative needs the ceiling of the root
    exact = root * root == d * n * n
    return -((root + (0 if exact else 1) + m - 1) // m)


@total_ordering
class Quadratic:
    """Immutable element ``r + s*sqrt(D)`` of Q(sqrt D); subclasses fix D."""

    D = 0
    __slots__ = ("r", "s", "_hash")

    def __init__(self, r=0, s=0):
        object.__setattr__(self, "r", _rat(r))
        object.__setattr__(self, "s", _rat(s))
        object.__setattr__(self, "_hash", hash((type(self).D, self.r, self.s)))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def _coerce(self, other):
        if isinstance(other, Quadratic):
            if other.D != self.D:
                raise TypeError(f"cannot mix sqrt({self.D}) and sqrt({other.D})")
            return other
        if isinstance(other, (int, Fraction)):
            return type(self)(other, 0)
        return NotImplemented

    # -- field operations ------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(self.r + o.r, self.s + o.s)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-self.r, -self.s)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(self.r - o.r, self.s - o.s)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(self.r * o.r + self.D * self.s * o.s, self.r * o.s + self.s * o.r)

    __rmul__ = __mul__

    def conjugate(self):
        return type(self)(self.r, -self.s)

    def norm(self) -> Fraction:
        """Field norm r^2 - D s^2; zero only for the zero element."""
        return self.r * self.r - self.D * self.s * self.s

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt %d)" % self.D)
        return type(self)(self.r / n, -self.s / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** -k
        result, base = type(self)(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ------------------------------------------------------
    def sign(self) -> int:
        return quadratic_sign(self.r, self.s, self.D)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.r == o.r and self.s == o.s

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return bool(self.r) or bool(self.s)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def floor(self) -> int:
        """Exact floor, found from an integer-sqrt estimate and exact sign tests."""
        m = _floor_sqrt_times(self.s, self.D) + (self.r.numerator // self.r.denominator)
        while (self - (m + 1)).sign() >= 0:
            m += 1
        while (self - m).sign() < 0:
            m -= 1
        return m

    def to_float(self) -> float:
        """Floating-point value; only for rendering and diagnostics."""
        return float(self.r) + float(self.s) * self.D ** 0.5

    def __repr__(self):
        return f"{type(self).__name__}({self.r}, {self.s})"

    def __str__(self):
        if not self.s:
            return str(self.r)
        root = f"√{self.D}" if abs(self.s) == 1 else f"{abs(self.s)}√{self.D}"
        if not self.r:
            return root if self.s > 0 else "-" + root
        return f"{self.r} {'+' if self.s > 0 else '-'} {root}"


def quadratic_sign(r: Fraction, s: Fraction, d: int) -> int:
    """Sign of r + s*sqrt(d) by comparing r^2 with d*s^2; never approximates."""
    sr = (r > 0) - (r < 0)
    ss = (s > 0) - (s < 0)
    if ss == 0:
        return sr
    if sr == 0 or sr == ss:
        return ss
    # opposite signs: the larger magnitude wins
    diff = r * r - d * s * s
    if diff == 0:
        return 0
    return sr if diff > 0 else ss


class SurdNumber(Quadratic):
    """Element of Q(sqrt 5)."""

    D = 5
    __slots__ = ()


class Sqrt3Number(Quadratic):
    """Element of Q(sqrt 3), the coordinate field of the hexagonal lattice."""

    D = 3
    __slots__ = ()


SQRT3 = Sqrt3Number(0, 1)


def phi() -> SurdNumber:
    """The golden ratio (1 + sqrt 5)/2. Also written tau."""
    return SurdNumber(Fraction(1, 2), Fraction(1, 2))


def phi_squared() -> SurdNumber:
    return SurdNumber(Fraction(3, 2), Fraction(1, 2))


def surd_arith(a: SurdNumber, b: SurdNumber, op: str) -> SurdNumber:
    """Apply ``op`` (one of + - * / and the unicode forms) exactly."""
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def surd_sign(a: Quadratic) -> int:
    return a.sign()


def to_decimal(a, digits: int) -> str:
    """Decimal string of ``a`` rounded half away from zero to ``digits`` places.

    ``a`` may be an int, Fraction or any :class:`Quadratic`. The rounding is
    exact: the scaled value is floored with integer square roots, so there is
    no binary floating point anywhere.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if not isinstance(a, Quadratic):
        a = SurdNumber(_rat(a), 0)
    neg = a.sign() < 0
    mag = -a if neg else a
    scaled = mag * (10 ** digits)
    # round half away from zero on the magnitude: floor(x + 1/2)
    n = (scaled + Fraction(1, 2)).floor()
    whole, frac = divmod(n, 10 ** digits)
    sign = "-" if neg and n else ""
    return f"{sign}{whole}.{frac:0{digits}d}"


def irrationality_witness(max_q: int) -> tuple[int, tuple[int, int]]:
    """Minimum of |p^2 - p q - q^2| over 1 <= p, q <= max_q, by brute force.

    A rational root p/q of x^2 - x - 1 would make this zero, so a minimum of
    at least 1 rules out every candidate of height <= max_q. Returns the
    minimum and the first (p, q) in lexicographic order attaining it.
    """
    if max_q < 1:
        raise ValueError("max_q must be >= 1")
    best = None
    best_pair = (0, 0)
    qs = range(1, max_q + 1)
    for p in range(1, max_q + 1):
        pp = p * p
        row = min(abs(pp - p * q - q * q) for q in qs)
        if best is None or row < best:
            best = row
            best_pair = (p, next(q for q in qs if abs(pp - p * q - q * q) == row))
            if best == 0:
                break
    return best, best_pair
