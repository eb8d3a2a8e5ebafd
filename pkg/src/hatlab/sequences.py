"""Fibonacci-type integer sequences and their consecutive-term ratios.

Index convention throughout: F(0) = 0, F(1) = 1, L(0) = 2, L(1) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exact import SurdNumber

KINDS = ("fibonacci", "lucas", "a027941", "seeded")


def fib_pair(n: int) -> tuple[int, int]:
    """(F(n), F(n+1)) by fast doubling."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0, 1
    a, b = fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fib(n: int) -> int:
    return fib_pair(n)[0]


def fib_iterative(n: int) -> int:
    """Plain repeated addition; the reference the fast path is checked against."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 2
    f, g = fib_pair(n)
    # L(n) = F(n-1) + F(n+1) = 2 F(n+1) - F(n)
    return 2 * g - f


def a027941(n: int) -> int:
    """F(2n+1) - 1: 0, 1, 4, 12, 33, 88, ..."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return fib(2 * n + 1) - 1


def seeded_sequence(seed0: int, seed1: int, n: int) -> int:
    """Term ``n`` of the additive recurrence started from two positive seeds."""
    if seed0 <= 0 or seed1 <= 0:
        raise ValueError("seeds must be positive")
    if n < 0:
        raise ValueError("n must be >= 0")
    # G(n) = seed0 F(n-1) + seed1 F(n) for n >= 1
    if n == 0:
        return seed0
    f, g = fib_pair(n - 1)
    return seed0 * f + seed1 * g


@dataclass(frozen=True)
class SeqSpec:
    kind: str
    seed0: int = 0
    seed1: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        if self.kind == "fibonacci" and (self.seed0, self.seed1) != (0, 1):
            raise ValueError("fibonacci seeds are 0, 1")
        if self.kind == "lucas" and (self.seed0, self.seed1) != (2, 1):
            raise ValueError("lucas seeds are 2, 1")
        if self.kind == "seeded" and (self.seed0 <= 0 or self.seed1 <= 0):
            raise ValueError("seeds must be positive")

    @classmethod
    def of(cls, kind: str, seed0: int | None = None, seed1: int | None = None) -> "SeqSpec":
        defaults = {"fibonacci": (0, 1), "lucas": (2, 1), "a027941": (0, 1), "seeded": (1, 1)}
        d0, d1 = defaults[kind] if kind in defaults else (0, 1)
        return cls(kind, d0 if seed0 is None else seed0, d1 if seed1 is None else seed1)

    def term(self, n: int) -> int:
        return term_function(self)(n)


def term_function(spec: SeqSpec) -> Callable[[int], int]:
    if spec.kind == "fibonacci":
        return fib
    if spec.kind == "lucas":
        return lucas
    if spec.kind == "a027941":
        return a027941
    return lambda n: seeded_sequence(spec.seed0, spec.seed1, n)


def terms(spec: SeqSpec, start: int, stop: int) -> list[int]:
    """Terms start..stop inclusive."""
    if start < 0 or stop < start:
        raise ValueError(f"bad range {start}..{stop}")
    f = term_function(spec)
    return [f(n) for n in range(start, stop + 1)]


@dataclass(frozen=True)
class RatioPoint:
    n: int
    ratio: Fraction
    delta: SurdNumber

    @property
    def delta_sign(self) -> int:
        return self.delta.sign()


def ratio_series(spec: SeqSpec, start: int, stop: int, target: SurdNumber) -> list[RatioPoint]:
    """Exact ratios term(n+1)/term(n) for n in start..stop, with delta = ratio - target."""
    values = terms(spec, start, stop + 1)
    out = []
    for i, n in enumerate(range(start, stop + 1)):
        den = values[i]
        if den == 0:
            raise ZeroDivisionError(f"{spec.kind} term {n} is zero; ratio undefined")
        q = Fraction(values[i + 1], den)
        out.append(RatioPoint(n, q, SurdNumber(q) - target))
    return out


@dataclass(frozen=True)
class RecurrenceViolation:
    n: int
    lhs: int
    rhs: int


def check_linear_recurrence(
    values: Sequence[int], c1: int, c2: int, k: int, start: int, stop: int, offset: int = 0
) -> RecurrenceViolation | None:
    """First n in [start, stop] with term(n) != c1 term(n-1) + c2 term(n-2) + k.

    ``values[i]`` holds term(offset + i).
    """
    if start - 2 < offset or stop - offset >= len(values):
        raise ValueError("range not covered by the supplied terms")
    for n in range(start, stop + 1):
        i = n - offset
        rhs = c1 * values[i - 1] + c2 * values[i - 2] + k
        if values[i] != rhs:
            return RecurrenceViolation(n, values[i], rhs)
    return None
