"""Registry of printed numeric claims, each recomputed and given a verdict.

Printed values are kept verbatim; every computed value comes from the
package's own operations, and ``params`` records the call that reproduces it.
"""

from __future__ import annotations

import datetime as _dt
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable

from . import __version__
from .exact import Quadratic, SurdNumber, irrationality_witness, phi, phi_squared, to_decimal
from .sequences import (
    SeqSpec,
    a027941,
    check_linear_recurrence,
    fib,
    lucas,
    ratio_series,
)

log = logging.getLogger(__name__)

CONFIRMED = "Confirmed"
DISCREPANCY = "Discrepancy"
FALSE_AS_STATED = "FalseAsStated"
VERDICTS = (CONFIRMED, DISCREPANCY, FALSE_AS_STATED)


@dataclass(frozen=True)
class Claim:
    id: str
    location: str
    statement: str
    printed_value: str | None
    computed_value: str
    verdict: str
    note: str = ""
    params: dict = field(default_factory=dict)

    def as_record(self) -> dict:
        return {
            "id": self.id,
            "location": self.location,
            "statement": self.statement,
            "printed_value": self.printed_value,
            "computed_value": self.computed_value,
            "verdict": self.verdict,
            "note": self.note,
            "params": self.params,
        }


@dataclass(frozen=True)
class AuditReport:
    claims: tuple[Claim, ...]
    version: str = __version__
    timestamp: str = ""

    @property
    def summary(self) -> dict[str, int]:
        counts = {v: 0 for v in VERDICTS}
        for c in self.claims:
            counts[c.verdict] += 1
        return counts

    def __getitem__(self, claim_id: str) -> Claim:
        for c in self.claims:
            if c.id == claim_id:
                return c
        raise KeyError(claim_id)

    def verdicts(self) -> dict[str, str]:
        return {c.id: c.verdict for c in self.claims}


class _Sqrt2(Quadratic):
    D = 2
    __slots__ = ()


def _digits(printed: str) -> int:
    return len(printed.split(".")[1])


def _agreement(value, printed: str) -> int:
    """Largest d <= printed digits at which ``value`` and the printed number round alike."""
    target = Fraction(printed)
    best = 0
    for d in range(1, _digits(printed) + 1):
        if to_decimal(value, d) == to_decimal(target, d):
            best = d
        else:
            break
    return best


# -- registry -----------------------------------------------------------------


def _c1():
    printed = "1.6180339887"
    got = to_decimal(phi(), 10)
    return Claim(
        "C1", "Golden Ratio", "phi = (1 + sqrt 5)/2 is approximately 1.6180339887",
        printed, got, CONFIRMED if got == printed else DISCREPANCY,
        params={"op": "to_decimal", "value": "phi", "digits": 10},
    )


def _c2():
    p = phi()
    diff = 1 / p - (p - 1)
    return Claim(
        "C2", "Golden Ratio", "1/phi = phi - 1 (exactly)",
        "1/Φ = Φ − 1", f"1/phi - (phi - 1) = {diff}",
        CONFIRMED if not diff else DISCREPANCY,
        params={"op": "surd_arith", "expr": "1/phi - (phi - 1)"},
    )


def _c3():
    best, pair = irrationality_witness(2000)
    return Claim(
        "C3", "Golden Ratio",
        "no rational p/q solves x^2 - x - 1 = 0 (b^2 = a^2 - ab has no coprime solution)",
        "b² = a² − ab", f"min |p^2 - pq - q^2| over 1 <= p, q <= 2000 is {best}, first at {pair}",
        CONFIRMED if best >= 1 else DISCREPANCY,
        note="bounded-height witness only; irrationality of sqrt 5 itself is the classical theorem",
        params={"op": "irrationality_witness", "max_q": 2000},
    )


def _c4():
    printed = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233]
    got = [fib(n) for n in range(14)]
    return Claim(
        "C4", "Fibonacci Series", "Fibonacci numbers F(0..13) with F(0) = 0, F(1) = 1",
        ", ".join(map(str, printed)), ", ".join(map(str, got)),
        CONFIRMED if got == printed else DISCREPANCY,
        params={"op": "fib", "n": [0, 13]},
    )


def _c5():
    printed = ["1.667", "1.600", "1.625", "1.615", "1.619"]
    pts = ratio_series(SeqSpec("seeded", 3, 5), 0, 4, phi())
    got = [to_decimal(p.ratio, 3) for p in pts]
    return Claim(
        "C5", "Relation Between the Golden Ratio and the Fibonacci Series",
        "ratios of the sequence seeded 3, 5: 5/3, 8/5, 13/8, 21/13, 34/21 at 3 decimals",
        " / ".join(printed), " / ".join(got),
        CONFIRMED if got == printed else DISCREPANCY,
        params={"op": "ratio_series", "kind": "seeded", "seeds": [3, 5], "n": [0, 4], "digits": 3},
    )


PRINTED_F87 = 1100087778366101931
PRINTED_F88 = 1779979416004714189


def _fib_index(value: int, limit: int = 400):
    for n in range(limit):
        if fib(n) == value:
            return n
    return None


def _c6():
    i, j = _fib_index(PRINTED_F87), _fib_index(PRINTED_F88)
    ok = (fib(87), fib(88)) == (PRINTED_F87, PRINTED_F88)
    note = ""
    if not ok and i is not None and j == i + 1:
        note = (
            f"the printed integers are consecutive Fibonacci numbers F({i}) and F({j}) "
            "under F(0) = 0; the labels are shifted by one"
        )
    return Claim(
        "C6", "Relation Between the Golden Ratio and the Fibonacci Series",
        "F(87) = 1100087778366101931 and F(88) = 1779979416004714189",
        f"F(87) = {PRINTED_F87}, F(88) = {PRINTED_F88}",
        f"F(87) = {fib(87)}, F(88) = {fib(88)}, F(89) = {fib(89)}",
        CONFIRMED if ok else DISCREPANCY, note,
        params={"op": "fib", "n": [87, 89]},
    )


def _c7():
    printed = "1.61803398875"
    got = to_decimal(Fraction(PRINTED_F88, PRINTED_F87), 11)
    consecutive = _fib_index(PRINTED_F88) == (_fib_index(PRINTED_F87) or -2) + 1
    return Claim(
        "C7", "Relation Between the Golden Ratio and the Fibonacci Series",
        "1779979416004714189 / 1100087778366101931 = 1.61803398875",
        printed, got,
        CONFIRMED if got == printed and consecutive else DISCREPANCY,
        note="operands are consecutive Fibonacci numbers" if consecutive else "operands are not consecutive",
        params={"op": "to_decimal", "value": [PRINTED_F88, PRINTED_F87], "digits": 11},
    )


def _c8():
    printed = [0, 1, 4, 12, 33, 88]
    got = [a027941(n) for n in range(6)]
    worked = [(3, 1), (5, 4), (7, 12)]
    worked_ok = all(fib(k) - 1 == v for k, v in worked)
    return Claim(
        "C8", "OEIS A027941 Sequence", "a(n) = F(2n+1) - 1 gives 0, 1, 4, 12, 33, 88",
        ", ".join(map(str, printed)), ", ".join(map(str, got)),
        CONFIRMED if got == printed and worked_ok else DISCREPANCY,
        note="worked examples F(3)-1 = 1, F(5)-1 = 4, F(7)-1 = 12 hold",
        params={"op": "a027941", "n": [0, 5]},
    )


def _c9():
    terms = [a027941(n) for n in range(501)]
    bad = check_linear_recurrence(terms, 1, 1, 2, 3, 500)
    derived = check_linear_recurrence(terms, 3, -1, 1, 2, 500)
    init_ok = terms[0] == -1 and terms[1] == 0
    parts = [f"a(0) = {terms[0]}, a(1) = {terms[1]} (printed -1, 0)"]
    if bad:
        parts.append(f"first violation n = {bad.n}: a(n) = {bad.lhs} but a(n-1) + a(n-2) + 2 = {bad.rhs}")
    holds = bad is None and init_ok
    note = (
        "a(n) = 3a(n-1) - a(n-2) + 1 holds for 2 <= n <= 500"
        if derived is None
        else f"derived recurrence fails at n = {derived.n}"
    )
    return Claim(
        "C9", "OEIS A027941 Sequence",
        "a(n) = a(n-1) + a(n-2) + 2 for n > 2 with a(0) = -1 and a(1) = 0",
        "a(n) = a(n − 1) + a(n − 2) + 2; a(0) = −1, a(1) = 0",
        "; ".join(parts), CONFIRMED if holds else DISCREPANCY, note,
        params={"op": "check_linear_recurrence", "coeffs": [1, 1, 2], "range": [3, 500],
                "replacement": [3, -1, 1], "replacement_range": [2, 500]},
    )


def _c10():
    first_bad = None
    partial = 0
    sums = []
    for n in range(1, 201):
        partial += a027941(n - 1)
        sums.append(partial)
        if first_bad is None and partial != lucas(n) - 1:
            first_bad = (n, partial, lucas(n) - 1)
    tele_ok = all(
        sum(a027941(k) for k in range(n + 1)) == fib(2 * n + 2) - (n + 1) for n in range(201)
    )
    if first_bad:
        computed = (
            f"partial sums {', '.join(map(str, sums[:4]))}, ...; first failure n = {first_bad[0]}: "
            f"sum = {first_bad[1]}, L(n) - 1 = {first_bad[2]}"
        )
    else:
        computed = "sum of first n terms equals L(n) - 1 for 1 <= n <= 200"
    note = (
        "sum_{k=0..n} a(k) = F(2n+2) - (n+1) holds for 0 <= n <= 200"
        if tele_ok
        else "telescoping identity failed"
    )
    return Claim(
        "C10", "OEIS A027941 Sequence", "the sum of the first n terms equals L(n) - 1",
        "sum of first n terms = L(n) − 1", computed,
        CONFIRMED if first_bad is None else DISCREPANCY, note,
        params={"op": "a027941+lucas", "n": [1, 200], "replacement": "F(2n+2) - (n+1)"},
    )


PRINTED_A = {25: 20365011072, 26: 53316291172, 27: 139583862444, 28: 365435296161}


def _c11():
    diffs = [n for n, v in PRINTED_A.items() if a027941(n) != v]
    computed = ", ".join(f"a({n}) = {a027941(n)}" for n in PRINTED_A)
    note = "; ".join(
        f"a({n}) differs from printed {PRINTED_A[n]} by {a027941(n) - PRINTED_A[n]}" for n in diffs
    )
    return Claim(
        "C11", "Research Methodology", "a(25), a(26), a(27), a(28) as printed",
        ", ".join(f"a({n}) = {v}" for n, v in PRINTED_A.items()), computed,
        CONFIRMED if not diffs else DISCREPANCY, note or "all four agree",
        params={"op": "a027941", "n": sorted(PRINTED_A)},
    )


PRINTED_RATIOS = {25: "2.61803398896", 26: "2.61803398878", 27: "2.61803398875"}


def _c12():
    rows = []
    all_match = True
    for n, printed in PRINTED_RATIOS.items():
        d = _digits(printed)
        from_printed = Fraction(PRINTED_A[n + 1], PRINTED_A[n])
        from_oracle = Fraction(a027941(n + 1), a027941(n))
        got_p = to_decimal(from_printed, d)
        got_o = to_decimal(from_oracle, d)
        all_match &= got_p == printed
        rows.append(
            f"a({n + 1})/a({n}): printed operands {got_p} (agrees to {_agreement(from_printed, printed)} digits), "
            f"computed operands {got_o} (agrees to {_agreement(from_oracle, printed)} digits)"
        )
    return Claim(
        "C12", "Research Methodology", "a(26)/a(25), a(27)/a(26), a(28)/a(27) as printed",
        " / ".join(PRINTED_RATIOS.values()), "; ".join(rows),
        CONFIRMED if all_match else DISCREPANCY,
        note="phi^2 = " + to_decimal(phi_squared(), 11) + " at 11 digits",
        params={"op": "to_decimal", "ratios": sorted(PRINTED_RATIOS), "digits": 11},
    )


def _c13():
    p = phi()
    diff = p * p - (p + 1)
    return Claim(
        "C13", "Research Methodology", "1 + phi = phi^2 (exactly)",
        "1 + Φ = Φ²", f"phi^2 - (1 + phi) = {diff}; phi^2 = {p * p}",
        CONFIRMED if not diff else DISCREPANCY,
        params={"op": "surd_arith", "expr": "phi*phi - (1 + phi)"},
    )


def _c14():
    root2 = _Sqrt2(0, 1)
    square = root2 * root2
    counter = bool(root2.s) and not square.s
    phi2 = phi_squared()
    best, _ = irrationality_witness(2000)
    phi2_irrational = bool(phi2.s) and phi2 == phi() + 1 and best >= 1
    return Claim(
        "C14", "Research Methodology", "the square of an irrational number is irrational",
        None,
        f"counterexample: sqrt 2 is irrational and (sqrt 2)^2 = {square}",
        FALSE_AS_STATED if counter else CONFIRMED,
        note=(
            "restricted claim 'phi^2 is irrational' is Confirmed: phi^2 = phi + 1 and phi is irrational (C3)"
            if phi2_irrational
            else "restricted claim for phi^2 could not be established"
        ),
        params={"op": "surd_arith", "expr": "sqrt2*sqrt2", "field": "Q(sqrt 2)"},
    )


def _c15():
    target = phi_squared()
    pts = ratio_series(SeqSpec("a027941"), 1, 40, target)
    mags = [abs(p.delta) for p in pts]
    decreasing = all(b < a for a, b in zip(mags, mags[1:]))
    at25 = next(p for p in pts if p.n == 25)
    small = abs(at25.delta) < Fraction(1, 10**10)
    return Claim(
        "C15", "Research Methodology", "a(n+1)/a(n) approaches phi^2 = 1 + phi",
        None,
        f"|delta| strictly decreasing for 1 <= n <= 40: {decreasing}; "
        f"|a(26)/a(25) - phi^2| = {to_decimal(abs(at25.delta), 15)} < 1e-10: {small}",
        CONFIRMED if decreasing and small else DISCREPANCY,
        params={"op": "ratio_series", "kind": "a027941", "n": [1, 40], "target": "phi2"},
    )


REGISTRY: tuple[tuple[str, Callable[[], Claim]], ...] = (
    ("C1", _c1), ("C2", _c2), ("C3", _c3), ("C4", _c4), ("C5", _c5),
    ("C6", _c6), ("C7", _c7), ("C8", _c8), ("C9", _c9), ("C10", _c10),
    ("C11", _c11), ("C12", _c12), ("C13", _c13), ("C14", _c14), ("C15", _c15),
)


def run_audit(timestamp: str | None = None) -> AuditReport:
    """Evaluate every registry entry in order. Never raises for a single claim."""
    claims = []
    for cid, fn in REGISTRY:
        try:
            claims.append(fn())
        except Exception as exc:  # an audit records failures instead of aborting
            log.exception("claim %s failed", cid)
            claims.append(Claim(cid, "", "", None, "", DISCREPANCY, f"evaluation error: {exc!r}"))
    if timestamp is None:
        timestamp = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    return AuditReport(tuple(claims), __version__, timestamp)


def expected_verdicts() -> dict[str, str]:
    text = resources.files("hatlab").joinpath("data/expected_verdicts.json").read_text()
    return json.loads(text)
