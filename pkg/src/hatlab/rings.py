"""Ring statistics of hat patches and an empirical translation detector.

A "ring" here is a corona of the tiler: ring n is the set of placements with
corona index n. Every report carries that definition in ``RING_DEFINITION``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .exact import SurdNumber, phi_squared
from .geometry import HEX_DIRS, Isometry, hex_distance
from .hat import HAT_PROTO, Placement
from .sequences import a027941
from .tiler import Patch, patch_census

RING_DEFINITION = (
    "ring n = placements with corona index n; corona n covers every kite "
    "edge-adjacent to the region of coronas < n"
)

# extent of one hat in hexagon steps; window radii quoted "in hats" use this
HAT_SPAN = 2


@dataclass(frozen=True)
class Ring:
    index: int
    total: int
    normal: int
    reflected: int


@dataclass(frozen=True)
class RingSeries:
    rings: tuple[Ring, ...]

    def __post_init__(self):
        for i, ring in enumerate(self.rings):
            if ring.index != i:
                raise ValueError("ring indices must run 0, 1, 2, ...")
            if ring.normal + ring.reflected != ring.total:
                raise ValueError(f"ring {i}: normal + reflected != total")

    @classmethod
    def from_normal_counts(cls, counts: Sequence[int]) -> "RingSeries":
        return cls(tuple(Ring(i, c, c, 0) for i, c in enumerate(counts)))

    @property
    def normal_counts(self) -> list[int]:
        return [r.normal for r in self.rings]


def ring_counts(patch: Patch) -> RingSeries:
    census = patch_census(patch)
    rings = []
    for i in range(max(census) + 1):
        row = census.get(i, {"total": 0, "normal": 0, "reflected": 0})
        rings.append(Ring(i, row["total"], row["normal"], row["reflected"]))
    return RingSeries(tuple(rings))


def compare_to_a027941(series: RingSeries) -> dict:
    """Ring-by-ring observed normal counts beside a027941(n). Observational only."""
    rows = []
    for ring in series.rings:
        target = a027941(ring.index)
        rows.append(
            {
                "ring": ring.index,
                "observed_normal": ring.normal,
                "target": target,
                "match": ring.normal == target,
            }
        )
    return {
        "ring_definition": RING_DEFINITION,
        "target_sequence": "A027941: F(2n+1) - 1",
        "target_prefix": [a027941(n) for n in range(6)],
        "rows": rows,
        "all_match": all(r["match"] for r in rows),
    }


@dataclass(frozen=True)
class RingRatio:
    n: int
    ratio: Fraction
    delta: SurdNumber


def ring_ratio_report(series: RingSeries) -> list[RingRatio]:
    """normal(n+1)/normal(n) with exact deltas against phi^2 = (3 + sqrt 5)/2.

    Ratios start at the first ring after which every normal count is nonzero.
    """
    counts = series.normal_counts
    if not any(counts):
        raise ValueError("all normal counts are zero; no ratio is defined")
    start = len(counts)
    while start > 0 and counts[start - 1] != 0:
        start -= 1
    target = phi_squared()
    out = []
    for n in range(start, len(counts) - 1):
        q = Fraction(counts[n + 1], counts[n])
        out.append(RingRatio(n, q, SurdNumber(q) - target))
    return out


def reference_series(n_rings: int) -> RingSeries:
    """The analytic series a027941(0..n_rings-1) dressed as ring counts."""
    return RingSeries.from_normal_counts([a027941(n) for n in range(n_rings)])


def reflected_fraction(patch: Patch, interior_only: bool = False) -> Fraction:
    """Exact share of reflected placements, optionally ignoring the outermost corona."""
    if not patch.placements:
        raise ValueError("empty patch")
    outer = patch.coronas
    chosen = [
        p
        for p, c in zip(patch.placements, patch.corona_of)
        if not (interior_only and c == outer and outer > 0)
    ]
    return Fraction(sum(p.iso.mirror for p in chosen), len(chosen))


# -- periodicity --------------------------------------------------------------


@dataclass(frozen=True)
class PeriodicityVerdict:
    translation: tuple[int, int] | None
    window_radius: int
    max_shift: int
    tiles_checked: int


def shifts(max_shift: int) -> Iterator[tuple[int, int]]:
    """Nonzero axial vectors by hex length, each ring counterclockwise from (k, 0)."""
    for k in range(1, max_shift + 1):
        q, r = k, 0
        for side in range(6):
            dq, dr = HEX_DIRS[(side + 2) % 6]
            for _ in range(k):
                yield q, r
                q, r = q + dq, r + dr


def _inside(iso: Isometry, center, radius: int) -> bool:
    for k in HAT_PROTO:
        img = iso.apply(k)
        if hex_distance(img.q - center[0], img.r - center[1]) > radius:
            return False
    return True


def window_placements(placements: Iterable[Placement], window_radius: int, center=(0, 0)) -> list[Isometry]:
    return sorted(p.iso for p in placements if _inside(p.iso, center, window_radius))


def is_period(placements: Iterable[Placement], t: tuple[int, int], window_radius: int, center=(0, 0)) -> bool:
    isos = {p.iso for p in placements}
    inside = [i for i in sorted(isos) if _inside(i, center, window_radius)]
    if len(inside) < 2:
        return False
    return all(i.translated(*t) in isos for i in inside)


def detect_translation(
    placements: Iterable[Placement], window_radius: int, max_shift: int, center=(0, 0)
) -> PeriodicityVerdict:
    """First translation up to ``max_shift`` hex steps that maps every in-window placement into the set.

    A hit means the finite sample is consistent with that period; no hit
    only rules out periods up to ``max_shift`` at this window size.
    """
    placements = list(placements)
    isos = {p.iso for p in placements}
    inside = [i for i in sorted(isos) if _inside(i, center, window_radius)]
    found = None
    if len(inside) >= 2:
        for t in shifts(max_shift):
            if all(i.translated(*t) in isos for i in inside):
                found = t
                break
    return PeriodicityVerdict(found, window_radius, max_shift, len(inside))
