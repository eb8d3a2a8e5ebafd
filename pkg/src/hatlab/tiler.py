"""Corona-by-corona growth of hat patches by deterministic backtracking.

A corona is complete when every kite edge-adjacent to the previously covered
region is covered. Placements added while completing corona n get index n.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .geometry import ORIENTATIONS, Isometry, KiteCoord, is_connected, kite_neighbors
from .hat import HAT_PROTO, NORMAL, REFLECTED, Placement

log = logging.getLogger(__name__)

CANDIDATE_ORDERS = ("lex", "mrv")


class SearchExhausted(RuntimeError):
    """No way to complete the corona; ``partial`` is the deepest state reached."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class HorizonExceeded(SearchExhausted):
    """Search failed and at least one candidate was cut off by the horizon."""


@dataclass(frozen=True)
class TilerConfig:
    max_coronas: int = 3
    seed_chirality: str = REFLECTED
    # kite-graph distance beyond the previous region a new placement may reach
    search_horizon: int = 16
    # "lex": smallest uncovered frontier kite first; "mrv": fewest candidates first
    candidate_order: str = "lex"
    # cap on placements tried across the whole build before giving up
    node_budget: int = 2_000_000

    def __post_init__(self):
        if self.max_coronas < 0:
            raise ValueError("max_coronas must be >= 0")
        if self.search_horizon < 0:
            raise ValueError("search_horizon must be >= 0")
        if self.seed_chirality not in (NORMAL, REFLECTED):
            raise ValueError(f"seed_chirality must be {NORMAL} or {REFLECTED}")
        if self.candidate_order not in CANDIDATE_ORDERS:
            raise ValueError(f"candidate_order must be one of {CANDIDATE_ORDERS}")


@dataclass(frozen=True)
class Patch:
    placements: tuple[Placement, ...]
    corona_of: tuple[int, ...]
    center: int = 0
    generator: str = "backtracking"
    proto: tuple = HAT_PROTO
    owner: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if len(self.corona_of) != len(self.placements):
            raise ValueError("one corona index per placement required")
        if self.owner is None:
            owner = {}
            for i in range(len(self.placements)):
                for k in self.kites_of(i):
                    owner.setdefault(k, i)
            object.__setattr__(self, "owner", owner)

    def kites_of(self, i: int) -> tuple[KiteCoord, ...]:
        iso = self.placements[i].iso
        return tuple(iso.apply(k) for k in self.proto)

    @property
    def coronas(self) -> int:
        return max(self.corona_of) if self.corona_of else -1

    def __len__(self):
        return len(self.placements)


class _Shape:
    """Candidate tables for one prototype kite set."""

    def __init__(self, proto: Sequence[KiteCoord]):
        self.proto = tuple(proto)
        # by_v[v] -> [(orientation, image kite with vertex v)] in isometry order
        self.by_v = {v: [] for v in range(6)}
        for o in ORIENTATIONS:
            for k in proto:
                img = o.apply(k)
                self.by_v[img.v].append((o, img))

    def kites(self, iso: Isometry) -> tuple[KiteCoord, ...]:
        return tuple(iso.apply(k) for k in self.proto)

    def candidates(self, target: KiteCoord) -> list[Isometry]:
        """Every placement covering ``target``, ordered by mirror, rot, translation."""
        out = set()
        for o, img in self.by_v[target.v]:
            out.add(o._replace(q=target.q - img.q, r=target.r - img.r))
        return sorted(out)


_HAT = _Shape(HAT_PROTO)


def _shape_for(proto):
    return _HAT if proto is None or tuple(proto) == HAT_PROTO else _Shape(proto)


def seed_patch(cfg: TilerConfig = TilerConfig(), proto=None) -> Patch:
    iso = Isometry(cfg.seed_chirality == REFLECTED)
    return Patch((Placement(iso),), (0,), proto=HAT_PROTO if proto is None else tuple(proto))


class _Search:
    def __init__(self, shape: _Shape, occupied: set, frontier: list, horizon: int, order: str):
        self.shape = shape
        self.occ = occupied
        self.frontier = frontier
        self.order = order
        self.dist = self._distances(horizon)
        self.horizon_cut = False
        self.nodes = 0

    def _distances(self, horizon):
        dist = {}
        layer = list(self.frontier)
        for k in layer:
            dist[k] = 1
        d = 1
        while layer and d < horizon:
            d += 1
            nxt = []
            for k in layer:
                for n in kite_neighbors(k):
                    if n not in dist and n not in self.occ:
                        dist[n] = d
                        nxt.append(n)
            layer = nxt
        return dist

    def fits(self, iso: Isometry) -> tuple[KiteCoord, ...] | None:
        ks = self.shape.kites(iso)
        occ = self.occ
        for k in ks:
            if k in occ:
                return None
        for k in ks:
            if k not in self.dist:
                self.horizon_cut = True
                return None
        return ks

    def options(self, target: KiteCoord) -> list:
        out = []
        for iso in self.shape.candidates(target):
            ks = self.fits(iso)
            if ks is not None:
                out.append((iso, ks))
        return out

    def _viable(self, kite: KiteCoord) -> bool:
        occ = self.occ
        for iso in self.shape.candidates(kite):
            if all(k not in occ for k in self.shape.kites(iso)):
                return True
        return False

    def forward_ok(self, placed: tuple[KiteCoord, ...]) -> bool:
        """Every uncovered kite touching the new tile, and every open frontier kite, can still be covered."""
        occ = self.occ
        check = set()
        for k in placed:
            for n in kite_neighbors(k):
                if n not in occ:
                    check.add(n)
        for k in self.frontier:
            if k not in occ:
                check.add(k)
        return all(self._viable(k) for k in sorted(check))

    def pick(self):
        open_ = [k for k in self.frontier if k not in self.occ]
        if not open_:
            return None, None
        if self.order == "lex":
            target = open_[0]
            return target, self.options(target)
        best = None
        for k in open_:
            opts = self.options(k)
            if best is None or len(opts) < len(best[1]):
                best = (k, opts)
                if not opts:
                    break
        return best

    def solutions(self, chosen: list, budget: list) -> Iterator[list]:
        target, opts = self.pick()
        if target is None:
            yield list(chosen)
            return
        for iso, ks in opts:
            if budget[0] <= 0:
                return
            budget[0] -= 1
            self.nodes += 1
            self.occ.update(ks)
            if self.forward_ok(ks):
                chosen.append(iso)
                yield from self.solutions(chosen, budget)
                chosen.pop()
            self.occ.difference_update(ks)


def frontier_of(covered) -> list[KiteCoord]:
    out = set()
    for k in covered:
        for n in kite_neighbors(k):
            if n not in covered:
                out.add(n)
    return sorted(out)


def corona_solutions(patch: Patch, cfg: TilerConfig, budget=None, stats=None) -> Iterator[Patch]:
    """All completions of the next corona, in canonical search order.

    ``budget`` is a one-element list of placements still allowed; ``stats``
    (a dict) receives ``nodes`` and ``horizon_cut`` when the search ends.
    """
    shape = _shape_for(patch.proto)
    occ = set(patch.owner)
    search = _Search(shape, occ, frontier_of(occ), cfg.search_horizon, cfg.candidate_order)
    budget = budget if budget is not None else [cfg.node_budget]
    n = patch.coronas + 1
    try:
        for isos in search.solutions([], budget):
            yield Patch(
                patch.placements + tuple(Placement(i) for i in isos),
                patch.corona_of + (n,) * len(isos),
                patch.center,
                patch.generator,
                patch.proto,
            )
    finally:
        if stats is not None:
            stats["nodes"] = stats.get("nodes", 0) + search.nodes
            stats["horizon_cut"] = stats.get("horizon_cut", False) or search.horizon_cut


def grow_corona(patch: Patch, cfg: TilerConfig = TilerConfig()) -> Patch:
    """First completion of the next corona, or raise."""
    stats: dict = {}
    for result in corona_solutions(patch, cfg, stats=stats):
        return result
    cls = HorizonExceeded if stats["horizon_cut"] else SearchExhausted
    raise cls(f"corona {patch.coronas + 1} could not be completed after {stats['nodes']} placements", patch)


def build_patch(cfg: TilerConfig = TilerConfig(), proto=None) -> Patch:
    """Grow ``cfg.max_coronas`` coronas around a seed hat.

    When a corona admits no completion the search backs up into the previous
    corona and tries its next completion, so the result is the first patch in
    canonical order whose every corona is complete.
    """
    seed = seed_patch(cfg, proto)
    budget = [cfg.node_budget]
    stats: dict = {}
    deepest = [seed]

    def descend(patch: Patch) -> Patch | None:
        if patch.coronas >= cfg.max_coronas:
            return patch
        for nxt in corona_solutions(patch, cfg, budget, stats):
            if nxt.coronas > deepest[0].coronas:
                deepest[0] = nxt
            log.debug("corona %d complete with %d placements", nxt.coronas, len(nxt))
            found = descend(nxt)
            if found is not None:
                return found
        return None

    result = descend(seed)
    if result is None:
        why = "node budget spent" if budget[0] <= 0 else "no completion exists"
        cls = HorizonExceeded if stats.get("horizon_cut") else SearchExhausted
        raise cls(
            f"could not build {cfg.max_coronas} coronas ({why}); reached corona {deepest[0].coronas}",
            deepest[0],
        )
    return result


def assign_coronas(placements: Sequence[Placement], center: int = 0, proto=HAT_PROTO) -> tuple[int, ...]:
    """Corona index of each placement from geometry alone.

    Corona n holds the placements owning a kite adjacent to the region of
    coronas < n. This reproduces the tiler's numbering.
    """
    kites = [tuple(p.iso.apply(k) for k in proto) for p in placements]
    owner = {}
    for i, ks in enumerate(kites):
        for k in ks:
            owner[k] = i
    corona = [-1] * len(placements)
    corona[center] = 0
    region = set(kites[center])
    n = 0
    while True:
        n += 1
        layer = sorted({owner[k] for k in frontier_of(region) if k in owner and corona[owner[k]] < 0})
        if not layer:
            break
        for i in layer:
            corona[i] = n
            region.update(kites[i])
    return tuple(corona)


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, msg: str):
        self.violations.append(msg)


def _holes(covered: set) -> list[KiteCoord]:
    qs = [k.q for k in covered]
    rs = [k.r for k in covered]
    lo_q, hi_q, lo_r, hi_r = min(qs) - 1, max(qs) + 1, min(rs) - 1, max(rs) + 1

    def inside(k):
        return lo_q <= k.q <= hi_q and lo_r <= k.r <= hi_r

    free = {
        KiteCoord(q, r, v)
        for q in range(lo_q, hi_q + 1)
        for r in range(lo_r, hi_r + 1)
        for v in range(6)
    } - covered
    # the bounding box ring is always free; flood from it
    start = [k for k in free if k.q in (lo_q, hi_q) or k.r in (lo_r, hi_r)]
    seen = set(start)
    stack = list(start)
    while stack:
        for n in kite_neighbors(stack.pop()):
            if n in free and n not in seen and inside(n):
                seen.add(n)
                stack.append(n)
    return sorted(free - seen)


def validate_patch(patch: Patch) -> ValidationReport:
    report = ValidationReport()
    if not patch.placements:
        report.add("patch has no placements")
        return report
    owner: dict[KiteCoord, int] = {}
    for i in range(len(patch.placements)):
        ks = patch.kites_of(i)
        if len(set(ks)) != 8:
            report.add(f"placement {i} does not cover 8 distinct kites")
        for k in ks:
            if k in owner:
                report.add(f"kite {tuple(k)} owned by placements {owner[k]} and {i}")
            else:
                owner[k] = i
    for k, i in patch.owner.items():
        if owner.get(k) != i and k in owner and owner[k] != i:
            report.add(f"owner map disagrees at kite {tuple(k)}")
    if set(patch.owner) != set(owner):
        report.add("owner map does not match placement kites")
    covered = set(owner)
    if not is_connected(covered):
        report.add("covered region is not edge-connected")
    for k in _holes(covered):
        report.add(f"gap: uncovered kite {tuple(k)} enclosed by the patch")
    if patch.corona_of[patch.center] != 0:
        report.add("centre placement must be corona 0")
    expected = assign_coronas(patch.placements, patch.center, patch.proto)
    for i, (got, want) in enumerate(zip(patch.corona_of, expected)):
        if got != want:
            report.add(f"placement {i} has corona {got}, geometry gives {want}")
    return report


def patch_census(patch: Patch) -> dict[int, dict[str, int]]:
    """Per-corona {total, normal, reflected} counts."""
    out: dict[int, Counter] = {}
    for p, c in zip(patch.placements, patch.corona_of):
        row = out.setdefault(c, Counter())
        row["total"] += 1
        row["reflected" if p.iso.mirror else "normal"] += 1
    return {
        c: {"total": row["total"], "normal": row["normal"], "reflected": row["reflected"]}
        for c, row in sorted(out.items())
    }
