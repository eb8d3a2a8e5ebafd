"""Kite lattice, lattice isometries and the hat polykite.

Hexagons are flat-topped with circumradius 2, so kites have short edges of
length 1 and long edges of length sqrt 3. The axial basis vectors point at
30 and 90 degrees: hexagon (q, r) is centred at (3q, sqrt3*(q + 2r)).
Kite v of a hexagon has corners centre, midpoint of edge (v-1, v),
vertex v at angle 60v, midpoint of edge (v, v+1), in counterclockwise order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

from .exact import SQRT3, Sqrt3Number

HALF = Fraction(1, 2)

# axial step to the neighbouring hexagon across edge (d, d+1), direction 30 + 60d degrees
HEX_DIRS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


class KiteCoord(NamedTuple):
    q: int
    r: int
    v: int


class ExactPoint(NamedTuple):
    x: Sqrt3Number
    y: Sqrt3Number

    def __add__(self, other):
        return ExactPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return ExactPoint(self.x - other.x, self.y - other.y)

    def cross(self, other) -> Sqrt3Number:
        return self.x * other.y - self.y * other.x

    def dot(self, other) -> Sqrt3Number:
        return self.x * other.x + self.y * other.y

    def to_float(self) -> tuple[float, float]:
        return self.x.to_float(), self.y.to_float()


def _pt(x, y) -> ExactPoint:
    return ExactPoint(Sqrt3Number(*x), Sqrt3Number(*y))


# hexagon vertices at 60v degrees, radius 2
_VERTS = (
    _pt((2, 0), (0, 0)),
    _pt((1, 0), (0, 1)),
    _pt((-1, 0), (0, 1)),
    _pt((-2, 0), (0, 0)),
    _pt((-1, 0), (0, -1)),
    _pt((1, 0), (0, -1)),
)
# edge midpoints at 30 + 60k degrees, radius sqrt 3
_MIDS = (
    _pt((Fraction(3, 2), 0), (0, HALF)),
    _pt((0, 0), (0, 1)),
    _pt((Fraction(-3, 2), 0), (0, HALF)),
    _pt((Fraction(-3, 2), 0), (0, -HALF)),
    _pt((0, 0), (0, -1)),
    _pt((Fraction(3, 2), 0), (0, -HALF)),
)
_ORIGIN = _pt((0, 0), (0, 0))


def hex_center(q: int, r: int) -> ExactPoint:
    return ExactPoint(Sqrt3Number(3 * q), SQRT3 * (q + 2 * r))


def kite_polygon(k: KiteCoord) -> list[ExactPoint]:
    c = hex_center(k.q, k.r)
    return [c, c + _MIDS[(k.v - 1) % 6], c + _VERTS[k.v], c + _MIDS[k.v]]


def polygon_area(points: list[ExactPoint]) -> Sqrt3Number:
    """Signed shoelace area; positive for counterclockwise order."""
    total = Sqrt3Number(0)
    for a, b in zip(points, points[1:] + points[:1]):
        total = total + a.cross(b)
    return total * HALF


def hex_distance(q: int, r: int) -> int:
    return (abs(q) + abs(r) + abs(q + r)) // 2


def kite_neighbors(k: KiteCoord) -> tuple[KiteCoord, ...]:
    """The four kites sharing a full edge with ``k``."""
    q, r, v = k
    d0 = HEX_DIRS[(v - 1) % 6]
    d1 = HEX_DIRS[v]
    return (
        KiteCoord(q, r, (v - 1) % 6),
        KiteCoord(q, r, (v + 1) % 6),
        KiteCoord(q + d0[0], r + d0[1], (v + 2) % 6),
        KiteCoord(q + d1[0], r + d1[1], (v - 2) % 6),
    )


# -- isometries ---------------------------------------------------------------


def _rot_vec(q: int, r: int, k: int) -> tuple[int, int]:
    for _ in range(k % 6):
        q, r = -r, q + r
    return q, r


class Isometry(NamedTuple):
    """translation(q, r) . rotation(60 rot degrees) . mirror (optional).

    The mirror is the reflection swapping the two axial basis directions,
    i.e. the line through the origin at 60 degrees.
    """

    mirror: bool = False
    rot: int = 0
    q: int = 0
    r: int = 0

    @property
    def trans(self) -> tuple[int, int]:
        return self.q, self.r

    def linear_vec(self, q: int, r: int) -> tuple[int, int]:
        if self.mirror:
            q, r = r, q
        return _rot_vec(q, r, self.rot)

    def apply(self, k: KiteCoord) -> KiteCoord:
        q, r, v = k
        if self.mirror:
            q, r, v = r, q, (2 - v) % 6
        q, r = _rot_vec(q, r, self.rot)
        return KiteCoord(q + self.q, r + self.r, (v + self.rot) % 6)

    def compose(self, other: "Isometry") -> "Isometry":
        """self after other."""
        rot = (self.rot + (-other.rot if self.mirror else other.rot)) % 6
        tq, tr = self.linear_vec(other.q, other.r)
        return Isometry(self.mirror != other.mirror, rot, self.q + tq, self.r + tr)

    def inverse(self) -> "Isometry":
        rot = self.rot if self.mirror else (-self.rot) % 6
        lin = Isometry(self.mirror, rot)
        tq, tr = lin.linear_vec(self.q, self.r)
        return Isometry(self.mirror, rot, -tq, -tr)

    def translated(self, dq: int, dr: int) -> "Isometry":
        return self._replace(q=self.q + dq, r=self.r + dr)

    def point(self, p: ExactPoint) -> ExactPoint:
        """Action on exact Cartesian points."""
        x, y = p
        if self.mirror:
            x, y = -x * HALF + SQRT3 * HALF * y, SQRT3 * HALF * x + y * HALF
        for _ in range(self.rot):
            x, y = x * HALF - SQRT3 * HALF * y, SQRT3 * HALF * x + y * HALF
        return ExactPoint(x, y) + hex_center(self.q, self.r)


IDENTITY = Isometry()

ORIENTATIONS = tuple(Isometry(m, k) for m in (False, True) for k in range(6))


def apply_isometry(iso: Isometry, k: KiteCoord) -> KiteCoord:
    return iso.apply(k)


# -- region analysis ------------------------------------------------------------


class RegionError(ValueError):
    """Raised for kite sets that are not a single simply connected region."""


def is_connected(kites: Iterable[KiteCoord]) -> bool:
    kites = set(kites)
    if not kites:
        return False
    start = next(iter(kites))
    seen = {start}
    stack = [start]
    while stack:
        for n in kite_neighbors(stack.pop()):
            if n in kites and n not in seen:
                seen.add(n)
                stack.append(n)
    return len(seen) == len(kites)


def _boundary_cycles(kites: set[KiteCoord]) -> list[list[ExactPoint]]:
    edges = set()
    for k in kites:
        poly = kite_polygon(k)
        for a, b in zip(poly, poly[1:] + poly[:1]):
            if (b, a) in edges:
                edges.discard((b, a))
            else:
                edges.add((a, b))
    succ: dict[ExactPoint, ExactPoint] = {}
    for a, b in edges:
        if a in succ:
            raise RegionError("boundary touches itself at a vertex")
        succ[a] = b
    cycles = []
    while succ:
        start = min(succ, key=lambda p: (p.x.to_float(), p.y.to_float()))
        cycle = [start]
        p = succ.pop(start)
        while p != start:
            cycle.append(p)
            p = succ.pop(p)
        cycles.append(cycle)
    return cycles


def boundary_polygon(kites: Iterable[KiteCoord]) -> list[ExactPoint]:
    """Corners of the outline of a simply connected kite region, counterclockwise.

    Consecutive collinear kite edges are merged, so every returned point is a
    genuine corner with a turning angle different from 180 degrees.
    """
    kites = set(kites)
    if not is_connected(kites):
        raise RegionError("kites are not edge-connected")
    cycles = _boundary_cycles(kites)
    if len(cycles) != 1:
        raise RegionError("region has a hole")
    cycle = cycles[0]
    n = len(cycle)
    corners = []
    for i in range(n):
        prev, cur, nxt = cycle[i - 1], cycle[i], cycle[(i + 1) % n]
        if (cur - prev).cross(nxt - cur).sign() != 0:
            corners.append(cur)
    return corners


def boundary_sides(kites: Iterable[KiteCoord]) -> int:
    """Number of maximal straight sides of the region's outline.

    Collinear kite edges always merge into one side; a straight-angle point
    on the outline is not a vertex. Under this convention the hat has 13
    sides (its outline has one straight run made of two unit kite edges).
    """
    return len(boundary_polygon(kites))


def normalize(kites: Iterable[KiteCoord]) -> tuple[KiteCoord, ...]:
    """Sorted kite tuple translated so its smallest kite sits in hexagon (0, 0)."""
    ks = sorted(kites)
    q0, r0 = ks[0].q, ks[0].r
    return tuple(KiteCoord(q - q0, r - r0, v) for q, r, v in ks)


def canonical_form(kites: Iterable[KiteCoord], allow_mirror: bool = True) -> tuple[KiteCoord, ...]:
    """Representative of the kite set's class under lattice isometries."""
    kites = list(kites)
    orients = ORIENTATIONS if allow_mirror else ORIENTATIONS[:6]
    return min(normalize(o.apply(k) for k in kites) for o in orients)


def is_chiral(kites: Iterable[KiteCoord]) -> bool:
    """True when no mirror-free isometry maps the set onto its mirror image."""
    kites = list(kites)
    mirrored = [Isometry(True).apply(k) for k in kites]
    return canonical_form(kites, False) != canonical_form(mirrored, False)


def enumerate_polykites(size: int) -> list[tuple[KiteCoord, ...]]:
    """All edge-connected kite regions of ``size`` kites up to translation."""
    level = {normalize([KiteCoord(0, 0, v)]) for v in range(6)}
    for _ in range(size - 1):
        nxt = set()
        for shape in level:
            members = set(shape)
            for k in shape:
                for n in kite_neighbors(k):
                    if n not in members:
                        nxt.add(normalize(members | {n}))
        level = nxt
    return sorted(level)


def free_polykites(size: int) -> list[tuple[KiteCoord, ...]]:
    """Polykites of ``size`` kites up to rotation, reflection and translation."""
    return sorted({canonical_form(s) for s in enumerate_polykites(size)})


def hat_candidates() -> list[tuple[KiteCoord, ...]]:
    """Chiral, simply connected 8-kite polykites whose outline has 13 sides."""
    found = []
    for shape in free_polykites(8):
        try:
            sides = boundary_sides(shape)
        except RegionError:
            continue
        if sides == 13 and is_chiral(shape):
            found.append(shape)
    return found
