"""The hat as a frozen 8-kite constant, plus placements of it."""

from __future__ import annotations

from typing import NamedTuple

from .geometry import (
    IDENTITY,
    Isometry,
    KiteCoord,
    boundary_polygon,
    is_chiral,
    is_connected,
)

# Three hexagons contribute 4, 2 and 2 kites. Derived by enumerating all 8-kite
# polykites and keeping the chiral ones with a 13-sided outline made of 14 kite
# edges that also admit a complete corona of copies of themselves; see
# scripts/derive_hat.py. Reflection of this set gives the other chirality.
HAT_PROTO: tuple[KiteCoord, ...] = (
    KiteCoord(0, 0, 1),
    KiteCoord(0, 0, 2),
    KiteCoord(0, 0, 3),
    KiteCoord(0, 0, 4),
    KiteCoord(-1, 0, 0),
    KiteCoord(-1, 0, 1),
    KiteCoord(-1, 1, 4),
    KiteCoord(-1, 1, 5),
)

NORMAL = "Normal"
REFLECTED = "Reflected"


class Placement(NamedTuple):
    iso: Isometry = IDENTITY

    @property
    def chirality(self) -> str:
        return REFLECTED if self.iso.mirror else NORMAL

    @property
    def kites(self) -> tuple[KiteCoord, ...]:
        return tuple(self.iso.apply(k) for k in HAT_PROTO)


def hat_kites(p: Placement) -> frozenset[KiteCoord]:
    return frozenset(p.kites)


def hat_outline(p: Placement):
    return boundary_polygon(p.kites)


def check_proto() -> list[str]:
    """Invariant failures of HAT_PROTO (empty when everything holds)."""
    problems = []
    if len(set(HAT_PROTO)) != 8:
        problems.append("hat must have 8 distinct kites")
    if not is_connected(HAT_PROTO):
        problems.append("hat kites are not edge-connected")
    try:
        sides = len(boundary_polygon(HAT_PROTO))
    except ValueError as exc:
        problems.append(f"hat outline invalid: {exc}")
    else:
        if sides != 13:
            problems.append(f"hat outline has {sides} sides, expected 13")
    if not is_chiral(HAT_PROTO):
        problems.append("hat is not chiral")
    return problems
