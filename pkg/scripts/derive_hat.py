"""Re-derive the hat's kite set from the kite lattice.

Enumerates free 8-kite polykites, keeps the chiral ones whose outline has 13
sides, narrows to outlines of exactly 14 kite edges, then asks the tiler how
many coronas each survivor can carry. With ``--svg DIR`` every survivor is
drawn so the final pick can be checked by eye against the familiar shape.

    python scripts/derive_hat.py [--svg DIR] [--coronas 3]

The corona step dominates; a full run takes a few minutes.
"""

import argparse
from pathlib import Path

from hatlab.geometry import _boundary_cycles, canonical_form, free_polykites, hat_candidates
from hatlab.hat import HAT_PROTO
from hatlab.render import render_svg
from hatlab.tiler import SearchExhausted, TilerConfig, build_patch, seed_patch


def reachable_coronas(shape, limit: int) -> int:
    best = 0
    for chirality in ("Normal", "Reflected"):
        for n in range(1, limit + 1):
            cfg = TilerConfig(max_coronas=n, seed_chirality=chirality, node_budget=300_000)
            try:
                build_patch(cfg, proto=shape)
            except SearchExhausted:
                break
            best = max(best, n)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--svg", type=Path, help="directory for one SVG per survivor")
    ap.add_argument("--coronas", type=int, default=3)
    args = ap.parse_args()

    print("free polykites by size:", [len(free_polykites(n)) for n in range(1, 9)])
    chiral13 = hat_candidates()
    print(f"chiral 8-kite shapes with 13 sides: {len(chiral13)}")
    fourteen = [s for s in chiral13 if len(_boundary_cycles(set(s))[0]) == 14]
    print(f"  ... of which outline is 14 kite edges: {len(fourteen)}")

    hat = canonical_form(HAT_PROTO)
    if args.svg:
        args.svg.mkdir(parents=True, exist_ok=True)
    for i, shape in enumerate(fourteen):
        reach = reachable_coronas(shape, args.coronas)
        mark = "  <- HAT_PROTO" if shape == hat else ""
        print(f"  [{i}] coronas reached: {reach}{mark}")
        if args.svg:
            svg = render_svg(seed_patch(proto=shape), scale=20)
            (args.svg / f"candidate_{i}.svg").write_text(svg)


if __name__ == "__main__":
    main()
