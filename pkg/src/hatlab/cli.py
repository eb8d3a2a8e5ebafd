"""Command line entry point: ``hatlab <command> ...``.

Exit codes: 0 success, 1 failed check (strict audit, verdict drift, invalid
patch), 2 usage error, 3 I/O or unreadable input, 4 tiling search failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .audit import CONFIRMED, expected_verdicts, run_audit
from .exact import phi, phi_squared, to_decimal
from .formats import (
    ImportParseError,
    PatchFormatError,
    PatchInvalidError,
    SnapError,
    analysis_to_json,
    analysis_to_text,
    audit_to_json,
    audit_to_text,
    parse_patch,
    ratio_row,
    serialize_patch,
    import_tiles,
    write_csv,
)
from .hat import NORMAL, REFLECTED
from .render import render_svg
from .rings import (
    HAT_SPAN,
    RING_DEFINITION,
    compare_to_a027941,
    detect_translation,
    reflected_fraction,
    ring_counts,
    ring_ratio_report,
)
from .sequences import KINDS, SeqSpec, ratio_series, terms
from .tiler import SearchExhausted, TilerConfig, build_patch, validate_patch

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO, EXIT_SEARCH = 0, 1, 2, 3, 4

log = logging.getLogger("hatlab")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(text: str, out: str | None):
    if out in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise CliError(f"cannot write {out}: {exc}", EXIT_IO) from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from None


def _load_patch(path: str):
    try:
        patch = parse_patch(_read(path))
    except PatchFormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_IO) from None
    report = validate_patch(patch)
    if not report.ok:
        raise CliError(f"{path}: invalid patch: {'; '.join(report.violations[:5])}", EXIT_FAIL)
    return patch


def _spec(args) -> SeqSpec:
    if args.kind == "seeded":
        return SeqSpec("seeded", args.seed0, args.seed1)
    return SeqSpec.of(args.kind)


def _check_range(parser, args):
    if args.start < 0 or args.stop < args.start:
        parser.error(f"bad range {args.start}..{args.stop}")


def cmd_seq(args, parser) -> int:
    _check_range(parser, args)
    values = terms(_spec(args), args.start, args.stop)
    ns = range(args.start, args.stop + 1)
    if args.csv:
        _emit(write_csv(("n", "term"), zip(ns, values)), args.out)
    else:
        _emit("".join(f"{n:>5}  {v}\n" for n, v in zip(ns, values)), args.out)
    return EXIT_OK


def cmd_ratios(args, parser) -> int:
    _check_range(parser, args)
    target = phi() if args.target == "phi" else phi_squared()
    target_dec = to_decimal(target, 12)
    try:
        points = ratio_series(_spec(args), args.start, args.stop, target)
    except ZeroDivisionError as exc:
        parser.error(str(exc))
    rows = [ratio_row(p) + (target_dec,) for p in points]
    header = ("n", "ratio_decimal", "delta_sign", "delta_decimal", "target_decimal")
    if args.csv:
        _emit(write_csv(header, rows), args.out)
    else:
        lines = ["  ".join(header)] + ["  ".join(str(x) for x in row) for row in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_audit(args, parser) -> int:
    report = run_audit()
    text = audit_to_json(report) if args.format == "structured" else audit_to_text(report)
    _emit(text, args.out)
    if args.strict:
        return EXIT_OK if all(c.verdict == CONFIRMED for c in report.claims) else EXIT_FAIL
    expected = expected_verdicts()
    drift = {k: (expected.get(k), v) for k, v in report.verdicts().items() if expected.get(k) != v}
    if drift or set(expected) != set(report.verdicts()):
        for k, (want, got) in drift.items():
            log.error("verdict drift for %s: expected %s, got %s", k, want, got)
        return EXIT_FAIL
    return EXIT_OK


def cmd_tile(args, parser) -> int:
    if args.coronas < 0:
        parser.error("--coronas must be >= 0")
    cfg = TilerConfig(
        max_coronas=args.coronas,
        seed_chirality=REFLECTED if args.seed_chirality == "reflected" else NORMAL,
        search_horizon=args.horizon,
        candidate_order=args.order,
    )
    try:
        patch = build_patch(cfg)
    except SearchExhausted as exc:
        raise CliError(f"{type(exc).__name__}: {exc}", EXIT_SEARCH) from None
    report = validate_patch(patch)
    if not report.ok:
        raise CliError("generated patch failed validation: " + "; ".join(report.violations[:5]), EXIT_FAIL)
    _emit(serialize_patch(patch), args.out)
    return EXIT_OK


def cmd_import(args, parser) -> int:
    text = _read(args.from_hatapp)
    try:
        patch = import_tiles(text)
    except ImportParseError as exc:
        raise CliError(f"parse failure: {exc}", EXIT_IO) from None
    except SnapError as exc:
        raise CliError(f"snap failure: {exc}", EXIT_FAIL) from None
    except PatchInvalidError as exc:
        raise CliError(f"validation failure: {exc}", EXIT_FAIL) from None
    _emit(serialize_patch(patch), args.out)
    return EXIT_OK


def analyze(patch, rings=True, compare=True, ratios=True, reflected=True, detect_period=True,
            window_radius=2 * HAT_SPAN, max_shift=8) -> dict:
    """Selected ring analyses of ``patch`` as a plain dict (the report body)."""
    series = ring_counts(patch)
    out: dict = {
        "ring_definition": RING_DEFINITION,
        "patch": {"placements": len(patch), "coronas": patch.coronas, "generator": patch.generator},
    }
    if rings:
        out["rings"] = [r.__dict__ for r in series.rings]
    if compare:
        out["compare"] = compare_to_a027941(series)
    if ratios:
        try:
            out["ratios"] = [
                {
                    "n": r.n,
                    "ratio": f"{r.ratio.numerator}/{r.ratio.denominator}",
                    "ratio_decimal": to_decimal(r.ratio, 12),
                    "delta_sign": r.delta.sign(),
                    "delta_decimal": to_decimal(r.delta, 12),
                }
                for r in ring_ratio_report(series)
            ]
        except ValueError as exc:
            out["ratios"] = f"undefined: {exc}"
    if reflected:
        allf = reflected_fraction(patch)
        inner = reflected_fraction(patch, interior_only=True)
        out["reflected"] = {
            "all": f"{allf.numerator}/{allf.denominator}",
            "interior_only": f"{inner.numerator}/{inner.denominator}",
        }
    if detect_period:
        v = detect_translation(patch.placements, window_radius, max_shift)
        out["periodicity"] = {
            "translation": list(v.translation) if v.translation else None,
            "window_radius": v.window_radius,
            "max_shift": v.max_shift,
            "tiles_checked": v.tiles_checked,
        }
    return out


def cmd_analyze(args, parser) -> int:
    patch = _load_patch(args.patchfile)
    picks = {k: getattr(args, k) for k in ("rings", "compare", "ratios", "reflected", "detect_period")}
    if not any(picks.values()):
        picks = {k: True for k in picks}
    result = analyze(patch, window_radius=args.window, max_shift=args.max_shift, **picks)
    text = analysis_to_json(result) if args.format == "structured" else analysis_to_text(result)
    _emit(text, args.out)
    return EXIT_OK


def cmd_render(args, parser) -> int:
    patch = _load_patch(args.patchfile)
    _emit(render_svg(patch, args.color_by), args.svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hatlab",
        description="Exact golden-ratio checks, hat-monotile patches and a claims audit.",
        epilog="Decimals are exact, rounded half away from zero. "
        "Exit codes: 0 ok, 1 failed check, 2 usage, 3 I/O, 4 search failure.",
    )
    p.add_argument("--version", action="version", version=f"hatlab {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def seq_args(sp):
        sp.add_argument("kind", choices=KINDS)
        sp.add_argument("start", type=int)
        sp.add_argument("stop", type=int)
        sp.add_argument("--seed0", type=int, default=1, help="first seed for kind=seeded")
        sp.add_argument("--seed1", type=int, default=1, help="second seed for kind=seeded")
        sp.add_argument("--csv", action="store_true")
        sp.add_argument("--out", help="output file (default stdout)")

    sp = sub.add_parser("seq", help="exact sequence terms",
                        description="Terms start..stop. CSV columns: n, term.")
    seq_args(sp)
    sp.set_defaults(func=cmd_seq)

    sp = sub.add_parser(
        "ratios", help="consecutive-term ratios against phi or phi^2",
        description="Row n holds term(n+1)/term(n). CSV columns: n, ratio_decimal, "
        "delta_sign, delta_decimal, target_decimal (12 digits, exact rounding).",
    )
    seq_args(sp)
    sp.add_argument("--target", choices=("phi", "phi2"), default="phi")
    sp.set_defaults(func=cmd_ratios)

    sp = sub.add_parser(
        "audit", help="recompute every printed numeric claim",
        description="Without --strict, exits 1 only if verdicts drift from the shipped "
        "expected-verdict file. With --strict, exits 1 on any non-Confirmed verdict.",
    )
    sp.add_argument("--strict", action="store_true")
    sp.add_argument("--format", choices=("text", "structured"), default="text")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("tile", help="grow a hat patch corona by corona",
                        description="Writes a patch file (JSON, version 1) after validating it.")
    sp.add_argument("--coronas", type=int, default=3)
    sp.add_argument("--seed-chirality", choices=("reflected", "normal"), default="reflected")
    sp.add_argument("--horizon", type=int, default=TilerConfig.search_horizon)
    sp.add_argument("--order", choices=("lex", "mrv"), default="lex")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_tile)

    sp = sub.add_parser("import", help="convert an external placement list to a patch file",
                        description="See the hatlab.formats module docs for the import schema.")
    sp.add_argument("--from-hatapp", required=True, metavar="FILE")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_import)

    sp = sub.add_parser("analyze", help="ring statistics and periodicity check",
                        description="With no selection flags every analysis runs. " + RING_DEFINITION)
    sp.add_argument("patchfile")
    sp.add_argument("--rings", action="store_true")
    sp.add_argument("--compare", action="store_true")
    sp.add_argument("--ratios", action="store_true")
    sp.add_argument("--reflected", action="store_true")
    sp.add_argument("--detect-period", action="store_true")
    sp.add_argument("--window", type=int, default=2 * HAT_SPAN, help="window radius in hex steps")
    sp.add_argument("--max-shift", type=int, default=8)
    sp.add_argument("--format", choices=("text", "structured"), default="text")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("render", help="draw a patch as SVG")
    sp.add_argument("patchfile")
    sp.add_argument("--svg", required=True, metavar="OUT")
    sp.add_argument("--color-by", choices=("chirality", "ring"), default="chirality")
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args, parser)
    except CliError as exc:
        print(f"hatlab: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
