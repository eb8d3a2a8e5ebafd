"""File formats: patch files, external imports, analysis reports and CSV tables.

Patch file (JSON, ``version`` mandatory)::

    {"format": "hatlab-patch", "version": 1,
     "meta": {"seed_chirality": "Reflected", "coronas": 3, "generator": "backtracking"},
     "placements": [{"mirror": 1, "rot": 0, "q": 0, "r": 0, "corona": 0}, ...]}

The first placement is the central hat. ``corona`` is optional on read and is
recomputed from geometry when absent.

Import schema (``hatlab import --from-hatapp``): a JSON object with a ``tiles``
list (a bare list is accepted too). Each tile is either axial isometry fields
``{"mirror", "rot", "q", "r"}`` or an affine map
``{"matrix": [a, b, c, d], "translation": [e, f]}`` sending the prototype hat
point (x, y) to (a x + b y + e, c x + d y + f) in the lattice frame
(hexagon circumradius 2, kite edges 1 and sqrt 3). An optional top-level
``unit`` gives the kite short-edge length in file units. Affine maps are
snapped to the lattice; anything further than ``SNAP_TOLERANCE`` from an
exact lattice isometry is rejected.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Iterable

from . import __version__
from .audit import AuditReport
from .exact import to_decimal
from .geometry import Isometry
from .hat import NORMAL, REFLECTED, Placement
from .tiler import Patch, assign_coronas, validate_patch

PATCH_FORMAT = "hatlab-patch"
PATCH_VERSION = 1
REPORT_SCHEMA_VERSION = 1
SNAP_TOLERANCE = 1e-6


class PatchFormatError(ValueError):
    """Malformed or unsupported patch file."""


class ImportParseError(ValueError):
    pass


class SnapError(ValueError):
    def __init__(self, indices: list[int]):
        super().__init__(f"tiles {indices} do not lie on a lattice isometry")
        self.indices = indices


class PatchInvalidError(ValueError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations[:5]))
        self.violations = violations


# -- patch files --------------------------------------------------------------


def _seed_chirality(patch: Patch) -> str:
    return REFLECTED if patch.placements[patch.center].iso.mirror else NORMAL


def patch_to_dict(patch: Patch) -> dict:
    return {
        "format": PATCH_FORMAT,
        "version": PATCH_VERSION,
        "meta": {
            "seed_chirality": _seed_chirality(patch),
            "coronas": patch.coronas,
            "generator": patch.generator,
        },
        "placements": [
            {"mirror": int(p.iso.mirror), "rot": p.iso.rot, "q": p.iso.q, "r": p.iso.r, "corona": c}
            for p, c in zip(patch.placements, patch.corona_of)
        ],
    }


def serialize_patch(patch: Patch) -> str:
    d = patch_to_dict(patch)
    rows = ",\n".join("    " + json.dumps(p) for p in d["placements"])
    head = json.dumps({k: d[k] for k in ("format", "version", "meta")})[:-1]
    return f'{head},\n  "placements": [\n{rows}\n  ]\n}}\n'


def _isometry_from_record(rec: dict) -> Isometry:
    try:
        mirror, rot, q, r = rec["mirror"], rec["rot"], rec["q"], rec["r"]
    except (KeyError, TypeError) as exc:
        raise PatchFormatError(f"placement record {rec!r} lacks {exc}") from None
    if mirror not in (0, 1) or rot not in range(6):
        raise PatchFormatError(f"bad placement record {rec!r}")
    if not all(isinstance(x, int) for x in (q, r)):
        raise PatchFormatError(f"translation must be integer in {rec!r}")
    return Isometry(bool(mirror), rot, q, r)


def patch_from_dict(d: dict) -> Patch:
    if not isinstance(d, dict) or d.get("format") != PATCH_FORMAT:
        raise PatchFormatError("not a hatlab patch file")
    if "version" not in d:
        raise PatchFormatError("patch file has no version")
    if d["version"] != PATCH_VERSION:
        raise PatchFormatError(f"unsupported patch file version {d['version']!r}")
    recs = d.get("placements")
    if not isinstance(recs, list) or not recs:
        raise PatchFormatError("patch file has no placements")
    placements = tuple(Placement(_isometry_from_record(r)) for r in recs)
    if all("corona" in r for r in recs):
        coronas = tuple(int(r["corona"]) for r in recs)
    else:
        coronas = assign_coronas(placements)
    generator = d.get("meta", {}).get("generator", "backtracking")
    return Patch(placements, coronas, 0, generator)


def parse_patch(text: str) -> Patch:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PatchFormatError(f"invalid JSON: {exc}") from None
    return patch_from_dict(d)


# -- import -------------------------------------------------------------------

_S3 = math.sqrt(3)


def _linear_matrix(iso: Isometry) -> tuple[float, float, float, float]:
    a = math.radians(60 * iso.rot)
    c, s = math.cos(a), math.sin(a)
    if iso.mirror:
        # rotation after reflection in the 60 degree line
        m = (-0.5, _S3 / 2, _S3 / 2, 0.5)
        return (c * m[0] - s * m[2], c * m[1] - s * m[3], s * m[0] + c * m[2], s * m[1] + c * m[3])
    return (c, -s, s, c)


def isometry_to_affine(iso: Isometry) -> dict:
    """Float affine form of ``iso`` in the import schema."""
    return {
        "matrix": list(_linear_matrix(iso)),
        "translation": [3.0 * iso.q, _S3 * (iso.q + 2 * iso.r)],
    }


def _snap(matrix, translation, unit: float) -> Isometry | None:
    if len(matrix) != 4 or len(translation) != 2:
        return None
    m = [float(x) for x in matrix]
    x, y = (float(translation[0]) / unit, float(translation[1]) / unit)
    lin = None
    for mirror in (False, True):
        for rot in range(6):
            ref = _linear_matrix(Isometry(mirror, rot))
            if all(abs(a - b) <= SNAP_TOLERANCE for a, b in zip(m, ref)):
                lin = (mirror, rot)
    if lin is None:
        return None
    q = round(x / 3)
    r = round((y / _S3 - q) / 2)
    if abs(3 * q - x) > SNAP_TOLERANCE or abs(_S3 * (q + 2 * r) - y) > SNAP_TOLERANCE:
        return None
    return Isometry(lin[0], lin[1], q, r)


def import_tiles(text: str) -> Patch:
    """Convert an external placement list into a validated patch."""
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ImportParseError(f"invalid JSON: {exc}") from None
    unit = 1.0
    if isinstance(d, dict):
        unit = float(d.get("unit", 1.0))
        tiles = d.get("tiles")
    else:
        tiles = d
    if not isinstance(tiles, list) or not tiles or unit <= 0:
        raise ImportParseError("expected a non-empty 'tiles' list")
    isos = []
    bad = []
    for i, t in enumerate(tiles):
        if not isinstance(t, dict):
            raise ImportParseError(f"tile {i} is not an object")
        if "matrix" in t:
            iso = _snap(t["matrix"], t.get("translation", [0, 0]), unit)
            if iso is None:
                bad.append(i)
            isos.append(iso)
        elif {"mirror", "rot", "q", "r"} <= t.keys():
            try:
                isos.append(_isometry_from_record(t))
            except PatchFormatError:
                bad.append(i)
                isos.append(None)
        else:
            raise ImportParseError(f"tile {i} has neither matrix nor axial fields")
    if bad:
        raise SnapError(bad)
    placements = tuple(Placement(i) for i in isos)
    patch = Patch(placements, assign_coronas(placements), 0, "import")
    report = validate_patch(patch)
    if not report.ok:
        raise PatchInvalidError(report.violations)
    return patch


# -- reports ------------------------------------------------------------------


def audit_to_dict(report: AuditReport) -> dict:
    return {
        "format": "hatlab-audit",
        "schema_version": REPORT_SCHEMA_VERSION,
        "artifact_version": report.version,
        "timestamp": report.timestamp,
        "summary": report.summary,
        "claims": [c.as_record() for c in report.claims],
    }


def audit_to_json(report: AuditReport) -> str:
    return json.dumps(audit_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def audit_to_text(report: AuditReport) -> str:
    lines = [f"hatlab {report.version} claims audit ({report.timestamp})", ""]
    for c in report.claims:
        lines.append(f"[{c.id}] {c.verdict}  ({c.location})")
        lines.append(f"    claim:    {c.statement}")
        if c.printed_value is not None:
            lines.append(f"    printed:  {c.printed_value}")
        lines.append(f"    computed: {c.computed_value}")
        if c.note:
            lines.append(f"    note:     {c.note}")
    s = report.summary
    lines.append("")
    lines.append(", ".join(f"{k}: {v}" for k, v in s.items()))
    return "\n".join(lines) + "\n"


def analysis_to_json(analysis: dict) -> str:
    body = {"format": "hatlab-report", "schema_version": REPORT_SCHEMA_VERSION, "artifact_version": __version__}
    body.update(analysis)
    return json.dumps(body, indent=2) + "\n"


def analysis_to_text(analysis: dict) -> str:
    lines = [f"ring definition: {analysis['ring_definition']}"]
    meta = analysis["patch"]
    lines.append(f"patch: {meta['placements']} placements, {meta['coronas']} coronas, generator {meta['generator']}")
    if "rings" in analysis:
        lines.append("")
        lines.append("ring  total  normal  reflected")
        for r in analysis["rings"]:
            lines.append(f"{r['index']:>4}  {r['total']:>5}  {r['normal']:>6}  {r['reflected']:>9}")
    if "compare" in analysis:
        cmp = analysis["compare"]
        lines.append("")
        lines.append(f"target {cmp['target_sequence']}: {', '.join(map(str, cmp['target_prefix']))}")
        lines.append("ring  observed_normal  target  match")
        for r in cmp["rows"]:
            lines.append(f"{r['ring']:>4}  {r['observed_normal']:>15}  {r['target']:>6}  {'yes' if r['match'] else 'no'}")
    if "ratios" in analysis:
        lines.append("")
        if isinstance(analysis["ratios"], str):
            lines.append(f"ratios: {analysis['ratios']}")
        else:
            lines.append("n  ratio  delta_vs_phi2")
            for r in analysis["ratios"]:
                lines.append(f"{r['n']}  {r['ratio']}  {r['delta_decimal']}")
    if "reflected" in analysis:
        rf = analysis["reflected"]
        lines.append("")
        lines.append(f"reflected fraction: all {rf['all']}, interior {rf['interior_only']}")
    if "periodicity" in analysis:
        p = analysis["periodicity"]
        lines.append("")
        found = "none" if p["translation"] is None else str(tuple(p["translation"]))
        lines.append(
            f"translation symmetry: {found} (window radius {p['window_radius']} hex steps, "
            f"shifts up to {p['max_shift']}, {p['tiles_checked']} tiles checked)"
        )
    return "\n".join(lines) + "\n"


def write_csv(header: Iterable[str], rows: Iterable[Iterable]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def ratio_row(point, digits: int = 12) -> tuple:
    return (
        point.n,
        to_decimal(point.ratio, digits),
        point.delta.sign(),
        to_decimal(point.delta, digits),
    )
