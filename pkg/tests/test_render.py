import re

import pytest

from hatlab.render import render_svg
from hatlab.tiler import TilerConfig, build_patch, seed_patch


def paths(svg):
    return re.findall(r'<path d="([^"]*)"', svg)


def test_seed_single_path_13_segments():
    svg = render_svg(seed_patch())
    (d,) = paths(svg)
    assert d.startswith("M ") and d.endswith(" Z")
    # M + 12 L draws 12 segments, Z closes the 13th
    assert d.count(" L ") == 12


def test_patch_paths_and_fills():
    patch = build_patch(TilerConfig(max_coronas=2))
    svg = render_svg(patch)
    assert len(paths(svg)) == len(patch)
    assert len(set(re.findall(r'fill="(#[0-9a-f]{6})"', svg))) == 2
    ring = render_svg(patch, color_by="ring")
    assert len(set(re.findall(r'fill="(#[0-9a-f]{6})"', ring))) == 3
    assert ring.count('data-corona="2"') == patch.corona_of.count(2)


def test_deterministic_bytes():
    patch = build_patch(TilerConfig(max_coronas=1))
    assert render_svg(patch).encode() == render_svg(build_patch(TilerConfig(max_coronas=1))).encode()


def test_well_formed():
    import xml.etree.ElementTree as ET

    root = ET.fromstring(render_svg(seed_patch()).split("\n", 1)[1])
    assert root.tag.endswith("svg")


def test_bad_colouring():
    with pytest.raises(ValueError):
        render_svg(seed_patch(), color_by="size")
