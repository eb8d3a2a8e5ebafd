import pytest

from hatlab.geometry import Isometry, kite_neighbors
from hatlab.hat import NORMAL, REFLECTED, Placement
from hatlab.tiler import (
    HorizonExceeded,
    Patch,
    SearchExhausted,
    TilerConfig,
    assign_coronas,
    build_patch,
    corona_solutions,
    frontier_of,
    grow_corona,
    patch_census,
    seed_patch,
    validate_patch,
)


@pytest.fixture(scope="module")
def patch3():
    return build_patch(TilerConfig(max_coronas=3))


def test_seed_patch():
    for chir, mirror in ((NORMAL, False), (REFLECTED, True)):
        p = seed_patch(TilerConfig(seed_chirality=chir))
        assert len(p) == 1 and p.corona_of == (0,) and p.placements[0].iso.mirror is mirror
        assert validate_patch(p).ok


def test_config_validation():
    with pytest.raises(ValueError):
        TilerConfig(candidate_order="random")
    with pytest.raises(ValueError):
        TilerConfig(seed_chirality="left")
    with pytest.raises(ValueError):
        TilerConfig(max_coronas=-1)


def test_first_corona_covers_frontier():
    seed = seed_patch()
    p = grow_corona(seed)
    covered = set(p.owner)
    assert all(k in covered for k in frontier_of(set(seed.owner)))
    assert p.coronas == 1
    assert validate_patch(p).ok


def test_first_corona_size():
    assert patch_census(grow_corona(seed_patch()))[1]["total"] == 4


def test_corona_solutions_all_valid():
    seed = seed_patch()
    sols = []
    for p in corona_solutions(seed, TilerConfig()):
        sols.append(p)
        if len(sols) == 20:
            break
    assert sols
    for p in sols:
        assert validate_patch(p).ok
    assert len({p.placements for p in sols}) == len(sols)


def test_build_deterministic(patch3):
    again = build_patch(TilerConfig(max_coronas=3))
    assert again == patch3


def test_build_valid(patch3):
    assert validate_patch(patch3).violations == []
    assert patch3.coronas == 3


def test_prefix_monotone(patch3):
    # a shallower build is a prefix of the deeper one in this configuration
    for c in range(3):
        smaller = build_patch(TilerConfig(max_coronas=c))
        assert patch3.placements[: len(smaller)] == smaller.placements
        assert validate_patch(smaller).ok


def test_regression_census(patch3):
    census = patch_census(patch3)
    assert [census[c]["total"] for c in range(4)] == [1, 4, 10, 16]
    assert [census[c]["normal"] for c in range(4)] == [0, 4, 9, 13]


def test_normal_seed_and_mrv_valid():
    for cfg in (TilerConfig(seed_chirality=NORMAL), TilerConfig(candidate_order="mrv")):
        p = build_patch(cfg)
        assert validate_patch(p).ok and p.coronas == 3


def test_coronas_touch_previous(patch3):
    for i, c in enumerate(patch3.corona_of):
        if c == 0:
            continue
        inner = {k for j, cj in enumerate(patch3.corona_of) if cj == c - 1 for k in patch3.kites_of(j)}
        mine = patch3.kites_of(i)
        assert any(n in inner for k in mine for n in kite_neighbors(k))


def test_assign_coronas_matches(patch3):
    assert assign_coronas(patch3.placements) == patch3.corona_of


def test_validate_catches_overlap(patch3):
    bad = Patch(patch3.placements + (patch3.placements[3],), patch3.corona_of + (1,))
    report = validate_patch(bad)
    assert not report.ok
    assert any("owned by placements" in v for v in report.violations)


def test_validate_catches_gap(patch3):
    # drop a second-corona tile: leaves a hole enclosed by the third corona
    idx = patch3.corona_of.index(2)
    placements = patch3.placements[:idx] + patch3.placements[idx + 1 :]
    coronas = patch3.corona_of[:idx] + patch3.corona_of[idx + 1 :]
    report = validate_patch(Patch(placements, coronas))
    assert any(v.startswith("gap:") for v in report.violations)


def test_validate_catches_wrong_corona(patch3):
    coronas = list(patch3.corona_of)
    coronas[-1] = 1
    assert not validate_patch(Patch(patch3.placements, tuple(coronas))).ok


def test_validate_empty():
    assert not validate_patch(Patch((), ())).ok


def test_small_horizon_fails():
    with pytest.raises(HorizonExceeded) as info:
        grow_corona(seed_patch(), TilerConfig(search_horizon=1))
    assert info.value.partial is not None


def test_budget_exhaustion():
    with pytest.raises(SearchExhausted):
        build_patch(TilerConfig(max_coronas=3, node_budget=5))


def test_census_counts_chirality():
    p = Patch((Placement(Isometry(True)), Placement(Isometry(False, 0, 5, 5))), (0, 1))
    assert patch_census(p) == {
        0: {"total": 1, "normal": 0, "reflected": 1},
        1: {"total": 1, "normal": 1, "reflected": 0},
    }
