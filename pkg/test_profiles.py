#!/usr/bin/env python3
"""
Profil testleri: K_P, yerine koyma, kilitlenebilirlik ve Gorenstein kontrolleri
"""

from itertools import combinations

import pytest

from conftest import load_fixture
from src.complexes.context import BetaContext, ConeContext
from src.complexes.profiles import (
    ComplexProfile,
    all_profiles,
    build_profile,
    check_incredulous,
    check_lockable,
    dependency_graph,
    gorenstein_checks,
    splice_order_independent,
    splice_sequentially,
    substitute,
)
from src.cones.cone_model import trapezoid_cone
from src.exceptions import EmptySet, PointOutsideZonotope, SelfSubstitution, ToricError


def _expected(name, key="profiles"):
    items = load_fixture(name)["expected"][key]
    if key == "spliced":
        items = items["profiles"]
    return {tuple(d["point"]): ComplexProfile.from_dict(d) for d in items}


def test_profile_normalization():
    prof = ComplexProfile((1,), {0: {(5,): 3}, 1: {(0,): 2, (2,): 0}, 2: {}})
    assert prof.entries == {0: {(1,): 1}, 1: {(0,): 2}}
    assert prof.length == 1 and prof.is_short()
    assert prof.positive_support() == {(0,)}
    assert ComplexProfile.from_dict(prof.to_dict()) == prof


def test_fms710_profiles(fms710_ctx):
    assert all_profiles(fms710_ctx) == _expected("fms710")
    assert build_profile(fms710_ctx, (0,)).length == 3


@pytest.mark.parametrize("name", ["hexagon", "k4"])
def test_rank_two_profiles(name, request):
    ctx = request.getfixturevalue(f"{name}_ctx")
    profiles = all_profiles(ctx)
    for point, want in _expected(name).items():
        assert profiles[point] == want


def test_profile_of_unknown_point(fms710_ctx):
    with pytest.raises(PointOutsideZonotope):
        build_profile(fms710_ctx, (3,))


def test_substitute(fms710_ctx):
    profiles = all_profiles(fms710_ctx)
    K0, K1 = profiles[(0,)], profiles[(1,)]
    result = substitute(K0, (1,), K1)
    assert result.entries == {
        0: {(0,): 1},
        1: {(-1,): 2, (0,): 4},
        2: {(0,): 4, (-1,): 2},
        3: {(0,): 1},
    }


def test_substitute_rejects_self_and_foreign(fms710_ctx):
    profiles = all_profiles(fms710_ctx)
    with pytest.raises(SelfSubstitution):
        substitute(profiles[(0,)], (0,), profiles[(0,)])
    with pytest.raises(ToricError):
        substitute(profiles[(0,)], (1,), profiles[(-1,)])


def test_dependency_graph(fms710_ctx):
    graph = dependency_graph(all_profiles(fms710_ctx))
    assert graph == {(-1,): [(0,), (1,)], (0,): [(-1,), (0,), (1,)], (1,): [(-1,), (0,)]}


def test_lockable_pair(fms710_ctx):
    report = check_incredulous(fms710_ctx, [(0,), (1,)])
    assert report.lockable and report.incredulous
    assert report.substituted == [(-1,)]
    assert report.final_profiles == _expected("fms710", "spliced")


def test_cycle_blocks_locking(fms710_ctx):
    report = check_lockable(fms710_ctx, [(0,)])
    assert not report.lockable and not report.incredulous
    assert sorted(report.cycle_witness) == [(-1,), (1,)]
    assert report.to_dict()["final_profiles"] is None


def test_full_set_is_lockable_not_incredulous(fms710_ctx):
    report = check_incredulous(fms710_ctx, fms710_ctx.points)
    assert report.lockable and not report.incredulous
    assert report.substituted == []


def test_empty_and_foreign_sets(fms710_ctx):
    with pytest.raises(EmptySet):
        check_lockable(fms710_ctx, [])
    with pytest.raises(PointOutsideZonotope):
        check_lockable(fms710_ctx, [(0,), (4,)])


def test_sequential_splice_matches(fms710_ctx):
    I = [(0,), (1,)]
    report = check_lockable(fms710_ctx, I)
    assert splice_sequentially(fms710_ctx, I, [(-1,)]) == report.final_profiles
    assert splice_order_independent(fms710_ctx, I, [[(-1,)], [], [(1,), (-1,), (0,)]])
    assert not splice_order_independent(fms710_ctx, [(0,)], [[]])


def test_beta21111_window_is_incredulous(beta21111_ctx):
    report = check_incredulous(beta21111_ctx, [(-1,), (0,), (1,)])
    assert report.incredulous
    assert report.final_profiles == _expected("beta21111", "spliced")
    assert all(p.length == 4 for p in report.final_profiles.values())


def test_k4_spliced_set(k4_ctx):
    points = [tuple(p) for p in load_fixture("k4")["expected"]["spliced"]["points"]]
    report = check_incredulous(k4_ctx, points)
    assert report.incredulous
    assert report.final_profiles == _expected("k4", "spliced")


@pytest.mark.parametrize("name", ["fms710_ctx", "hexagon_ctx", "k4_ctx", "beta21111_ctx"])
def test_gorenstein_checks_pass(name, request):
    ctx = request.getfixturevalue(name)
    assert gorenstein_checks(ctx) == []


def test_gorenstein_checks_flag_short_complex(fms710_ctx):
    profiles = dict(all_profiles(fms710_ctx))
    profiles[(1,)] = ComplexProfile((1,), {1: {(0,): 2}})
    assert any("kısa kompleks" in p for p in gorenstein_checks(fms710_ctx, profiles))


def test_gorenstein_checks_flag_asymmetry(fms710_ctx):
    profiles = dict(all_profiles(fms710_ctx))
    profiles[(1,)] = ComplexProfile((1,), {1: {(0,): 3}, 2: {(-1,): 1}})
    problems = gorenstein_checks(fms710_ctx, profiles)
    assert any(p.startswith("simetri") for p in problems)
    assert not any("kısa kompleks" in p for p in problems)


@pytest.mark.parametrize("a", [1, 2, 3])
@pytest.mark.parametrize("b", [1, 2, 3])
def test_beta_mode_matches_trapezoid_cone(a, b):
    cone_ctx = ConeContext(trapezoid_cone(a, b))
    beta_ctx = BetaContext([beta[0] for beta in cone_ctx.betas])
    assert beta_ctx.points == cone_ctx.points
    assert all_profiles(beta_ctx) == all_profiles(cone_ctx)


@pytest.mark.parametrize("name", ["fms710_ctx", "k4_ctx"])
def test_lockable_subsets_of_incredulous_sets(name, request):
    ctx = request.getfixturevalue(name)
    reports = {
        frozenset(I): check_incredulous(ctx, I)
        for size in range(1, len(ctx.points) + 1)
        for I in combinations(ctx.points, size)
    }
    incredulous = [J for J, report in reports.items() if report.incredulous]
    assert incredulous
    for J in incredulous:
        for I, report in reports.items():
            if I <= J and report.lockable:
                assert report.incredulous, sorted(I)
