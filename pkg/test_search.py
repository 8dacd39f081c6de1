#!/usr/bin/env python3
"""
İnanmaz küme araması testleri
"""

import pytest
from pydantic import ValidationError

from src.complexes.context import ConeContext
from src.cones.cone_model import ConeSpec, gorenstein_element
from src.exceptions import CapExceeded
from src.search.incredulous_search import IncredulousSearch, SearchConfig, find_incredulous, required_points

FMS710_SETS = [((-1,), (0,)), ((0,), (1,))]


def test_exhaustive(fms710_ctx):
    result = find_incredulous(fms710_ctx)
    assert result.point_sets() == FMS710_SETS
    assert result.subsets_examined == 7


def test_first_found(fms710_ctx):
    result = find_incredulous(fms710_ctx, SearchConfig(mode="first_found"))
    assert result.point_sets() == FMS710_SETS[:1]
    assert result.subsets_examined == 4


def test_all_minimal_skips_supersets(fms710_ctx):
    result = find_incredulous(fms710_ctx, SearchConfig(mode="all_minimal"))
    assert result.point_sets() == FMS710_SETS
    assert result.subsets_examined == 6


def test_cap(fms710_ctx):
    with pytest.raises(CapExceeded) as info:
        find_incredulous(fms710_ctx, SearchConfig(max_subsets=2))
    assert info.value.examined == 2
    assert find_incredulous(fms710_ctx, SearchConfig(max_subsets=7)).subsets_examined == 7


def test_pruning_keeps_results(fms710_ctx):
    result = find_incredulous(fms710_ctx, SearchConfig(pruning="gorenstein_almost_simplicial"))
    assert result.point_sets() == FMS710_SETS
    assert result.subsets_examined == 4


def test_required_points(beta21111_ctx, hexagon_ctx):
    assert required_points(beta21111_ctx) == {(0,)}
    assert required_points(hexagon_ctx) == set()


def test_required_points_need_integral_gorenstein():
    spec = ConeSpec(name="q_gorenstein", rays=((1, 0, 2), (0, 1, 2), (-1, 0, 2), (0, -1, 2)))
    ctx = ConeContext(spec)
    assert ctx.cg.torsion == (4,)
    assert sum(b[0] for b in ctx.betas) == 0
    assert gorenstein_element(spec) is None
    assert required_points(ctx) == set()


def test_beta21111_window_found(beta21111_ctx):
    result = find_incredulous(beta21111_ctx, SearchConfig(pruning="gorenstein_almost_simplicial"))
    assert ((-1,), (0,), (1,)) in result.point_sets()


def test_no_sets_for_hexagon(hexagon_ctx):
    assert find_incredulous(hexagon_ctx).incredulous_sets == []


def test_threads_match_serial(fms710_ctx):
    assert find_incredulous(fms710_ctx, SearchConfig(threads=4)) == find_incredulous(fms710_ctx)


def test_config_validation():
    with pytest.raises(ValidationError):
        SearchConfig(mode="fastest")
    with pytest.raises(ValidationError):
        SearchConfig(max_subsets=0)


def test_search_config_layers(config_file, monkeypatch):
    monkeypatch.setenv("TORIC_NCCR_THREADS", "3")
    cfg = IncredulousSearch(str(config_file)).search_config(mode="first_found", max_subsets=None)
    assert cfg.mode == "first_found"
    assert cfg.threads == 3
    assert cfg.max_subsets is None


def test_missing_config_falls_back(tmp_path, monkeypatch):
    monkeypatch.delenv("TORIC_NCCR_THREADS", raising=False)
    searcher = IncredulousSearch(str(tmp_path / "yok.yaml"))
    assert searcher.search_config() == SearchConfig()
