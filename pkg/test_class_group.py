#!/usr/bin/env python3
"""
Sınıf grubu testleri: β-vektörleri, burulma, doğrusal denklik
"""

from fractions import Fraction

import pytest

from conftest import load_fixture
from src.cones import class_group
from src.cones.cone_model import ConeSpec
from src.exceptions import InvalidCokernel


@pytest.mark.parametrize("name", ["fms710", "hexagon", "k4"])
def test_summary_matches_fixture(name):
    fixture = load_fixture(name)
    cg = class_group.compute(ConeSpec.model_validate(fixture["cone"]))
    assert cg.summary() == fixture["expected"]["class_group"]


def test_cokernel_annihilates_rays(k4):
    cg = class_group.compute(k4)
    for row in cg.C:
        for coord in range(k4.dim):
            assert sum(c * ray[coord] for c, ray in zip(row, k4.rays)) == 0


def test_k4_torsion(k4):
    cg = class_group.compute(k4)
    assert cg.free_rank == 2
    assert cg.torsion == (2, 2)
    assert cg.torsion_order == 4


def test_conic_module_count(fms710_ctx, k4_ctx):
    assert class_group.conic_module_count(fms710_ctx.cg, fms710_ctx.points) == 3
    assert class_group.conic_module_count(k4_ctx.cg, k4_ctx.points) == 28


def test_divisor_for_point_lands_on_point(hexagon_ctx, k4_ctx):
    for ctx in (hexagon_ctx, k4_ctx):
        for p in ctx.points:
            d = class_group.divisor_for_point(ctx.cg, p)
            assert len(d) == ctx.k
            assert class_group.point_of(ctx.cg, d) == p


def test_linear_equivalence(fms710):
    cg = class_group.compute(fms710)
    zero = (0, 0, 0, 0)
    assert class_group.lin_equiv(cg, fms710, (1, 0, -1, 0), zero)
    assert not class_group.lin_equiv(cg, fms710, (1, 0, 0, 0), zero)
    assert class_group.point_of(cg, (1, 0, 0, 0)) == (-1,)


def test_torsion_separates_same_point(k4):
    """Aynı noktaya giden ama doğrusal denk olmayan iki bölen"""
    cg = class_group.compute(k4)
    d, zero = (1, 0, 1, 0, 1, 0), (0,) * 6
    assert class_group.point_of(cg, d) == class_group.point_of(cg, zero)
    assert not class_group.lin_equiv(cg, k4, d, zero)
    assert class_group.torsion_class(cg, d, zero) != (0, 0)
    assert class_group.class_key(cg, d) != class_group.class_key(cg, zero)
    assert class_group.torsion_shift(cg, k4, d, zero) == (0, Fraction(1, 2), 0, Fraction(1, 2))


def test_torsion_class_needs_same_point(fms710):
    cg = class_group.compute(fms710)
    assert class_group.torsion_class(cg, (1, 0, 0, 0), (0, 0, 0, 0)) is None
    assert class_group.torsion_shift(cg, fms710, (1, 0, 0, 0), (0, 0, 0, 0)) is None


def test_cokernel_override(fms710):
    flipped = fms710.model_copy(update={"cokernel": ((-1, 1, -1, 1),)})
    assert class_group.compute(flipped).betas == ((-1,), (1,), (-1,), (1,))

    with pytest.raises(InvalidCokernel):
        class_group.compute(fms710.model_copy(update={"cokernel": ((1, 1, 1, 1),)}))
    with pytest.raises(InvalidCokernel):
        class_group.compute(fms710.model_copy(update={"cokernel": ((2, -2, 2, -2),)}))


def test_unimodular_change(fms710):
    cg = class_group.compute(fms710)
    changed = class_group.unimodular_change(cg, [[-1]])
    assert changed.betas == tuple((-b[0],) for b in cg.betas)
    assert changed.torsion == cg.torsion
