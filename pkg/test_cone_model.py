#!/usr/bin/env python3
"""
Koni modeli testleri
"""

import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.cones import class_group
from src.cones.cone_model import (
    ConeShape,
    ConeSpec,
    ceil_divisor,
    extremal_ray_lint,
    gorenstein_element,
    load_cone,
    shape,
    transform,
    trapezoid_cone,
    validate,
)
from src.exceptions import InvalidConeError, NonPrimitiveRay, NotFullDimensional, NotPointed


def test_valid_examples(fms710, hexagon, k4):
    for spec in (fms710, hexagon, k4):
        assert validate(spec) is spec


def test_non_primitive_ray():
    with pytest.raises(NonPrimitiveRay) as info:
        validate(ConeSpec(rays=((2, 0), (0, 1))))
    assert info.value.index == 0
    assert info.value.invariant == "primitive_rays"


def test_not_full_dimensional():
    with pytest.raises(NotFullDimensional) as info:
        validate(ConeSpec(rays=((1, 0, 0), (0, 1, 0))))
    assert info.value.rank == 2


def test_not_pointed():
    with pytest.raises(NotPointed):
        validate(ConeSpec(rays=((1, 0), (-1, 0), (0, 1))))


def test_non_extremal_ray_is_only_a_warning():
    spec = ConeSpec(rays=((1, 0), (0, 1), (1, 1)))
    assert extremal_ray_lint(spec) == [2]
    assert validate(spec) is spec


def test_schema_rejects_malformed_rays():
    with pytest.raises(ValidationError):
        ConeSpec(rays=())
    with pytest.raises(ValidationError):
        ConeSpec(rays=((1, 0), (1,)))
    with pytest.raises(ValidationError):
        ConeSpec(rays=((1, 0), (0, 1)), cokernel=((1, 2, 3),))


def test_gorenstein_element(fms710):
    assert gorenstein_element(fms710) == (1, 1, 2)
    assert gorenstein_element(ConeSpec(rays=((1, 0, 0), (0, 1, 0), (1, 1, 2)))) is None


def test_ceil_divisor(fms710):
    assert ceil_divisor(fms710, (Fraction(1, 2), 0, 0)) == (1, 0, 0, 0)
    assert ceil_divisor(fms710, (0, 0, 0)) == (0, 0, 0, 0)
    with pytest.raises(InvalidConeError):
        ceil_divisor(fms710, (0, 0))


def test_shape(fms710, k4):
    assert shape(ConeSpec(rays=((1, 0), (0, 1)))) == ConeShape.SIMPLICIAL
    assert shape(fms710) == ConeShape.ALMOST_SIMPLICIAL
    assert shape(k4) == ConeShape.GENERAL


def test_trapezoid_cone():
    spec = trapezoid_cone(2, 1)
    assert spec.rays == ((0, 0, 1), (2, 0, 1), (0, 1, 1), (1, 1, 1))
    assert validate(spec) is spec
    with pytest.raises(InvalidConeError):
        trapezoid_cone(0, 1)


def test_unimodular_transform_keeps_class_group(fms710):
    moved = transform(fms710, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert moved.rays != fms710.rays
    assert class_group.compute(moved).betas == class_group.compute(fms710).betas
    with pytest.raises(InvalidConeError):
        transform(fms710, [[2, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_load_cone_plain_and_fixture(tmp_path):
    plain = tmp_path / "plain.json"
    plain.write_text(json.dumps({"name": "kare", "rays": [[1, 0], [0, 1]]}), encoding="utf-8")
    wrapped = tmp_path / "wrapped.json"
    wrapped.write_text(json.dumps({"cone": {"rays": [[1, 0], [0, 1]]}, "expected": {}}), encoding="utf-8")

    assert load_cone(str(plain)).name == "kare"
    assert load_cone(str(wrapped)).rays == ((1, 0), (0, 1))
