#!/usr/bin/env python3
"""
Ortak test fixture'ları - örnek koniler ve bağlamlar
"""

import json
from pathlib import Path

import pytest
import yaml

from src.complexes.context import BetaContext, ConeContext
from src.cones.cone_model import ConeSpec

FIXTURES = Path(__file__).parent / "data" / "fixtures"


def load_fixture(name: str) -> dict:
    with open(FIXTURES / f"{name}.json", "r", encoding="utf-8") as file:
        return json.load(file)


def cone_of(name: str) -> ConeSpec:
    return ConeSpec.model_validate(load_fixture(name)["cone"])


@pytest.fixture(scope="session")
def fms710() -> ConeSpec:
    return cone_of("fms710")


@pytest.fixture(scope="session")
def hexagon() -> ConeSpec:
    return cone_of("hexagon")


@pytest.fixture(scope="session")
def k4() -> ConeSpec:
    return cone_of("k4")


@pytest.fixture(scope="session")
def fms710_ctx(fms710) -> ConeContext:
    return ConeContext(fms710)


@pytest.fixture(scope="session")
def hexagon_ctx(hexagon) -> ConeContext:
    return ConeContext(hexagon)


@pytest.fixture(scope="session")
def k4_ctx(k4) -> ConeContext:
    return ConeContext(k4)


@pytest.fixture(scope="session")
def beta21111_ctx() -> BetaContext:
    return BetaContext([2, 1, -1, -1, -1])


@pytest.fixture
def config_file(tmp_path) -> Path:
    """Dosya sink'i olmayan, fixture dizini mutlak verilen geçici config"""
    config = {
        "search": {"mode": "exhaustive", "pruning": "none", "max_subsets": None, "threads": 1, "progress": False},
        "oracle": {"grid_multiplier": 1, "box_radius": 1, "hom_pairs": 2, "progress": False},
        "verification": {"fixtures_dir": str(FIXTURES)},
        "output": {"indent": 2, "timing": False},
        "logging": {"level": "WARNING", "file": None, "rotation": "1 MB"},
    }
    path = tmp_path / "config.yaml"
    path.write_text(yaml.safe_dump(config), encoding="utf-8")
    return path
