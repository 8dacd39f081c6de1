#!/usr/bin/env python3
"""
Fixture örneklerinin uçtan uca doğrulanması
"""

import pytest

from src.exceptions import ToricError
from src.pipeline.verification import EXAMPLES, ExampleVerifier


@pytest.fixture
def verifier(config_file) -> ExampleVerifier:
    return ExampleVerifier(str(config_file))


@pytest.mark.parametrize("name", EXAMPLES)
def test_example_matches_fixture(verifier, name):
    result = verifier.verify_example(name)
    assert result.passed, [c.model_dump() for c in result.mismatches()]
    assert result.checks


def test_unknown_example(verifier):
    with pytest.raises(ToricError) as info:
        verifier.verify("dodekagon")
    assert info.value.invariant == "example"


def test_default_fixture_dir_without_config(tmp_path):
    assert str(ExampleVerifier(str(tmp_path / "yok.yaml")).fixtures_dir) == "data/fixtures"
