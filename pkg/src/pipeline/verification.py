#!/usr/bin/env python3
"""
Örnek Doğrulama - data/fixtures altındaki beklenen değerlerle uçtan uca karşılaştırma
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from loguru import logger
from pydantic import BaseModel

from src.complexes.context import BetaContext, ComplexContext, ConeContext
from src.complexes.paths import path_census
from src.complexes.profiles import ComplexProfile, all_profiles, check_incredulous, gorenstein_checks
from src.cones.cone_model import ConeSpec
from src.exceptions import ToricError
from src.oracle.grid_oracle import enumerate_chambers
from src.search.almost_simplicial import classify, parse_betas
from src.search.incredulous_search import SearchConfig, find_incredulous

EXAMPLES = ["fms710", "hexagon", "k4", "beta21111", "beta111111", "beta21122", "beta22233", "beta221111"]


class CheckResult(BaseModel):
    check: str
    passed: bool
    detail: str = ""


class VerificationResult(BaseModel):
    example: str
    passed: bool
    checks: List[CheckResult]

    def mismatches(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


def _points(items) -> List[tuple]:
    return sorted(tuple(p) for p in items)


class ExampleVerifier:
    """Fixture dosyalarını okuyup örnekleri yeniden hesaplar"""

    def __init__(self, config_path: str = "config/config.yaml"):
        """Başlatma"""
        self.config = self._load_config(config_path)
        self.fixtures_dir = Path(self.config["fixtures_dir"])

    def _load_config(self, config_path: str) -> Dict[str, Any]:
        """Konfigürasyon dosyasını yükle"""
        try:
            with open(config_path, "r", encoding="utf-8") as file:
                loaded = yaml.safe_load(file) or {}
            return {**self._default_config(), **loaded.get("verification", {})}
        except Exception as e:
            logger.error(f"Config yüklenemedi: {e}")
            return self._default_config()

    def _default_config(self) -> Dict[str, Any]:
        """Varsayılan config"""
        return {"fixtures_dir": "data/fixtures"}

    def load_fixture(self, name: str) -> Dict[str, Any]:
        path = self.fixtures_dir / f"{name}.json"
        with open(path, "r", encoding="utf-8") as file:
            return json.load(file)

    def context_for(self, fixture: Dict[str, Any]) -> ComplexContext:
        if "cone" in fixture:
            return ConeContext(ConeSpec.model_validate(fixture["cone"]))
        return BetaContext(fixture["betas"], name=fixture.get("name"))

    def verify_example(self, name: str) -> VerificationResult:
        """Tek bir örneği fixture ile karşılaştır"""
        fixture = self.load_fixture(name)
        expected = fixture["expected"]
        checks: List[CheckResult] = []

        def record(check: str, passed: bool, detail: str = ""):
            checks.append(CheckResult(check=check, passed=bool(passed), detail=detail))
            if not passed:
                logger.warning(f"⚠️ {name}/{check}: {detail}")

        ctx = self.context_for(fixture)

        if "class_group" in expected:
            got = ctx.cg.summary()
            for key, value in expected["class_group"].items():
                record(f"class_group.{key}", got[key] == value, f"beklenen {value}, bulunan {got[key]}")

        if "lattice_points" in expected:
            want = _points(expected["lattice_points"])
            record("lattice_points", ctx.points == want, f"beklenen {want}, bulunan {ctx.points}")

        profiles = all_profiles(ctx)
        for data in expected.get("profiles", []):
            want = ComplexProfile.from_dict(data)
            got = profiles.get(want.point)
            record(f"profile{list(want.point)}", got == want, f"beklenen {want}, bulunan {got}")

        for data in expected.get("invalid_paths", []):
            valid = ctx.is_valid(tuple(sorted(data["subset"])), tuple(data["end"]))
            record(f"invalid_path{data['subset']}", not valid, "yol geçerli çıktı")

        if "spliced" in expected:
            spliced = expected["spliced"]
            report = check_incredulous(ctx, spliced["points"])
            record("spliced.incredulous", report.incredulous, f"kilitlenebilir={report.lockable}")
            for data in spliced.get("profiles", []):
                want = ComplexProfile.from_dict(data)
                got = (report.final_profiles or {}).get(want.point)
                record(f"spliced{list(want.point)}", got == want, f"beklenen {want}, bulunan {got}")

        if "full_set" in expected:
            report = check_incredulous(ctx, ctx.points)
            want = expected["full_set"]
            record(
                "full_set",
                report.lockable == want["lockable"] and report.incredulous == want["incredulous"],
                f"kilitlenebilir={report.lockable}, inanmaz={report.incredulous}",
            )

        if "incredulous_sets" in expected:
            cfg = SearchConfig(pruning=fixture.get("pruning", "none"))
            got = find_incredulous(ctx, cfg).point_sets()
            want = sorted((tuple(tuple(p) for p in s) for s in expected["incredulous_sets"]), key=lambda s: (len(s), s))
            record("incredulous_sets", got == want, f"beklenen {want}, bulunan {got}")

        if "path_census" in expected:
            got = path_census(ctx)
            key = lambda row: (row["length"], row["type"])
            want = sorted(expected["path_census"], key=key)
            record("path_census", got == want, f"{len(want)} satır beklendi, {len(got)} bulundu")

        if expected.get("gorenstein_checks"):
            problems = gorenstein_checks(ctx, profiles)
            record("gorenstein_checks", not problems, "; ".join(problems[:5]))

        if "chamber_count" in expected:
            census = enumerate_chambers(ctx.spec, cg=ctx.cg)
            record("chamber_count", census.count == expected["chamber_count"], f"bulunan {census.count}")

        if "classification" in expected:
            betas = fixture.get("betas") or [b[0] for b in ctx.betas]
            got = classify(parse_betas(betas)).model_dump()
            want = expected["classification"]
            record("classification", all(got[k] == v for k, v in want.items()), f"bulunan {got}")

        result = VerificationResult(example=name, passed=all(c.passed for c in checks), checks=checks)
        if result.passed:
            logger.success(f"✅ {name}: {len(checks)} kontrol geçti")
        else:
            logger.error(f"❌ {name}: {len(result.mismatches())} uyuşmazlık")
        return result

    def verify(self, name: str) -> List[VerificationResult]:
        """'all' ya da tek örnek adı"""
        names = EXAMPLES if name == "all" else [name]
        unknown = [n for n in names if n not in EXAMPLES]
        if unknown:
            raise ToricError(f"Bilinmeyen örnek: {unknown}; seçenekler: {EXAMPLES}", invariant="example")
        return [self.verify_example(n) for n in names]
