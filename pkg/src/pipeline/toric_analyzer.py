#!/usr/bin/env python3
"""
Toric Analyzer - koni/β girdilerinden rapor üreten ana orkestratör
"""

import json
import os
import time
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
import yaml
from dotenv import load_dotenv
from loguru import logger
from pydantic import BaseModel, field_validator

from src.complexes.context import BetaContext, ComplexContext, ConeContext
from src.complexes.paths import path_census
from src.complexes.profiles import all_profiles, build_profile, gorenstein_checks
from src.cones import class_group
from src.cones.cone_model import ConeSpec, extremal_ray_lint, gorenstein_element, shape, validate
from src.exceptions import InvalidBetaSystem
from src.oracle.grid_oracle import ChamberOracle
from src.pipeline.verification import ExampleVerifier
from src.search.almost_simplicial import (
    BetaSystem,
    classify,
    forced_interval,
    full_length_window,
    parse_betas,
)
from src.search.incredulous_search import IncredulousSearch


class BetaInput(BaseModel):
    """β-modu girdi şeması: {"betas": [int, ...]}"""

    betas: List[int]

    @field_validator("betas")
    @classmethod
    def _not_empty(cls, betas):
        if len(betas) < 2:
            raise ValueError("en az iki β gerekli")
        return betas


class Report(BaseModel):
    """CLI raporu"""

    command: str
    input: Dict[str, Any]
    class_group: Optional[Dict[str, Any]] = None
    cone: Optional[Dict[str, Any]] = None
    lattice_points: Optional[List[List[int]]] = None
    paths: Optional[List[Dict[str, Any]]] = None
    profiles: Optional[List[Dict[str, Any]]] = None
    path_census: Optional[List[Dict[str, Any]]] = None
    checks: Optional[List[str]] = None
    search: Optional[Dict[str, Any]] = None
    classification: Optional[Dict[str, Any]] = None
    oracle: Optional[Dict[str, Any]] = None
    verification: Optional[Dict[str, Any]] = None
    timing: Optional[Dict[str, float]] = None

    def to_json(self, indent: int = 2) -> str:
        return self.model_dump_json(indent=indent, exclude_none=True)


def parse_beta_list(text: str) -> List[int]:
    """"2,1,-1,-1,-1" → [2, 1, -1, -1, -1]"""
    try:
        values = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise InvalidBetaSystem(f"β listesi tamsayılardan oluşmalı: {text!r}", invariant="input")
    return BetaInput(betas=values).betas


class ToricAnalyzer:
    """Konfigürasyonla çalışan analiz sürücüsü"""

    def __init__(self, config_path: Optional[str] = None):
        """Başlatma"""
        load_dotenv()
        self.config_path = config_path or os.getenv("TORIC_NCCR_CONFIG", "config/config.yaml")
        self.config = self._load_config(self.config_path)
        self.searcher = IncredulousSearch(self.config_path)
        self.oracle = ChamberOracle(self.config_path)
        self.timing = bool(self.config.get("output", {}).get("timing", True))
        logger.info("Toric analyzer başlatıldı")

    def _load_config(self, config_path: str) -> Dict[str, Any]:
        """Konfigürasyon dosyasını yükle"""
        try:
            with open(config_path, "r", encoding="utf-8") as file:
                loaded = yaml.safe_load(file) or {}
            defaults = self._default_config()
            return {key: {**defaults.get(key, {}), **loaded.get(key, {})} for key in {*defaults, *loaded}}
        except Exception as e:
            logger.error(f"Config yüklenemedi: {e}")
            return self._default_config()

    def _default_config(self) -> Dict[str, Any]:
        """Varsayılan config"""
        return {
            "search": {"threads": 1},
            "verification": {"fixtures_dir": "data/fixtures"},
            "output": {"indent": 2, "timing": True},
            "logging": {"level": "INFO", "file": None, "rotation": "1 MB"},
        }

    @property
    def threads(self) -> int:
        env_threads = os.getenv("TORIC_NCCR_THREADS")
        return int(env_threads) if env_threads else int(self.config["search"].get("threads", 1))

    def context(self, spec: Optional[ConeSpec] = None, betas: Optional[Sequence[int]] = None) -> ComplexContext:
        """Koni ya da β listesi için kompleks bağlamı"""
        if spec is not None:
            return ConeContext(spec, threads=self.threads)
        return BetaContext(betas, threads=self.threads)

    def _finish(self, report: Report, started: float) -> Report:
        if self.timing:
            report.timing = {"seconds": round(time.perf_counter() - started, 3)}
        return report

    @staticmethod
    def _echo(spec: Optional[ConeSpec], betas: Optional[Sequence[int]]) -> Dict[str, Any]:
        if spec is not None:
            return json.loads(spec.model_dump_json(exclude_none=True))
        return {"betas": list(betas)}

    def validate(self, spec: ConeSpec) -> Report:
        started = time.perf_counter()
        validate(spec)
        logger.success(f"✅ Koni geçerli: {spec.name or 'isimsiz'}")
        report = Report(command="validate", input=self._echo(spec, None), cone={"valid": True, "dim": spec.dim})
        return self._finish(report, started)

    def analyze(self, spec: ConeSpec) -> Report:
        """Sınıf grubu ve zonotop özeti"""
        started = time.perf_counter()
        ctx = ConeContext(spec, threads=self.threads)
        m = gorenstein_element(spec)
        cone = {
            "dim": spec.dim,
            "rays": spec.k,
            "shape": shape(spec).value,
            "gorenstein_element": list(m) if m is not None else None,
            "non_extremal_rays": extremal_ray_lint(spec),
            "conic_modules": class_group.conic_module_count(ctx.cg, ctx.points),
        }
        report = Report(
            command="analyze",
            input=self._echo(spec, None),
            class_group=ctx.cg.summary(),
            cone=cone,
            lattice_points=[list(p) for p in ctx.points],
        )
        return self._finish(report, started)

    def complex(self, point: Sequence[int], spec: Optional[ConeSpec] = None, betas=None) -> Report:
        """Tek bir noktanın yolları ve profili"""
        started = time.perf_counter()
        ctx = self.context(spec, betas)
        paths = ctx.valid_paths_into(point)
        profile = build_profile(ctx, point)
        report = Report(
            command="complex",
            input=self._echo(spec, betas),
            lattice_points=[list(p) for p in ctx.points],
            paths=[p.to_dict() for p in paths],
            profiles=[profile.to_dict()],
        )
        return self._finish(report, started)

    def complexes(self, spec: Optional[ConeSpec] = None, betas=None) -> Report:
        """Tüm profiller, yol sayımı ve Gorenstein kontrolleri"""
        started = time.perf_counter()
        ctx = self.context(spec, betas)
        profiles = all_profiles(ctx)
        gorenstein = betas is not None or gorenstein_element(spec) is not None
        report = Report(
            command="complexes",
            input=self._echo(spec, betas),
            lattice_points=[list(p) for p in ctx.points],
            profiles=[profiles[p].to_dict() for p in ctx.points],
            path_census=path_census(ctx),
            checks=gorenstein_checks(ctx, profiles) if gorenstein else None,
        )
        return self._finish(report, started)

    def search(self, spec: Optional[ConeSpec] = None, betas=None, **overrides) -> Report:
        started = time.perf_counter()
        ctx = self.context(spec, betas)
        result = self.searcher.run(ctx, **overrides)
        report = Report(
            command="search",
            input=self._echo(spec, betas),
            lattice_points=[list(p) for p in ctx.points],
            search=result.model_dump(),
        )
        return self._finish(report, started)

    def classify_1d(self, betas: Sequence[int]) -> Report:
        """Kapalı form sınıflandırma ve β-modu pencereleri"""
        started = time.perf_counter()
        parsed = parse_betas(betas)
        result = classify(parsed).model_dump()
        if isinstance(parsed, BetaSystem):
            forced = forced_interval(parsed)
            window = full_length_window(parsed)
            result["sorted_betas"] = list(parsed.betas)
            result["forced_interval"] = [forced.low, forced.high]
            result["full_length_window"] = [window.low, window.high]
        report = Report(command="classify-1d", input={"betas": list(betas)}, classification=result)
        return self._finish(report, started)

    def run_oracle(self, spec: ConeSpec, denominator: Optional[int] = None, box: Optional[int] = None) -> Report:
        started = time.perf_counter()
        validate(spec)
        cg = class_group.compute(spec)
        report = Report(
            command="oracle",
            input=self._echo(spec, None),
            class_group=cg.summary(),
            oracle=self.oracle.summary(spec, cg, denominator, box),
        )
        return self._finish(report, started)

    def verify(self, name: str) -> Report:
        """Fixture örneklerini yeniden hesapla ve karşılaştır"""
        started = time.perf_counter()
        results = ExampleVerifier(self.config_path).verify(name)
        verification = {
            "passed": all(r.passed for r in results),
            "examples": [{"example": r.example, "passed": r.passed} for r in results],
            "checks": [
                {"check": f"{r.example}/{c.check}", "passed": c.passed, "detail": c.detail}
                for r in results
                for c in r.checks
            ],
        }
        report = Report(command="verify", input={"example": name}, verification=verification)
        return self._finish(report, started)


def report_table(report: Report) -> pd.DataFrame:
    """Raporun tablo görünümü (--tsv)"""
    if report.search is not None:
        rows = [
            {"index": i, "size": len(s), "points": " ".join(",".join(map(str, p)) for p in s)}
            for i, s in enumerate(report.search["incredulous_sets"])
        ]
        return pd.DataFrame(rows, columns=["index", "size", "points"])
    if report.path_census is not None and report.command == "complexes":
        rows = [
            {"point": ",".join(map(str, prof["point"])), "degree": int(d), "module": ",".join(map(str, item["point"])), "mult": item["mult"]}
            for prof in report.profiles
            for d, items in prof["degrees"].items()
            for item in items
        ]
        return pd.DataFrame(rows, columns=["point", "degree", "module", "mult"])
    if report.paths is not None:
        rows = [
            {"subset": ",".join(map(str, p["subset"])), "start": ",".join(map(str, p["start"])), "end": ",".join(map(str, p["end"])), "length": p["length"]}
            for p in report.paths
        ]
        return pd.DataFrame(rows, columns=["subset", "start", "end", "length"])
    if report.verification is not None:
        return pd.DataFrame(report.verification["checks"], columns=["check", "passed", "detail"])
    if report.lattice_points is not None:
        return pd.DataFrame({"point": [",".join(map(str, p)) for p in report.lattice_points]})
    flat = {k: v for k, v in report.model_dump(exclude_none=True).items() if not isinstance(v, (dict, list))}
    for section in ("classification", "oracle", "cone", "class_group"):
        for key, value in (getattr(report, section) or {}).items():
            flat[f"{section}.{key}"] = json.dumps(value) if isinstance(value, (dict, list)) else value
    return pd.DataFrame([flat])
