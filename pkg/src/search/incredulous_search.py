#!/usr/bin/env python3
"""
İnanmaz Küme Araması - kafes noktası alt kümelerinde kapsamlı ve budanmış arama
"""

import os
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from math import comb
from typing import Any, Dict, List, Literal, Optional, Set, Tuple

import yaml
from loguru import logger
from pydantic import BaseModel, PositiveInt
from tqdm import tqdm

from src.complexes.profiles import all_profiles, check_incredulous
from src.cones.cone_model import gorenstein_element
from src.exceptions import CapExceeded, ToricError
from src.search.almost_simplicial import BetaSystem, forced_interval

LatticePoint = Tuple[int, ...]
PointSet = Tuple[LatticePoint, ...]


class SearchConfig(BaseModel):
    mode: Literal["exhaustive", "first_found", "all_minimal"] = "exhaustive"
    pruning: Literal["none", "gorenstein_almost_simplicial"] = "none"
    max_subsets: Optional[PositiveInt] = None
    threads: PositiveInt = 1
    progress: bool = False


class SearchResult(BaseModel):
    incredulous_sets: List[List[List[int]]]
    subsets_examined: int

    def point_sets(self) -> List[PointSet]:
        return [tuple(tuple(p) for p in s) for s in self.incredulous_sets]


def required_points(ctx) -> Set[LatticePoint]:
    """Budama için zorunlu noktalar: 0 ve zorunlu aralık

    Σβ = 0 burulma varken yalnızca ℚ-Gorenstein demektir; koni bağlamında
    tamsayı Gorenstein elemanı da aranır.
    """
    if ctx.free_rank != 1:
        logger.warning("⚠️ Gorenstein hemen-hemen simpleks budaması yalnızca rank 1'de geçerli; budama yok")
        return set()
    spec = getattr(ctx, "spec", None)
    if spec is not None and gorenstein_element(spec) is None:
        logger.warning(f"⚠️ {ctx.name} yalnızca ℚ-Gorenstein; budama yok")
        return set()
    try:
        bs = BetaSystem([b[0] for b in ctx.betas])
    except ToricError as e:
        logger.warning(f"⚠️ Budama uygulanamadı: {e}")
        return set()
    return {(0,)} | {(x,) for x in forced_interval(bs).points()}


def _candidates(ctx, size: int, required: Set[LatticePoint], minimal: List[Set[LatticePoint]]):
    for subset in combinations(ctx.points, size):
        members = set(subset)
        if not required <= members:
            continue
        if any(found <= members for found in minimal):
            continue
        yield subset


def find_incredulous(ctx, cfg: Optional[SearchConfig] = None) -> SearchResult:
    """Artan boyut, sonra sözlük sırasıyla tüm inanmaz kümeler"""
    cfg = cfg or SearchConfig()
    required = required_points(ctx) if cfg.pruning == "gorenstein_almost_simplicial" else set()
    all_profiles(ctx)

    found: List[PointSet] = []
    minimal: List[Set[LatticePoint]] = []
    examined = 0
    total = 2 ** len(ctx.points) - 1
    bar = tqdm(total=total, desc=f"Arama {ctx.name}", disable=not cfg.progress, leave=False)

    try:
        for size in range(1, len(ctx.points) + 1):
            batch = list(_candidates(ctx, size, required, minimal if cfg.mode == "all_minimal" else []))
            over_cap = cfg.max_subsets is not None and examined + len(batch) > cfg.max_subsets
            if over_cap:
                batch = batch[: cfg.max_subsets - examined]

            if cfg.threads > 1 and len(batch) > 1:
                with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
                    verdicts = list(pool.map(lambda s: check_incredulous(ctx, s).incredulous, batch))
            else:
                verdicts = []
                for subset in batch:
                    verdicts.append(check_incredulous(ctx, subset).incredulous)
                    if verdicts[-1] and cfg.mode == "first_found":
                        break

            for subset, ok in zip(batch, verdicts):
                examined += 1
                if ok:
                    found.append(subset)
                    minimal.append(set(subset))
                    if cfg.mode == "first_found":
                        return _result(found, examined)
            bar.update(comb(len(ctx.points), size))

            if over_cap:
                raise CapExceeded(examined, cfg.max_subsets)
    finally:
        bar.close()

    logger.info(f"🔎 {ctx.name}: {len(found)} inanmaz küme, {examined} alt küme incelendi")
    return _result(found, examined)


def _result(found: List[PointSet], examined: int) -> SearchResult:
    ordered = sorted(found, key=lambda s: (len(s), s))
    return SearchResult(
        incredulous_sets=[[list(p) for p in s] for s in ordered],
        subsets_examined=examined,
    )


class IncredulousSearch:
    """Config dosyasından ayarlanan arama sürücüsü"""

    def __init__(self, config_path: str = "config/config.yaml"):
        """Başlatma"""
        self.config = self._load_config(config_path)

    def _load_config(self, config_path: str) -> Dict[str, Any]:
        """Konfigürasyon dosyasını yükle"""
        try:
            with open(config_path, "r", encoding="utf-8") as file:
                loaded = yaml.safe_load(file) or {}
            return {**self._default_config(), **loaded.get("search", {})}
        except Exception as e:
            logger.error(f"Config yüklenemedi: {e}")
            return self._default_config()

    def _default_config(self) -> Dict[str, Any]:
        """Varsayılan config"""
        return {
            "mode": "exhaustive",
            "pruning": "none",
            "max_subsets": None,
            "threads": 1,
            "progress": False,
        }

    def search_config(self, **overrides) -> SearchConfig:
        """Config + ortam değişkeni + çağrı parametreleri"""
        values = dict(self.config)
        env_threads = os.getenv("TORIC_NCCR_THREADS")
        if env_threads:
            values["threads"] = int(env_threads)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return SearchConfig(**values)

    def run(self, ctx, **overrides) -> SearchResult:
        return find_incredulous(ctx, self.search_config(**overrides))
