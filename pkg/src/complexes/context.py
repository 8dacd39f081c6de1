#!/usr/bin/env python3
"""
Kompleks Bağlamı - koni ve β-modu için ortak yol/profil altyapısı
"""

import threading
from functools import reduce
from math import gcd
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from src.complexes.paths import PathSpec, all_subsets, beta_sum, facet_feasible, subset_rank, valid_1d
from src.cones import class_group
from src.cones.class_group import ClassGroupData
from src.cones.cone_model import ConeSpec, validate
from src.cones.zonotope import ZonotopeModel
from src.exceptions import InvalidBetaSystem, PointOutsideZonotope, ZeroBetaUnsupported

LatticePoint = Tuple[int, ...]
Subset = Tuple[int, ...]


class ComplexContext(ABC):
    """Kafes noktaları, geçerlilik testi ve profil önbelleği"""

    def __init__(self, name: str, betas: Sequence[Sequence[int]], n: int, threads: int = 1):
        self.name = name
        self.betas = tuple(tuple(b) for b in betas)
        self.k = len(self.betas)
        self.free_rank = len(self.betas[0]) if self.betas else 0
        self.n = n
        self.threads = max(1, threads)
        self.zonotope = ZonotopeModel(self.betas, threads=self.threads)
        self.points: List[LatticePoint] = self.zonotope.lattice_points()
        self.point_set = set(self.points)
        self.profile_cache: Dict[LatticePoint, object] = {}
        self.lock = threading.Lock()
        self._subsets = all_subsets(self.k)

    def subsets(self) -> List[Subset]:
        return self._subsets

    def beta_sum(self, J: Sequence[int]) -> LatticePoint:
        return beta_sum(self.betas, J, self.free_rank)

    @property
    def zero(self) -> LatticePoint:
        return tuple(0 for _ in range(self.free_rank))

    def require_point(self, point: Sequence[int]) -> LatticePoint:
        point = tuple(point)
        if point not in self.point_set:
            raise PointOutsideZonotope(point)
        return point

    @abstractmethod
    def is_valid(self, J: Subset, end: LatticePoint) -> bool:
        """J yolu end noktasına geçerli mi"""

    @abstractmethod
    def path_length(self, J: Subset) -> int:
        """Yol uzunluğu"""

    def _path(self, J: Subset, end: LatticePoint) -> Optional[PathSpec]:
        if not self.is_valid(J, end):
            return None
        start = tuple(p - s for p, s in zip(end, self.beta_sum(J)))
        return PathSpec(J, start, end, self.path_length(J))

    def valid_paths_into(self, point: Sequence[int]) -> List[PathSpec]:
        """P noktasına giren geçerli yollar, (uzunluk, alt küme) sıralı"""
        end = self.require_point(point)
        if self.threads > 1:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                found = list(pool.map(lambda J: self._path(J, end), self._subsets))
        else:
            found = [self._path(J, end) for J in self._subsets]
        return sorted((p for p in found if p is not None), key=lambda p: (p.length, p.subset))


class ConeContext(ComplexContext):
    """Tam koni verisiyle çalışan bağlam"""

    def __init__(self, spec: ConeSpec, cg: Optional[ClassGroupData] = None, threads: int = 1):
        self.spec = validate(spec)
        self.cg = cg or class_group.compute(spec)
        super().__init__(spec.name or "cone", self.cg.betas, spec.dim, threads)
        self._divisors: Dict[LatticePoint, Tuple[int, ...]] = {}
        logger.info(f"🧭 {self.name}: {len(self.points)} kafes noktası, {self.k} ışın")

    def divisor(self, point: LatticePoint) -> Tuple[int, ...]:
        with self.lock:
            if point not in self._divisors:
                self._divisors[point] = class_group.divisor_for_point(self.cg, point)
            return self._divisors[point]

    def is_valid(self, J: Subset, end: LatticePoint) -> bool:
        return facet_feasible(self.spec, self.divisor(end), J)

    def path_length(self, J: Subset) -> int:
        return subset_rank(self.spec, J)


class BetaContext(ComplexContext):
    """Yalnızca 1 boyutlu β listesiyle çalışan bağlam (hemen-hemen simpleks Gorenstein)"""

    def __init__(self, betas: Sequence[int], name: Optional[str] = None, threads: int = 1):
        betas = [int(b) for b in betas]
        if any(b == 0 for b in betas):
            raise ZeroBetaUnsupported(betas)
        if sum(betas) != 0:
            raise InvalidBetaSystem(f"β toplamı sıfır olmalı: {betas}", invariant="gorenstein")
        if betas and reduce(gcd, betas) != 1:
            # örten C ile gelen β'lar ilkel
            raise InvalidBetaSystem(f"β listesinin EBOB'u 1 olmalı: {betas}", invariant="gcd")
        self.raw_betas = tuple(betas)
        label = name or "beta(" + ",".join(str(b) for b in betas) + ")"
        super().__init__(label, [(b,) for b in betas], len(betas) - 1, threads)
        logger.debug(f"β-modu bağlamı: {label}, noktalar {[p[0] for p in self.points]}")

    def is_valid(self, J: Subset, end: LatticePoint) -> bool:
        return valid_1d(self.raw_betas, J, end[0])

    def path_length(self, J: Subset) -> int:
        # k ≤ n ışın bağımsız; tüm ışınlar rank n verir
        return min(len(J), self.n)
