#!/usr/bin/env python3
"""
Zonotop - yarı açık Z_X = f_σ((-1,0]^k) üyeliği ve kafes noktaları
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from src.linalg.exact_linalg import LinearSystem, feasible

LatticePoint = Tuple[int, ...]


def _unit(size: int, index: int) -> List[int]:
    return [1 if t == index else 0 for t in range(size)]


def open_sum_contains(betas: Sequence[Sequence[int]], indices: Iterable[int], p: Sequence) -> bool:
    """p ∈ Σ_{ρ∈indices} (-1,0)·β_ρ; boş toplam {0} kabul edilir"""
    indices = list(indices)
    if not indices:
        return all(Fraction(x) == 0 for x in p)
    system = LinearSystem(len(indices))
    for coord in range(len(p)):
        system.eq([betas[rho][coord] for rho in indices], p[coord])
    for t in range(len(indices)):
        system.between(_unit(len(indices), t), -1, 0, strict=True)
    return feasible(system)


class ZonotopeModel:
    """β-vektörlerinden yarı açık zonotop"""

    def __init__(self, betas: Sequence[Sequence[int]], threads: int = 1):
        """Başlatma"""
        self.betas = tuple(tuple(int(x) for x in b) for b in betas)
        self.free_rank = len(self.betas[0]) if self.betas else 0
        self.threads = max(1, threads)
        self._points: Optional[List[LatticePoint]] = None

    def _interval_1d(self) -> Tuple[int, bool, int, bool]:
        """(alt, alt dahil mi, üst, üst dahil mi)"""
        positive = sum(b[0] for b in self.betas if b[0] > 0)
        negative = sum(b[0] for b in self.betas if b[0] < 0)
        return -positive, positive == 0, -negative, negative == 0

    def contains(self, p: Sequence) -> bool:
        """Σ α_ρ β_ρ = p, -1 < α_ρ ≤ 0 çözülebilir mi"""
        if len(p) != self.free_rank:
            return False
        if self.free_rank == 0:
            return True
        if self.free_rank == 1:
            x = Fraction(p[0])
            low, low_closed, high, high_closed = self._interval_1d()
            above = x >= low if low_closed else x > low
            below = x <= high if high_closed else x < high
            return above and below
        return self.contains_exact(p)

    def contains_exact(self, p: Sequence) -> bool:
        """Kısayol kullanmadan doğrusal sistemle üyelik"""
        k = len(self.betas)
        system = LinearSystem(k)
        for coord in range(self.free_rank):
            system.eq([b[coord] for b in self.betas], p[coord])
        for rho in range(k):
            system.ge(_unit(k, rho), -1, strict=True).le(_unit(k, rho), 0)
        return feasible(system)

    def bounding_box(self) -> List[Tuple[int, int]]:
        """Kapalı zonotopu içeren koordinat kutusu"""
        box = []
        for coord in range(self.free_rank):
            low = sum(min(0, -b[coord]) for b in self.betas)
            high = sum(max(0, -b[coord]) for b in self.betas)
            box.append((low, high))
        return box

    def lattice_points(self) -> List[LatticePoint]:
        """Zonotopun tamsayı noktaları, sözlük sıralı"""
        if self._points is not None:
            return self._points
        if self.free_rank == 0:
            self._points = [()]
            return self._points

        candidates = list(product(*(range(low, high + 1) for low, high in self.bounding_box())))
        if self.threads > 1 and len(candidates) > 64:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                flags = list(pool.map(self.contains, candidates))
        else:
            flags = [self.contains(c) for c in candidates]
        self._points = sorted(c for c, ok in zip(candidates, flags) if ok)
        logger.debug(f"Zonotop: {len(candidates)} aday, {len(self._points)} kafes noktası")
        return self._points

    def is_symmetric(self) -> bool:
        points = set(self.lattice_points())
        return all(tuple(-x for x in p) in points for p in points)
