#!/usr/bin/env python3
"""
Yollar - faset uygunluğu, geçerli yollar ve yol sayımı
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any, Dict, List, Sequence, Tuple

from src.cones.cone_model import ConeSpec
from src.cones.zonotope import open_sum_contains
from src.exceptions import ZeroBetaUnsupported
from src.linalg.exact_linalg import LinearSystem, feasible, rank

LatticePoint = Tuple[int, ...]
Subset = Tuple[int, ...]


@dataclass(frozen=True)
class PathSpec:
    """start + Σ_{ρ∈J} β_ρ = end"""

    subset: Subset
    start: LatticePoint
    end: LatticePoint
    length: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subset": list(self.subset),
            "start": list(self.start),
            "end": list(self.end),
            "length": self.length,
        }


def all_subsets(k: int) -> List[Subset]:
    """Boyuta, sonra sözlük sırasına göre tüm alt kümeler"""
    return [J for size in range(k + 1) for J in combinations(range(k), size)]


def complement(k: int, J: Sequence[int]) -> Subset:
    members = set(J)
    return tuple(rho for rho in range(k) if rho not in members)


def beta_sum(betas: Sequence[Sequence[int]], J: Sequence[int], width: int) -> LatticePoint:
    return tuple(sum(betas[rho][i] for rho in J) for i in range(width))


@lru_cache(maxsize=None)
def _subset_rank(rays: Tuple[Tuple[int, ...], ...], J: Subset) -> int:
    return rank([rays[rho] for rho in J])


def subset_rank(spec: ConeSpec, J: Sequence[int]) -> int:
    """rank(A_J)"""
    return _subset_rank(spec.rays, tuple(sorted(J)))


def facet_feasible(spec: ConeSpec, d: Sequence[int], J: Sequence[int]) -> bool:
    """⟨x,u_ρ⟩ = d_ρ (ρ∈J), d_ρ-1 < ⟨x,u_ρ⟩ < d_ρ (ρ∉J) rasyonel çözülebilir mi"""
    members = set(J)
    system = LinearSystem(spec.dim)
    for rho, ray in enumerate(spec.rays):
        if rho in members:
            system.eq(ray, d[rho])
        else:
            system.between(ray, d[rho] - 1, d[rho], strict=True)
    return feasible(system)


def valid_by_zonotope(betas: Sequence[Sequence[int]], J: Sequence[int], end: Sequence[int]) -> bool:
    """end ∈ Σ_{ρ∉J} (-1,0)·β_ρ; faset ölçütünün β-düzeyindeki eşdeğeri"""
    return open_sum_contains(betas, complement(len(betas), J), end)


def _check_betas(betas: Sequence[int]):
    if any(b == 0 for b in betas):
        raise ZeroBetaUnsupported(betas)


def start_window(betas: Sequence[int], J: Sequence[int]) -> Tuple[int, int]:
    """β-modunda J yolunun tamsayı başlangıçları için açık aralık"""
    _check_betas(betas)
    rest = complement(len(betas), J)
    if not rest:
        return -1, 1
    negative = sum(betas[rho] for rho in rest if betas[rho] < 0)
    positive = sum(betas[rho] for rho in rest if betas[rho] > 0)
    return negative, positive


def valid_1d(betas: Sequence[int], J: Sequence[int], end: int) -> bool:
    """Σ_{J-} β < l - k < Σ_{J+} β penceresi (J-, J+ tümleyendeki işaretli β'lar)"""
    _check_betas(betas)
    start = end - sum(betas[rho] for rho in J)
    if len(set(J)) == len(betas):
        return start == 0
    low, high = start_window(betas, J)
    return low < start < high


def path_census(ctx) -> List[Dict[str, Any]]:
    """Tüm 2^k alt kümenin (tip β_J, uzunluk) sayımı"""
    counts = Counter((ctx.beta_sum(J), ctx.path_length(J)) for J in ctx.subsets())
    return [
        {"type": list(kind), "length": length, "count": count}
        for (kind, length), count in sorted(counts.items(), key=lambda item: (item[0][1], item[0][0]))
    ]
