#!/usr/bin/env python3
"""
Sınıf Grubu - kokernel matrisi C, β-vektörleri, burulma ve doğrusal denklik testleri
"""

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from src.cones.cone_model import ConeSpec, Divisor
from src.exceptions import InvalidCokernel
from src.linalg.exact_linalg import (
    LinearSystem,
    as_int_matrix,
    diagonal,
    find_witness,
    hermite_normal_form,
    integer_solve,
    smith_normal_form,
)

LatticePoint = Tuple[int, ...]


@dataclass(frozen=True)
class ClassGroupData:
    """Cl(X) = ℤ^{k-n} ⊕ burulma verisi"""

    free_rank: int
    torsion: Tuple[int, ...]
    C: Tuple[Tuple[int, ...], ...]
    betas: Tuple[Tuple[int, ...], ...]
    torsion_map: Tuple[Tuple[int, ...], ...]
    ray_matrix: Tuple[Tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.betas)

    @property
    def torsion_order(self) -> int:
        return prod(self.torsion)

    def summary(self) -> Dict[str, Any]:
        return {
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "betas": [list(b) for b in self.betas],
        }


def _rows(M) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in M)


def compute(spec: ConeSpec) -> ClassGroupData:
    """ℤ^n → ℤ^k → Cl dizisinin kokernelini SNF ile hesapla"""
    A = spec.ray_matrix()
    k, n = A.shape
    U, D, _ = smith_normal_form(A)
    factors = diagonal(D)

    free_rows = U[n:, :]
    C = hermite_normal_form(free_rows) if k > n else np.zeros((0, k), dtype=object)
    torsion = tuple(d for d in factors if d > 1)
    torsion_map = tuple(
        tuple(int(x) % d for x in U[i, :]) for i, d in enumerate(factors) if d > 1
    )

    if spec.cokernel is not None:
        override = as_int_matrix(spec.cokernel, k)
        if override.shape != (k - n, k) or np.any(override.dot(A) != 0):
            raise InvalidCokernel("Verilen cokernel C·A = 0 koşulunu sağlamıyor")
        if _rows(hermite_normal_form(override)) != _rows(C):
            raise InvalidCokernel("Verilen cokernel ℤ^{k-n} üzerine örten değil")
        C = override

    betas = tuple(tuple(int(C[i, j]) for i in range(k - n)) for j in range(k))
    cg = ClassGroupData(
        free_rank=k - n,
        torsion=torsion,
        C=_rows(C),
        betas=betas,
        torsion_map=torsion_map,
        ray_matrix=_rows(A),
    )
    logger.debug(f"Sınıf grubu: ℤ^{cg.free_rank}, burulma {list(torsion)}")
    return cg


def _difference(d1: Sequence[int], d2: Sequence[int]) -> Tuple[int, ...]:
    return tuple(a - b for a, b in zip(d1, d2))


def point_of(cg: ClassGroupData, d: Sequence[int]) -> LatticePoint:
    """f_σ(-d) = C·(-d)"""
    return tuple(-sum(c * x for c, x in zip(row, d)) for row in cg.C)


def class_key(cg: ClassGroupData, d: Sequence[int]) -> Tuple[LatticePoint, Tuple[int, ...]]:
    """-d sınıfının tam değişmezi: (kafes noktası, burulma kalıntıları)"""
    residues = tuple(
        (-sum(t * x for t, x in zip(row, d))) % order for row, order in zip(cg.torsion_map, cg.torsion)
    )
    return point_of(cg, d), residues


def lin_equiv(cg: ClassGroupData, spec: ConeSpec, d1: Sequence[int], d2: Sequence[int]) -> bool:
    """d1 - d2 = A·m olan tamsayı m var mı"""
    return integer_solve(spec.ray_matrix(), _difference(d1, d2)) is not None


def torsion_class(cg: ClassGroupData, d1: Sequence[int], d2: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Aynı noktaya giden iki bölenin farkının burulma bileşeni"""
    if point_of(cg, d1) != point_of(cg, d2):
        return None
    diff = _difference(d1, d2)
    return tuple(sum(t * x for t, x in zip(row, diff)) % order for row, order in zip(cg.torsion_map, cg.torsion))


def divisor_for_point(cg: ClassGroupData, point: Sequence[int]) -> Divisor:
    """point_of(d) = point olan deterministik bir d"""
    if cg.free_rank == 0:
        return tuple(0 for _ in range(cg.k))
    x = integer_solve(cg.C, list(point))
    if x is None:
        # C örten olduğu için buraya düşmemeli
        raise InvalidCokernel(f"Nokta için bölen bulunamadı: {list(point)}")
    return tuple(-v for v in x)


def conic_module_count(cg: ClassGroupData, points: Sequence[LatticePoint]) -> int:
    """r·|Tors(Cl)|"""
    return len(points) * cg.torsion_order


def torsion_shift(
    cg: ClassGroupData, spec: ConeSpec, d1: Sequence[int], d2: Sequence[int]
) -> Optional[Tuple[Fraction, ...]]:
    """C·(d1-d2) = 0 iken A·m = d1 - d2 olan rasyonel m"""
    diff = _difference(d1, d2)
    if any(sum(c * x for c, x in zip(row, diff)) for row in cg.C):
        return None
    system = LinearSystem(spec.dim)
    for ray, target in zip(spec.rays, diff):
        system.eq(ray, target)
    return find_witness(system)


def unimodular_change(cg: ClassGroupData, W: Sequence[Sequence[int]]) -> ClassGroupData:
    """C tabanını W ile değiştir (W·C); tüm kombinatorik bu değişime göre değişmez"""
    W = as_int_matrix(W)
    C = W.dot(as_int_matrix(cg.C, cg.k))
    return ClassGroupData(
        free_rank=cg.free_rank,
        torsion=cg.torsion,
        C=_rows(C),
        betas=tuple(tuple(int(C[i, j]) for i in range(cg.free_rank)) for j in range(cg.k)),
        torsion_map=cg.torsion_map,
        ray_matrix=cg.ray_matrix,
    )
