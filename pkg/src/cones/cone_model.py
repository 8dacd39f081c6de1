#!/usr/bin/env python3
"""
Koni Modeli - koni girdisinin doğrulanması, Gorenstein elemanı, şekil ve tavan bölenleri
"""

import json
from enum import Enum
from fractions import Fraction
from math import ceil, gcd
from functools import reduce
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from src.exceptions import InvalidConeError, NonPrimitiveRay, NotFullDimensional, NotPointed
from src.linalg.exact_linalg import LinearSystem, as_int_matrix, determinant, feasible, integer_solve, rank

Divisor = Tuple[int, ...]


class ConeSpec(BaseModel):
    """Işın üreteçleriyle verilen koni"""

    model_config = ConfigDict(frozen=True)

    name: Optional[str] = None
    rays: Tuple[Tuple[int, ...], ...]
    cokernel: Optional[Tuple[Tuple[int, ...], ...]] = None

    @field_validator("rays")
    @classmethod
    def _rays_rectangular(cls, rays):
        if not rays:
            raise ValueError("en az bir ışın gerekli")
        width = len(rays[0])
        if width == 0 or any(len(r) != width for r in rays):
            raise ValueError("tüm ışınlar aynı pozitif uzunlukta olmalı")
        return rays

    @model_validator(mode="after")
    def _cokernel_shape(self):
        if self.cokernel is not None and any(len(row) != len(self.rays) for row in self.cokernel):
            raise ValueError("cokernel satırları ışın sayısı kadar sütun içermeli")
        return self

    @property
    def dim(self) -> int:
        return len(self.rays[0])

    @property
    def k(self) -> int:
        return len(self.rays)

    def ray_matrix(self) -> np.ndarray:
        return as_int_matrix(self.rays)


class ConeShape(str, Enum):
    SIMPLICIAL = "Simplicial"
    ALMOST_SIMPLICIAL = "AlmostSimplicial"
    GENERAL = "General"


def validate(spec: ConeSpec) -> ConeSpec:
    """Primitif ışınlar, tam boyut ve sivrilik kontrolü"""
    for i, ray in enumerate(spec.rays):
        if reduce(gcd, (abs(x) for x in ray), 0) != 1:
            raise NonPrimitiveRay(i, ray)

    r = rank(spec.ray_matrix())
    if r != spec.dim:
        raise NotFullDimensional(r, spec.dim)

    # ⟨m,u_ρ⟩ > 0 tüm ışınlar için
    system = LinearSystem(spec.dim)
    for ray in spec.rays:
        system.ge(ray, 0, strict=True)
    if not feasible(system):
        raise NotPointed()

    for i in extremal_ray_lint(spec):
        logger.warning(f"⚠️ Işın {i} diğer ışınların konisinde: {list(spec.rays[i])}")
    logger.debug(f"Koni doğrulandı: {spec.name or 'isimsiz'} ({spec.k} ışın, boyut {spec.dim})")
    return spec


def extremal_ray_lint(spec: ConeSpec) -> List[int]:
    """Diğer ışınların konisine düşen (uç olmayan) ışın indeksleri"""
    found = []
    for i, ray in enumerate(spec.rays):
        others = [r for j, r in enumerate(spec.rays) if j != i]
        if not others:
            continue
        # λ ≥ 0, Σ λ_j u_j = u_i
        system = LinearSystem(len(others))
        for coord in range(spec.dim):
            system.eq([r[coord] for r in others], ray[coord])
        for j in range(len(others)):
            system.ge([1 if t == j else 0 for t in range(len(others))], 0)
        if feasible(system):
            found.append(i)
    return found


def gorenstein_element(spec: ConeSpec) -> Optional[Tuple[int, ...]]:
    """⟨m,u_ρ⟩ = 1 olan tamsayı m; yoksa None"""
    return integer_solve(spec.ray_matrix(), [1] * spec.k)


def pairing(v: Sequence, u: Sequence[int]) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(v, u)), Fraction(0))


def ceil_divisor(spec: ConeSpec, v: Sequence) -> Divisor:
    """d(v) = (⌈⟨v,u_ρ⟩⌉)_ρ"""
    if len(v) != spec.dim:
        raise InvalidConeError(f"v uzunluğu {len(v)}, boyut {spec.dim} olmalı")
    return tuple(ceil(pairing(v, ray)) for ray in spec.rays)


def shape(spec: ConeSpec) -> ConeShape:
    if spec.k == spec.dim:
        return ConeShape.SIMPLICIAL
    if spec.k == spec.dim + 1:
        return ConeShape.ALMOST_SIMPLICIAL
    return ConeShape.GENERAL


def trapezoid_cone(a: int, b: int) -> ConeSpec:
    """conv{(0,0),(a,0),(0,1),(b,1)} × {1} üzerindeki koni"""
    if a < 1 or b < 1:
        raise InvalidConeError(f"a ve b pozitif olmalı: a={a}, b={b}")
    return ConeSpec(name=f"trapezoid_{a}_{b}", rays=((0, 0, 1), (a, 0, 1), (0, 1, 1), (b, 1, 1)))


def transform(spec: ConeSpec, U: Sequence[Sequence[int]]) -> ConeSpec:
    """Unimodüler taban değişimini tüm ışınlara uygula"""
    U = as_int_matrix(U)
    if U.shape != (spec.dim, spec.dim) or abs(determinant(U)) != 1:
        raise InvalidConeError("Taban değişimi unimodüler bir kare matris olmalı")
    rays = spec.ray_matrix().dot(U.T)
    return ConeSpec(
        name=spec.name,
        rays=tuple(tuple(int(x) for x in row) for row in rays),
        cokernel=spec.cokernel,
    )


def load_cone(path: str) -> ConeSpec:
    """JSON koni dosyasını oku (düz koni ya da "cone" anahtarlı fixture)"""
    with open(Path(path), "r", encoding="utf-8") as file:
        data = json.load(file)
    if isinstance(data, dict) and "cone" in data:
        data = data["cone"]
    spec = ConeSpec.model_validate(data)
    logger.info(f"📐 Koni yüklendi: {spec.name or path}")
    return spec
