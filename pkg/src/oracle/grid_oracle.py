#!/usr/bin/env python3
"""
Izgara Oracle'ı - oda sayımı, kutu üzerinde Hom kontrolü ve ızgara tabanlı uygunluk
"""

from fractions import Fraction
from itertools import product
from math import lcm
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import yaml
from loguru import logger
from pydantic import BaseModel, Field, PositiveInt
from tqdm import tqdm

from src.cones import class_group
from src.cones.class_group import ClassGroupData
from src.cones.cone_model import ConeSpec, ceil_divisor
from src.cones.zonotope import ZonotopeModel
from src.exceptions import MalformedSystem
from src.linalg.exact_linalg import LinearSystem, nonzero_minors_lcm


class GridSpec(BaseModel):
    denominator: int = Field(default=2, ge=2)
    box_radius: PositiveInt = 1


class ChamberClass(BaseModel):
    point: List[int]
    torsion: List[int]
    ceiling: List[int]
    sample: List[str]

    def sample_vector(self) -> List[Fraction]:
        return [Fraction(x) for x in self.sample]


class ChamberCensus(BaseModel):
    denominator: int
    samples: int
    count: int
    representatives: List[ChamberClass]


def default_grid(spec: ConeSpec, multiplier: int = 1) -> GridSpec:
    """D = (n+1)·L, L = sıfır olmayan n×n minörlerin EKOK'u

    D = 2·L ve tek 1/(2D) ötelemesi yerine kullanılır: tek öteleme bir
    duvar üzerine düşebilir, (n+1)·L ve grid_offsets'taki q^i/q^n ötelemeleri
    her örneği açık bir odanın içine koyar.
    """
    L = nonzero_minors_lcm(spec.ray_matrix(), spec.dim)
    return GridSpec(denominator=max(2, (spec.dim + 1) * L * multiplier))


def grid_offsets(spec: ConeSpec) -> Tuple[np.ndarray, int]:
    """Koordinat başına o_i/Q ötelemesi: o_i = q^i, Q = q^n, q = 2·max|u| + 1"""
    q = 2 * max(abs(x) for ray in spec.rays for x in ray) + 1
    return np.array([q**i for i in range(spec.dim)], dtype=np.int64), q**spec.dim


def _block(values: range, width: int) -> np.ndarray:
    rows = list(product(values, repeat=width))
    return np.array(rows, dtype=np.int64).reshape(len(rows), width)


def _ceilings(points: np.ndarray, rays: np.ndarray, offset_dot: np.ndarray, D: int, Q: int) -> np.ndarray:
    """⌈⟨(a + o/Q)/D, u_ρ⟩⌉, tamsayı tavan bölmesiyle"""
    numerators = Q * points.dot(rays.T) + offset_dot
    return -((-numerators) // (D * Q))


def enumerate_chambers(
    spec: ConeSpec,
    grid: Optional[GridSpec] = None,
    cg: Optional[ClassGroupData] = None,
    progress: bool = False,
) -> ChamberCensus:
    """[0,1)^n ızgarasında tavan demetlerini topla ve sınıf anahtarına göre tekilleştir"""
    cg = cg or class_group.compute(spec)
    grid = grid or default_grid(spec)
    D, n = grid.denominator, spec.dim
    rays = np.array(spec.rays, dtype=np.int64)
    offsets, Q = grid_offsets(spec)
    offset_dot = offsets.dot(rays.T)
    C = np.array(cg.C, dtype=np.int64).reshape(cg.free_rank, cg.k)
    T = np.array(cg.torsion_map, dtype=np.int64).reshape(len(cg.torsion), cg.k)
    orders = np.array(cg.torsion, dtype=np.int64)

    rest = _block(range(D), n - 1)
    found: Dict[Tuple[int, ...], Tuple[Tuple[int, ...], Tuple[int, ...]]] = {}
    for a0 in tqdm(range(D), desc=f"Odalar {spec.name or ''}", disable=not progress, leave=False):
        points = np.hstack([np.full((rest.shape[0], 1), a0, dtype=np.int64), rest])
        ceilings = _ceilings(points, rays, offset_dot, D, Q)
        stacked = np.hstack([(-ceilings).dot(C.T), np.mod((-ceilings).dot(T.T), orders)])
        if stacked.shape[1] == 0:
            unique, first = np.zeros((1, 0), dtype=np.int64), np.array([0])
        else:
            unique, first = np.unique(stacked, axis=0, return_index=True)
        for key, index in zip(unique, first):
            found.setdefault(
                tuple(int(x) for x in key),
                (tuple(int(x) for x in ceilings[index]), tuple(int(x) for x in points[index])),
            )

    reps = []
    for key, (ceiling, a) in sorted(found.items()):
        sample = [str(Fraction(int(x) * Q + int(o), D * Q)) for x, o in zip(a, offsets)]
        reps.append(
            ChamberClass(
                point=list(key[: cg.free_rank]),
                torsion=list(key[cg.free_rank :]),
                ceiling=list(ceiling),
                sample=sample,
            )
        )
    logger.info(f"🧮 {spec.name or 'koni'}: D={D}, {len(reps)} konik modül sınıfı")
    return ChamberCensus(denominator=D, samples=D**n, count=len(reps), representatives=reps)


def class_map(spec: ConeSpec, cg: ClassGroupData, census: ChamberCensus) -> Dict[str, Any]:
    """Temsilciler (kafes noktası, burulma) çiftleriyle birebir mi"""
    points = set(ZonotopeModel(cg.betas).lattice_points())
    pairs = set()
    outside = []
    for rep in census.representatives:
        key = class_group.class_key(cg, rep.ceiling)
        pairs.add(key)
        if key[0] not in points:
            outside.append(rep.point)
    expected = class_group.conic_module_count(cg, sorted(points))
    return {
        "bijective": not outside and len(pairs) == census.count == expected,
        "expected": expected,
        "found": census.count,
        "outside_zonotope": outside,
    }


def hom_box_check(
    spec: ConeSpec,
    v: Sequence,
    w: Sequence,
    radius: int,
    q_bounds: Optional[Sequence[int]] = None,
) -> bool:
    """Kutu içinde Q_{d(v)-d(w)} ile {m : m + (σ^∨+v) ⊆ σ^∨+w} karşılaştırması"""
    dv = np.array(ceil_divisor(spec, v), dtype=np.int64)
    dw = np.array(ceil_divisor(spec, w), dtype=np.int64)
    rays = np.array(spec.rays, dtype=np.int64)
    bounds_a = np.array(q_bounds, dtype=np.int64) if q_bounds is not None else dw - dv

    wide = np.array(list(product(range(-2 * radius, 2 * radius + 1), repeat=spec.dim)), dtype=np.int64)
    wide_pairings = wide.dot(rays.T)
    shifted = wide_pairings[np.all(wide_pairings >= dv, axis=1)]
    box = np.array(list(product(range(-radius, radius + 1), repeat=spec.dim)), dtype=np.int64)
    pairings = box.dot(rays.T)

    in_q = np.all(pairings >= bounds_a, axis=1)
    if shifted.shape[0] == 0:
        in_hom = np.ones(len(box), dtype=bool)
    else:
        in_hom = np.all(pairings >= dw - shifted.min(axis=0), axis=1)

    mismatches = np.nonzero(in_q != in_hom)[0]
    if mismatches.size:
        logger.warning(f"⚠️ Hom kutu karşı örneği: m={box[mismatches[0]].tolist()}")
        return False
    return True


def _scaled(row: Sequence[Fraction], rhs: Fraction) -> Tuple[List[int], int]:
    denominator = lcm(*(Fraction(x).denominator for x in (*row, rhs)))
    return [int(x * denominator) for x in row], int(rhs * denominator)


def grid_feasible(system: LinearSystem, grid: GridSpec) -> bool:
    """|x_i| ≤ R kutusunda paydası D olan bir ızgara noktası sistemi sağlıyor mu"""
    n = system.variables
    if n > 4:
        raise MalformedSystem(f"Izgara oracle'ı en çok 4 değişken destekler: {n}")
    D, R = grid.denominator, grid.box_radius
    span = range(-R * D, R * D + 1)

    # a/D yerine: r·a ? b·D
    equalities = [_scaled(row, rhs) for row, rhs in system.equalities]
    inequalities = [(*_scaled(q.row, q.rhs), q.strict, q.direction) for q in system.inequalities]
    rest = _block(span, max(n - 1, 0))
    if n == 0:
        candidates = [np.zeros((1, 0), dtype=np.int64)]
    else:
        candidates = (np.hstack([np.full((rest.shape[0], 1), a0, dtype=np.int64), rest]) for a0 in span)

    for points in candidates:
        ok = np.ones(points.shape[0], dtype=bool)
        for row, rhs in equalities:
            ok &= points.dot(np.array(row, dtype=np.int64)) == rhs * D
        for row, rhs, strict, direction in inequalities:
            lhs = points.dot(np.array(row, dtype=np.int64))
            if direction == "<=":
                ok &= lhs < rhs * D if strict else lhs <= rhs * D
            else:
                ok &= lhs > rhs * D if strict else lhs >= rhs * D
        if ok.any():
            return True
    return False


class ChamberOracle:
    """Config dosyasından ayarlanan oracle sürücüsü"""

    def __init__(self, config_path: str = "config/config.yaml"):
        """Başlatma"""
        self.config = self._load_config(config_path)

    def _load_config(self, config_path: str) -> Dict[str, Any]:
        """Konfigürasyon dosyasını yükle"""
        try:
            with open(config_path, "r", encoding="utf-8") as file:
                loaded = yaml.safe_load(file) or {}
            return {**self._default_config(), **loaded.get("oracle", {})}
        except Exception as e:
            logger.error(f"Config yüklenemedi: {e}")
            return self._default_config()

    def _default_config(self) -> Dict[str, Any]:
        """Varsayılan config"""
        return {"grid_multiplier": 1, "box_radius": 2, "hom_pairs": 4, "progress": False}

    def grid_for(self, spec: ConeSpec, denominator: Optional[int] = None, box: Optional[int] = None) -> GridSpec:
        radius = box if box is not None else self.config["box_radius"]
        if denominator is not None:
            return GridSpec(denominator=denominator, box_radius=radius)
        grid = default_grid(spec, self.config["grid_multiplier"])
        return GridSpec(denominator=grid.denominator, box_radius=radius)

    def summary(
        self,
        spec: ConeSpec,
        cg: ClassGroupData,
        denominator: Optional[int] = None,
        box: Optional[int] = None,
    ) -> Dict[str, Any]:
        """Oda sayımı, doygunluk ve Hom kutu kontrolü özeti"""
        grid = self.grid_for(spec, denominator, box)
        census = enumerate_chambers(spec, grid, cg, progress=self.config["progress"])
        doubled = enumerate_chambers(
            spec, GridSpec(denominator=2 * grid.denominator, box_radius=grid.box_radius), cg
        )
        mapping = class_map(spec, cg, census)
        zero = [Fraction(0)] * spec.dim
        samples = [rep.sample_vector() for rep in census.representatives[: self.config["hom_pairs"]]]
        hom_ok = all(
            hom_box_check(spec, v, zero, grid.box_radius) and hom_box_check(spec, zero, v, grid.box_radius)
            for v in samples
        )
        return {
            "denominator": census.denominator,
            "box_radius": grid.box_radius,
            "chamber_count": census.count,
            "saturated": doubled.count == census.count,
            "class_map": mapping,
            "hom_box_check": hom_ok,
        }
