#!/usr/bin/env python3
"""
Hemen-hemen Simpleks - β-modu ve Gorenstein hemen-hemen simpleks konilerin kapalı form sınıflandırması
"""

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Dict, List, Literal, Optional, Sequence, Tuple, Union

from loguru import logger
from pydantic import BaseModel

from src.complexes.context import BetaContext
from src.complexes.profiles import ComplexProfile, all_profiles
from src.cones.class_group import ClassGroupData
from src.exceptions import InvalidBetaSystem, NotRankOne, ZeroBetaUnsupported

SPECIAL_WITH_NCCR = {
    (2, 1, -1, -1, -1),
    (1, 1, 1, -1, -1, -1),
}
SPECIAL_WITHOUT_NCCR = {
    (2, 1, 1, -2, -2),
    (2, 2, 2, -3, -3),
    (2, 2, -1, -1, -1, -1),
}


def sign_counts(betas: Sequence[int]) -> Tuple[int, int]:
    """(|S+|, |S-|)"""
    return sum(1 for b in betas if b > 0), sum(1 for b in betas if b < 0)


@dataclass(frozen=True)
class IntegerInterval:
    """Açık tamsayı aralığı (low, high); closed_high ise üst uç dahil"""

    low: int
    high: int
    closed_high: bool = False

    def points(self) -> List[int]:
        top = self.high + 1 if self.closed_high else self.high
        return list(range(self.low + 1, top))

    def __contains__(self, x: int) -> bool:
        return self.low < x < self.high or (self.closed_high and x == self.high)


class BetaSystem:
    """Azalan sıralı, sıfırsız, toplamı sıfır ve EBOB'u 1 olan β listesi"""

    def __init__(self, betas: Sequence[int]):
        betas = tuple(sorted((int(b) for b in betas), reverse=True))
        if any(b == 0 for b in betas):
            raise ZeroBetaUnsupported(betas)
        if sum(betas) != 0:
            raise InvalidBetaSystem(f"β toplamı sıfır değil: {list(betas)}", invariant="gorenstein")
        plus, minus = sign_counts(betas)
        if plus < 2 or minus < 2:
            raise InvalidBetaSystem(f"|S+| ve |S-| en az 2 olmalı: {list(betas)}", invariant="sign_counts")
        if reduce(gcd, betas) != 1:
            raise InvalidBetaSystem(f"β listesinin EBOB'u 1 olmalı: {list(betas)}", invariant="gcd")
        self.betas = betas

    @property
    def n(self) -> int:
        return len(self.betas) - 1

    @property
    def positives(self) -> Tuple[int, ...]:
        return tuple(b for b in self.betas if b > 0)

    @property
    def negatives(self) -> Tuple[int, ...]:
        return tuple(b for b in self.betas if b < 0)

    def flip(self) -> "BetaSystem":
        return BetaSystem([-b for b in self.betas])

    def __eq__(self, other) -> bool:
        return isinstance(other, BetaSystem) and self.betas == other.betas

    def __hash__(self) -> int:
        return hash(self.betas)

    def __repr__(self) -> str:
        return f"BetaSystem{self.betas}"


@dataclass(frozen=True)
class ZeroBetaPresent:
    betas: Tuple[int, ...]


BetaInput = Union[BetaSystem, ZeroBetaPresent]


class Classification(BaseModel):
    verdict: Literal["has_nccr", "no_nccr"]
    witness: Optional[List[int]] = None
    reason: str


def parse_betas(betas: Sequence[int]) -> BetaInput:
    """β listesini BetaSystem ya da ZeroBetaPresent'a çevir"""
    betas = tuple(int(b) for b in betas)
    if any(b == 0 for b in betas):
        return ZeroBetaPresent(betas)
    return BetaSystem(betas)


def beta_mode(cg: ClassGroupData) -> BetaInput:
    """Serbest rankı 1 olan sınıf grubundan 1 boyutlu β'lar"""
    if cg.free_rank != 1:
        raise NotRankOne(cg.free_rank)
    return parse_betas([b[0] for b in cg.betas])


def forced_interval(bs: BetaSystem) -> IntegerInterval:
    """Her inanmaz kümenin içermesi gereken açık aralık"""
    low = sum(bs.negatives[1:]) + 1
    high = sum(bs.positives[:-1]) - 1
    return IntegerInterval(low, high)


def full_length_window(bs: BetaSystem) -> IntegerInterval:
    """Profili n uzunlukta olan noktalar: (-β_1, -β_{n+1})"""
    return IntegerInterval(-bs.betas[0], -bs.betas[-1])


def _is_trapezoid(betas: Tuple[int, ...]) -> bool:
    return len(betas) == 4 and sign_counts(betas) == (2, 2) and betas[0] == -betas[3] and betas[1] == -betas[2]


def classify(bs: BetaInput) -> Classification:
    """Kapalı form NCCR kararı (tüm işaretleri çevirme dahil)"""
    if isinstance(bs, ZeroBetaPresent):
        return Classification(verdict="no_nccr", reason="zero_beta")

    forms = {bs.betas, bs.flip().betas}
    if forms & SPECIAL_WITH_NCCR:
        result = Classification(verdict="has_nccr", witness=[-1, 0, 1], reason="special_case_with_nccr")
    elif _is_trapezoid(bs.betas):
        top, second = bs.betas[0], bs.betas[1]
        window = IntegerInterval(-top, top, closed_high=(top == second))
        result = Classification(verdict="has_nccr", witness=window.points(), reason="trapezoid")
    elif forms & SPECIAL_WITHOUT_NCCR:
        result = Classification(verdict="no_nccr", reason="special_case_without_nccr")
    else:
        result = Classification(verdict="no_nccr", reason="general_argument")
    logger.debug(f"Sınıflandırma {bs.betas}: {result.verdict} ({result.reason})")
    return result


def beta_profiles(bs: BetaSystem, threads: int = 1) -> Dict[int, ComplexProfile]:
    """β-modunda tüm noktaların profilleri, tamsayı anahtarlı"""
    ctx = BetaContext(bs.betas, threads=threads)
    return {p[0]: prof for p, prof in all_profiles(ctx).items()}
