#!/usr/bin/env python3
"""
Hata sınıfları - toric NCCR araç takımının ortak hata hiyerarşisi
"""

from typing import Optional


class ToricError(Exception):
    """Tüm alan hatalarının kökü"""

    invariant: str = "genel"

    def __init__(self, message: str, invariant: Optional[str] = None):
        super().__init__(message)
        if invariant is not None:
            self.invariant = invariant


class InvalidConeError(ToricError):
    """Koni girdisi geçersiz"""

    invariant = "cone"


class NonPrimitiveRay(InvalidConeError):
    invariant = "primitive_rays"

    def __init__(self, index: int, ray):
        super().__init__(f"Işın {index} primitif değil (gcd ≠ 1): {list(ray)}")
        self.index = index


class NotFullDimensional(InvalidConeError):
    invariant = "full_dimensional"

    def __init__(self, rank: int, dim: int):
        super().__init__(f"Işın matrisinin rankı {rank}, boyut {dim} olmalı")
        self.rank = rank
        self.dim = dim


class NotPointed(InvalidConeError):
    invariant = "pointed"

    def __init__(self):
        super().__init__("Koni sivri değil: tüm ışınlarla pozitif eşlenen bir m yok")


class InvalidCokernel(InvalidConeError):
    invariant = "cokernel"


class PointOutsideZonotope(ToricError):
    invariant = "lattice_point"

    def __init__(self, point):
        super().__init__(f"Nokta zonotopun kafes noktası değil: {list(point)}")
        self.point = tuple(point)


class ZeroBetaUnsupported(ToricError):
    invariant = "nonzero_betas"

    def __init__(self, betas):
        super().__init__(f"β-modu sıfır β değerlerini desteklemiyor: {list(betas)}")


class SelfSubstitution(ToricError):
    invariant = "substitution"

    def __init__(self, point):
        super().__init__(f"Bir kompleks kendi noktasıyla yerine konamaz: {list(point)}")


class EmptySet(ToricError):
    invariant = "nonempty_set"

    def __init__(self):
        super().__init__("Nokta kümesi boş olamaz")


class CapExceeded(ToricError):
    invariant = "max_subsets"

    def __init__(self, examined: int, cap: int):
        super().__init__(f"Alt küme sınırı aşıldı: {examined} incelendi (sınır {cap})")
        self.examined = examined
        self.cap = cap


class NotRankOne(ToricError):
    invariant = "free_rank_one"

    def __init__(self, free_rank: int):
        super().__init__(f"β-modu serbest rank 1 ister, bulunan: {free_rank}")


class InvalidBetaSystem(ToricError):
    invariant = "beta_system"


class MalformedSystem(ToricError):
    invariant = "row_length"


class WitnessCheckFailed(ToricError):
    """Eliminasyonun ürettiği tanık sistemi sağlamıyor"""

    invariant = "witness"

    def __init__(self, witness):
        super().__init__(f"Fourier-Motzkin tanığı sistemi sağlamıyor: {[str(x) for x in witness]}")
        self.witness = tuple(witness)


class VerificationMismatch(ToricError):
    invariant = "fixture"

    def __init__(self, example: str, mismatches):
        super().__init__(f"{example}: {len(mismatches)} uyuşmazlık")
        self.example = example
        self.mismatches = list(mismatches)
