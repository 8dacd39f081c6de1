#!/usr/bin/env python3
"""
Kesin Lineer Cebir - tamsayı normal formları, tamsayı çözümü ve rasyonel uygunluk
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy
from loguru import logger
from sympy.matrices.normalforms import hermite_normal_form as sympy_hnf

from src.exceptions import MalformedSystem, WitnessCheckFailed

Number = Union[int, Fraction]
Witness = Tuple[Fraction, ...]


def as_int_matrix(rows: Union[np.ndarray, Sequence[Sequence[int]]], cols: int = 0) -> np.ndarray:
    """Girdiyi keyfi hassasiyetli (object) tamsayı matrisine çevir"""
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        return np.array([[int(x) for x in row] for row in rows], dtype=object).reshape(rows.shape)
    rows = [list(r) for r in rows]
    if not rows:
        return np.zeros((0, cols), dtype=object)
    width = len(rows[0])
    for row in rows:
        if len(row) != width:
            raise MalformedSystem(f"Satır uzunlukları eşit değil: {width} != {len(row)}")
    return np.array([[int(x) for x in row] for row in rows], dtype=object).reshape(len(rows), width)


def identity(n: int) -> np.ndarray:
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    return eye


def _swap_rows(M: np.ndarray, i: int, j: int):
    if i != j:
        M[[i, j]] = M[[j, i]]


def _swap_cols(M: np.ndarray, i: int, j: int):
    if i != j:
        M[:, [i, j]] = M[:, [j, i]]


def smith_normal_form(M) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """U·M·V = D olacak şekilde (U, D, V) döndür"""
    D = as_int_matrix(M).copy()
    m, n = D.shape
    U = identity(m)
    V = identity(n)

    for t in range(min(m, n)):
        block = [(abs(D[i, j]), i, j) for i in range(t, m) for j in range(t, n) if D[i, j] != 0]
        if not block:
            break
        _, i, j = min(block)
        _swap_rows(D, t, i)
        _swap_rows(U, t, i)
        _swap_cols(D, t, j)
        _swap_cols(V, t, j)

        while True:
            pivot = D[t, t]
            for i in range(t + 1, m):
                q = D[i, t] // pivot
                if q:
                    D[i, :] -= q * D[t, :]
                    U[i, :] -= q * U[t, :]
            for j in range(t + 1, n):
                q = D[t, j] // pivot
                if q:
                    D[:, j] -= q * D[:, t]
                    V[:, j] -= q * V[:, t]

            # kalanlar varsa en küçüğü pivota taşı
            leftovers = [(abs(D[i, t]), i, "row") for i in range(t + 1, m) if D[i, t] != 0]
            leftovers += [(abs(D[t, j]), j, "col") for j in range(t + 1, n) if D[t, j] != 0]
            if leftovers:
                _, idx, kind = min(leftovers)
                if kind == "row":
                    _swap_rows(D, t, idx)
                    _swap_rows(U, t, idx)
                else:
                    _swap_cols(D, t, idx)
                    _swap_cols(V, t, idx)
                continue

            # bölünebilirlik: d_t her kalan girdiyi bölmeli
            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i, j] % pivot != 0),
                None,
            )
            if offender is None:
                break
            D[t, :] += D[offender, :]
            U[t, :] += U[offender, :]

        if D[t, t] < 0:
            D[t, :] = -D[t, :]
            U[t, :] = -U[t, :]

    return U, D, V


def diagonal(D: np.ndarray) -> List[int]:
    return [int(D[i, i]) for i in range(min(D.shape))]


def hermite_normal_form(M) -> np.ndarray:
    """Satır Hermite normal formu; yalnızca sıfır olmayan satırlar

    sympy sütun HNF'si verir (pivotlar sağda, alttan yukarı). Sütunları ters
    çevrilmiş matrisin devriğine uygulanıp sonuç iki eksende geri çevrilir.
    """
    A = as_int_matrix(M)
    m, n = A.shape
    if all(x == 0 for x in A.flat):
        return np.zeros((0, n), dtype=object)
    flipped = A[:, ::-1].T
    W = sympy_hnf(sympy.Matrix(n, m, [int(x) for x in flipped.flatten()]))
    if W.cols == 0:
        return np.zeros((0, n), dtype=object)
    H = as_int_matrix(W.tolist()).T
    return H[::-1, ::-1].copy()


def integer_solve(A, b: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """A·x = b denkleminin tamsayı çözümü; yoksa None"""
    A = as_int_matrix(A)
    m, n = A.shape
    if len(b) != m:
        raise MalformedSystem(f"b uzunluğu {len(b)}, satır sayısı {m} olmalı")
    U, D, V = smith_normal_form(A)
    c = U.dot(np.array([int(x) for x in b], dtype=object)) if m else np.zeros(0, dtype=object)
    y = [0] * n
    for i in range(m):
        d = D[i, i] if i < min(m, n) else 0
        if d == 0:
            if c[i] != 0:
                return None
        elif c[i] % d != 0:
            return None
        else:
            y[i] = c[i] // d
    if n == 0:
        return ()
    x = V.dot(np.array(y, dtype=object))
    return tuple(int(v) for v in x)


def rank(M) -> int:
    """Rasyonel rank"""
    A = as_int_matrix(M)
    if A.size == 0:
        return 0
    return int(sympy.Matrix(A.tolist()).rank())


def determinant(M) -> int:
    A = as_int_matrix(M)
    if A.shape[0] == 0:
        return 1
    return int(sympy.Matrix(A.tolist()).det())


def nonzero_minors_lcm(M, size: int) -> int:
    """size×size sıfır olmayan minörlerin mutlak değerlerinin EKOK'u"""
    A = as_int_matrix(M)
    minors = [abs(determinant(A[list(rows), :])) for rows in combinations(range(A.shape[0]), size)]
    minors = [d for d in minors if d]
    if not minors:
        return 1
    return reduce(lambda a, b: a * b // gcd(a, b), minors)


# ---------------------------------------------------------------------------
# Rasyonel doğrusal sistemler
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Inequality:
    row: Tuple[Fraction, ...]
    rhs: Fraction
    strict: bool = False
    direction: str = "<="

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = sum((a * v for a, v in zip(self.row, x)), Fraction(0))
        if self.direction == "<=":
            return lhs < self.rhs if self.strict else lhs <= self.rhs
        return lhs > self.rhs if self.strict else lhs >= self.rhs


@dataclass
class LinearSystem:
    """Eşitlikler ve (katı/zayıf) eşitsizliklerden oluşan rasyonel sistem"""

    variables: int
    equalities: List[Tuple[Tuple[Fraction, ...], Fraction]] = field(default_factory=list)
    inequalities: List[Inequality] = field(default_factory=list)

    def __post_init__(self):
        self.equalities = [self._row(row, rhs) for row, rhs in self.equalities]
        self.inequalities = [self._inequality(q) for q in self.inequalities]

    def _row(self, row: Sequence[Number], rhs: Number) -> Tuple[Tuple[Fraction, ...], Fraction]:
        if len(row) != self.variables:
            raise MalformedSystem(f"Satır uzunluğu {len(row)}, değişken sayısı {self.variables}")
        return tuple(Fraction(a) for a in row), Fraction(rhs)

    def _inequality(self, q: Inequality) -> Inequality:
        if q.direction not in ("<=", ">="):
            raise MalformedSystem(f"Bilinmeyen yön: {q.direction}")
        row, rhs = self._row(q.row, q.rhs)
        return Inequality(row, rhs, q.strict, q.direction)

    def eq(self, row: Sequence[Number], rhs: Number) -> "LinearSystem":
        self.equalities.append(self._row(row, rhs))
        return self

    def le(self, row: Sequence[Number], rhs: Number, strict: bool = False) -> "LinearSystem":
        self.inequalities.append(self._inequality(Inequality(tuple(row), Fraction(rhs), strict, "<=")))
        return self

    def ge(self, row: Sequence[Number], rhs: Number, strict: bool = False) -> "LinearSystem":
        self.inequalities.append(self._inequality(Inequality(tuple(row), Fraction(rhs), strict, ">=")))
        return self

    def between(self, row: Sequence[Number], low: Number, high: Number, strict: bool = True) -> "LinearSystem":
        """low < row·x < high (strict=False ise ≤)"""
        return self.ge(row, low, strict).le(row, high, strict)


def check_witness(system: LinearSystem, x: Sequence[Fraction]) -> bool:
    if len(x) != system.variables:
        return False
    for row, rhs in system.equalities:
        if sum((a * v for a, v in zip(row, x)), Fraction(0)) != rhs:
            return False
    return all(q.holds(x) for q in system.inequalities)


# (katsayılar, sağ taraf, katı mı): a·y < b ya da a·y ≤ b
Constraint = Tuple[Tuple[Fraction, ...], Fraction, bool]


class FourierMotzkin:
    """Katılık bayraklarını taşıyan kesin Fourier-Motzkin eliminasyonu"""

    def __init__(self, system: LinearSystem):
        self.system = system
        self.levels: Dict[int, List[Constraint]] = {}
        self.free: List[int] = []
        self._affine: List[Tuple[Fraction, Tuple[Fraction, ...]]] = []

    def _reduce_equalities(self) -> bool:
        """Eşitlikleri indirgenmiş satır basamak formuna getir; tutarsızsa False"""
        n = self.system.variables
        rows = [list(row) + [rhs] for row, rhs in self.system.equalities]
        pivots: List[int] = []
        r = 0
        for c in range(n):
            p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            lead = rows[r][c]
            rows[r] = [v / lead for v in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        if any(all(v == 0 for v in row[:n]) and row[n] != 0 for row in rows[r:]):
            return False

        self.free = [c for c in range(n) if c not in pivots]
        index = {c: i for i, c in enumerate(self.free)}
        zero = tuple(Fraction(0) for _ in self.free)
        affine: List[Tuple[Fraction, Tuple[Fraction, ...]]] = [(Fraction(0), zero)] * n
        for c in self.free:
            coeffs = list(zero)
            coeffs[index[c]] = Fraction(1)
            affine[c] = (Fraction(0), tuple(coeffs))
        for i, c in enumerate(pivots):
            affine[c] = (rows[i][n], tuple(-rows[i][f] for f in self.free))
        self._affine = affine
        return True

    def _substitute(self, q: Inequality) -> Constraint:
        const = sum((a * self._affine[j][0] for j, a in enumerate(q.row)), Fraction(0))
        coeffs = [Fraction(0)] * len(self.free)
        for j, a in enumerate(q.row):
            if a:
                for t, c in enumerate(self._affine[j][1]):
                    coeffs[t] += a * c
        bound = q.rhs - const
        if q.direction == ">=":
            return tuple(-c for c in coeffs), -bound, q.strict
        return tuple(coeffs), bound, q.strict

    @staticmethod
    def _prune(constraints: Iterable[Constraint]) -> Optional[List[Constraint]]:
        """Sabit kısıtları kontrol et, normalize et, en sıkı olanı tut"""
        tightest: Dict[Tuple[Fraction, ...], Tuple[Fraction, bool]] = {}
        for coeffs, bound, strict in constraints:
            lead = next((abs(c) for c in coeffs if c != 0), None)
            if lead is None:
                if bound < 0 or (strict and bound == 0):
                    return None
                continue
            coeffs = tuple(c / lead for c in coeffs)
            bound = bound / lead
            old = tightest.get(coeffs)
            if old is None or bound < old[0] or (bound == old[0] and strict and not old[1]):
                tightest[coeffs] = (bound, strict)
        return [(coeffs, bound, strict) for coeffs, (bound, strict) in tightest.items()]

    def run(self) -> Optional[Witness]:
        if not self._reduce_equalities():
            return None
        r = len(self.free)
        current = self._prune(self._substitute(q) for q in self.system.inequalities)
        if current is None:
            return None

        for t in range(r - 1, -1, -1):
            self.levels[t] = current
            upper = [c for c in current if c[0][t] > 0]
            lower = [c for c in current if c[0][t] < 0]
            nxt = [c for c in current if c[0][t] == 0]
            for ua, ub, us in upper:
                for la, lb, ls in lower:
                    cu, cl = ua[t], -la[t]
                    coeffs = tuple(cl * a + cu * b for a, b in zip(ua, la))
                    nxt.append((coeffs, cl * ub + cu * lb, us or ls))
            current = self._prune(nxt)
            if current is None:
                return None

        y: List[Fraction] = []
        for t in range(r):
            low: Optional[Fraction] = None
            high: Optional[Fraction] = None
            for coeffs, bound, _ in self.levels[t]:
                a = coeffs[t]
                if a == 0:
                    continue
                value = (bound - sum((coeffs[s] * y[s] for s in range(t)), Fraction(0))) / a
                if a > 0:
                    high = value if high is None else min(high, value)
                else:
                    low = value if low is None else max(low, value)
            if low is not None and high is not None:
                y.append(low if low == high else (low + high) / 2)
            elif low is not None:
                y.append(low + 1)
            elif high is not None:
                y.append(high - 1)
            else:
                y.append(Fraction(0))

        return tuple(const + sum((c * v for c, v in zip(coeffs, y)), Fraction(0)) for const, coeffs in self._affine)


def find_witness(system: LinearSystem) -> Optional[Witness]:
    """Tüm kısıtları sağlayan rasyonel nokta; yoksa None"""
    witness = FourierMotzkin(system).run()
    if witness is not None and not check_witness(system, witness):
        logger.error(f"❌ Tanık doğrulanamadı: {witness}")
        raise WitnessCheckFailed(witness)
    return witness


def feasible(system: LinearSystem, return_witness: bool = False):
    """Sistem rasyonel olarak çözülebilir mi (isteğe bağlı tanıkla)"""
    witness = find_witness(system)
    if return_witness:
        return witness is not None, witness
    return witness is not None
