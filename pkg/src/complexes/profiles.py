#!/usr/bin/env python3
"""
Kompleks Profilleri - K_P profilleri, yerine koyma (splice) ve kilitlenebilirlik
"""

from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from loguru import logger

from src.exceptions import EmptySet, SelfSubstitution, ToricError

LatticePoint = Tuple[int, ...]


class ComplexProfile:
    """Derece → (nokta → katlılık) eşlemesi"""

    def __init__(self, point: Sequence[int], entries: Optional[Mapping[int, Mapping[LatticePoint, int]]] = None):
        self.point = tuple(point)
        clean: Dict[int, Dict[LatticePoint, int]] = {}
        for degree, row in (entries or {}).items():
            kept = {tuple(q): int(m) for q, m in row.items() if m}
            if kept:
                clean[int(degree)] = kept
        clean[0] = {self.point: 1}
        self.entries = clean

    @property
    def length(self) -> int:
        return max(self.entries)

    def degrees(self) -> List[int]:
        return sorted(self.entries)

    def multiplicity(self, q: Sequence[int], degree: int) -> int:
        return self.entries.get(degree, {}).get(tuple(q), 0)

    def positive_support(self) -> Set[LatticePoint]:
        return {q for degree, row in self.entries.items() if degree >= 1 for q in row}

    def is_short(self) -> bool:
        """Yalnızca {0} ya da {0,1} derecelerinde destekli mi"""
        return self.length <= 1

    def __eq__(self, other) -> bool:
        return isinstance(other, ComplexProfile) and self.point == other.point and self.entries == other.entries

    def __repr__(self) -> str:
        body = "; ".join(
            f"{d}: " + ", ".join(f"{list(q)}×{m}" for q, m in sorted(self.entries[d].items()))
            for d in sorted(self.entries, reverse=True)
        )
        return f"ComplexProfile({list(self.point)} | {body})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": list(self.point),
            "degrees": {
                str(d): [{"point": list(q), "mult": m} for q, m in sorted(self.entries[d].items())]
                for d in sorted(self.entries)
            },
            "length": self.length,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "ComplexProfile":
        entries = {
            int(d): {tuple(item["point"]): int(item["mult"]) for item in items}
            for d, items in data["degrees"].items()
        }
        return cls(data["point"], entries)


def build_profile(ctx, point: Sequence[int]) -> ComplexProfile:
    """K_P: derece 0'da P, her geçerli boş olmayan yol için başlangıç noktası"""
    point = ctx.require_point(point)
    cached = ctx.profile_cache.get(point)
    if cached is not None:
        return cached
    entries: Dict[int, Dict[LatticePoint, int]] = defaultdict(lambda: defaultdict(int))
    for path in ctx.valid_paths_into(point):
        if path.subset:
            entries[path.length][path.start] += 1
    profile = ComplexProfile(point, entries)
    with ctx.lock:
        ctx.profile_cache[point] = profile
    return profile


def all_profiles(ctx) -> Dict[LatticePoint, ComplexProfile]:
    """Tüm kafes noktalarının profilleri"""
    missing = [p for p in ctx.points if p not in ctx.profile_cache]
    if missing and ctx.threads > 1:
        with ThreadPoolExecutor(max_workers=ctx.threads) as pool:
            list(pool.map(lambda p: build_profile(ctx, p), missing))
    for p in missing:
        build_profile(ctx, p)
    return {p: ctx.profile_cache[p] for p in ctx.points}


def substitute(K: ComplexProfile, j: Sequence[int], Kj: ComplexProfile) -> ComplexProfile:
    """K içindeki tüm A_j geçişlerini K_j'nin pozitif dereceli kısmıyla değiştir"""
    j = tuple(j)
    if j == K.point:
        raise SelfSubstitution(j)
    if Kj.point != j:
        raise ToricError(f"K_j başka bir noktaya ait: {list(Kj.point)} != {list(j)}", invariant="substitution")

    entries: Dict[int, Dict[LatticePoint, int]] = defaultdict(lambda: defaultdict(int))
    for degree, row in K.entries.items():
        for q, m in row.items():
            if degree >= 1 and q == j:
                continue
            entries[degree][q] += m
    for degree, row in K.entries.items():
        c = row.get(j, 0) if degree >= 1 else 0
        if not c:
            continue
        for d, inner in Kj.entries.items():
            if d < 1:
                continue
            for q, m in inner.items():
                entries[degree + d - 1][q] += c * m
    return ComplexProfile(K.point, entries)


@dataclass
class LockReport:
    """Kilitlenebilirlik / inanmazlık kararı"""

    points: Tuple[LatticePoint, ...]
    lockable: bool
    incredulous: bool
    final_profiles: Optional[Dict[LatticePoint, ComplexProfile]] = None
    cycle_witness: Optional[List[LatticePoint]] = None
    substituted: List[LatticePoint] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "points": [list(p) for p in self.points],
            "lockable": self.lockable,
            "incredulous": self.incredulous,
            "final_profiles": None
            if self.final_profiles is None
            else [self.final_profiles[p].to_dict() for p in sorted(self.final_profiles)],
            "cycle_witness": None if self.cycle_witness is None else [list(p) for p in self.cycle_witness],
            "substituted": [list(p) for p in self.substituted],
        }


def dependency_graph(profiles: Mapping[LatticePoint, ComplexProfile]) -> Dict[LatticePoint, List[LatticePoint]]:
    """P → Q kenarı: Q, K_P içinde pozitif derecede görünür"""
    return {p: sorted(prof.positive_support()) for p, prof in profiles.items()}


def _reachable(graph, I: Set[LatticePoint]) -> List[LatticePoint]:
    """I'dan, I noktalarından geçmeden ulaşılan I^c noktaları"""
    seen: Set[LatticePoint] = set()
    stack = [q for p in sorted(I) for q in graph.get(p, []) if q not in I]
    while stack:
        q = stack.pop()
        if q in seen:
            continue
        seen.add(q)
        stack.extend(r for r in graph.get(q, []) if r not in I and r not in seen)
    return sorted(seen)


def _find_cycle(graph, nodes: List[LatticePoint]) -> Optional[List[LatticePoint]]:
    """Alt çizgedeki bir döngü (öz-döngüler dahil); yoksa None"""
    inside = set(nodes)
    state: Dict[LatticePoint, int] = {}

    def visit(p: LatticePoint, trail: List[LatticePoint]) -> Optional[List[LatticePoint]]:
        state[p] = 1
        trail.append(p)
        for q in graph.get(p, []):
            if q not in inside:
                continue
            if state.get(q) == 1:
                return trail[trail.index(q):]
            if q not in state:
                found = visit(q, trail)
                if found:
                    return found
        trail.pop()
        state[p] = 2
        return None

    for p in nodes:
        if p not in state:
            cycle = visit(p, [])
            if cycle:
                return cycle
    return None


def _sinks_first(graph, nodes: List[LatticePoint]) -> List[LatticePoint]:
    """Döngüsüz alt çizgede ters topolojik sıra"""
    inside = set(nodes)
    order: List[LatticePoint] = []
    done: Set[LatticePoint] = set()

    def visit(p: LatticePoint):
        done.add(p)
        for q in graph.get(p, []):
            if q in inside and q not in done:
                visit(q)
        order.append(p)

    for p in nodes:
        if p not in done:
            visit(p)
    return order


def _resolve(profile: ComplexProfile, resolved: Mapping[LatticePoint, ComplexProfile]) -> ComplexProfile:
    pending = sorted(profile.positive_support() & set(resolved))
    while pending:
        profile = substitute(profile, pending[0], resolved[pending[0]])
        pending = sorted(profile.positive_support() & set(resolved))
    return profile


def check_lockable(ctx, I: Iterable[Sequence[int]]) -> LockReport:
    """I kümesinin kilitlenebilirliği; kilitlenebilirse son profiller, değilse döngü tanığı"""
    I = {ctx.require_point(p) for p in I}
    if not I:
        raise EmptySet()
    profiles = all_profiles(ctx)
    graph = dependency_graph(profiles)
    outside = _reachable(graph, I)
    ordered = tuple(sorted(I))

    cycle = _find_cycle(graph, outside)
    if cycle is not None:
        return LockReport(ordered, lockable=False, incredulous=False, cycle_witness=cycle, substituted=outside)

    resolved: Dict[LatticePoint, ComplexProfile] = {}
    for q in _sinks_first(graph, outside):
        resolved[q] = _resolve(profiles[q], resolved)
    final = {p: _resolve(profiles[p], resolved) for p in ordered}
    incredulous = all(prof.length == ctx.n for prof in final.values())
    return LockReport(ordered, lockable=True, incredulous=incredulous, final_profiles=final, substituted=outside)


def check_incredulous(ctx, I: Iterable[Sequence[int]]) -> LockReport:
    """Kilitlenebilir ve tüm son profillerin uzunluğu n mi"""
    report = check_lockable(ctx, I)
    if report.incredulous:
        logger.debug(f"✅ İnanmaz küme: {[list(p) for p in report.points]}")
    return report


def splice_sequentially(
    ctx, I: Iterable[Sequence[int]], order: Sequence[Sequence[int]], max_steps: int = 10000
) -> Optional[Dict[LatticePoint, ComplexProfile]]:
    """Ham profillerle, order sırasındaki ilk I^c noktasını tekrar tekrar yerine koy"""
    I = {ctx.require_point(p) for p in I}
    profiles = all_profiles(ctx)
    rank = {tuple(q): i for i, q in enumerate(order)}
    final = {}
    for p in sorted(I):
        profile = profiles[p]
        for _ in range(max_steps):
            pending = [q for q in profile.positive_support() if q not in I]
            if not pending:
                break
            q = min(pending, key=lambda x: (rank.get(x, len(rank)), x))
            profile = substitute(profile, q, profiles[q])
        else:
            return None
        final[p] = profile
    return final


def gorenstein_checks(ctx, profiles: Optional[Mapping[LatticePoint, ComplexProfile]] = None) -> List[str]:
    """Gorenstein konilerde öz-görünme, derece simetrisi ve kısa kompleks kontrolleri"""
    profiles = profiles or all_profiles(ctx)
    problems = []
    zero = ctx.zero
    if zero not in profiles or profiles[zero].multiplicity(zero, ctx.n) < 1:
        problems.append(f"0 noktası K_0 içinde {ctx.n}. derecede görünmüyor")

    for p, prof in profiles.items():
        if ctx.n >= 2 and prof.is_short():
            problems.append(f"{list(p)}: kısa kompleks (uzunluk {prof.length})")
    return problems + degree_symmetry(profiles)


def degree_symmetry(profiles: Mapping[LatticePoint, ComplexProfile]) -> List[str]:
    """mult(Q, l, K_P) = mult(-P, l, K_-Q) ihlalleri"""
    problems = []
    for p, prof in profiles.items():
        for degree, row in prof.entries.items():
            if degree < 1:
                continue
            for q, m in row.items():
                minus_q = tuple(-x for x in q)
                minus_p = tuple(-x for x in p)
                mirror = profiles.get(minus_q)
                other = mirror.multiplicity(minus_p, degree) if mirror else 0
                if other != m:
                    problems.append(
                        f"simetri: K_{list(p)}[{degree}][{list(q)}]={m}, K_{list(minus_q)}[{degree}][{list(minus_p)}]={other}"
                    )
    return problems


def splice_order_independent(ctx, I: Iterable[Sequence[int]], orders: Iterable[Sequence[Sequence[int]]]) -> bool:
    """Her sıra, kilit raporundaki son profillerle aynı sonucu veriyor mu"""
    I = [tuple(p) for p in I]
    report = check_lockable(ctx, I)
    if not report.lockable:
        return False
    for order in orders:
        spliced = splice_sequentially(ctx, I, order)
        if spliced != report.final_profiles:
            logger.warning(f"⚠️ Sıra bağımlı sonuç: {[list(q) for q in order]}")
            return False
    return True
