"""Linear factors and linear factorizations of the complete digraph with loops.

A linear factor of K_n* is a set of ``n`` arcs in which every vertex has
in-degree and out-degree one, i.e. a permutation of ``0..n-1`` drawn as
vertex-disjoint directed cycles (loops are 1-gons). A linear factorization
is ``n`` arc-disjoint linear factors covering all ``n**2`` arcs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import Arc, Report


@dataclass(frozen=True)
class LinearFactor:
    order: int
    arcs: frozenset[Arc]

    def __post_init__(self):
        object.__setattr__(
            self, "arcs", frozenset((int(u), int(v)) for u, v in self.arcs)
        )

    @classmethod
    def from_successors(cls, succ) -> LinearFactor:
        """Factor with arcs ``(x, succ[x])``."""
        return cls(len(succ), frozenset(enumerate(succ)))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> LinearFactor:
        """Factor from vertex cycles, e.g. ``[(0, 1, 3), (6,)]``."""
        arcs = set()
        for cyc in cycles:
            for i, u in enumerate(cyc):
                arcs.add((u, cyc[(i + 1) % len(cyc)]))
        return cls(n, frozenset(arcs))

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def successors(self) -> list[int]:
        """Head of the arc leaving each vertex. Requires a valid factor."""
        succ = [-1] * self.order
        for u, v in self.arcs:
            succ[u] = v
        return succ


@dataclass(frozen=True)
class LinearFactorization:
    order: int
    factors: tuple[LinearFactor, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __len__(self) -> int:
        return len(self.factors)

    def __getitem__(self, i) -> LinearFactor:
        return self.factors[i]

    def __iter__(self):
        return iter(self.factors)


def loop_factor(n: int) -> LinearFactor:
    return LinearFactor(n, frozenset((x, x) for x in range(n)))


def validate_linear_factor(f: LinearFactor) -> Report:
    report = Report()
    n = f.order
    bad = sorted(a for a in f.arcs if not (0 <= a[0] < n and 0 <= a[1] < n))
    if bad:
        report.add(f"arcs outside 0..{n - 1}: {bad}")
    outdeg = Counter(u for u, _ in f.arcs)
    indeg = Counter(v for _, v in f.arcs)
    for x in range(n):
        if outdeg[x] != 1:
            report.add(f"vertex {x} has out-degree {outdeg[x]}")
        if indeg[x] != 1:
            report.add(f"vertex {x} has in-degree {indeg[x]}")
    return report


def validate_factorization(fz: LinearFactorization) -> Report:
    report = Report()
    n = fz.order
    if len(fz.factors) != n:
        report.add(f"{len(fz.factors)} factors, expected {n}")
    owner: dict[Arc, int] = {}
    for i, f in enumerate(fz.factors):
        if f.order != n:
            report.add(f"factor {i} has order {f.order}, expected {n}")
        for msg in validate_linear_factor(f).violations:
            report.add(f"factor {i}: {msg}")
        for arc in sorted(f.arcs):
            if arc in owner:
                report.add(f"duplicate arc {arc} in factors {owner[arc]} and {i}")
            else:
                owner[arc] = i
    missing = [(u, v) for u in range(n) for v in range(n) if (u, v) not in owner]
    if missing:
        report.add(f"{len(missing)} arcs uncovered, first {missing[0]}")
    return report


def cycles(f: LinearFactor) -> list[tuple[int, ...]]:
    """The d-gons of ``f``, each starting at its least vertex, sorted."""
    report = validate_linear_factor(f)
    if not report.ok:
        raise ValueError(f"not a linear factor: {report.violations[0]}")
    succ = f.successors()
    seen = [False] * f.order
    out = []
    for x in range(f.order):
        if seen[x]:
            continue
        cyc = []
        y = x
        while not seen[y]:
            seen[y] = True
            cyc.append(y)
            y = succ[y]
        out.append(tuple(cyc))
    return out


def cycle_structure(f: LinearFactor) -> tuple[int, ...]:
    """Sorted multiset of d-gon lengths; 1 stands for a loop."""
    return tuple(sorted(len(c) for c in cycles(f)))


def translate_factor(f: LinearFactor, c: int) -> LinearFactor:
    n = f.order
    return LinearFactor(n, frozenset(((u + c) % n, (v + c) % n) for u, v in f.arcs))


def difference_report(f: LinearFactor) -> Report:
    """Check that ``head - tail mod n`` takes every value exactly once."""
    report = Report()
    n = f.order
    counts = Counter((v - u) % n for u, v in f.arcs)
    for d in range(n):
        if counts[d] == 0:
            report.add(f"difference {d} missing")
        elif counts[d] > 1:
            report.add(f"difference {d} appears {counts[d]} times")
    return report


def cyclic_factorization_from_starter(f: LinearFactor) -> LinearFactorization:
    """The ``n`` translates of a difference-complete linear factor."""
    report = validate_linear_factor(f)
    if not report.ok:
        raise ValueError(f"starter is not a linear factor: {report.violations[0]}")
    report = difference_report(f)
    if not report.ok:
        raise ValueError(f"starter is not difference-complete: {'; '.join(report.violations)}")
    return LinearFactorization(f.order, tuple(translate_factor(f, c) for c in range(f.order)))


def _check_required(n: int, required_gons) -> list[tuple[int, ...]]:
    sets = []
    seen: set[int] = set()
    for s in required_gons:
        s = tuple(sorted(set(int(v) for v in s)))
        if not s:
            raise ValueError("required vertex sets must be nonempty")
        if any(not 0 <= v < n for v in s):
            raise ValueError(f"required set {list(s)} has vertices outside 0..{n - 1}")
        if seen.intersection(s):
            raise ValueError(f"required set {list(s)} overlaps an earlier one")
        seen.update(s)
        sets.append(s)
    return sets


def find_starter_factor(n: int, required_gons=()) -> LinearFactor | None:
    """Lexicographically least difference-complete linear factor of order ``n``.

    Each vertex set in ``required_gons`` must carry exactly one d-gon of the
    result (a loop for singletons). Returns ``None`` when the exhaustive
    search finds no such factor, e.g. for every even ``n``.

    The search assigns successors to tails ``0, 1, ...`` in increasing
    order, so the first solution found is least in (tail, head) arc order.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    sets = _check_required(n, required_gons)
    group = [-1] * n
    for gi, s in enumerate(sets):
        for v in s:
            group[v] = gi
    size = [len(sets[g]) if g >= 0 else 0 for g in group]

    succ = [-1] * n
    pred = [-1] * n
    used_diff = [False] * n

    def closes_early(x: int, y: int) -> bool:
        # Walking forward from y, do we return to x before covering the set?
        length = 1
        z = y
        while z != x:
            z = succ[z]
            if z < 0:
                return False
            length += 1
        return length != size[x]

    def extend(x: int) -> bool:
        if x == n:
            return True
        g = group[x]
        for y in range(n):
            if pred[y] >= 0 or group[y] != g:
                continue
            d = (y - x) % n
            if used_diff[d]:
                continue
            if g >= 0:
                if y == x and size[x] != 1:
                    continue
                succ[x] = y
                if y != x and closes_early(x, y):
                    succ[x] = -1
                    continue
            succ[x] = y
            pred[y] = x
            used_diff[d] = True
            if extend(x + 1):
                return True
            succ[x] = -1
            pred[y] = -1
            used_diff[d] = False
        return False

    if not extend(0):
        return None
    return LinearFactor.from_successors(succ)
