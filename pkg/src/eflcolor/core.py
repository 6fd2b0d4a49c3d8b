"""Decompositions of the complete graph K_n into complete subgraphs.

A decomposition is stored as its order ``n`` and a sequence of parts, each
part being the vertex set of a complete subgraph. Vertices are ``0..n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

Arc = tuple[int, int]
Part = tuple[int, ...]


@dataclass
class Report:
    """Outcome of a validator: ``ok`` iff no violations were recorded."""

    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def add(self, message: str) -> None:
        self.violations.append(message)

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(f"violation: {v}" for v in self.violations)


class DecompositionError(ValueError):
    """Raised when a generated family fails the edge-partition check."""

    def __init__(self, message: str, report: Report):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Decomposition:
    order: int
    parts: tuple[Part, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(tuple(int(v) for v in p) for p in self.parts))

    def __len__(self) -> int:
        return len(self.parts)


def validate_decomposition(d: Decomposition) -> Report:
    """Check that the parts of ``d`` partition the edges of K_n.

    Malformed parts (fewer than two vertices, not strictly increasing, out
    of range) are reported first; then every edge that is missing or covered
    more than once, in lexicographic order.
    """
    report = Report()
    n = d.order
    if n < 1:
        report.add(f"order {n} < 1")
        return report
    cover: dict[tuple[int, int], list[int]] = {}
    for i, part in enumerate(d.parts):
        if len(part) < 2:
            report.add(f"part {i} has {len(part)} vertices (need at least 2)")
        if any(a >= b for a, b in zip(part, part[1:])):
            report.add(f"part {i} is not strictly increasing: {list(part)}")
        bad = [v for v in part if not 0 <= v < n]
        if bad:
            report.add(f"part {i} has out-of-range vertices {bad}")
            continue
        for u, v in combinations(sorted(set(part)), 2):
            cover.setdefault((u, v), []).append(i)
    for edge in combinations(range(n), 2):
        owners = cover.get(edge, [])
        if not owners:
            report.add(f"edge {{{edge[0]},{edge[1]}}} uncovered")
        elif len(owners) > 1:
            report.add(f"edge {{{edge[0]},{edge[1]}}} covered by parts {owners}")
    return report


def single_part(n: int) -> Decomposition:
    if n < 2:
        raise ValueError(f"single_part needs n >= 2, got {n}")
    return Decomposition(n, (tuple(range(n)),))


def edge_decomposition(n: int) -> Decomposition:
    """All ``n choose 2`` edges as separate parts, lexicographically."""
    if n < 2:
        raise ValueError(f"edge_decomposition needs n >= 2, got {n}")
    return Decomposition(n, tuple(combinations(range(n), 2)))


def near_pencil(n: int) -> Decomposition:
    """One K_{n-1} on ``0..n-2`` plus the edges ``{i, n-1}``."""
    if n < 3:
        raise ValueError(f"near_pencil needs n >= 3, got {n}")
    big = tuple(range(n - 1))
    return Decomposition(n, (big,) + tuple((i, n - 1) for i in range(n - 1)))


def _difference_report(n: int, base_blocks) -> Report:
    # Count how often each difference class {d, -d} is hit by the base
    # blocks, weighting by orbit length (short orbits cover a class n/3 times).
    report = Report()
    counts = [0] * (n // 2 + 1)
    for block in base_blocks:
        translates = {tuple(sorted((b + c) % n for b in block)) for c in range(n)}
        for u, v in combinations(sorted(block), 2):
            d = (v - u) % n
            counts[min(d, n - d)] += len(translates)
    for d in range(1, n // 2 + 1):
        if counts[d] == 0:
            report.add(f"difference {d} missing")
        elif counts[d] > n:
            report.add(f"difference {d} covered more than once")
    return report


def cyclic_sts(n: int, base_blocks) -> Decomposition:
    """Develop triples mod ``n`` into a cyclic Steiner triple system.

    Parts are emitted base-block-major, shift-minor: part ``i*n + c`` (for
    full orbits) is ``base_blocks[i] + c``. Repeated translates of a short
    orbit are kept once.
    """
    if n % 6 not in (1, 3):
        raise ValueError(f"a Steiner triple system needs n = 1 or 3 mod 6, got n={n}")
    blocks = []
    for block in base_blocks:
        block = tuple(int(b) for b in block)
        if len(block) != 3 or len(set(block)) != 3:
            raise ValueError(f"base block {list(block)} is not a 3-element set")
        if any(not 0 <= b < n for b in block):
            raise ValueError(f"base block {list(block)} has entries outside 0..{n - 1}")
        blocks.append(block)

    seen = set()
    parts = []
    for block in blocks:
        for c in range(n):
            t = tuple(sorted((b + c) % n for b in block))
            if t not in seen:
                seen.add(t)
                parts.append(t)
    d = Decomposition(n, tuple(parts))
    report = validate_decomposition(d)
    if not report.ok:
        for msg in _difference_report(n, blocks).violations:
            report.violations.insert(0, msg)
        raise DecompositionError(
            f"base blocks {[list(b) for b in blocks]} do not develop into an STS({n})", report
        )
    return d


def intersection_graph(d: Decomposition) -> nx.Graph:
    """Graph on part indices; ``i ~ j`` iff the parts share a vertex."""
    g = nx.Graph()
    g.add_nodes_from(range(len(d.parts)))
    sets = [set(p) for p in d.parts]
    for i, j in combinations(range(len(sets)), 2):
        if sets[i] & sets[j]:
            g.add_edge(i, j)
    return g
