"""Assignment search, coloring construction, and the exact chromatic-index oracle.

Given a decomposition ``d`` of K_n and a linear factorization ``F`` of K_n*,
an assignment maps each part ``p`` to a factor whose restriction to ``p*``
(the complete digraph on ``p`` with loops) is a linear factor of ``p*``,
with the restrictions pairwise arc-disjoint. Coloring each part by the
index of its factor then gives a P-coloring with at most ``n`` colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Decomposition, Part, Report, intersection_graph, validate_decomposition
from .factorization import LinearFactor, LinearFactorization, validate_factorization

DEFAULT_CAP = 40


class CapExceeded(ValueError):
    """The exact oracle refuses decompositions with too many parts."""


@dataclass(frozen=True)
class Assignment:
    order: int
    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(j) for j in self.factors))


@dataclass(frozen=True)
class PColoring:
    order: int
    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))


def restrict(p: Part, f: LinearFactor) -> frozenset:
    """Arcs of ``f`` lying in ``p*``: loops at ``p`` and arcs inside ``p``."""
    vs = set(p)
    return frozenset(a for a in f.arcs if a[0] in vs and a[1] in vs)


def is_linear_factor_of_part(arcs, p: Part) -> bool:
    vs = set(p)
    tails = [u for u, _ in arcs]
    heads = [v for _, v in arcs]
    return (
        len(tails) == len(vs)
        and set(tails) == vs
        and set(heads) == vs
    )


def check_assignment(d: Decomposition, fz: LinearFactorization, h: Assignment) -> Report:
    """Check both conditions on ``h`` directly from the definitions."""
    report = Report()
    if len(h.factors) != len(d.parts):
        report.add(f"assignment covers {len(h.factors)} parts, decomposition has {len(d.parts)}")
        return report
    restr = []
    for i, (p, j) in enumerate(zip(d.parts, h.factors)):
        if not 0 <= j < len(fz.factors):
            report.add(f"part {i} mapped to nonexistent factor {j}")
            restr.append(frozenset())
            continue
        r = restrict(p, fz.factors[j])
        if not is_linear_factor_of_part(r, p):
            report.add(f"restriction of factor {j} to part {i} is not a linear factor of the part")
        restr.append(r)
    for i, k in combinations(range(len(restr)), 2):
        common = restr[i] & restr[k]
        if common:
            report.add(f"restrictions of parts {i} and {k} share arcs {sorted(common)}")
    return report


def _loop_mask(arcs) -> int:
    mask = 0
    for u, v in arcs:
        if u == v:
            mask |= 1 << u
    return mask


def find_assignment(d: Decomposition, fz: LinearFactorization) -> Assignment | None:
    """Least assignment in part-index-major order, or ``None`` if none exists.

    Two parts can only have overlapping restrictions when they use the same
    factor and share a vertex that is a loop of it; so the only cross-part
    constraint is that each loop arc is consumed by at most one part.

    Feasibility of a partial assignment is decided by a fail-first search
    (fewest compatible factors next). The least witness is then fixed one
    part at a time, lowest factor index first.
    """
    if d.order != fz.order:
        raise ValueError(f"order mismatch: decomposition n={d.order}, factorization n={fz.order}")
    report = validate_decomposition(d)
    if not report.ok:
        raise ValueError(f"invalid decomposition: {report.violations[0]}")
    report = validate_factorization(fz)
    if not report.ok:
        raise ValueError(f"invalid factorization: {report.violations[0]}")

    m = len(d.parts)
    # candidates[i] = [(factor index, loop bitmask of its restriction), ...]
    candidates = []
    for p in d.parts:
        cands = []
        for j, f in enumerate(fz.factors):
            r = restrict(p, f)
            if is_linear_factor_of_part(r, p):
                cands.append((j, _loop_mask(r)))
        candidates.append(cands)

    def feasible(free: list[int], used: int) -> bool:
        if not free:
            return True
        best = None
        best_opts = None
        for i in free:
            opts = [(j, mask) for j, mask in candidates[i] if not mask & used]
            if not opts:
                return False
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = i, opts
                if len(opts) == 1:
                    break
        rest = [i for i in free if i != best]
        return any(feasible(rest, used | mask) for _, mask in best_opts)

    chosen = []
    used = 0
    for i in range(m):
        rest = list(range(i + 1, m))
        for j, mask in candidates[i]:
            if mask & used:
                continue
            if feasible(rest, used | mask):
                chosen.append(j)
                used |= mask
                break
        else:
            return None

    h = Assignment(d.order, tuple(chosen))
    final = check_assignment(d, fz, h)
    if not final.ok:
        raise RuntimeError(f"assignment search produced an invalid witness: {final}")
    return h


def coloring_from_assignment(
    d: Decomposition,
    fz: LinearFactorization,
    h: Assignment,
    labeling=None,
    normalize: bool = True,
) -> PColoring:
    """Color part ``p`` by ``labeling[h(p)]``.

    With ``normalize`` the colors in use are renumbered ``0..k-1`` in
    increasing order; without it ``k = n`` and the raw labels are kept,
    which may leave colors unused.
    """
    report = check_assignment(d, fz, h)
    if not report.ok:
        raise ValueError(f"invalid assignment: {report.violations[0]}")
    n = d.order
    labeling = list(range(n)) if labeling is None else [int(v) for v in labeling]
    if sorted(labeling) != list(range(n)):
        raise ValueError(f"labeling {labeling} is not a permutation of 0..{n - 1}")
    raw = [labeling[j] for j in h.factors]
    if not normalize:
        return PColoring(n, n, tuple(raw))
    relabel = {c: i for i, c in enumerate(sorted(set(raw)))}
    return PColoring(n, len(relabel), tuple(relabel[c] for c in raw))


def verify_p_coloring(d: Decomposition, col: PColoring) -> Report:
    report = Report()
    if col.order != d.order:
        report.add(f"coloring order {col.order} != decomposition order {d.order}")
    if len(col.colors) != len(d.parts):
        report.add(f"coloring has {len(col.colors)} parts, decomposition has {len(d.parts)}")
        return report
    for i, c in enumerate(col.colors):
        if not 0 <= c < col.k:
            report.add(f"part {i} has color {c} outside 0..{col.k - 1}")
    sets = [set(p) for p in d.parts]
    for i, j in combinations(range(len(sets)), 2):
        if col.colors[i] == col.colors[j]:
            shared = sets[i] & sets[j]
            if shared:
                report.add(
                    f"parts {i} {list(d.parts[i])} and {j} {list(d.parts[j])} share "
                    f"vertex {min(shared)} and both have color {col.colors[i]}"
                )
    used = set(col.colors)
    for c in range(col.k):
        if c not in used:
            report.add(f"color {c} unused")
    return report


# -- exact chromatic index -------------------------------------------------


def _greedy_clique(adj: list[int]) -> int:
    best = 0
    m = len(adj)
    for start in range(m):
        clique = 1 << start
        cand = adj[start]
        size = 1
        while cand:
            # pick the candidate with most neighbours among remaining candidates
            v = max(
                (u for u in range(m) if cand >> u & 1),
                key=lambda u: bin(adj[u] & cand).count("1"),
            )
            clique |= 1 << v
            cand &= adj[v]
            size += 1
        best = max(best, size)
    return best


def _chromatic_number(adj: list[int]) -> int:
    """Exact chromatic number by DSATUR branch and bound."""
    m = len(adj)
    if m == 0:
        return 0
    lower = _greedy_clique(adj)
    best = [m + 1]
    color = [-1] * m
    # neighbour color sets as bitmasks over colors
    sat = [0] * m

    def pick() -> int:
        v_best, key_best = -1, None
        for v in range(m):
            if color[v] >= 0:
                continue
            uncolored_deg = sum(1 for u in range(m) if adj[v] >> u & 1 and color[u] < 0)
            key = (bin(sat[v]).count("1"), uncolored_deg, -v)
            if key_best is None or key > key_best:
                v_best, key_best = v, key
        return v_best

    def search(colored: int, used: int) -> bool:
        if used >= best[0]:
            return False
        if colored == m:
            best[0] = used
            return used <= lower
        v = pick()
        limit = min(used + 1, best[0] - 1)
        for c in range(limit):
            if sat[v] >> c & 1:
                continue
            color[v] = c
            touched = []
            for u in range(m):
                if adj[v] >> u & 1 and not sat[u] >> c & 1:
                    sat[u] |= 1 << c
                    touched.append(u)
            done = search(colored + 1, max(used, c + 1))
            for u in touched:
                sat[u] &= ~(1 << c)
            color[v] = -1
            if done:
                return True
        return False

    search(0, 0)
    return best[0]


def chromatic_index_exact(d: Decomposition, cap: int = DEFAULT_CAP) -> int:
    """Least ``k`` admitting a k-P-coloring of ``d``.

    This is the chromatic number of the part-intersection graph. Raises
    ``CapExceeded`` when ``d`` has more than ``cap`` parts.
    """
    if len(d.parts) > cap:
        raise CapExceeded(
            f"decomposition has {len(d.parts)} parts, exceeding the oracle cap of {cap}; "
            "no approximation is attempted"
        )
    g = intersection_graph(d)
    adj = [0] * len(d.parts)
    for i, j in g.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return _chromatic_number(adj)


@dataclass(frozen=True)
class EFLReport:
    k: int
    n: int

    @property
    def holds(self) -> bool:
        return self.k <= self.n


def verify_efl_bound(d: Decomposition, cap: int = DEFAULT_CAP) -> EFLReport:
    return EFLReport(chromatic_index_exact(d, cap), d.order)
