"""Quasigroups as Latin squares, and their Cayley color graphs.

Convention: ``table[x, a] = x . a``. Row ``x`` lists ``x.0 ... x.(n-1)``.
The Cayley color graph puts the arc ``(x, x.a)`` in factor ``a``, so
column ``a`` of the table is the successor map of factor ``a``.
"""

from __future__ import annotations

import numpy as np

from .core import Report
from .factorization import LinearFactor, LinearFactorization, validate_factorization


def _as_square(table) -> np.ndarray:
    try:
        arr = np.asarray(table)
    except ValueError as exc:  # ragged nested lists
        raise ValueError(f"table is not rectangular: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"table must be square, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"table entries must be integers, got dtype {arr.dtype}")
    n = arr.shape[0]
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise ValueError(f"table entries must lie in 0..{n - 1}")
    return arr.astype(np.int64)


def validate_latin_square(table) -> Report:
    """Rows and columns must be permutations of ``0..n-1``.

    Raises ``ValueError`` for non-square or out-of-range input.
    """
    arr = _as_square(table)
    n = arr.shape[0]
    report = Report()
    for kind, lines in (("row", arr), ("column", arr.T)):
        for i, line in enumerate(lines):
            counts = np.bincount(line, minlength=n)
            dup = np.flatnonzero(counts > 1)
            if dup.size:
                report.add(f"{kind} {i} repeats {int(dup[0])}")
    return report


class Quasigroup:
    """A finite quasigroup given by its Cayley table."""

    def __init__(self, table):
        arr = _as_square(table)
        report = validate_latin_square(arr)
        if not report.ok:
            raise ValueError(f"not a Latin square: {report.violations[0]}")
        arr.setflags(write=False)
        self.table = arr

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, x: int, a: int) -> int:
        return int(self.table[x, a])

    def __eq__(self, other):
        return isinstance(other, Quasigroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"Quasigroup({self.table.tolist()})"


def cyclic_group(n: int) -> Quasigroup:
    """Z_n under addition."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    idx = np.arange(n)
    return Quasigroup((idx[:, None] + idx[None, :]) % n)


def random_latin_square(n: int, rng: np.random.Generator) -> Quasigroup:
    """Cyclic table with rows, columns and symbols independently permuted.

    Not uniform over Latin squares, only over this isotopy class.
    """
    table = cyclic_group(n).table
    rows, cols, syms = rng.permutation(n), rng.permutation(n), rng.permutation(n)
    return Quasigroup(syms[table[np.ix_(rows, cols)]])


def cayley_factorization(q) -> LinearFactorization:
    if not isinstance(q, Quasigroup):
        q = Quasigroup(q)
    n = q.order
    factors = tuple(LinearFactor.from_successors(q.table[:, a].tolist()) for a in range(n))
    return LinearFactorization(n, factors)


def quasigroup_from_factorization(fz: LinearFactorization, labeling=None) -> Quasigroup:
    """Table with ``x . labeling[i]`` = head of the arc leaving ``x`` in factor ``i``.

    ``labeling`` defaults to the identity.
    """
    report = validate_factorization(fz)
    if not report.ok:
        raise ValueError(f"invalid factorization: {report.violations[0]}")
    n = fz.order
    labeling = list(range(n)) if labeling is None else [int(v) for v in labeling]
    if sorted(labeling) != list(range(n)):
        raise ValueError(f"labeling {labeling} is not a permutation of 0..{n - 1}")
    table = np.empty((n, n), dtype=np.int64)
    for i, f in enumerate(fz.factors):
        table[:, labeling[i]] = f.successors()
    return Quasigroup(table)
