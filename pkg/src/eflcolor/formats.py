"""Line-oriented text formats and graph-description export.

All formats are UTF-8, one record per line; blank lines and lines whose
first non-blank character is ``#`` are ignored.

    .dec   n <N> / part <v1> <v2> ...
    .lsq   n <N> / N rows of N integers (row x lists x.0 ... x.(N-1))
    .fac   n <N> / factor <i> followed by N lines "<u> <v>"
    .asg   n <N> / part <i> factor <j>
    .col   n <N> / k <K> / part <i> color <c>
"""

from __future__ import annotations

from pathlib import Path

from .core import Decomposition
from .factorization import LinearFactor, LinearFactorization
from .quasigroup import Quasigroup
from .theorem import Assignment, PColoring


class FormatError(ValueError):
    """Malformed or truncated input file."""


def _records(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s and not s.startswith("#"):
            out.append((lineno, s.split()))
    return out


def _ints(lineno: int, tokens: list[str]) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def _header(records, key: str) -> int:
    if not records:
        raise FormatError(f"missing '{key} <value>' line")
    lineno, tokens = records.pop(0)
    if len(tokens) != 2 or tokens[0] != key:
        raise FormatError(f"line {lineno}: expected '{key} <value>', got {' '.join(tokens)!r}")
    (value,) = _ints(lineno, tokens[1:])
    return value


def _order(records) -> int:
    n = _header(records, "n")
    if n < 1:
        raise FormatError(f"order must be >= 1, got {n}")
    return n


# -- decomposition ---------------------------------------------------------


def parse_decomposition(text: str) -> Decomposition:
    records = _records(text)
    n = _order(records)
    parts = []
    for lineno, tokens in records:
        if tokens[0] != "part":
            raise FormatError(f"line {lineno}: expected 'part ...', got {tokens[0]!r}")
        vs = _ints(lineno, tokens[1:])
        if len(vs) < 2:
            raise FormatError(f"line {lineno}: a part needs at least 2 vertices")
        if len(set(vs)) != len(vs):
            raise FormatError(f"line {lineno}: duplicate vertex in part")
        if any(not 0 <= v < n for v in vs):
            raise FormatError(f"line {lineno}: vertex outside 0..{n - 1}")
        if vs != sorted(vs):
            raise FormatError(f"line {lineno}: vertices must be strictly increasing")
        parts.append(tuple(vs))
    return Decomposition(n, tuple(parts))


def format_decomposition(d: Decomposition) -> str:
    lines = [f"n {d.order}"]
    lines += ["part " + " ".join(map(str, p)) for p in d.parts]
    return "\n".join(lines) + "\n"


# -- Latin square ----------------------------------------------------------


def parse_latin_square(text: str) -> list[list[int]]:
    """Rows of the table; Latin-ness is checked separately."""
    records = _records(text)
    n = _order(records)
    if len(records) != n:
        raise FormatError(f"expected {n} rows, found {len(records)}")
    rows = []
    for lineno, tokens in records:
        row = _ints(lineno, tokens)
        if len(row) != n:
            raise FormatError(f"line {lineno}: expected {n} entries, found {len(row)}")
        if any(not 0 <= v < n for v in row):
            raise FormatError(f"line {lineno}: entries must lie in 0..{n - 1}")
        rows.append(row)
    return rows


def format_latin_square(q: Quasigroup) -> str:
    lines = [f"n {q.order}"]
    lines += [" ".join(map(str, row)) for row in q.table.tolist()]
    return "\n".join(lines) + "\n"


# -- factorization ---------------------------------------------------------


def parse_factorization(text: str) -> LinearFactorization:
    records = _records(text)
    n = _order(records)
    factors = []
    for i in range(n):
        if not records:
            raise FormatError(f"missing factor {i}")
        lineno, tokens = records.pop(0)
        if tokens != ["factor", str(i)]:
            raise FormatError(f"line {lineno}: expected 'factor {i}', got {' '.join(tokens)!r}")
        arcs = []
        for _ in range(n):
            if not records:
                raise FormatError(f"factor {i} truncated: expected {n} arcs")
            lineno, tokens = records.pop(0)
            arc = _ints(lineno, tokens)
            if len(arc) != 2:
                raise FormatError(f"line {lineno}: expected '<u> <v>'")
            if any(not 0 <= v < n for v in arc):
                raise FormatError(f"line {lineno}: vertex outside 0..{n - 1}")
            arcs.append(tuple(arc))
        factors.append(LinearFactor(n, frozenset(arcs)))
    if records:
        raise FormatError(f"line {records[0][0]}: unexpected content after factor {n - 1}")
    return LinearFactorization(n, tuple(factors))


def format_factorization(fz: LinearFactorization) -> str:
    lines = [f"n {fz.order}"]
    for i, f in enumerate(fz.factors):
        lines.append(f"factor {i}")
        lines += [f"{u} {v}" for u, v in f.sorted_arcs()]
    return "\n".join(lines) + "\n"


# -- assignment and coloring ----------------------------------------------


def _part_lines(records, key: str) -> list[int]:
    values = []
    for lineno, tokens in records:
        if len(tokens) != 4 or tokens[0] != "part" or tokens[2] != key:
            raise FormatError(f"line {lineno}: expected 'part <i> {key} <j>'")
        i, v = _ints(lineno, [tokens[1], tokens[3]])
        if i != len(values):
            raise FormatError(f"line {lineno}: expected part {len(values)}, got part {i}")
        values.append(v)
    return values


def parse_assignment(text: str) -> Assignment:
    records = _records(text)
    n = _order(records)
    return Assignment(n, tuple(_part_lines(records, "factor")))


def format_assignment(h: Assignment) -> str:
    lines = [f"n {h.order}"]
    lines += [f"part {i} factor {j}" for i, j in enumerate(h.factors)]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> PColoring:
    records = _records(text)
    n = _order(records)
    k = _header(records, "k")
    return PColoring(n, k, tuple(_part_lines(records, "color")))


def format_coloring(col: PColoring) -> str:
    lines = [f"n {col.order}", f"k {col.k}"]
    lines += [f"part {i} color {c}" for i, c in enumerate(col.colors)]
    return "\n".join(lines) + "\n"


def read_text(path) -> str:
    return Path(path).read_text(encoding="utf-8")


# -- DOT export ------------------------------------------------------------


def _hsv(c: int, k: int) -> str:
    return f"{c / max(k, 1):.3f} 0.850 0.850"


def to_dot(d: Decomposition, col: PColoring | None = None) -> str:
    """Graphviz description with one cluster per part.

    A vertex shared by several parts is drawn once per part (node
    ``p<i>_<v>`` labelled ``v``), since a DOT node lives in a single cluster.
    """
    lines = ["graph decomposition {", f"  label=\"K_{d.order}, {len(d.parts)} parts\";"]
    lines.append("  node [shape=circle];")
    for i, part in enumerate(d.parts):
        lines.append(f"  subgraph cluster_{i} {{")
        label = f"part {i}"
        edge_attr = ""
        if col is not None:
            c = col.colors[i]
            label += f" color {c}"
            edge_attr = f" [color=\"{_hsv(c, col.k)}\"]"
            lines.append(f"    color=\"{_hsv(c, col.k)}\";")
        lines.append(f"    label=\"{label}\";")
        for v in part:
            lines.append(f"    p{i}_{v} [label=\"{v}\"];")
        for a, u in enumerate(part):
            for v in part[a + 1:]:
                lines.append(f"    p{i}_{u} -- p{i}_{v}{edge_attr};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
