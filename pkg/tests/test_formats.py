import pytest

from eflcolor import (
    Assignment,
    PColoring,
    cayley_factorization,
    cyclic_group,
    cyclic_sts,
    single_part,
)
from eflcolor.formats import (
    FormatError,
    format_assignment,
    format_coloring,
    format_decomposition,
    format_factorization,
    format_latin_square,
    parse_assignment,
    parse_coloring,
    parse_decomposition,
    parse_factorization,
    parse_latin_square,
    to_dot,
)


def test_decomposition_text():
    d = cyclic_sts(7, [(0, 1, 3)])
    text = format_decomposition(d)
    assert text.splitlines()[:3] == ["n 7", "part 0 1 3", "part 1 2 4"]
    assert parse_decomposition(text) == d


def test_comments_and_blank_lines_ignored():
    text = "# a comment\n\nn 3\n  # another\npart 0 1 2\n"
    assert parse_decomposition(text) == single_part(3)


@pytest.mark.parametrize("text", [
    "n 3\npart 0 0 1\n",
    "n 3\npart 0 3\n",
    "n 3\npart 1\n",
    "n 3\npart 2 1\n",
    "part 0 1\n",
    "n x\n",
    "n 3\nblock 0 1 2\n",
])
def test_decomposition_rejects(text):
    with pytest.raises(FormatError):
        parse_decomposition(text)


def test_latin_square_text():
    q = cyclic_group(3)
    text = format_latin_square(q)
    assert text == "n 3\n0 1 2\n1 2 0\n2 0 1\n"
    assert parse_latin_square(text) == q.table.tolist()
    with pytest.raises(FormatError):
        parse_latin_square("n 3\n0 1 2\n1 2 0\n")
    with pytest.raises(FormatError):
        parse_latin_square("n 2\n0 1\n1 2\n")


def test_factorization_text():
    fz = cayley_factorization(cyclic_group(3))
    text = format_factorization(fz)
    assert text.splitlines() == [
        "n 3",
        "factor 0", "0 0", "1 1", "2 2",
        "factor 1", "0 1", "1 2", "2 0",
        "factor 2", "0 2", "1 0", "2 1",
    ]
    assert parse_factorization(text) == fz
    with pytest.raises(FormatError, match="truncated"):
        parse_factorization("\n".join(text.splitlines()[:-1]))
    with pytest.raises(FormatError):
        parse_factorization(text + "0 0\n")


def test_assignment_and_coloring_text():
    h = Assignment(7, (0, 1, 2, 3, 4, 5, 6))
    text = format_assignment(h)
    assert text.startswith("n 7\npart 0 factor 0\n")
    assert parse_assignment(text) == h
    col = PColoring(7, 7, tuple(range(7)))
    text = format_coloring(col)
    assert text.splitlines()[:3] == ["n 7", "k 7", "part 0 color 0"]
    assert parse_coloring(text) == col
    with pytest.raises(FormatError, match="expected part 1"):
        parse_coloring("n 3\nk 1\npart 0 color 0\npart 2 color 0\n")
    with pytest.raises(FormatError):
        parse_coloring("n 3\npart 0 color 0\n")


def test_dot_single_part():
    dot = to_dot(single_part(3))
    assert dot.count("subgraph cluster_") == 1
    assert dot.count(" -- ") == 3
    assert dot == to_dot(single_part(3))


def test_dot_with_colors():
    d = cyclic_sts(7, [(0, 1, 3)])
    col = PColoring(7, 7, tuple(range(7)))
    dot = to_dot(d, col)
    assert dot.count("subgraph cluster_") == 7
    assert 'label="part 3 color 3";' in dot
    assert 'color="0.000 0.850 0.850"' in dot
