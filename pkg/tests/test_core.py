from itertools import combinations

import networkx as nx
import pytest

from eflcolor import (
    Decomposition,
    DecompositionError,
    cyclic_sts,
    edge_decomposition,
    intersection_graph,
    near_pencil,
    single_part,
    validate_decomposition,
)


def naive_edge_counts(d):
    counts = {}
    for u, v in combinations(range(d.order), 2):
        counts[(u, v)] = sum(1 for p in d.parts if u in p and v in p)
    return counts


def test_single_part_is_valid():
    assert validate_decomposition(Decomposition(3, [(0, 1, 2)])).ok
    assert single_part(2).parts == ((0, 1),)
    assert single_part(5).parts == ((0, 1, 2, 3, 4),)
    d = single_part(13)
    assert len(d.parts) == 1 and len(d.parts[0]) == 13
    assert validate_decomposition(d).ok


def test_missing_edge_is_named():
    report = validate_decomposition(Decomposition(3, [(0, 1), (1, 2)]))
    assert not report.ok
    assert report.violations == ["edge {0,2} uncovered"]


def test_double_cover_and_bad_parts_reported():
    report = validate_decomposition(Decomposition(3, [(0, 1, 2), (0, 1)]))
    assert report.violations == ["edge {0,1} covered by parts [0, 1]"]
    report = validate_decomposition(Decomposition(3, [(0,), (1, 0), (0, 1, 2, 5)]))
    text = "\n".join(report.violations)
    assert "part 0 has 1 vertices" in text
    assert "part 1 is not strictly increasing" in text
    assert "part 2 has out-of-range vertices [5]" in text


def test_order_one_empty_is_valid():
    assert validate_decomposition(Decomposition(1, ())).ok


def test_fano_matches_naive_double_loop(fano):
    assert len(fano.parts) == 7
    assert validate_decomposition(fano).ok
    assert set(naive_edge_counts(fano).values()) == {1}


@pytest.mark.parametrize("gen,bad", [(single_part, 1), (edge_decomposition, 1), (near_pencil, 2)])
def test_generators_reject_small_n(gen, bad):
    with pytest.raises(ValueError):
        gen(bad)


def test_edge_decomposition():
    assert edge_decomposition(3).parts == ((0, 1), (0, 2), (1, 2))
    assert len(edge_decomposition(4).parts) == 6
    d = edge_decomposition(5)
    assert len(d.parts) == 10 and validate_decomposition(d).ok


def test_near_pencil():
    assert near_pencil(3).parts == edge_decomposition(3).parts
    assert near_pencil(4).parts == ((0, 1, 2), (0, 3), (1, 3), (2, 3))
    d = near_pencil(5)
    assert len(d.parts) == 5 and validate_decomposition(d).ok


def test_cyclic_sts_13():
    d = cyclic_sts(13, [(0, 1, 4), (0, 2, 7)])
    assert len(d.parts) == 26
    assert validate_decomposition(d).ok
    # part i*n + c is base block i translated by c
    assert d.parts[5] == (5, 6, 9)
    assert d.parts[13 + 8] == (2, 8, 10)


def test_cyclic_sts_short_orbit_kept_once():
    # {0,5,10} has orbit length 5 under v -> v+1 mod 15
    d = cyclic_sts(15, [(0, 1, 4), (0, 2, 8), (0, 5, 10)])
    assert len(d.parts) == 35
    assert d.parts[30:] == ((0, 5, 10), (1, 6, 11), (2, 7, 12), (3, 8, 13), (4, 9, 14))
    assert validate_decomposition(d).ok


def test_cyclic_sts_wrong_residue():
    with pytest.raises(ValueError, match="1 or 3 mod 6"):
        cyclic_sts(8, [(0, 1, 3)])


def test_cyclic_sts_partition_failure_reports_edges():
    with pytest.raises(DecompositionError) as info:
        cyclic_sts(9, [(0, 1, 3)])
    violations = info.value.report.violations
    assert violations[0] == "difference 4 missing"
    assert "edge {0,4} uncovered" in violations


def test_cyclic_sts_duplicate_difference():
    with pytest.raises(DecompositionError) as info:
        cyclic_sts(7, [(0, 1, 3), (0, 2, 3)])
    assert any("covered more than once" in v for v in info.value.report.violations)


def test_intersection_graphs(fano):
    g = intersection_graph(single_part(5))
    assert g.number_of_nodes() == 1 and g.number_of_edges() == 0
    assert nx.is_isomorphic(intersection_graph(edge_decomposition(3)), nx.complete_graph(3))
    g = intersection_graph(fano)
    assert g.number_of_edges() == 21


GENERATED = [single_part(4), edge_decomposition(6), near_pencil(7),
             cyclic_sts(7, [(0, 1, 3)]), cyclic_sts(13, [(0, 1, 4), (0, 2, 7)]),
             cyclic_sts(15, [(0, 1, 4), (0, 2, 8), (0, 5, 10)])]


@pytest.mark.parametrize("d", GENERATED, ids=lambda d: f"n{d.order}-{len(d.parts)}parts")
def test_generated_cover_every_edge_once(d):
    assert validate_decomposition(d).ok
    counts = naive_edge_counts(d)
    assert len(counts) == d.order * (d.order - 1) // 2
    assert set(counts.values()) == {1}
    for p, q in combinations(d.parts, 2):
        assert len(set(p) & set(q)) <= 1


@pytest.mark.parametrize("n", range(3, 9))
def test_near_pencil_intersection_graph_complete(n):
    g = intersection_graph(near_pencil(n))
    assert g.number_of_nodes() == n
    assert g.number_of_edges() == n * (n - 1) // 2


@pytest.mark.parametrize("n,base", [(7, [(0, 1, 3)]), (13, [(0, 1, 4), (0, 2, 7)])])
def test_cyclic_sts_rotation_invariant(n, base):
    parts = set(cyclic_sts(n, base).parts)
    rotated = {tuple(sorted((v + 1) % n for v in p)) for p in parts}
    assert rotated == parts
