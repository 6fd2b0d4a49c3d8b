import numpy as np
import pytest

from eflcolor import (
    LinearFactor,
    Quasigroup,
    cayley_factorization,
    cyclic_group,
    quasigroup_from_factorization,
    random_latin_square,
    validate_factorization,
    validate_latin_square,
    validate_linear_factor,
)

from oracles import latin_squares


def test_validate_small_squares():
    assert validate_latin_square([[0]]).ok
    assert validate_latin_square([[0, 1], [1, 0]]).ok
    report = validate_latin_square([[0, 1], [0, 1]])
    assert "column 0 repeats 0" in report.violations


@pytest.mark.parametrize("table", [[[0, 1], [1]], [[0, 1, 2], [1, 2, 0]], [[0, 2], [2, 0]], [[-1, 0], [0, -1]]])
def test_malformed_tables_rejected(table):
    with pytest.raises(ValueError):
        validate_latin_square(table)


def test_quasigroup_rejects_non_latin():
    with pytest.raises(ValueError, match="not a Latin square"):
        Quasigroup([[0, 1], [0, 1]])


def test_z3_cayley_factors():
    fz = cayley_factorization(cyclic_group(3))
    assert fz[0].arcs == {(0, 0), (1, 1), (2, 2)}
    assert fz[1] == LinearFactor.from_cycles(3, [(0, 1, 2)])
    assert fz[2] == LinearFactor.from_cycles(3, [(0, 2, 1)])
    assert validate_factorization(fz).ok


def test_order_one():
    fz = cayley_factorization(Quasigroup([[0]]))
    assert len(fz) == 1 and fz[0].arcs == {(0, 0)}


def test_labeling_swap_gives_subtraction():
    fz = cayley_factorization(cyclic_group(3))
    q = quasigroup_from_factorization(fz, [0, 2, 1])
    expected = [[(x - a) % 3 for a in range(3)] for x in range(3)]
    assert q.table.tolist() == expected
    assert quasigroup_from_factorization(cayley_factorization(q)) == q


def test_bad_labeling_rejected():
    fz = cayley_factorization(cyclic_group(3))
    with pytest.raises(ValueError, match="permutation"):
        quasigroup_from_factorization(fz, [0, 0, 1])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_round_trip_exhaustive(n):
    squares = list(latin_squares(n))
    assert len(squares) == {1: 1, 2: 2, 3: 12, 4: 576}[n]
    for table in squares:
        q = Quasigroup(table)
        fz = cayley_factorization(q)
        assert validate_factorization(fz).ok
        assert quasigroup_from_factorization(fz) == q


def test_random_squares_properties():
    rng = np.random.default_rng(1234)
    for n in range(5, 9):
        for _ in range(30):
            q = random_latin_square(n, rng)
            fz = cayley_factorization(q)
            arcs = [a for f in fz for a in f.arcs]
            assert len(arcs) == n * n and len(set(arcs)) == n * n
            for a, f in enumerate(fz):
                assert validate_linear_factor(f).ok
                loops = {u for u, v in f.arcs if u == v}
                assert loops == {x for x in range(n) if q.mul(x, a) == x}
            assert quasigroup_from_factorization(fz) == q


def test_factor_a_is_column_a():
    # arc (x, x.a) lies in factor a: the table is not transposed
    q = Quasigroup([[1, 0, 2], [0, 2, 1], [2, 1, 0]])
    fz = cayley_factorization(q)
    assert fz[0].arcs == {(0, 1), (1, 0), (2, 2)}
    assert fz[1].arcs == {(0, 0), (1, 2), (2, 1)}
