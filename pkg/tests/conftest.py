import pytest

from eflcolor import Decomposition, edge_decomposition, near_pencil, single_part

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def relabel(d, perm):
    """Image of d under the vertex permutation v -> perm[v]."""
    return Decomposition(d.order, tuple(tuple(sorted(perm[v] for v in p)) for p in d.parts))


def small_decompositions():
    """Decompositions with at most 4 parts on at most 6 vertices."""
    out = {}
    for n in range(2, 7):
        out[f"single-{n}"] = single_part(n)
    out["edges-2"] = edge_decomposition(2)
    out["edges-3"] = edge_decomposition(3)
    out["near-pencil-3"] = near_pencil(3)
    out["near-pencil-4"] = near_pencil(4)
    # hand fixtures: the order-4 near-pencil with each apex
    for apex in range(3):
        perm = list(range(4))
        perm[apex], perm[3] = perm[3], perm[apex]
        out[f"near-pencil-4-apex{apex}"] = relabel(near_pencil(4), perm)
    out["edges-3-reversed"] = Decomposition(3, ((1, 2), (0, 2), (0, 1)))
    return out


@pytest.fixture
def fano():
    from eflcolor import cyclic_sts

    return cyclic_sts(7, [(0, 1, 3)])


@pytest.fixture
def sts13():
    from eflcolor import cyclic_sts

    return cyclic_sts(13, [(0, 1, 4), (0, 2, 7)])
