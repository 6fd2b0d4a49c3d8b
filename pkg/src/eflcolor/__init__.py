"""Decompositions of K_n, linear factorizations of K_n*, and n-coloring certificates."""

from .core import (
    Decomposition,
    DecompositionError,
    Report,
    cyclic_sts,
    edge_decomposition,
    intersection_graph,
    near_pencil,
    single_part,
    validate_decomposition,
)
from .factorization import (
    LinearFactor,
    LinearFactorization,
    cycle_structure,
    cycles,
    cyclic_factorization_from_starter,
    find_starter_factor,
    loop_factor,
    translate_factor,
    validate_factorization,
    validate_linear_factor,
)
from .quasigroup import (
    Quasigroup,
    cayley_factorization,
    cyclic_group,
    quasigroup_from_factorization,
    random_latin_square,
    validate_latin_square,
)
from .theorem import (
    Assignment,
    CapExceeded,
    EFLReport,
    PColoring,
    check_assignment,
    chromatic_index_exact,
    coloring_from_assignment,
    find_assignment,
    is_linear_factor_of_part,
    restrict,
    verify_efl_bound,
    verify_p_coloring,
)

__version__ = "0.1.0"
