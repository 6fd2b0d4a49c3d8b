"""
Quasigroups and linear factorizations
=====================================

Every Latin square is the Cayley table of a quasigroup; the arcs
(x, x.a) for fixed a form a linear factor of K_n*, and the n factors
partition all n^2 arcs. Going back needs a choice of which factor gets
which label.
"""

import numpy as np

from eflcolor import (
    cayley_factorization,
    cycle_structure,
    cyclic_group,
    quasigroup_from_factorization,
    random_latin_square,
    validate_factorization,
)

z3 = cyclic_group(3)
fz = cayley_factorization(z3)
for a, f in enumerate(fz):
    print(f"factor {a}: arcs {f.sorted_arcs()}  cycle lengths {cycle_structure(f)}")

# Identity labeling returns the original table.
assert quasigroup_from_factorization(fz) == z3

# Swapping the labels of factors 1 and 2 gives x.a = x - a mod 3.
print(quasigroup_from_factorization(fz, [0, 2, 1]).table)

rng = np.random.default_rng(0)
q = random_latin_square(6, rng)
print(q.table)
fz6 = cayley_factorization(q)
print("valid factorization:", validate_factorization(fz6).ok)
print("cycle structures:", [cycle_structure(f) for f in fz6])
