"""
STS(13): two orbits of triangles
================================

K_13 decomposes into 26 triangles, the translates of {0,1,4} and {0,2,7}.
One starter factor with triangles on {0,1,4} and {5,7,12} covers both
orbits, because {0,2,7} + 8 = {5,7,12} (mod 13).
"""

from eflcolor import (
    coloring_from_assignment,
    cycles,
    cyclic_factorization_from_starter,
    cyclic_sts,
    find_assignment,
    find_starter_factor,
    verify_efl_bound,
    verify_p_coloring,
)
from eflcolor.formats import format_coloring, to_dot

sts13 = cyclic_sts(13, [(0, 1, 4), (0, 2, 7)])
starter = find_starter_factor(13, [(0, 1, 4), (5, 7, 12)])
print("starter cycles:", cycles(starter))

factorization = cyclic_factorization_from_starter(starter)
h = find_assignment(sts13, factorization)
# first orbit: shift c -> factor c; second orbit: shift c -> factor c + 8
print("first orbit :", h.factors[:13])
print("second orbit:", h.factors[13:])

coloring = coloring_from_assignment(sts13, factorization, h)
print(verify_p_coloring(sts13, coloring), "with k =", coloring.k)

# The construction certifies 13 colors; the exact optimum is smaller.
efl = verify_efl_bound(sts13)
print(f"exact chi' = {efl.k} <= n = {efl.n}: {efl.holds}")

print(format_coloring(coloring).splitlines()[:4])
print(to_dot(sts13, coloring).splitlines()[:8])
