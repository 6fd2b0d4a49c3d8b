"""
When no assignment exists
=========================

The assignment search gives a sufficient condition only. For the edges
of a triangle and the Z_3 factorization, each edge needs either a 2-gon
or two loops inside one factor. Z_3 has no 2-gons and a single loop
factor, which two edges sharing a vertex cannot both use. The bound
chi' <= n still holds, as the exact oracle shows.
"""

from eflcolor import (
    cayley_factorization,
    cyclic_group,
    edge_decomposition,
    find_assignment,
    near_pencil,
    verify_efl_bound,
)

triangle = edge_decomposition(3)
print("assignment with Z_3:", find_assignment(triangle, cayley_factorization(cyclic_group(3))))
print("oracle:", verify_efl_bound(triangle))

# Near-pencils meet the bound with equality.
for n in range(3, 9):
    r = verify_efl_bound(near_pencil(n))
    print(f"near_pencil({n}): chi' = {r.k}")

# K_n itself: chromatic index n - 1 for even n, n for odd n.
for n in range(3, 8):
    print(f"edges of K_{n}: chi' = {verify_efl_bound(edge_decomposition(n)).k}")
