"""
Coloring the Fano plane with seven colors
=========================================

The cyclic Steiner triple system of order 7 splits the edges of K_7 into
seven triangles, any two of which meet in a vertex. We build a linear
factorization of K_7* from a single starter factor, find a factor for each
triangle, and turn that into a 7-coloring certificate.
"""

from eflcolor import (
    chromatic_index_exact,
    coloring_from_assignment,
    cycles,
    cyclic_factorization_from_starter,
    cyclic_sts,
    find_assignment,
    find_starter_factor,
    verify_p_coloring,
)

# The seven translates of {0, 1, 3} mod 7.
fano = cyclic_sts(7, [(0, 1, 3)])
print("blocks:", fano.parts)

# A starter uses every difference mod 7 exactly once, so its seven
# translates are arc-disjoint. Ask for a triangle on the base block.
starter = find_starter_factor(7, required_gons=[(0, 1, 3)])
print("starter cycles:", cycles(starter))
factorization = cyclic_factorization_from_starter(starter)

# Block {0,1,3}+c sits inside translate c of the starter.
h = find_assignment(fano, factorization)
print("part -> factor:", h.factors)

coloring = coloring_from_assignment(fano, factorization, h)
print("colors:", coloring.colors, "k =", coloring.k)
print("certificate:", verify_p_coloring(fano, coloring))

# Every pair of blocks intersects, so seven colors are also necessary.
print("exact chromatic index:", chromatic_index_exact(fano))
