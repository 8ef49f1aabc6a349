"""GKM graphs and Betti numbers of Lusztig and Hessenberg varieties."""

from hesslusztig import gkm_flag, gkm_hessenberg, gkm_lusztig, poincare_polynomial, root_system
from hesslusztig.gkm import cell_dimensions, export_graph, hessenberg_poincare_by_permutations
from hesslusztig.hess import (
    codominant_from_hessenberg_function,
    hessenberg_functions,
    ideal_from_hessenberg_function,
    m_w,
    permutation_to_element,
    valid_ideals,
)

# A2 and w = 231: the graph is a hexagon and the variety is a toric surface.
a2 = root_system("A", 2)
w = permutation_to_element((2, 3, 1))
g = gkm_lusztig(a2, w)
print(g, poincare_polynomial(g))
print(export_graph(g, "dot"))

# The same graph comes from the root set M_w alone
print(gkm_hessenberg(a2, m_w(a2, w)).edge_set() == g.edge_set())

# On the full flag variety cell dimension is length
g = gkm_flag(root_system("B", 2))
print(sorted(cell_dimensions(g).values()), poincare_polynomial(g))

# Type A: one Hessenberg function per Dyck path, compared against a
# permutation statistic
a3 = root_system("A", 3)
for h in hessenberg_functions(4):
    P = poincare_polynomial(gkm_hessenberg(a3, ideal_from_hessenberg_function(h)))
    same = P == hessenberg_poincare_by_permutations(h)
    print(h, codominant_from_hessenberg_function(h), P, same)

# G2 has eight Hessenberg spaces
g2 = root_system("G", 2)
for M in valid_ideals(g2):
    print(len(M), poincare_polynomial(gkm_hessenberg(g2, M)))
