"""Root systems, Weyl group elements and Bruhat order.

Run with ``python demos/01_roots_and_weyl_groups.py``.
"""

from hesslusztig import root_system, from_word, all_elements, longest_element
from hesslusztig.rootsys import pairing, reflect_root
from hesslusztig.weyl import bruhat_leq, length_generating_function, reflection

# Roots live in simple-root coordinates; C3 has nine positive roots.
c3 = root_system("C", 3)
for beta in c3.positive_roots:
    print(beta, "height", sum(beta))

# The Cartan matrix, with the long simple root in the last slot.
print(c3.cartan)

# Simple reflections act on roots (letters are 1-based).
print(reflect_root(c3, 2, (0, 0, 1)))   # 2a2 + a3

# Pairings take a weight and a root; alpha_3 against alpha_2 coroot is -2.
print(pairing(c3, c3.root_to_weight((0, 0, 1)), (0, 1, 0)))

# A Weyl element is determined by where it sends the simple roots.
w = from_word(c3, [1, 3, 2, 3, 1])
print(w.length, w.reduced_word)   # the lex-least reduced word
print(w == reflection(c3, (1, 1, 1)))

# Bruhat order
print(bruhat_leq(from_word(c3, [2, 3, 2]), from_word(c3, [2, 1, 3, 2, 3])))
print(from_word(c3, [3]) <= from_word(c3, [1, 2, 1]))

# The whole group, sorted by length
W = all_elements(c3)
print(len(W), longest_element(c3).length)
print(length_generating_function(c3))   # (1+q)(1+q+q^2+q^3)(1+...+q^5)

# G2 for comparison
g2 = root_system("G", 2)
print(g2.positive_roots, g2.highest_root())
