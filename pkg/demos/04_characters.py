"""Torus characters of sections of line bundles on smooth Lusztig varieties."""

from hesslusztig import (
    bott_euler,
    from_word,
    localization_euler,
    longest_element,
    root_system,
    v_w_character,
    weyl_character,
)
from hesslusztig.charlib import weyl_dimension
from hesslusztig.hess import is_smooth
from hesslusztig.weyl import all_elements, format_word

a2 = root_system("A", 2)

# The irreducible module with highest weight rho is the adjoint one
chi = weyl_character(a2, (1, 1))
print(chi.dim, chi.to_list())

# Euler characteristics on G/B, computed two ways
for mu in [(1, 0), (-2, 0), (-3, 1), (-1, -1)]:
    print(mu, bott_euler(a2, mu) == localization_euler(a2, mu), bott_euler(a2, mu).dim)

# Sections on Y_w(s) for the hexagon: seven lattice points
w = from_word(a2, [1, 2])
print(v_w_character(a2, w, (1, 1)).to_list())

# Dimensions over all smooth w in B2 for lambda = rho
b2 = root_system("B", 2)
for w in all_elements(b2):
    if is_smooth(b2, w):
        print(format_word(w.reduced_word), v_w_character(b2, w, (1, 1)).dim)
print("Weyl dimension:", weyl_dimension(b2, (1, 1)), v_w_character(b2, longest_element(b2), (1, 1)).dim)
