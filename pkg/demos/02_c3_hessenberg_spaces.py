"""Linear Hessenberg spaces in C3 that are not tangent spaces of Schubert varieties.

Two B-stable root sets of sizes 5 and 6 are compared against M_w for every
element of matching length.
"""

from hesslusztig import root_system
from hesslusztig.hess import RootIdeal, format_ideal, is_valid_ideal, m_w, rationally_smooth
from hesslusztig.verify import C3_M1, C3_M2, verify_c3
from hesslusztig.weyl import enumerate_by_length, format_word

rs = root_system("C", 3)
M1 = RootIdeal.from_roots(rs, C3_M1)
M2 = RootIdeal.from_roots(rs, C3_M2)
print("M1 =", format_ideal(M1), "valid:", is_valid_ideal(rs, M1))
print("M2 =", format_ideal(M2), "valid:", is_valid_ideal(rs, M2))

# Elements whose length matches |M1| and |M2|, with their root sets
for ell, M in ((5, M1), (6, M2)):
    print(f"\nlength {ell}:")
    for w in enumerate_by_length(rs, ell):
        Mw = m_w(rs, w)
        flag = "rs" if rationally_smooth(rs, w) else "  "
        print(f"  {format_word(w.reduced_word):9} {flag} |M_w|={len(Mw)} equal={Mw == M}")

# The packaged check, which is also `hesslusztig verify c3`
print()
print(verify_c3())
