"""Where does P_PSU_n stop being unimodal, under each convention?"""

import sys

from detvar import Convention, is_unimodal, psu_poincare

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 12
print(f"{'n':>3} {'all':>6} {'nonzero':>8}  coefficients")
for n in range(2, max_n + 1):
    p = psu_poincare(n)
    flags = [is_unimodal(p, c) for c in (Convention.ALL, Convention.NONZERO)]
    coeffs = [c for _, c in p.terms()]
    print(f"{n:>3} {str(flags[0]):>6} {str(flags[1]):>8}  {coeffs if len(coeffs) <= 24 else '...'}")
