"""
Boundary data and the Igusa form
================================

W(X, Y) = C(X^-1 Y, X) has Newton data (N-1, N-2); its terms on the ghost
line give 1 + (m-1) U. For two parts the polynomials B_n(U) decide the
boundary type. Separately, the Euler factor equals a sum over subsets I of
descent positions weighted by #{w : Des(w) in I}.
"""

from orbitseries import w_poly, newton_data, ghost_factor, natural_boundary_report, igusa_check
from orbitseries.analysis import nu_coefficients

lam = (3, 3)
print(w_poly(lam))
print(newton_data(lam), ghost_factor(lam))

for parts in [(3, 3), (2, 2), (3, 1), (1, 1, 1)]:
    rep = natural_boundary_report(parts)
    print(parts, rep.type, rep.gamma, [str(b) for b in rep.b_polys], rep.unitary_factor)

print(nu_coefficients((2, 1)).nu)
print(igusa_check((2, 2, 1), 3, 15))
