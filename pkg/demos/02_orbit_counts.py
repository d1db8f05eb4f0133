"""
Orbit counts and Euler factors
==============================

T_lambda is a product of maps whose periodic points are counted by finite
index subgroups of free abelian groups. Closed-orbit counts come from
Moebius inversion; the local Euler factor packs them into one rational
function.
"""

from orbitseries import dirichlet_coeffs, euler_factor, asymptotic_fit, orbit_count

data = dirichlet_coeffs((1, 1), 12)
print(data.values)          # O(1), ..., O(12)
print(data.partial_sums)

# the Euler factor at p = 2 reproduces O(2^k)
ef = euler_factor((2, 1), 2)
print(ef.to_text())
print(ef.series(5))
print([orbit_count((2, 1), 2**k) for k in range(6)])

# partial sums grow like K n^N; the fitted exponent should sit near N = 3
fit = asymptotic_fit((2, 1), 20000)
print(f"{fit.fitted_exponent:.4f}", {n: f"{v:.4f}" for n, v in fit.residuals.items()})
