"""
Functional equations and unitary factors
========================================

Rectangles (r^m) give polynomials with a palindromic symmetry under
(x, q) -> (1/x, 1/q); other shapes fail, already at q = 1 where the
descent polynomial is not monic. Some rectangles also carry a factor
1 + x q^e, detected by C(-1, 1) = 0.
"""

from orbitseries import funeq_check, unitary_factor, conjecture_scan
from orbitseries.orbit import euler_funeq

for parts in [(2, 2), (3, 3), (2, 1), (3, 1, 1)]:
    res = funeq_check(parts)
    print(parts, res.holds, res.d1, res.d2, "leading coeff", res.leading_x_coeff)

# the Euler factor inherits a symmetry in (t, p) -> (1/t, 1/p)
print(euler_funeq((2, 2)))

for parts in [(1, 1, 1, 1), (3, 3), (2, 2)]:
    rep = unitary_factor(parts)
    print(parts, rep.status, rep.factor, rep.cofactor)

# two-part shapes: C(-1, 1) never vanished in this range
scan = conjecture_scan(30)
print(len(scan.rows), "pairs,", len(scan.zeros), "zeros,", scan.stanton_count, "covered by the easy bound")
