"""
Reduced series and the subdivided simplex
=========================================

Setting p = 1 leaves C_lambda(t, 1) / (1 - t)^N. For lambda = (1^m) this is
the Hilbert series of the face ring of the barycentric subdivision of an
(m-1)-simplex; the h-vector is the Eulerian row.
"""

from orbitseries import reduced_series, hilbert_sd_simplex
from orbitseries.analysis import f_vector_sd, f_vector_sd_chains, h_vector

for m in range(1, 6):
    f = f_vector_sd(m)
    print(m, f, f_vector_sd_chains(m) == f, h_vector(f))

print(reduced_series((1, 1, 1)).to_text())
print(hilbert_sd_simplex(3).to_text())
print(reduced_series((2, 2)).to_text())
