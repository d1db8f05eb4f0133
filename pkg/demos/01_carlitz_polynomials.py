"""
Descent statistics on multiset permutations
===========================================

Words of S_lambda, their (des, maj) statistics, and the generating
polynomial C_lambda(x, q) computed two independent ways.
"""

from orbitseries import Partition, enumerate_words, descent_data, cpoly_enum, cpoly_macmahon

lam = Partition.parse("2,1")

# every word of S_(2,1), with its descent set, des and maj
for w in enumerate_words(lam):
    d = descent_data(w)
    print(w, sorted(d.descent_set), d.des, d.maj)

# brute force over the words, and MacMahon's q-binomial identity
print(cpoly_enum(lam).poly)
print(cpoly_macmahon(lam).poly)

# C_4 has 24 words; the q = 1 specialization is the Eulerian polynomial
c4 = cpoly_macmahon((1, 1, 1, 1)).poly
print(c4)
print(c4.evaluate(q=1))
