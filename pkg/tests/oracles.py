"""Brute-force reference computations, independent of the package internals."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from math import prod


def multiset_words(parts):
    letters = [i + 1 for i, p in enumerate(parts) for _ in range(p)]
    return sorted(set(permutations(letters)))


def stats(w):
    des = [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]
    return len(des), sum(des)


def brute_cpoly(parts) -> dict:
    """``{(des, maj): count}`` over all distinct permutations of the multiset."""
    return dict(Counter(stats(w) for w in multiset_words(parts)))


def pascal_q_binomial(a, b) -> dict:
    """Gaussian binomial via ``[a,b] = [a-1,b-1] + q^b [a-1,b]``; returns ``{q-exp: coeff}``."""
    return dict(_pascal(a, b))


@lru_cache(maxsize=None)
def _pascal(a, b):
    if b < 0 or b > a:
        return ()
    if b == 0 or b == a:
        return ((0, 1),)
    out = Counter(dict(_pascal(a - 1, b - 1)))
    for j, c in _pascal(a - 1, b):
        out[j + b] += c
    return tuple(sorted(out.items()))


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def naive_mobius(n):
    out, f, k = 1, 2, n
    while f * f <= k:
        if k % f == 0:
            k //= f
            if k % f == 0:
                return 0
            out = -out
        f += 1
    if k > 1:
        out = -out
    return out


def hnf_subgroup_count(r, n):
    """Index-``n`` subgroups of ``Z^r`` counted as Hermite normal forms.

    Upper triangular with diagonal ``d_1 ... d_r`` of product ``n`` and
    entries above the diagonal reduced modulo the diagonal entry below them.
    """
    count = 0

    def diagonals(remaining, k):
        if k == 1:
            yield (remaining,)
            return
        for d in divisors(remaining):
            for rest in diagonals(remaining // d, k - 1):
                yield (d,) + rest

    for diag in diagonals(n, r):
        # column j has j entries above the diagonal, each in range(diag[j])
        count += prod(diag[j] ** j for j in range(r))
    return count


def brute_subgroups_z2(n):
    """Subgroups of ``Z^2`` of index ``n`` as explicit lattices ``{(a, b), (0, d)}``."""
    seen = set()
    for a, d in product(divisors(n), repeat=2):
        if a * d != n:
            continue
        for b in range(d):
            seen.add((a, b, d))
    return len(seen)


def eulerian_numbers(m):
    """``A[k]`` = permutations of ``[m]`` with ``k`` descents, by the usual recurrence."""
    row = [1]
    for n in range(2, m + 1):
        new = [0] * n
        for k in range(n):
            if k < len(row):
                new[k] += (k + 1) * row[k]
            if k >= 1:
                new[k] += (n - k) * row[k - 1]
        row = new
    return row


def orbits_by_mobius(F, n):
    """``O(n) = (1/n) sum_{d|n} mu(n/d) F(d)`` with ``F`` a callable."""
    total = sum(naive_mobius(n // d) * F(d) for d in divisors(n))
    assert total % n == 0
    return total // n


def q_int_product(parts, k, p):
    """``prod_i binom(lam_i + k, k)_p`` via the Pascal oracle evaluated at p."""
    out = 1
    for part in parts:
        out *= sum(c * p**j for j, c in pascal_q_binomial(part + k, k).items())
    return out
