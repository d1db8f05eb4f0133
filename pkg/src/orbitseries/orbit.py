"""Orbit counts of products of maps with subgroup-growth orbit statistics.

For a partition ``lam`` the map ``T_lam`` is the Cartesian product of maps
``T_r`` whose closed orbits of length ``n`` are as many as the index-``n``
subgroups of ``Z^r``. Periodic points multiply over the factors, orbits
are recovered by Moebius inversion, and each Euler factor is
``C_lam(t/p, p) / prod_{i=1}^{N} (1 - p^{i-1} t)`` with ``t = p^-s``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .carlitz import cpoly_macmahon
from .combinatorics import Partition, as_partition, is_rectangle
from .errors import ConsistencyError, DomainError
from .polyalg import BivarPoly, RationalSeries, monomial_ratio, q_binomial_at, series_coeffs, \
    substitute_inverse

T_P = ("t", "p")


def is_prime(n: int) -> bool:
    if not isinstance(n, int) or n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _require_prime(p):
    if not is_prime(p):
        raise DomainError(f"{p!r} is not a prime")


def subgroup_count(r: int, p: int, k: int) -> int:
    """Subgroups of index ``p^k`` in ``Z^r``: ``binom(r-1+k, k)_p``."""
    if not isinstance(r, int) or r < 1:
        raise DomainError(f"rank must be a positive integer, got {r!r}")
    if not isinstance(k, int) or k < 0:
        raise DomainError(f"k must be a nonnegative integer, got {k!r}")
    _require_prime(p)
    return q_binomial_at(r - 1 + k, k, p)


def fixed_points(lam, p: int, k: int) -> int:
    """Points of period ``p^k`` under ``T_lam``: ``prod_i binom(lam_i + k, k)_p``."""
    lam = as_partition(lam)
    if not isinstance(k, int) or k < 0:
        raise DomainError(f"k must be a nonnegative integer, got {k!r}")
    _require_prime(p)
    out = 1
    for part in lam.parts:
        out *= q_binomial_at(part + k, k, p)
    return out


def orbit_count_prime_power(lam, p: int, k: int) -> int:
    """Closed orbits of length ``p^k``: ``(F(p^k) - F(p^{k-1})) / p^k``."""
    lam = as_partition(lam)
    if k == 0:
        _require_prime(p)
        return 1
    diff = fixed_points(lam, p, k) - fixed_points(lam, p, k - 1)
    value, rem = divmod(diff, p**k)
    if rem:
        raise ConsistencyError(f"orbit count for {lam.parts} at {p}^{k} is not an integer")
    return value


def factorize(n: int) -> list[tuple[int, int]]:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            out.append((f, e))
        f += 1 if f == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def orbit_count(lam, n: int) -> int:
    """``O_{T_lam}(n)``, assembled multiplicatively from prime powers."""
    lam = as_partition(lam)
    out = 1
    for p, k in factorize(n):
        out *= orbit_count_prime_power(lam, p, k)
    return out


def periodic_point_count(lam, n: int) -> int:
    """``F_{T_lam}(n)``, also multiplicative in ``n``."""
    lam = as_partition(lam)
    out = 1
    for p, k in factorize(n):
        out *= fixed_points(lam, p, k)
    return out


def euler_numerator(lam) -> BivarPoly:
    """``C_lam(t/p, p)`` as a polynomial in ``(t, p)``.

    Obtained by ``x^i q^j -> t^i p^{j-i}``; all exponents stay nonnegative
    because ``maj >= des``.
    """
    c = cpoly_macmahon(as_partition(lam)).poly
    return c.substitute_monomials((1, -1), (0, 1), labels=T_P)


def euler_rational(lam) -> RationalSeries:
    """Euler factor as a rational function of independent ``(t, p)``."""
    lam = as_partition(lam)
    return RationalSeries.from_factors(euler_numerator(lam), [(1, i - 1) for i in range(1, lam.N + 1)])


@dataclass(frozen=True)
class EulerFactor:
    """The p-part of the orbit Dirichlet series; ``value`` is in ``(t, p)``."""

    partition: Partition
    prime: int
    value: RationalSeries

    def series(self, K: int) -> list[int]:
        """``O(p^0), ..., O(p^K)`` from the x-adic (t-adic) expansion."""
        return series_coeffs(self.value, K, q=self.prime)

    def specialized_numerator(self) -> BivarPoly:
        return self.value.numerator.evaluate(q=self.prime)

    def to_text(self) -> str:
        return self.value.to_text()

    def to_json(self, series_k: int = 10) -> dict:
        return {
            "partition": list(self.partition.parts),
            "prime": self.prime,
            "numerator": self.value.numerator.to_json(),
            "denominator_factors": [[a, b, mult] for (a, b), mult in self.value.denominator],
            "series_prefix": [str(v) for v in self.series(series_k)],
        }


def euler_factor(lam, p: int) -> EulerFactor:
    _require_prime(p)
    lam = as_partition(lam)
    return EulerFactor(lam, p, euler_rational(lam))


@dataclass(frozen=True)
class EulerFunEq:
    """Result of testing ``d(1/p, 1/t) = sign * p^d1 * t^d2 * d(p, t)``.

    Inverting ``p`` with ``s`` fixed sends ``t = p^-s`` to ``1/t``, so both
    variables are inverted. ``holds`` asks for ``sign = +-1`` and
    ``d1, d2 >= 0``.
    """

    partition: Partition
    holds: bool
    sign: int | None
    d1: int | None
    d2: int | None


def euler_funeq(lam) -> EulerFunEq:
    lam = as_partition(lam)
    f = euler_rational(lam)
    num, den = f.numerator, f.denominator_poly()
    lhs = substitute_inverse(num) * den
    rhs = num * substitute_inverse(den)
    ratio = monomial_ratio(lhs, rhs)
    if ratio is None or ratio[0] not in (1, -1) or ratio[1] < 0 or ratio[2] < 0:
        return EulerFunEq(lam, False, None, None, None)
    sign, d2, d1 = ratio
    return EulerFunEq(lam, True, sign, d1, d2)


def expected_euler_funeq(r: int, m: int) -> tuple[int, int, int]:
    """``(sign, d1, d2) = ((-1)^{rm}, m binom(r+1, 2) - r, r)``."""
    return (-1) ** (r * m), m * math.comb(r + 1, 2) - r, r


def euler_funeq_check(r: int, m: int, p: int, samples=(Fraction(1, 7), Fraction(-3, 11))) -> bool:
    """Check the rectangle functional equation symbolically and at ``p``.

    The symbolic test compares Laurent polynomials in ``(t, p)``; the numeric
    test evaluates both sides exactly at the given prime and a few values
    of ``t``.
    """
    _require_prime(p)
    if r < 1 or m < 1:
        raise DomainError("r and m must be positive")
    lam = Partition((r,) * m)
    res = euler_funeq(lam)
    sign, d1, d2 = expected_euler_funeq(r, m)
    if not (res.holds and (res.sign, res.d1, res.d2) == (sign, d1, d2)):
        return False
    f = euler_rational(lam)

    def d_at(t, pp):
        return Fraction(f.numerator.evaluate(t, pp)) / Fraction(f.denominator_poly().evaluate(t, pp))

    P = Fraction(p)
    for t in samples:
        if d_at(1 / t, 1 / P) != sign * P**d1 * t**d2 * d_at(t, P):
            return False
    return True


@dataclass
class OrbitData:
    """``O(1..n_max)`` for ``T_lam``; ``values[n-1]`` is ``O(n)``."""

    partition: Partition
    values: list[int]
    partial_sums: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.partial_sums:
            acc = 0
            sums = []
            for v in self.values:
                acc += v
                sums.append(acc)
            self.partial_sums = sums

    @property
    def n_max(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if n < 1:
            raise IndexError(n)
        return self.values[n - 1]

    def rows(self):
        for n, (v, s) in enumerate(zip(self.values, self.partial_sums), start=1):
            yield n, v, s

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("n", "orbits", "partial_sum"))
        for n, v, s in self.rows():
            writer.writerow((n, str(v), str(s)))
        return buf.getvalue()


def smallest_prime_factors(n_max: int) -> list[int]:
    """``spf[n]`` for ``0 <= n <= n_max``; ``spf[0] = spf[1] = 0``."""
    spf = np.zeros(n_max + 1, dtype=np.int64)
    for i in range(2, int(n_max**0.5) + 1):
        if spf[i] == 0:
            block = spf[i * i::i]
            block[block == 0] = i
    idx = np.arange(n_max + 1, dtype=np.int64)
    unset = spf == 0
    spf[unset] = idx[unset]
    spf[:2] = 0
    return spf.tolist()


def dirichlet_coeffs(lam, n_max: int) -> OrbitData:
    """Coefficients of the orbit Dirichlet series up to ``n_max``."""
    lam = as_partition(lam)
    if not isinstance(n_max, int) or n_max < 1:
        raise DomainError(f"n_max must be a positive integer, got {n_max!r}")
    spf = smallest_prime_factors(n_max)
    values = [0] * (n_max + 1)
    values[1] = 1
    # ppow[n], pexp[n]: the full power of spf(n) dividing n, and its exponent
    ppow = [0] * (n_max + 1)
    pexp = [0] * (n_max + 1)
    for n in range(2, n_max + 1):
        p = spf[n]
        rest = n // p
        if rest % p == 0:
            ppow[n] = ppow[rest] * p
            pexp[n] = pexp[rest] + 1
        else:
            ppow[n] = p
            pexp[n] = 1
        pk = ppow[n]
        if pk == n:
            values[n] = orbit_count_prime_power(lam, p, pexp[n])
        else:
            values[n] = values[n // pk] * values[pk]
    return OrbitData(lam, values[1:])


def fixed_point_table(orbits: OrbitData) -> list[int]:
    """``F(n) = sum_{d | n} d O(d)`` for ``n = 1 .. n_max``."""
    n_max = orbits.n_max
    F = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        v = d * orbits.values[d - 1]
        for n in range(d, n_max + 1, d):
            F[n] += v
    return F[1:]


def mobius_table(n_max: int) -> list[int]:
    mu = [1] * (n_max + 1)
    spf = smallest_prime_factors(n_max)
    for n in range(2, n_max + 1):
        p = spf[n]
        rest = n // p
        mu[n] = 0 if rest % p == 0 else -mu[rest]
    mu[0] = 0
    return mu


def orbits_from_fixed_points(F: list[int]) -> list[int]:
    """Moebius inversion ``O(n) = (1/n) sum_{d | n} mu(n/d) F(d)``."""
    n_max = len(F)
    mu = mobius_table(n_max)
    acc = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        f = F[d - 1]
        for n in range(d, n_max + 1, d):
            acc[n] += mu[n // d] * f
    out = []
    for n in range(1, n_max + 1):
        value, rem = divmod(acc[n], n)
        if rem:
            raise ConsistencyError(f"Moebius inversion not integral at n={n}")
        out.append(value)
    return out


@dataclass(frozen=True)
class AsymptoticFit:
    """Growth of ``S(n) = sum_{v <= n} O(v)`` against ``K n^N``.

    ``residuals`` maps each power of ten up to ``n_max`` (and ``n_max``
    itself) to ``S(n) / n^N``.
    """

    partition: Partition
    n_max: int
    fitted_exponent: float
    K_estimate: float
    residuals: dict[int, float]


def asymptotic_fit(lam, n_max: int, data: OrbitData | None = None) -> AsymptoticFit:
    """Least-squares slope of ``log S(n)`` on ``log n`` over ``[n_max/10, n_max]``."""
    lam = as_partition(lam)
    if n_max < 1000:
        raise DomainError("asymptotic_fit needs n_max >= 1000")
    if data is None or data.n_max < n_max:
        data = dirichlet_coeffs(lam, n_max)
    N = lam.N
    lo = max(1, n_max // 10)
    ns = np.arange(lo, n_max + 1, dtype=np.float64)
    sums = np.array([float(s) for s in data.partial_sums[lo - 1:n_max]])
    slope, _ = np.polyfit(np.log(ns), np.log(sums), 1)
    residuals = {}
    d = 10
    while d <= n_max:
        residuals[d] = data.partial_sums[d - 1] / d**N
        d *= 10
    residuals[n_max] = data.partial_sums[n_max - 1] / n_max**N
    return AsymptoticFit(lam, n_max, float(slope), data.partial_sums[n_max - 1] / n_max**N,
                         residuals)


def shifted_euler_rational(m: int, a: int) -> RationalSeries:
    """Euler factor for the ``m``-th power of a map with series ``zeta(s - a)``.

    ``C_m(t/p, p^{a+1}) / prod_{i=1}^{m} (1 - p^{(a+1)i - 1} t)``. Only integer
    shifts ``a >= 0`` are supported, which keeps all coefficients integral.
    """
    if not isinstance(a, int) or a < 0:
        raise DomainError(f"shift must be a nonnegative integer, got {a!r}")
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    c = cpoly_macmahon(Partition((1,) * m)).poly
    num = c.substitute_monomials((1, -1), (0, a + 1), labels=T_P)
    return RationalSeries.from_factors(num, [(1, (a + 1) * i - 1) for i in range(1, m + 1)])


def shifted_orbit_count_prime_power(m: int, a: int, p: int, k: int) -> int:
    """Orbit count from ``F(p^k) = (sum_{j<=k} p^{(a+1)j})^m`` by Moebius inversion."""
    if not isinstance(a, int) or a < 0:
        raise DomainError(f"shift must be a nonnegative integer, got {a!r}")
    _require_prime(p)
    if k == 0:
        return 1
    base = p ** (a + 1)

    def F(j):
        return q_binomial_at(1 + j, 1, base) ** m

    value, rem = divmod(F(k) - F(k - 1), p**k)
    if rem:
        raise ConsistencyError("shifted orbit count is not an integer")
    return value


def rectangle_parameters(lam) -> tuple[int, int] | None:
    lam = as_partition(lam)
    if not is_rectangle(lam):
        return None
    return lam.parts[0], lam.m
