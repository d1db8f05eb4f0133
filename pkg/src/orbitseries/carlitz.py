"""Joint (des, maj) generating polynomials of multiset permutations.

``cpoly(lam)`` is ``C_lam(x, q) = sum_w x^des(w) q^maj(w)``. Two independent
routes are provided: brute-force enumeration of the words, and MacMahon's
identity which recovers ``C_lam`` from products of Gaussian binomials.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Iterator

from .combinatorics import (
    Partition,
    as_partition,
    check_ceiling,
    descent_set_distribution,
    is_rectangle,
)
from .errors import ConsistencyError, DivisibilityError, DomainError
from .polyalg import (
    BivarPoly,
    RationalSeries,
    exact_divide,
    monomial_ratio,
    q_binomial,
    substitute_inverse,
)


class Method(str, Enum):
    ENUMERATION = "enumeration"
    MACMAHON = "macmahon"
    TWO_PART_CLOSED_FORM = "two_part_closed_form"


@dataclass(frozen=True)
class CarlitzResult:
    partition: Partition
    poly: BivarPoly
    method: Method


def _mask_stats(mask: int) -> tuple[int, int]:
    des = maj = 0
    i = 1
    while mask:
        if mask & 1:
            des += 1
            maj += i
        mask >>= 1
        i += 1
    return des, maj


def distribution_to_poly(dist) -> BivarPoly:
    acc: dict[tuple[int, int], int] = {}
    for mask, count in dist.items():
        key = _mask_stats(mask)
        acc[key] = acc.get(key, 0) + count
    return BivarPoly(acc)


def cpoly_enum(lam, ceiling: int | None = None, workers: int | None = None) -> CarlitzResult:
    """Sum ``x^des q^maj`` over every word of ``S_lam``.

    With ``workers > 1`` the words are split by their first letter and the
    sub-tallies are merged; the result does not depend on ``workers``.
    """
    lam = as_partition(lam)
    check_ceiling(lam, ceiling)
    if workers and workers > 1 and lam.m > 1:
        from concurrent.futures import ProcessPoolExecutor
        from collections import Counter

        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_first_letter_tally,
                                  [(lam, ceiling, b) for b in range(1, lam.m + 1)]))
        dist = Counter()
        for part in parts:
            dist.update(part)
    else:
        dist = descent_set_distribution(lam, ceiling)
    return CarlitzResult(lam, distribution_to_poly(dist), Method.ENUMERATION)


def _first_letter_tally(args):
    lam, ceiling, b = args
    return descent_set_distribution(lam, ceiling, first_letter=b)


def macmahon_series(lam, x_degree: int) -> list[BivarPoly]:
    """``prod_i binom(lam_i + k, k)_q`` for ``k = 0 .. x_degree``."""
    lam = as_partition(lam)
    out = []
    for k in range(x_degree + 1):
        term = BivarPoly.constant(1)
        for part in lam.parts:
            term = term * q_binomial(part + k, k)
        out.append(term)
    return out


@lru_cache(maxsize=None)
def _cpoly_macmahon(lam: Partition) -> BivarPoly:
    N = lam.N
    # Multiply the series by prod_{i=0}^{N} (1 - x q^i), one factor at a time.
    s = [dict((j, c) for (_, j), c in t.items()) for t in macmahon_series(lam, N)]
    for i in range(N + 1):
        for k in range(N, 0, -1):
            src = s[k - 1]
            dst = s[k]
            for j, c in src.items():
                v = dst.get(j + i, 0) - c
                if v:
                    dst[j + i] = v
                else:
                    dst.pop(j + i, None)
    if s[N]:
        raise ConsistencyError(f"x^{N} coefficient of C_{lam.parts} should vanish")
    return BivarPoly({(k, j): c for k, d in enumerate(s) for j, c in d.items()})


def cpoly_macmahon(lam) -> CarlitzResult:
    """``C_lam`` from the power series ``sum_k prod_i binom(lam_i+k, k)_q x^k``.

    Multiplying by ``prod_{i=0}^{N} (1 - x q^i)`` and truncating at x-degree
    ``N`` is exact because ``deg_x C_lam <= N - 1``.
    """
    lam = as_partition(lam)
    return CarlitzResult(lam, _cpoly_macmahon(lam), Method.MACMAHON)


def cpoly(lam, method: str | Method = Method.MACMAHON, ceiling: int | None = None) -> BivarPoly:
    method = Method(method)
    if method is Method.ENUMERATION:
        return cpoly_enum(lam, ceiling).poly
    if method is Method.MACMAHON:
        return cpoly_macmahon(lam).poly
    raise DomainError("the two-part closed form only gives C(x, 1); use descent_poly")


def macmahon_rational(lam) -> RationalSeries:
    """``C_lam(x, q) / prod_{i=0}^{N} (1 - x q^i)``."""
    lam = as_partition(lam)
    return RationalSeries.from_factors(cpoly_macmahon(lam).poly, [(1, i) for i in range(lam.N + 1)])


def hadamard_factors(lam) -> list[RationalSeries]:
    """The series ``prod_{k=0}^{lam_i} 1 / (1 - q^k x)``, one per part."""
    lam = as_partition(lam)
    return [RationalSeries.from_factors(BivarPoly.constant(1), [(1, k) for k in range(part + 1)])
            for part in lam.parts]


def two_part_descent_poly(l1: int, l2: int) -> BivarPoly:
    """MacMahon's ``sum_j binom(l1, j) binom(l2, j) x^j``."""
    return BivarPoly({(j, 0): comb(l1, j) * comb(l2, j) for j in range(min(l1, l2) + 1)})


def descent_poly(lam) -> BivarPoly:
    """``C_lam(x, 1)``; closed form for two parts, otherwise MacMahon at q = 1."""
    lam = as_partition(lam)
    if lam.m == 1:
        return BivarPoly.constant(1)
    if lam.m == 2:
        return two_part_descent_poly(*lam.parts)
    return cpoly_macmahon(lam).poly.evaluate(q=1)


def charney_davis(lam) -> int:
    """``C_lam(-1, 1)``."""
    return descent_poly(lam).evaluate(x=-1, q=1)


@dataclass(frozen=True)
class FunEqResult:
    """Outcome of testing ``C(1/x, 1/q) = x^-d1 q^-d2 C(x, q)``.

    ``leading_x_coeff`` is the leading coefficient of ``C(x, 1)``; a value
    other than 1 rules out any such identity.
    """

    partition: Partition
    holds: bool
    d1: int | None
    d2: int | None
    leading_x_coeff: int

    @property
    def monic(self) -> bool:
        return self.leading_x_coeff == 1


def funeq_check(lam) -> FunEqResult:
    lam = as_partition(lam)
    c = cpoly_macmahon(lam).poly
    d = descent_poly(lam)
    lead = d.coeff(d.degree(0))
    ratio = monomial_ratio(substitute_inverse(c), c)
    holds = ratio is not None and ratio[0] == 1 and ratio[1] <= 0 and ratio[2] <= 0
    if holds and lead != 1:
        raise ConsistencyError("functional equation with non-monic descent polynomial")
    if is_rectangle(lam):
        r, m = lam.parts[0], lam.m
        expected = (1, -r * (m - 1), -(r * r) * comb(m, 2))
        if ratio != expected:
            raise ConsistencyError(f"rectangle {lam.parts}: ratio {ratio}, expected {expected}")
    if holds:
        return FunEqResult(lam, True, -ratio[1], -ratio[2], lead)
    return FunEqResult(lam, False, None, None, lead)


def x_coefficient(lam, i: int) -> BivarPoly:
    """``C^{(i)}_lam(q)``, the coefficient of ``x^i``."""
    return cpoly_macmahon(lam).poly.x_slice(i)


def parabolic_cofactor(m: int, k: int, ceiling: int | None = None) -> BivarPoly:
    """``sum x^des q^maj`` over permutations of ``[m]`` with ``k`` not a descent."""
    lam = Partition((1,) * m)
    dist = descent_set_distribution(lam, ceiling)
    bit = 1 << (k - 1)
    return distribution_to_poly({mask: c for mask, c in dist.items() if not mask & bit})


@dataclass(frozen=True)
class UnitaryReport:
    """Search result for the prescribed unitary factor ``1 + x q^e``.

    ``status`` is one of ``"factor"`` (division succeeded), ``"nonzero"``
    (``C(-1,1) != 0`` so no unitary factor can exist), ``"candidate-failed"``
    (the candidate does not divide) or ``"zero-no-candidate"`` (``C(-1,1) = 0``
    but there is no prescribed candidate; flagged for inspection).
    """

    partition: Partition
    charney_davis: int
    status: str
    factor: BivarPoly | None = None
    cofactor: BivarPoly | None = None

    def to_json(self) -> dict:
        return {
            "partition": list(self.partition.parts),
            "charney_davis": str(self.charney_davis),
            "status": self.status,
            "factor": None if self.factor is None else self.factor.to_text(),
            "cofactor": None if self.cofactor is None else self.cofactor.to_text(),
        }


def unitary_factor(lam) -> UnitaryReport:
    lam = as_partition(lam)
    cd = charney_davis(lam)
    if cd != 0:
        return UnitaryReport(lam, cd, "nonzero")
    r, m = lam.parts[0], lam.m
    if not (is_rectangle(lam) and r % 2 == 1 and m % 2 == 0):
        return UnitaryReport(lam, cd, "zero-no-candidate")
    candidate = BivarPoly({(0, 0): 1, (1, r * m // 2): 1})
    c = cpoly_macmahon(lam).poly
    try:
        cof = exact_divide(c, candidate)
    except DivisibilityError:
        return UnitaryReport(lam, cd, "candidate-failed", candidate)
    return UnitaryReport(lam, cd, "factor", candidate, cof)


def stanton_covered(l1: int, l2: int) -> bool:
    """``l1 > l2 (l2 + 1) - 1``: the alternating sum is dominated by its last term."""
    return l1 > l2 * (l2 + 1) - 1


@dataclass
class ScanRow:
    lambda1: int
    lambda2: int
    value: int
    stanton_covered: bool


@dataclass
class ScanReport:
    max_N: int
    rows: list[ScanRow] = field(default_factory=list)

    @property
    def zeros(self) -> list[ScanRow]:
        return [row for row in self.rows if row.value == 0]

    @property
    def stanton_count(self) -> int:
        return sum(row.stanton_covered for row in self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        write_scan_csv(self.rows, buf)
        return buf.getvalue()


def iter_conjecture_scan(max_N: int) -> Iterator[ScanRow]:
    """Rows for every pair ``l1 > l2 >= 1`` with ``l1 + l2 <= max_N``."""
    if max_N < 3:
        raise DomainError("max_N must be at least 3")
    for n in range(3, max_N + 1):
        for l2 in range(1, (n - 1) // 2 + 1):
            l1 = n - l2
            if l1 <= l2:
                continue
            value = sum((-1) ** j * comb(l1, j) * comb(l2, j) for j in range(l2 + 1))
            yield ScanRow(l1, l2, value, stanton_covered(l1, l2))


def conjecture_scan(max_N: int) -> ScanReport:
    return ScanReport(max_N, list(iter_conjecture_scan(max_N)))


SCAN_HEADER = ("lambda1", "lambda2", "value", "stanton_covered")


def write_scan_csv(rows, stream, header: bool = True) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    if header:
        writer.writerow(SCAN_HEADER)
    for row in rows:
        writer.writerow([row.lambda1, row.lambda2, str(row.value), int(row.stanton_covered)])

