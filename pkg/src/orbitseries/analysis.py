"""Natural-boundary data, Igusa-type expansions and reduced series.

``W^lam(X, Y) = C_lam(X^-1 Y, X)`` collects a monomial ``X^{maj-des} Y^des``
per word. Its Newton data and the polynomials ``B_n(U)`` are the inputs to
the du Sautoy--Woodward classification of Euler products; the
classification itself is not reimplemented here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .carlitz import cpoly_macmahon, descent_poly, unitary_factor
from .combinatorics import (
    Partition,
    as_partition,
    descent_set_distribution,
    multinomial,
)
from .errors import ConsistencyError, DomainError
from .orbit import euler_factor, shifted_euler_rational, _require_prime
from .polyalg import BivarPoly, RationalSeries, series_coeffs

XY = ("X", "Y")
U_LABELS = ("U", "_")
T_LABELS = ("t", "_")
OMEGA = -1


def w_poly(lam) -> BivarPoly:
    """``W^lam(X, Y) = sum_w X^{maj(w) - des(w)} Y^{des(w)}``."""
    c = cpoly_macmahon(as_partition(lam)).poly
    # x^i q^j -> X^{j-i} Y^i
    return c.substitute_monomials((-1, 1), (1, 0), labels=XY)


def _nonconstant_terms(w: BivarPoly):
    return [(i, k, c) for (i, k), c in w.items() if k >= 1]


def newton_data(lam) -> tuple[Fraction, Fraction]:
    """``(alpha, beta)`` with ``alpha = max (i+1)/k`` and ``beta = max i/k``.

    Maxima run over the monomials ``X^i Y^k`` of ``W^lam`` with ``k >= 1``;
    both are attained at ``(i, k) = (N-2, 1)``.
    """
    lam = as_partition(lam)
    if lam.m < 2:
        raise DomainError("newton_data needs at least two parts")
    terms = _nonconstant_terms(w_poly(lam))
    alpha = max(Fraction(i + 1, k) for i, k, _ in terms)
    beta = max(Fraction(i, k) for i, k, _ in terms)
    N = lam.N
    if alpha != N - 1 or beta != N - 2:
        raise ConsistencyError(f"{lam.parts}: alpha={alpha}, beta={beta}, expected {N-1}, {N-2}")
    at_alpha = {(i, k) for i, k, _ in terms if Fraction(i + 1, k) == alpha}
    at_beta = {(i, k) for i, k, _ in terms if Fraction(i, k) == beta}
    if (N - 2, 1) not in at_alpha or (N - 2, 1) not in at_beta:
        raise ConsistencyError(f"{lam.parts}: maxima not attained at (N-2, 1)")
    return alpha, beta


def ghost_factor(lam) -> BivarPoly:
    """First ghost factor ``1 + (m-1) U`` with ``U = X^beta Y``.

    Built from the monomials on the line through ``(0, 0)`` and ``(beta, 1)``.
    """
    lam = as_partition(lam)
    _, beta = newton_data(lam)
    w = w_poly(lam)
    on_line = {(i, k): c for (i, k), c in w.items() if i == beta * k}
    if set(on_line) != {(0, 0), (int(beta), 1)}:
        raise ConsistencyError(f"{lam.parts}: ghost line meets {sorted(on_line)}")
    if on_line[(int(beta), 1)] != lam.m - 1:
        raise ConsistencyError(f"{lam.parts}: c_(beta,1) = {on_line[(int(beta), 1)]} != m-1")
    return BivarPoly({(k, 0): c for (_, k), c in on_line.items()}, U_LABELS)


def b_polynomials(lam, n_max: int) -> list[BivarPoly]:
    """``B_n(U) = sum_{beta k - i = n} c_{i,k} U^k`` for ``n = 0 .. n_max`` (two parts only)."""
    lam = as_partition(lam)
    if lam.m != 2:
        raise DomainError("B-polynomials are only used for partitions with two parts")
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    _, beta = newton_data(lam)
    beta = int(beta)
    buckets: dict[int, dict] = {}
    for (i, k), c in w_poly(lam).items():
        n = beta * k - i
        if 0 <= n <= n_max:
            buckets.setdefault(n, {})[(k, 0)] = c
    return [BivarPoly(buckets.get(n, {}), U_LABELS) for n in range(n_max + 1)]


def gamma_index(b_polys: list[BivarPoly], omega: int = OMEGA) -> int | None:
    """Least ``n`` with ``B_n(omega) != 0``, or None within the given range."""
    for n, b in enumerate(b_polys):
        if b.evaluate(omega, 0) != 0:
            return n
    return None


@dataclass
class BoundaryData:
    """Boundary-analysis inputs for ``d_{T_lam}`` at ``Re(s) = N - 2``.

    ``type`` is ``"I"`` for more than two parts, ``"II"`` for two equal parts
    and ``"conditional-II"`` for two unequal parts, where the argument needs
    the nonvanishing of ``C_lam(-1, 1)``.
    """

    partition: Partition
    type: str
    w_poly: BivarPoly
    alpha: Fraction
    beta: Fraction
    ghost_factor: BivarPoly
    boundary: int
    gamma: int | None = None
    b_polys: list[BivarPoly] = field(default_factory=list)
    b_gamma_at_omega: int | None = None
    omega: int = OMEGA
    unitary_factor: BivarPoly | None = None
    conjecture_dependency: bool = False
    charney_davis: int | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "partition": list(self.partition.parts),
            "type": self.type,
            "boundary_re_s": self.boundary,
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "ghost_factor": self.ghost_factor.to_text(),
            "gamma": self.gamma,
            "b_polys": [b.to_text() for b in self.b_polys],
            "b_gamma_at_omega": None if self.b_gamma_at_omega is None else str(self.b_gamma_at_omega),
            "omega": self.omega,
            "unitary_factor": None if self.unitary_factor is None else self.unitary_factor.to_text(),
            "charney_davis": None if self.charney_davis is None else str(self.charney_davis),
            "conjecture_dependency": self.conjecture_dependency,
            "notes": list(self.notes),
        }


def natural_boundary_report(lam, b_degree: int = 2) -> BoundaryData:
    lam = as_partition(lam)
    if lam.m < 2:
        raise DomainError("one-part partitions continue to the whole plane")
    if lam.parts == (1, 1):
        raise DomainError("(1,1) continues to the whole plane")
    alpha, beta = newton_data(lam)
    ghost = ghost_factor(lam)
    w = w_poly(lam)
    report = BoundaryData(lam, "I", w, alpha, beta, ghost, lam.N - 2)
    rep = unitary_factor(lam)
    report.charney_davis = rep.charney_davis
    if rep.factor is not None:
        # 1 + x q^e  ->  1 + X^{e-1} Y
        report.unitary_factor = rep.factor.substitute_monomials((-1, 1), (1, 0), labels=XY)
    if lam.m > 2:
        report.notes.append(f"ghost factor {ghost} is not cyclotomic")
        return report
    l1, l2 = lam.parts
    b = b_polynomials(lam, b_degree)
    g = gamma_index(b[1:])
    report.b_polys = b
    report.gamma = None if g is None else g + 1
    report.b_gamma_at_omega = None if g is None else b[g + 1].evaluate(OMEGA, 0)
    if report.b_gamma_at_omega is None or report.b_gamma_at_omega >= 0:
        raise ConsistencyError(f"{lam.parts}: B_gamma(-1) = {report.b_gamma_at_omega}")
    if l1 == l2:
        report.type = "II"
        if report.unitary_factor is not None:
            exp = l1 - 1
            if not beta > exp:
                raise ConsistencyError(f"{lam.parts}: beta={beta} not above {exp}")
            report.notes.append(f"unitary factor {report.unitary_factor} removed; beta={beta} > {exp}")
        else:
            report.notes.append(f"no unitary factor: C(-1,1) = {rep.charney_davis}")
    else:
        report.type = "conditional-II"
        report.conjecture_dependency = True
        report.notes.append(f"needs C(-1,1) != 0 for unequal parts; here {rep.charney_davis}")
    return report


@dataclass(frozen=True)
class IgusaCoeffs:
    """``nu[I] = #{w : Des(w) subset of I}`` for every ``I`` in ``[N-1]``.

    Keys are sorted tuples.
    """

    partition: Partition
    nu: dict[tuple[int, ...], int]


def _mask_tuple(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def descent_class_sizes(lam, ceiling: int | None = None) -> dict[tuple[int, ...], int]:
    """``beta[I] = #{w : Des(w) = I}``, every subset of ``[N-1]`` listed."""
    lam = as_partition(lam)
    dist = descent_set_distribution(lam, ceiling)
    n = max(lam.N - 1, 0)
    return {_mask_tuple(mask): dist.get(mask, 0) for mask in range(1 << n)}


def nu_coefficients(lam, ceiling: int | None = None) -> IgusaCoeffs:
    lam = as_partition(lam)
    n = max(lam.N - 1, 0)
    dist = descent_set_distribution(lam, ceiling)
    table = [0] * (1 << n)
    for mask, c in dist.items():
        table[mask] += c
    # subset-sum (zeta) transform over the Boolean lattice
    for bit in range(n):
        step = 1 << bit
        for mask in range(1 << n):
            if mask & step:
                table[mask] += table[mask ^ step]
    return IgusaCoeffs(lam, {_mask_tuple(mask): table[mask] for mask in range(1 << n)})


def exact_descent_counts(nu: IgusaCoeffs) -> dict[tuple[int, ...], int]:
    """Inclusion--exclusion: ``#{Des = I} = sum_{J in I} (-1)^{|I - J|} nu[J]``."""
    out = {}
    for I in nu.nu:
        total = 0
        for r in range(len(I) + 1):
            for J in combinations(I, r):
                total += (-1) ** (len(I) - r) * nu.nu[J]
        out[I] = total
    return out


def _geometric(p: int, e: int, K: int) -> list[int]:
    """Series of ``1 / (1 - p^e t)`` to degree K."""
    w = p**e
    return [w**k for k in range(K + 1)]


def _mul(a: list[int], b: list[int], K: int) -> list[int]:
    out = [0] * (K + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(K + 1 - i):
                out[i + j] += x * b[j]
    return out


def igusa_series(lam, p: int, K: int, ceiling: int | None = None) -> list[int]:
    """Expand ``(1/(1-p^{N-1} t)) sum_I nu_I prod_{i in I} p^{i-1} t / (1 - p^{i-1} t)``."""
    lam = as_partition(lam)
    nu = nu_coefficients(lam, ceiling)
    N = lam.N
    total = [0] * (K + 1)
    for I, v in nu.nu.items():
        term = [1] + [0] * K
        for i in I:
            g = _geometric(p, i - 1, K)
            term = _mul(term, [0] + [p ** (i - 1) * c for c in g[:K]], K)
        total = [a + v * b for a, b in zip(total, term)]
    return _mul(total, _geometric(p, N - 1, K), K)


def igusa_check(lam, p: int, K: int, ceiling: int | None = None) -> bool:
    """True iff the Igusa-form expansion equals the Euler factor to degree K."""
    _require_prime(p)
    return igusa_series(lam, p, K, ceiling) == euler_factor(lam, p).series(K)


def shifted_igusa_series(m: int, a: int, p: int, K: int) -> list[int]:
    """Multinomial Igusa form of the shifted Euler factor, to degree K."""
    _require_prime(p)
    b = a + 1
    total = [0] * (K + 1)
    for r in range(m):
        for I in combinations(range(1, m), r):
            coeff = multinomial([j - i for i, j in zip((0,) + I, I + (m,))])
            term = [1] + [0] * K
            for i in I:
                e = b * i - 1
                g = _geometric(p, e, K)
                term = _mul(term, [0] + [p**e * c for c in g[:K]], K)
            total = [x + coeff * y for x, y in zip(total, term)]
    return _mul(total, _geometric(p, b * m - 1, K), K)


def shifted_series(m: int, a: int, p: int, K: int) -> list[int]:
    _require_prime(p)
    return series_coeffs(shifted_euler_rational(m, a), K, q=p)


def reduced_series(lam) -> RationalSeries:
    """``C_lam(t, 1) / (1 - t)^N``."""
    lam = as_partition(lam)
    return RationalSeries(descent_poly(lam).relabel(T_LABELS), (((1, 0), lam.N),))


def surjections(n: int, k: int) -> int:
    """Surjections from an n-set onto a k-set, by inclusion--exclusion."""
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))


def f_vector_sd(m: int) -> list[int]:
    """``(f_{-1}, f_0, ..., f_{m-1})`` of the barycentric subdivision of the (m-1)-simplex.

    A face with ``i`` vertices is a chain ``S_1 < ... < S_i`` of nonempty
    subsets of ``[m]``; it is an ordered set partition of ``[m]`` into the
    ``i`` differences plus a possibly empty remainder.
    """
    if m < 1:
        raise DomainError("m must be positive")
    return [1] + [surjections(m, i) + surjections(m, i + 1) for i in range(1, m + 1)]


def f_vector_sd_chains(m: int) -> list[int]:
    """Same f-vector by listing every chain of nonempty subsets (small m only)."""
    if m < 1:
        raise DomainError("m must be positive")
    if m > 6:
        raise DomainError("chain enumeration is limited to m <= 6")
    full = (1 << m) - 1
    counts = Counter()

    def extend(top, length):
        counts[length] += 1
        # proper supersets of ``top``
        free = full & ~top
        sub = free
        while sub:
            extend(top | sub, length + 1)
            sub = (sub - 1) & free

    counts[0] = 1
    for s in range(1, full + 1):
        extend(s, 1)
    return [counts[i] for i in range(m + 1)]


def h_vector(f: list[int]) -> list[int]:
    """``sum_i h_i t^i = sum_i f_{i-1} t^i (1 - t)^{d-i}`` with ``d = len(f) - 1``."""
    d = len(f) - 1
    h = [0] * (d + 1)
    for i, fi in enumerate(f):
        for j in range(d - i + 1):
            h[i + j] += fi * comb(d - i, j) * (-1) ** j
    return h


def hilbert_sd_simplex(m: int) -> RationalSeries:
    """Hilbert series ``h(t) / (1 - t)^m`` of the face ring of ``sd(Delta_{m-1})``."""
    h = h_vector(f_vector_sd(m))
    num = BivarPoly({(i, 0): c for i, c in enumerate(h)}, T_LABELS)
    return RationalSeries(num, (((1, 0), m),))


def stanton_summands_increase(l1: int, l2: int) -> bool:
    """Whether ``binom(l1, j) binom(l2, j)`` strictly increases in ``j``."""
    vals = [comb(l1, j) * comb(l2, j) for j in range(l2 + 1)]
    return all(a < b for a, b in zip(vals, vals[1:]))

