"""Exact bivariate Laurent polynomials over the integers and rational series.

A :class:`BivarPoly` maps exponent pairs ``(i, j)`` (powers of the first and
second variable) to nonzero Python integers. Variable names are carried for
display only and never take part in equality.

A :class:`RationalSeries` keeps its denominator as a list of factors
``(1 - x^a q^b)`` and is expanded in the x-adic topology.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import DivisibilityError, DomainError

Exponent = tuple[int, int]


class BivarPoly:
    """Immutable polynomial in two variables with integer coefficients."""

    __slots__ = ("_terms", "_hash", "labels")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = (),
                 labels: tuple[str, str] = ("x", "q")):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for (i, j), c in items:
            if c:
                key = (int(i), int(j))
                acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None
        self.labels = tuple(labels)

    # construction helpers

    @classmethod
    def constant(cls, c: int, labels=("x", "q")) -> "BivarPoly":
        return cls({(0, 0): c}, labels)

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1, labels=("x", "q")) -> "BivarPoly":
        return cls({(i, j): c}, labels)

    @classmethod
    def from_x_slices(cls, slices: Sequence["BivarPoly"], labels=("x", "q")) -> "BivarPoly":
        """Inverse of :meth:`x_slices`: ``sum_i slices[i](q) * x^i``."""
        return cls(((i, j), c) for i, s in enumerate(slices) for (_, j), c in s.items())\
            .relabel(labels)

    def relabel(self, labels) -> "BivarPoly":
        out = BivarPoly.__new__(BivarPoly)
        out._terms = self._terms
        out._hash = self._hash
        out.labels = tuple(labels)
        return out

    # container protocol

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, exp: Exponent) -> int:
        return self._terms.get(exp, 0)

    def coeff(self, i: int, j: int = 0) -> int:
        return self._terms.get((i, j), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # arithmetic

    def _coerce(self, other) -> "BivarPoly":
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, int):
            return BivarPoly.constant(other, self.labels)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        return BivarPoly(acc, self.labels)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -v for k, v in self._terms.items()}, self.labels)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return BivarPoly({k: v * other for k, v in self._terms.items()}, self.labels)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        acc: dict[Exponent, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return BivarPoly(acc, self.labels)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative powers of polynomials are not polynomials")
        out = BivarPoly.constant(1, self.labels)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, di: int, dj: int) -> "BivarPoly":
        """Multiply by the monomial ``x^di q^dj``."""
        return BivarPoly({(i + di, j + dj): c for (i, j), c in self._terms.items()}, self.labels)

    def leading_term(self) -> tuple[Exponent, int]:
        """Largest exponent in lexicographic order and its coefficient."""
        if not self._terms:
            raise DomainError("the zero polynomial has no leading term")
        k = max(self._terms)
        return k, self._terms[k]

    def trailing_term(self) -> tuple[Exponent, int]:
        if not self._terms:
            raise DomainError("the zero polynomial has no trailing term")
        k = min(self._terms)
        return k, self._terms[k]

    def is_laurent(self) -> bool:
        """True if some exponent is negative."""
        return any(i < 0 or j < 0 for i, j in self._terms)

    def divmod_exact(self, divisor: "BivarPoly") -> "BivarPoly":
        return exact_divide(self, divisor)

    # degree data and slicing

    def degree(self, var: int = 0) -> int:
        if not self._terms:
            return -1
        return max(k[var] for k in self._terms)

    def min_degree(self, var: int = 0) -> int:
        if not self._terms:
            return 0
        return min(k[var] for k in self._terms)

    def x_slice(self, i: int) -> "BivarPoly":
        """Coefficient of ``x^i`` as a polynomial in the second variable."""
        return BivarPoly({(0, j): c for (a, j), c in self._terms.items() if a == i}, self.labels)

    def x_slices(self) -> list["BivarPoly"]:
        if not self._terms:
            return []
        if self.min_degree(0) < 0:
            raise DomainError("x_slices needs nonnegative x-exponents")
        out = [BivarPoly((), self.labels) for _ in range(self.degree(0) + 1)]
        buckets: dict[int, dict] = {}
        for (i, j), c in self._terms.items():
            buckets.setdefault(i, {})[(0, j)] = c
        for i, b in buckets.items():
            out[i] = BivarPoly(b, self.labels)
        return out

    def truncate(self, x_degree: int) -> "BivarPoly":
        return BivarPoly({k: v for k, v in self._terms.items() if k[0] <= x_degree}, self.labels)

    # substitutions

    def evaluate(self, x=None, q=None):
        """Substitute numbers for one or both variables.

        Returns a number when both are given and a :class:`BivarPoly` in the
        remaining variable otherwise. Negative exponents need an invertible
        value; then :class:`~fractions.Fraction` is used.
        """
        def power(v, e):
            return v**e if e >= 0 else Fraction(1, v) ** (-e)

        if x is not None and q is not None:
            total = 0
            for (i, j), c in self._terms.items():
                total += c * power(x, i) * power(q, j)
            if isinstance(total, Fraction) and total.denominator == 1:
                return int(total)
            return total
        if x is None and q is None:
            return self
        acc: dict[Exponent, object] = {}
        for (i, j), c in self._terms.items():
            if q is not None:
                key, val = (i, 0), c * power(q, j)
            else:
                key, val = (0, j), c * power(x, i)
            acc[key] = acc.get(key, 0) + val
        for k, v in acc.items():
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise DomainError("partial evaluation produced a non-integral coefficient")
                acc[k] = int(v)
        return BivarPoly(acc, self.labels)

    def substitute_monomials(self, x_to: Exponent, q_to: Exponent, labels=None) -> "BivarPoly":
        """Replace ``x -> X^a Y^b`` and ``q -> X^c Y^d`` with ``x_to=(a,b)``, ``q_to=(c,d)``."""
        (a, b), (c, d) = x_to, q_to
        return BivarPoly(
            (((a * i + c * j, b * i + d * j), v) for (i, j), v in self._terms.items()),
            labels or self.labels,
        )

    def swap(self) -> "BivarPoly":
        return BivarPoly({(j, i): c for (i, j), c in self._terms.items()},
                         (self.labels[1], self.labels[0]))

    # serialization

    def to_text(self) -> str:
        """Canonical text form, terms in lexicographic exponent order."""
        if not self._terms:
            return "0"
        xl, ql = self.labels
        pieces = []
        for idx, (i, j) in enumerate(sorted(self._terms)):
            c = self._terms[(i, j)]
            factors = []
            for name, e in ((xl, i), (ql, j)):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if factors:
                body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
            else:
                body = str(mag)
            if idx == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    __str__ = to_text

    def __repr__(self):
        return f"BivarPoly({self.to_text()!r})"

    def to_json(self) -> list[list]:
        return [[i, j, str(self._terms[(i, j)])] for i, j in sorted(self._terms)]

    @classmethod
    def from_json(cls, data, labels=("x", "q")) -> "BivarPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls((((int(i), int(j)), int(c)) for i, j, c in data), labels)


def poly(spec: Mapping[Exponent, int], labels=("x", "q")) -> BivarPoly:
    return BivarPoly(spec, labels)


X = BivarPoly.monomial(1, 0)
Q = BivarPoly.monomial(0, 1)
ONE = BivarPoly.constant(1)


def add(p: BivarPoly, r: BivarPoly) -> BivarPoly:
    return p + r


def mul(p: BivarPoly, r: BivarPoly) -> BivarPoly:
    return p * r


def exact_divide(p: BivarPoly, r: BivarPoly) -> BivarPoly:
    """Quotient of ``p`` by ``r`` in ``Z[x, q]``; raises on a nonzero remainder.

    Lexicographic leading-term division. Both operands must be honest
    polynomials (no negative exponents), which bounds the loop.
    """
    if r.is_zero():
        raise DivisibilityError("division by the zero polynomial")
    if p.is_laurent() or r.is_laurent():
        raise DomainError("exact_divide works on polynomials without negative exponents")
    (ri, rj), rc = r.leading_term()
    rest = dict(p.items())
    quot: dict[Exponent, int] = {}
    rterms = list(r.items())
    while rest:
        (pi, pj) = max(rest)
        pc = rest[(pi, pj)]
        di, dj = pi - ri, pj - rj
        if di < 0 or dj < 0 or pc % rc:
            raise DivisibilityError(f"{r} does not divide {p}")
        f = pc // rc
        quot[(di, dj)] = f
        for (i, j), c in rterms:
            k = (i + di, j + dj)
            v = rest.get(k, 0) - f * c
            if v:
                rest[k] = v
            else:
                rest.pop(k, None)
    return BivarPoly(quot, p.labels)


def divides(r: BivarPoly, p: BivarPoly) -> bool:
    try:
        exact_divide(p, r)
    except DivisibilityError:
        return False
    return True


def substitute_inverse(p: BivarPoly) -> BivarPoly:
    """``p(x^-1, q^-1)`` as a Laurent polynomial."""
    return BivarPoly({(-i, -j): c for (i, j), c in p.items()}, p.labels)


def monomial_ratio(a: BivarPoly, b: BivarPoly):
    """Return ``(c, i, j)`` with ``a == c * x^i q^j * b``, or ``None``.

    ``c`` is an integer or a :class:`~fractions.Fraction`.
    """
    if a.is_zero() or b.is_zero():
        return None
    if len(a) != len(b):
        return None
    (ai, aj), ac = a.leading_term()
    (bi, bj), bc = b.leading_term()
    c = Fraction(ac, bc)
    di, dj = ai - bi, aj - bj
    for (i, j), v in b.items():
        if a[(i + di, j + dj)] != c * v:
            return None
    if c.denominator == 1:
        c = int(c)
    return c, di, dj


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> BivarPoly:
    """Gaussian binomial ``prod_{i=1}^b (q^{a-b+i} - 1) / (q^i - 1)`` in the q-slot.

    Each partial product is itself a Gaussian binomial, so every step is an
    exact division in ``Z[q]``.
    """
    if not (isinstance(a, int) and isinstance(b, int)) or b < 0 or a < b:
        raise DomainError(f"q_binomial needs a >= b >= 0, got ({a}, {b})")
    value = ONE
    for i in range(1, b + 1):
        num = BivarPoly({(0, a - b + i): 1, (0, 0): -1})
        den = BivarPoly({(0, i): 1, (0, 0): -1})
        value = exact_divide(value * num, den)
    return value


def q_binomial_at(a: int, b: int, q: int) -> int:
    """Integer value of the Gaussian binomial at an integer ``q``."""
    if not (isinstance(a, int) and isinstance(b, int)) or b < 0 or a < b:
        raise DomainError(f"q_binomial needs a >= b >= 0, got ({a}, {b})")
    if q == 1:
        from math import comb
        return comb(a, b)
    b = min(b, a - b)
    value = 1
    for i in range(1, b + 1):
        value = value * (q ** (a - b + i) - 1)
        value //= q**i - 1
    return value


@dataclass(frozen=True)
class RationalSeries:
    """``numerator / prod (1 - x^a q^b)^mult`` expanded as a power series in x.

    ``denominator`` is a tuple of ``((a, b), multiplicity)`` pairs.
    """

    numerator: BivarPoly
    denominator: tuple[tuple[Exponent, int], ...] = field(default=())

    def __post_init__(self):
        merged: dict[Exponent, int] = {}
        for (a, b), mult in self.denominator:
            if (a, b) == (0, 0):
                raise DomainError("denominator factor 1 - x^0 q^0 vanishes")
            if mult < 0:
                raise DomainError("negative multiplicity in denominator")
            if mult:
                merged[(a, b)] = merged.get((a, b), 0) + mult
        object.__setattr__(self, "denominator", tuple(sorted(merged.items())))

    @classmethod
    def from_factors(cls, numerator: BivarPoly, factors: Iterable[Exponent]) -> "RationalSeries":
        """Build from a flat list of ``(a, b)`` factors, repeats allowed."""
        return cls(numerator, tuple(((a, b), 1) for a, b in factors))

    def factors(self) -> list[Exponent]:
        return [ab for ab, mult in self.denominator for _ in range(mult)]

    def denominator_poly(self) -> BivarPoly:
        out = BivarPoly.constant(1, self.numerator.labels)
        for a, b in self.factors():
            out = out * BivarPoly({(0, 0): 1, (a, b): -1}, self.numerator.labels)
        return out

    def is_expandable(self) -> bool:
        return all(a >= 1 for (a, _), _m in self.denominator)

    def cross_equal(self, other: "RationalSeries") -> bool:
        """Equality as rational functions, by cross multiplication."""
        return self.numerator * other.denominator_poly() == other.numerator * self.denominator_poly()

    def series_coeffs(self, x_degree: int, q=None) -> list:
        return series_coeffs(self, x_degree, q)

    def to_text(self) -> str:
        xl, ql = self.numerator.labels
        dens = []
        for (a, b), mult in self.denominator:
            mono = BivarPoly.monomial(a, b, labels=(xl, ql)).to_text()
            f = f"(1 - {mono})"
            dens.append(f + (f"^{mult}" if mult > 1 else ""))
        num = self.numerator.to_text()
        if not dens:
            return num
        return f"({num}) / ({' * '.join(dens)})"

    def to_json(self) -> dict:
        return {
            "numerator": self.numerator.to_json(),
            "denominator_factors": [[a, b, mult] for (a, b), mult in self.denominator],
        }


def _poly_to_qdicts(p: BivarPoly, K: int) -> list[dict[int, int]]:
    out: list[dict[int, int]] = [{} for _ in range(K + 1)]
    for (i, j), c in p.items():
        if i < 0:
            raise DomainError("series numerator must not have negative x-exponents")
        if i <= K:
            out[i][j] = c
    return out


def series_coeffs(f: RationalSeries, x_degree: int, q=None) -> list:
    """Coefficients of ``x^0 .. x^K`` of the x-adic expansion of ``f``.

    Without ``q`` each coefficient is a :class:`BivarPoly` in the second
    variable. With an integer ``q`` the second variable is specialized first
    and integers are returned.
    """
    K = x_degree
    if not isinstance(K, int) or K < 0:
        raise DomainError(f"truncation degree must be a nonnegative integer, got {K!r}")
    if not f.is_expandable():
        raise DomainError("denominator factor with no x-power: not x-adically expandable")
    labels = f.numerator.labels
    if q is not None:
        s = [0] * (K + 1)
        for (i, j), c in f.numerator.items():
            if i < 0:
                raise DomainError("series numerator must not have negative x-exponents")
            if i <= K:
                s[i] += c * (q**j if j >= 0 else Fraction(1, q**-j))
        for a, b in f.factors():
            w = q**b if b >= 0 else Fraction(1, q**-b)
            for k in range(a, K + 1):
                s[k] += w * s[k - a]
        return [int(v) if isinstance(v, Fraction) and v.denominator == 1 else v for v in s]
    s = _poly_to_qdicts(f.numerator, K)
    for a, b in f.factors():
        for k in range(a, K + 1):
            src = s[k - a]
            if not src:
                continue
            dst = s[k]
            for j, c in src.items():
                v = dst.get(j + b, 0) + c
                if v:
                    dst[j + b] = v
                else:
                    dst.pop(j + b, None)
    return [BivarPoly({(0, j): c for j, c in d.items()}, labels) for d in s]


def hadamard_truncated(series: Sequence[RationalSeries], x_degree: int, q=None) -> list:
    """Coefficientwise product of the truncated expansions of ``series``."""
    if not series:
        raise DomainError("Hadamard product of an empty list")
    out = None
    for f in series:
        coeffs = series_coeffs(f, x_degree, q)
        out = coeffs if out is None else [a * b for a, b in zip(out, coeffs)]
    return out


def multiply_truncated(p: Sequence, r: Sequence, x_degree: int) -> list:
    """Product of two coefficient lists, truncated at ``x_degree``."""
    out = [None] * (x_degree + 1)
    for k in range(x_degree + 1):
        acc = 0
        for i in range(k + 1):
            if i < len(p) and k - i < len(r):
                acc = acc + p[i] * r[k - i]
        out[k] = acc
    return out
