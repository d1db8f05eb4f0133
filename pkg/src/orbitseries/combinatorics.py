"""Partitions, multiset permutations and their descent statistics.

Words are tuples over the alphabet ``1..m`` where letter ``i`` occurs
``parts[i-1]`` times. Letters are compared as integers, so ``m > ... > 1``.
"""

from __future__ import annotations

import os
import re
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .errors import DomainError, ResourceCeilingError, ValidationError

DEFAULT_CEILING = 10**8
CEILING_ENV = "ORBITSERIES_CEILING"


def default_ceiling() -> int:
    """Enumeration ceiling, read from ``ORBITSERIES_CEILING`` when set."""
    raw = os.environ.get(CEILING_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(f"{CEILING_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise ValidationError(f"{CEILING_ENV} must be positive")
    return value


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = self.parts
        if not parts:
            raise ValidationError("a partition needs at least one part")
        if any(not isinstance(p, int) or isinstance(p, bool) or p < 1 for p in parts):
            raise ValidationError(f"parts must be positive integers, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValidationError(f"parts must be weakly decreasing, got {parts}")

    @property
    def N(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return ",".join(map(str, self.parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,3,1"`` or the rectangle shorthand ``"2^3"``."""
        text = text.strip()
        rect = re.fullmatch(r"(\d+)\s*\^\s*(\d+)", text)
        if rect:
            r, m = int(rect.group(1)), int(rect.group(2))
            if m < 1:
                raise ValidationError(f"rectangle {text!r} needs at least one part")
            return make_partition([r] * m)
        pieces = [p.strip() for p in text.split(",")]
        if not pieces or any(not re.fullmatch(r"[+-]?\d+", p) for p in pieces):
            raise ValidationError(f"cannot parse partition {text!r}")
        return make_partition([int(p) for p in pieces])


def make_partition(parts: Sequence[int]) -> Partition:
    """Sort ``parts`` into a partition; the order of the input is irrelevant."""
    parts = list(parts)
    if not parts:
        raise ValidationError("a partition needs at least one part")
    for p in parts:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValidationError(f"parts must be positive integers, got {parts}")
    return Partition(tuple(sorted(parts, reverse=True)))


def as_partition(lam) -> Partition:
    if isinstance(lam, Partition):
        return lam
    if isinstance(lam, str):
        return Partition.parse(lam)
    return make_partition(lam)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 1:
        return

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, n):
        yield Partition(parts)


def dual(lam: Partition) -> Partition:
    """Conjugate partition: ``mu_s = #{i : lam_i >= s}``."""
    lam = as_partition(lam)
    return Partition(tuple(sum(1 for p in lam.parts if p >= s) for s in range(1, lam.parts[0] + 1)))


def is_rectangle(lam: Partition) -> bool:
    lam = as_partition(lam)
    return lam.parts[0] == lam.parts[-1]


def multinomial(counts: Sequence[int]) -> int:
    out = factorial(sum(counts))
    for c in counts:
        out //= factorial(c)
    return out


def word_count(lam: Partition) -> int:
    """``|S_lambda| = N! / prod(lam_i!)``."""
    return multinomial(as_partition(lam).parts)


def check_ceiling(lam: Partition, ceiling: int | None = None) -> int:
    """Raise :class:`ResourceCeilingError` if ``|S_lambda|`` exceeds the ceiling."""
    count = word_count(lam)
    limit = default_ceiling() if ceiling is None else ceiling
    if count > limit:
        raise ResourceCeilingError(count, limit)
    return count


@dataclass(frozen=True)
class MultisetWord:
    """A multiset permutation of ``partition``."""

    letters: tuple[int, ...]
    partition: Partition

    def __post_init__(self):
        lam = self.partition
        counts = Counter(self.letters)
        if set(counts) - set(range(1, lam.m + 1)):
            raise ValidationError(f"letters {self.letters} outside 1..{lam.m}")
        if tuple(counts.get(i, 0) for i in range(1, lam.m + 1)) != lam.parts:
            raise ValidationError(f"word {self.letters} does not have content {lam.parts}")

    def __str__(self):
        if self.partition.m < 10:
            return "".join(map(str, self.letters))
        return "-".join(map(str, self.letters))

    def __len__(self):
        return len(self.letters)


def word(letters, lam=None) -> MultisetWord:
    """Build a word from a string like ``"1212312"`` or a sequence of letters.

    Without ``lam`` the content of the word is taken as the partition, which
    requires the letter counts to be weakly decreasing.
    """
    if isinstance(letters, str):
        letters = [int(c) for c in letters]
    letters = tuple(letters)
    if lam is None:
        counts = Counter(letters)
        m = max(letters) if letters else 0
        lam = Partition(tuple(counts.get(i, 0) for i in range(1, m + 1)))
    return MultisetWord(letters, as_partition(lam))


def trivial_word(lam: Partition) -> MultisetWord:
    lam = as_partition(lam)
    letters = tuple(i + 1 for i, p in enumerate(lam.parts) for _ in range(p))
    return MultisetWord(letters, lam)


def enumerate_words(lam: Partition) -> Iterator[MultisetWord]:
    """Yield every word of ``S_lambda`` once, in lexicographic order.

    The sweep keeps a single mutable buffer so memory is O(N).
    """
    lam = as_partition(lam)
    a = list(trivial_word(lam).letters)
    n = len(a)
    while True:
        yield MultisetWord(tuple(a), lam)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


@dataclass(frozen=True)
class DescentData:
    descent_set: frozenset[int]
    des: int
    maj: int


def descent_set(letters: Sequence[int]) -> frozenset[int]:
    return frozenset(i + 1 for i in range(len(letters) - 1) if letters[i] > letters[i + 1])


def descent_data(w: MultisetWord | Sequence[int] | str) -> DescentData:
    letters = w.letters if isinstance(w, MultisetWord) else tuple(int(c) for c in w)
    d = descent_set(letters)
    return DescentData(d, len(d), sum(d))


def circ(w: MultisetWord) -> MultisetWord:
    """Reverse the word and replace each letter ``a`` by ``m + 1 - a``.

    Only defined on rectangles ``(r^m)``, where it is an involution of the
    word set.
    """
    lam = w.partition
    if not is_rectangle(lam):
        raise DomainError(f"circ is defined only for rectangles, not {lam.parts}")
    m = lam.m
    return MultisetWord(tuple(m + 1 - a for a in reversed(w.letters)), lam)


def max_des_word(lam: Partition, ceiling: int | None = None) -> tuple[MultisetWord, int]:
    """Block word ``(mu_1 ... 2 1)(mu_2 ... 2 1)...`` and the number of maximizers.

    Rearranging the blocks gives further maximizers, but not always all of
    them (``(2,1,1)`` has four), so the count comes from enumeration. It is 1
    iff ``lam`` is a rectangle.
    """
    lam = as_partition(lam)
    mu = dual(lam).parts
    letters = tuple(a for block in mu for a in range(block, 0, -1))
    top = max_des(lam)
    dist = descent_set_distribution(lam, ceiling)
    count = sum(c for mask, c in dist.items() if bin(mask).count("1") == top)
    return MultisetWord(letters, lam), count


def max_des(lam: Partition) -> int:
    return sum(b - 1 for b in dual(lam).parts)


def descent_set_distribution(
    lam: Partition, ceiling: int | None = None, first_letter: int | None = None
) -> Counter:
    """Count the words of ``S_lambda`` by descent set, by visiting every word.

    Keys are bitmasks with bit ``i-1`` set when ``i`` is a descent. With
    ``first_letter`` only the sub-stream of words starting with that letter
    is visited; the sub-streams for ``1..m`` partition ``S_lambda``.
    """
    lam = as_partition(lam)
    check_ceiling(lam, ceiling)
    m = lam.m
    counts = list(lam.parts)
    tally: Counter = Counter()

    def rec(pos, last, mask, kinds):
        # pos letters placed, ``last`` is the most recent one
        if kinds == 1:
            for b in range(m):
                if counts[b]:
                    tally[mask | (1 << (pos - 1)) if last > b else mask] += 1
                    return
        for b in range(m):
            c = counts[b]
            if c:
                counts[b] = c - 1
                rec(pos + 1, b, mask | (1 << (pos - 1)) if last > b else mask,
                    kinds - 1 if c == 1 else kinds)
                counts[b] = c

    if first_letter is None:
        starts = range(m)
    else:
        if not 1 <= first_letter <= m:
            raise DomainError(f"first letter {first_letter} outside 1..{m}")
        starts = [first_letter - 1]
    kinds0 = m
    for b in starts:
        c = counts[b]
        counts[b] = c - 1
        kinds = kinds0 - 1 if c == 1 else kinds0
        if kinds == 0:
            tally[0] += 1
        else:
            rec(1, b, 0, kinds)
        counts[b] = c
    return tally


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)
