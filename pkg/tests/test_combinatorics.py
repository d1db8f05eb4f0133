from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from oracles import multiset_words, stats
from orbitseries.combinatorics import (
    Partition,
    check_ceiling,
    circ,
    descent_data,
    descent_set_distribution,
    dual,
    enumerate_words,
    is_rectangle,
    make_partition,
    mask_to_set,
    max_des,
    max_des_word,
    multinomial,
    partitions_of,
    trivial_word,
    word,
    word_count,
)
from orbitseries.errors import DomainError, ResourceCeilingError, ValidationError

small_partitions = (
    st.lists(st.integers(1, 3), min_size=1, max_size=4).filter(lambda p: sum(p) <= 8).map(make_partition)
)


def test_partition_validation():
    assert Partition((3, 3, 1)).N == 7
    assert Partition((3, 3, 1)).m == 3
    for bad in [(), (1, 2), (0,), (2, -1), (1.5,)]:
        with pytest.raises(ValidationError):
            Partition(bad)


def test_parse_and_make():
    assert Partition.parse("3,3,1") == Partition((3, 3, 1))
    assert Partition.parse("2^3") == Partition((2, 2, 2))
    assert make_partition([1, 3, 2]).parts == (3, 2, 1)
    with pytest.raises(ValidationError):
        Partition.parse("a,b")


def test_partitions_of_counts():
    # p(n) for n = 1..10
    assert [sum(1 for _ in partitions_of(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_dual():
    assert dual(Partition((3, 1))).parts == (2, 1, 1)
    assert dual(Partition((2, 2))).parts == (2, 2)
    assert is_rectangle(Partition((2, 2, 2)))
    assert not is_rectangle(Partition((2, 1)))


@settings(max_examples=60, deadline=None)
@given(small_partitions)
def test_enumeration_matches_itertools(lam):
    words = [w.letters for w in enumerate_words(lam)]
    assert words == multiset_words(lam.parts)
    assert len(words) == word_count(lam) == multinomial(lam.parts)


@settings(max_examples=60, deadline=None)
@given(small_partitions)
def test_distribution_matches_brute_force(lam):
    dist = descent_set_distribution(lam)
    brute = {}
    for w in multiset_words(lam.parts):
        mask = sum(1 << (i - 1) for i in descent_data(w).descent_set)
        brute[mask] = brute.get(mask, 0) + 1
    assert dict(dist) == brute


def test_first_letter_streams_partition_the_words():
    lam = Partition((2, 2, 1))
    total = descent_set_distribution(lam)
    merged = {}
    for b in range(1, 4):
        for k, v in descent_set_distribution(lam, first_letter=b).items():
            merged[k] = merged.get(k, 0) + v
    assert merged == dict(total)


def test_descent_data():
    d = descent_data("2121")
    assert d.descent_set == frozenset({1, 3})
    assert (d.des, d.maj) == (2, 4)
    assert (d.des, d.maj) == stats((2, 1, 2, 1))
    assert mask_to_set(0b101) == frozenset({1, 3})


def test_word_validation():
    with pytest.raises(ValidationError):
        word("12", (2,))
    with pytest.raises(ValidationError):
        word("122")  # content (1, 2) is not a partition
    assert str(trivial_word(Partition((2, 1)))) == "112"


@pytest.mark.parametrize("parts", [(2, 2), (3, 3), (2, 2, 2), (1, 1, 1, 1)])
def test_circ_involution_and_statistics(parts):
    lam = Partition(parts)
    N = lam.N
    seen = set()
    for w in enumerate_words(lam):
        c = circ(w)
        assert circ(c) == w
        dw, dc = descent_data(w), descent_data(c)
        assert dc.descent_set == frozenset(N - i for i in dw.descent_set)
        assert dc.des == dw.des
        assert dc.maj == N * dw.des - dw.maj
        seen.add(c.letters)
    assert len(seen) == word_count(lam)


def test_circ_rejects_non_rectangles():
    with pytest.raises(DomainError):
        circ(word("112"))


@pytest.mark.parametrize("n", range(1, 9))
def test_max_des(n):
    for lam in partitions_of(n):
        w, count = max_des_word(lam)
        top = max(stats(x)[0] for x in multiset_words(lam.parts))
        assert descent_data(w).des == top == max_des(lam) == sum(b - 1 for b in dual(lam).parts)
        assert (count == 1) == is_rectangle(lam)


def test_max_des_maximizer_count():
    # more maximizers than block rearrangements
    assert max_des_word(Partition((2, 1, 1)))[1] == 4


@pytest.mark.parametrize("parts", [(2, 1), (3, 3, 1), (2, 2, 2), (1, 1, 1, 1), (4, 2)])
def test_single_last_descent_count(parts):
    lam = Partition(parts)
    dist = descent_set_distribution(lam)
    assert dist[1 << (lam.N - 2)] == lam.m - 1


def test_ceiling(monkeypatch):
    lam = Partition((1, 1, 1, 1))
    with pytest.raises(ResourceCeilingError) as info:
        check_ceiling(lam, 5)
    assert info.value.count == 24
    monkeypatch.setenv("ORBITSERIES_CEILING", "10")
    with pytest.raises(ResourceCeilingError):
        descent_set_distribution(lam)
    monkeypatch.setenv("ORBITSERIES_CEILING", "nope")
    with pytest.raises(ValidationError):
        check_ceiling(lam)
