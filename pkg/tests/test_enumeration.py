import random

import pytest

from oracle_helpers import stirling2_brute
from whitney.enumeration import (
    MAX_LABELS_ENV,
    augmented_count_row,
    count_augmented_partitions,
    count_r_stirling_pairs,
    count_whitney_pairs,
    iter_augmented_partitions,
    iter_whitney_pairs,
    whitney_pair_count_row,
)
from whitney.errors import InstanceTooLarge
from whitney.triangles import whitney2_row


def block(*pairs):
    return frozenset(pairs)


def test_single_pair_worked_example():
    # the one pair behind the (2,2) entry at m=2, r=2
    assert count_whitney_pairs(2, 2, 2, 2) == 1
    pairs = list(iter_whitney_pairs(2, 2, 2, 2))
    assert pairs == [
        (frozenset({block((1, 1)), block((2, 1))}), (frozenset(), frozenset()))
    ]


def test_eight_pairs_worked_example():
    assert count_whitney_pairs(2, 1, 2, 3) == 8
    got = set(iter_whitney_pairs(2, 1, 2, 3))
    e, s1, s2 = frozenset(), frozenset({1}), frozenset({2})
    want = {
        (frozenset({block((1, 1), (2, 1))}), (e, e, e)),
        (frozenset({block((1, 1), (2, 2))}), (e, e, e)),
        (frozenset({block((1, 1))}), (s2, e, e)),
        (frozenset({block((1, 1))}), (e, s2, e)),
        (frozenset({block((1, 1))}), (e, e, s2)),
        (frozenset({block((2, 1))}), (s1, e, e)),
        (frozenset({block((2, 1))}), (e, s1, e)),
        (frozenset({block((2, 1))}), (e, e, s1)),
    }
    assert got == want
    assert len(got) == 8


def test_plain_partition_specialization():
    assert count_whitney_pairs(4, 2, 1, 0) == 7
    for n in range(7):
        for k in range(n + 1):
            assert count_whitney_pairs(n, k, 1, 0) == stirling2_brute(n, k)


def test_augmented_hand_enumeration():
    # two labels over three specials: the own-block case gives two colorings,
    # attaching either label to a special block gives three slots each
    assert count_augmented_partitions(2, 1, 2, 3) == 8
    got = set(iter_augmented_partitions(2, 1, 2, 3))
    assert len(got) == 8
    e = frozenset()
    own_block = {
        (spec, frozenset({block((4, c), (5, 0))}))
        for c in (1, 2)
        for spec in [(e, e, e)]
    }
    four_attached = {
        (tuple(frozenset({4}) if i == j else e for i in range(3)), frozenset({block((5, 0))}))
        for j in range(3)
    }
    five_attached = {
        (tuple(frozenset({5}) if i == j else e for i in range(3)), frozenset({block((4, 0))}))
        for j in range(3)
    }
    assert got == own_block | four_attached | five_attached


def test_augmented_trivial_cases():
    assert count_augmented_partitions(0, 0, 2, 3) == 1
    assert count_augmented_partitions(3, 2, 1, 0) == 3
    for n in range(6):
        for k in range(n + 1):
            assert count_augmented_partitions(n, k, 1, 0) == stirling2_brute(n, k)


def test_r_stirling_pairs():
    assert count_r_stirling_pairs(2, 2, 5) == 1  # all singletons, empty slots
    assert count_r_stirling_pairs(2, 1, 1) == 3
    assert count_r_stirling_pairs(3, 1, 2) == whitney2_row(1, 2, 3)[1] == 19


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_three_model_agreement_small_grid(m, r):
    for n in range(7):
        row = whitney2_row(m, r, n)
        assert whitney_pair_count_row(n, m, r) == row
        assert augmented_count_row(n, m, r) == row


def test_listing_matches_counts():
    for n, k, m, r in ((3, 2, 2, 1), (4, 1, 2, 0), (3, 3, 3, 2), (4, 2, 1, 3)):
        pairs = list(iter_whitney_pairs(n, k, m, r))
        assert len(pairs) == len(set(pairs)) == count_whitney_pairs(n, k, m, r)
        parts = list(iter_augmented_partitions(n, k, m, r))
        assert len(parts) == len(set(parts)) == count_augmented_partitions(n, k, m, r)


def test_relabeling_invariance():
    rng = random.Random(31)
    for n, k, m, r in ((4, 2, 2, 1), (5, 3, 2, 0), (4, 1, 3, 2)):
        want = count_whitney_pairs(n, k, m, r)
        for _ in range(3):
            order = list(range(1, n + 1))
            rng.shuffle(order)
            structures = set(iter_whitney_pairs(n, k, m, r, order=order))
            assert len(structures) == want


def test_out_of_range_k():
    assert count_whitney_pairs(2, 3, 2, 1) == 0
    assert count_augmented_partitions(2, 3, 2, 1) == 0


def test_validation():
    with pytest.raises(ValueError):
        count_whitney_pairs(2, 1, 0, 0)
    with pytest.raises(ValueError):
        count_whitney_pairs(-1, 0, 1, 0)


def test_instance_cap(monkeypatch):
    with pytest.raises(InstanceTooLarge):
        count_whitney_pairs(10, 2, 1, 3)
    monkeypatch.setenv(MAX_LABELS_ENV, "13")
    assert count_whitney_pairs(10, 2, 1, 3) == whitney2_row(1, 3, 10)[2]
    monkeypatch.setenv(MAX_LABELS_ENV, "5")
    with pytest.raises(InstanceTooLarge):
        count_whitney_pairs(4, 2, 1, 2)
    monkeypatch.setenv(MAX_LABELS_ENV, "junk")
    with pytest.raises(InstanceTooLarge):
        count_whitney_pairs(2, 1, 1, 0)
