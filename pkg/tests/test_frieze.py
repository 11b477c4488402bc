import random

import pytest

from friezelab.chebyshev import chebyshev_T
from friezelab.errors import InvalidFrieze, NonPositiveEntry
from friezelab.frieze import (GrowthClass, Quiddity, classify_growth,
                              classify_growth_value, generate, growth,
                              measured_growth)


def test_quiddity_validation():
    with pytest.raises(ValueError):
        Quiddity([])
    with pytest.raises(ValueError):
        Quiddity([0, 5])
    with pytest.raises(ValueError):
        Quiddity([3, -1])


def test_quiddity_cyclic_equality():
    assert Quiddity([8, 2]) == Quiddity([2, 8])
    assert Quiddity([1, 2, 3]) == Quiddity([3, 1, 2])
    assert Quiddity([1, 2, 3]) != Quiddity([1, 3, 2])
    assert hash(Quiddity([8, 2])) == hash(Quiddity([2, 8]))


def test_generate_8_2_matches_printed_rows():
    f = generate([8, 2], depth=6)
    assert f.row(1) == [8, 2]
    assert f.row(2) == [15, 15]
    assert f.row(3) == [28, 112]
    assert f.row(4) == [209, 209]
    assert f.row(5) == [1560, 390]
    assert f.row(6) == [2911, 2911]


def test_generate_4_4_matches_printed_rows():
    f = generate([4, 4], depth=5)
    assert f.row(1) == [4, 4]
    assert f.row(2) == [15, 15]
    assert f.row(3) == [56, 56]
    assert f.row(4) == [209, 209]


def test_generate_9_36_matches_printed_rows():
    # The originally published tabulation of this pattern misprints one row-3
    # entry as 1152; 2-periodicity forces 11592 and that is what we emit.
    f = generate([9, 36], depth=4)
    assert f.row(1) == [9, 36]
    assert f.row(2) == [323, 323]
    assert f.row(3) == [11592, 2898]
    assert f.entry(-3, 1) == f.entry(-1, 3) == 11592


def test_generate_trivial_rows():
    f = generate([7, 7, 7], depth=4)
    assert f.row(-1) == [0, 0, 0]
    assert f.row(0) == [1, 1, 1]
    assert f.row(1) == [7, 7, 7]
    assert f.row(2) == [48, 48, 48]
    assert f.row(3) == [329, 329, 329]


def test_generate_rejects_polygon_quiddity():
    # (1,3) closes up like a finite pattern: the recurrence hits a
    # nonpositive entry within a few rows.
    with pytest.raises(NonPositiveEntry):
        generate([1, 3], depth=8)


def test_growth_8_2():
    f = generate([8, 2], depth=6)
    assert growth(f, 1) == 14
    assert growth(f, 2) == 194
    assert growth(f, 3) == 2702


def test_growth_7_7_7():
    f = generate([7, 7, 7], depth=4)
    assert growth(f, 1) == 322


def test_growth_9_36():
    f = generate([9, 36], depth=4)
    assert growth(f, 1) == 322


def test_measured_growth_agrees_with_recurrence():
    f = generate([8, 2], depth=12)
    for k in range(1, 7):
        assert measured_growth(f, k) == growth(f, k) == chebyshev_T(k, 14)


def test_growth_needs_depth():
    f = generate([8, 2], depth=1)
    with pytest.raises(ValueError):
        growth(f, 1)


def test_classify_growth():
    assert classify_growth(generate([8, 2], depth=4)) == GrowthClass.AFFINE_FAST
    # punctured-disc style quiddity: all growth coefficients equal 2
    assert classify_growth(generate([2, 2], depth=6)) == GrowthClass.ARITHMETIC_LIKE
    with pytest.raises(InvalidFrieze):
        classify_growth_value(1)


def test_all_twos_guiddity_is_arithmetic():
    f = generate([2, 2, 2], depth=9)
    for k in (1, 2, 3):
        assert measured_growth(f, k) == 2


def test_growth_rejects_inconsistent_entries():
    from friezelab.frieze import FriezePattern

    # hand-built table whose diagonals do not form a frieze: the growth
    # difference depends on the starting diagonal
    bogus = FriezePattern(Quiddity([8, 2]), 2,
                          {0: [0, 1, 8, 15], 1: [0, 1, 2, 14]})
    with pytest.raises(InvalidFrieze):
        growth(bogus, 1)


def test_periodicity_invariant():
    f = generate([3, 1, 2, 5], depth=8)
    n = f.period
    for i in range(-4, 4):
        for t in range(0, f.depth + 2):
            assert f.entry(i, i + t) == f.entry(i + n, i + n + t)


def test_growth_differences_match_chebyshev_on_random_quiddities():
    rng = random.Random(31415)
    survivors = 0
    while survivors < 25:
        n = rng.randint(1, 4)
        q = [rng.randint(1, 6) for _ in range(n)]
        try:
            f = generate(q, depth=3 * n)
        except NonPositiveEntry:
            continue
        survivors += 1
        s1 = growth(f, 1)
        for k in range(1, 4):
            assert measured_growth(f, k) == chebyshev_T(k, s1)


def test_diamond_on_random_surviving_quiddities():
    # generate() itself asserts the diamond relation; survivors must also be
    # n-periodic with positive interior rows.
    rng = random.Random(2024)
    survivors = 0
    attempts = 0
    while survivors < 100 and attempts < 5000:
        attempts += 1
        n = rng.randint(1, 5)
        q = [rng.randint(1, 6) for _ in range(n)]
        try:
            f = generate(q, depth=2 * n + 2)
        except NonPositiveEntry:
            continue
        survivors += 1
        for r in range(1, f.depth + 1):
            assert all(v > 0 for v in f.row(r))
    assert survivors == 100
