import itertools

import pytest

from majdist.permutations import (
    Permutation,
    a_polynomials,
    avoiders_321,
    avoids_321,
    perm_statistics,
    rsk,
)
from majdist.qpoly import QPoly
from majdist.tableaux import statistics


CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]


def test_permutation_validation():
    Permutation([2, 1, 3])
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation([0, 1])


def test_perm_statistics():
    des_set, des, maj = perm_statistics([3, 1, 4, 2])
    assert (des_set, des, maj) == (frozenset({1, 3}), 2, 4)
    assert perm_statistics([1, 2, 3]) == (frozenset(), 0, 0)


def test_avoids_321():
    assert avoids_321([2, 1, 3])
    assert not avoids_321([3, 2, 1])
    assert not avoids_321([1, 5, 4, 2, 3])
    assert avoids_321([])
    # matches the brute-force pattern test
    for n in range(1, 7):
        for w in itertools.permutations(range(1, n + 1)):
            brute = not any(
                w[a] > w[b] > w[c]
                for a, b, c in itertools.combinations(range(n), 3)
            )
            assert avoids_321(w) == brute


def test_avoiders_catalan_counts():
    for n in range(1, 8):
        assert sum(1 for _ in avoiders_321(n)) == CATALAN[n]


def test_avoiders_sorted_and_valid():
    words = [p.word for p in avoiders_321(5)]
    assert words == sorted(words)
    assert all(avoids_321(w) for w in words)


def test_rsk_examples():
    p, q = rsk(Permutation([3, 2, 1]))
    assert p.rows == ((1,), (2,), (3,))
    assert q.rows == ((1,), (2,), (3,))
    p, q = rsk(Permutation([2, 1, 3]))
    assert p.rows == ((1, 3), (2,))
    assert q.rows == ((1, 3), (2,))


def test_rsk_descents_transfer_to_recording_tableau():
    for n in range(1, 7):
        for w in itertools.permutations(range(1, n + 1)):
            _, q = rsk(Permutation(w))
            assert perm_statistics(w)[0] == statistics(q)[0]


def test_rsk_row_count_tracks_decreasing_runs():
    for w in itertools.permutations(range(1, 6)):
        p, _ = rsk(Permutation(w))
        assert (len(p.rows) <= 2) == avoids_321(w)


def test_a_polynomials_small():
    assert a_polynomials(3) == {0: QPoly([1]), 1: QPoly([0, 2, 2])}
    assert a_polynomials(4)[1] == QPoly([0, 3, 5, 3])
    # row at q = 1 recovers the Catalan number
    for n in range(1, 8):
        assert sum(p(1) for p in a_polynomials(n).values()) == CATALAN[n]


def test_a_polynomials_limit():
    with pytest.raises(ValueError):
        a_polynomials(3, limit=2)
    with pytest.raises(ValueError):
        a_polynomials(0)
