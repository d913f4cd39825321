"""Decorated permutation / necklace / positroid bijections, checked against
hand evaluations and exhaustive brute force at small n.
"""

import itertools

import pytest

from plabic.errors import InvalidNecklace, NoGaleMinimum
from plabic.positroids import (
    DecoratedPermutation,
    GrassmannNecklace,
    Positroid,
    all_decorated_permutations,
    cyc,
    gale_leq,
    gale_minimum,
    helicity,
    is_matroid,
    is_positroid,
    necklace_from_permutation,
    necklace_from_positroid,
    permutation_from_necklace,
    positroid_from_necklace,
    rotated_key,
    schubert_matroid,
    shift_permutation,
)


def brute_gale_min(family, start, n):
    """Oracle: scan all members for one that dominates every other."""
    mins = [
        B
        for B in family
        if all(gale_leq(B, C, start, n) for C in family)
    ]
    return frozenset(mins[0]) if mins else None


def test_helicity_shift_by_two():
    w = shift_permutation(2, 5)
    assert w.images == (3, 4, 5, 1, 2)
    assert helicity(w) == 2


def test_helicity_colored_identities():
    zero = DecoratedPermutation(4, (1, 2, 3, 4), {i: 0 for i in range(1, 5)})
    one = DecoratedPermutation(4, (1, 2, 3, 4), {i: 1 for i in range(1, 5)})
    assert helicity(zero) == 0
    assert helicity(one) == 4


def test_necklace_of_shift_is_cyclic_intervals():
    w = shift_permutation(2, 5)
    J = necklace_from_permutation(w)
    for i in range(1, 6):
        assert J.term(i) == {i, cyc(i, 1, 5)}


def test_necklace_of_all_one_identity_is_constant():
    w = DecoratedPermutation(3, (1, 2, 3), {1: 1, 2: 1, 3: 1})
    J = necklace_from_permutation(w)
    assert all(S == {1, 2, 3} for S in J.J)


def test_necklace_of_transposition():
    w = DecoratedPermutation(2, (2, 1))
    J = necklace_from_permutation(w)
    assert J.term(1) == {1} and J.term(2) == {2}


def test_permutation_from_necklace_examples():
    J = GrassmannNecklace(2, 5, tuple(frozenset({i, cyc(i, 1, 5)}) for i in range(1, 6)))
    w = permutation_from_necklace(J)
    assert w == shift_permutation(2, 5)

    const = GrassmannNecklace(2, 4, (frozenset({1, 2}),) * 4)
    w = permutation_from_necklace(const)
    assert w.images == (1, 2, 3, 4)
    assert w.colors == {1: 1, 2: 1, 3: 0, 4: 0}

    J12 = GrassmannNecklace(1, 2, (frozenset({1}), frozenset({2})))
    assert permutation_from_necklace(J12).images == (2, 1)


def test_permutation_from_invalid_necklace_raises():
    # J_2 drops element 1 without i=1 being present in J_1
    bad = GrassmannNecklace(2, 3, (frozenset({2, 3}), frozenset({1, 2}), frozenset({2, 3})))
    with pytest.raises(InvalidNecklace):
        permutation_from_necklace(bad)


def test_positroid_from_necklace_top_cell():
    J = GrassmannNecklace(2, 4, tuple(frozenset({i, cyc(i, 1, 4)}) for i in range(1, 5)))
    M = positroid_from_necklace(J)
    assert M.bases == {frozenset(B) for B in itertools.combinations(range(1, 5), 2)}


def test_positroid_from_constant_necklace_is_single_basis():
    const = GrassmannNecklace(2, 4, (frozenset({1, 2}),) * 4)
    assert positroid_from_necklace(const).bases == {frozenset({1, 2})}


def test_positroid_from_necklace_k_equals_n():
    J = GrassmannNecklace(3, 3, (frozenset({1, 2, 3}),) * 3)
    assert positroid_from_necklace(J).bases == {frozenset({1, 2, 3})}


def test_necklace_from_positroid_top_cell():
    M = Positroid(2, 4, frozenset(map(frozenset, itertools.combinations(range(1, 5), 2))))
    J = necklace_from_positroid(M)
    for i in range(1, 5):
        assert J.term(i) == {i, cyc(i, 1, 4)}


def test_necklace_from_singleton_is_constant():
    J = necklace_from_positroid([{1, 3}])
    assert all(S == {1, 3} for S in J.J)


def test_necklace_from_two_element_family_matches_brute_force():
    family = [frozenset({1, 2}), frozenset({1, 3})]
    n = 4
    J = necklace_from_positroid(family, n=n)
    for i in range(1, n + 1):
        assert J.term(i) == brute_gale_min(family, i, n)


def test_is_positroid_examples():
    top = [set(B) for B in itertools.combinations(range(1, 5), 2)]
    assert is_positroid(top, n=4)
    assert not is_positroid([{1, 2}, {3, 4}], n=4)
    assert is_positroid([{1, 3}], n=4)


def test_is_matroid_examples():
    assert is_matroid([{1, 2}, {1, 3}])
    assert not is_matroid([{1, 2}, {3, 4}])
    assert is_matroid([set(B) for B in itertools.combinations(range(1, 5), 2)])


def test_gale_leq_and_schubert_matroid():
    assert gale_leq({1, 3}, {2, 4}, 1, 4)
    assert not gale_leq({2, 4}, {1, 3}, 1, 4)
    assert schubert_matroid({2, 3}, 4) == {
        frozenset({2, 3}),
        frozenset({2, 4}),
        frozenset({3, 4}),
    }


def test_gale_minimum_raises_without_minimum():
    with pytest.raises(NoGaleMinimum):
        gale_minimum([frozenset({1, 4}), frozenset({2, 3})], 1, 4)


def test_rotated_key_is_rank_tuple():
    # order starting at 3 on [4] is 3 < 4 < 1 < 2
    assert rotated_key({1, 3}, 3, 4) == (1, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip_permutation_necklace(n):
    for w in all_decorated_permutations(n):
        J = necklace_from_permutation(w)
        J.validate()
        assert len(J.term(1)) == helicity(w)
        assert all(len(S) == helicity(w) for S in J.J)
        assert permutation_from_necklace(J) == w


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip_necklace_positroid(n):
    seen = set()
    for w in all_decorated_permutations(n):
        J = necklace_from_permutation(w)
        if J.J in seen:
            continue
        seen.add(J.J)
        M = positroid_from_necklace(J)
        assert all(J.term(i) in M.bases for i in range(1, n + 1))
        assert is_matroid(M.bases)
        assert necklace_from_positroid(M).J == J.J


def test_positroids_of_distinct_necklaces_are_distinct_n4():
    necklaces = {necklace_from_permutation(w).J for w in all_decorated_permutations(4)}
    positroids = {positroid_from_necklace(GrassmannNecklace(len(J[0]), 4, J)).bases for J in necklaces}
    assert len(positroids) == len(necklaces)


def test_json_round_trips():
    w = DecoratedPermutation(4, (1, 3, 2, 4), {1: 0, 4: 1})
    assert DecoratedPermutation.from_json(w.to_json()) == w
    J = necklace_from_permutation(w)
    assert GrassmannNecklace.from_json(J.to_json()) == J
    M = positroid_from_necklace(J)
    assert Positroid.from_json(M.to_json()) == M
