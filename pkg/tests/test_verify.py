import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from clashfree import (
    ParameterError,
    Permutation,
    ResourceError,
    construct_multi,
    construct_pairwise,
    find_multi_clashes,
    find_pair_clashes,
    invert,
    is_clash_free,
    is_clash_free_multi,
    oracle_multi,
    translate,
)
from clashfree.verify import oracle_clashes
from oracles import brute_clash_free, brute_dist, permutations_st

FIG1 = Permutation(20, (0, 4, 8, 12, 16, 1, 5, 9, 13, 18, 2, 6, 10, 15, 19, 3, 7, 11, 14, 17))


def brute_pairs(pi, s, k):
    n = pi.n
    return [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if brute_dist(i, j, n) < s and brute_dist(pi(i), pi(j), n) < k
    ]


def test_pair_clashes_of_identity():
    witnesses = find_pair_clashes(Permutation.identity(6), 2, 2)
    assert len(witnesses) == 6
    assert witnesses[0].subset.members == (0, 1)
    assert [w.subset.members for w in witnesses] == brute_pairs(Permutation.identity(6), 2, 2)
    assert all(w.domain_span == 1 and w.image_span == 1 for w in witnesses)
    assert not is_clash_free(Permutation.identity(6), 2, 2)


def test_s_equal_one_never_clashes():
    rng = random.Random(5)
    for _ in range(20):
        pi = Permutation.random(rng.randint(2, 15), rng)
        assert find_pair_clashes(pi, 1, 100) == []
        assert is_clash_free(pi, 1, 100)


def test_figure_one_is_clash_free():
    assert find_pair_clashes(FIG1, 5, 3) == []
    assert is_clash_free(FIG1, 5, 3)
    assert not is_clash_free(FIG1, 6, 3)


def test_constructed_pairwise_verifies():
    s, pi = construct_pairwise(50, 2)
    assert is_clash_free(pi, s, 2)


@given(permutations_st(max_n=14), st.integers(1, 10), st.integers(1, 10))
def test_pair_clashes_match_brute_force(pi, s, k):
    got = [w.subset.members for w in find_pair_clashes(pi, s, k)]
    assert got == brute_pairs(pi, s, k)
    assert is_clash_free(pi, s, k) == (not got)


def test_multi_trivial_when_s_equals_r():
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(3, 20)
        r = rng.randint(1, n - 1)
        pi = Permutation.random(n, rng)
        assert find_multi_clashes(pi, r, n, r) == []


def test_multi_identity_witness():
    witnesses = find_multi_clashes(Permutation.identity(6), 3, 3, 2)
    assert (0, 1, 2) in [w.subset.members for w in witnesses]
    assert not is_clash_free_multi(Permutation.identity(6), 3, 3, 2)
    for w in witnesses:
        assert len(w.subset) == 3
        assert w.domain_span < 3 and w.image_span < 3


def test_multi_clash_free_when_r_at_least_k():
    rng = random.Random(8)
    for _ in range(40):
        n = rng.randint(3, 20)
        k = rng.randint(1, n - 1)
        r = rng.randint(k, n)
        s = rng.randint(1, n)
        assert is_clash_free_multi(Permutation.random(n, rng), s, k, r)


def test_constructed_multi_verifies():
    s, pi = construct_multi(10, 4, 2)
    assert find_multi_clashes(pi, s, 4, 2) == []
    s, pi = construct_multi(12, 5, 3)
    assert is_clash_free_multi(pi, s, 5, 3)


def test_multi_rejects_oversized_windows():
    with pytest.raises(ParameterError):
        is_clash_free_multi(Permutation.identity(5), 6, 2, 1)
    with pytest.raises(ParameterError):
        find_multi_clashes(Permutation.identity(5), 2, 6, 1)
    with pytest.raises(ParameterError):
        is_clash_free_multi(Permutation.identity(5), 2, 2, 0)


def test_oracle_examples():
    assert not oracle_multi(Permutation.identity(5), 2, 2, 1)
    for values in permutations(range(5)):
        assert oracle_multi(Permutation(5, values), 1, 5, 2)
    with pytest.raises(ResourceError):
        oracle_multi(Permutation.identity(40), 3, 3, 5, cap=1000)


def test_oracle_clashes_are_genuine():
    pi = Permutation(8, (0, 3, 1, 6, 2, 7, 5, 4))
    for w in oracle_clashes(pi, 4, 4, 2):
        assert w.domain_span < 4 and w.image_span < 4


def test_fast_and_oracle_agree_on_all_permutations_of_z5():
    for values in permutations(range(5)):
        pi = Permutation(5, values)
        for s in range(1, 6):
            for k in range(1, 6):
                for r in (1, 2, 3):
                    assert is_clash_free_multi(pi, s, k, r) == oracle_multi(pi, s, k, r)


@settings(max_examples=200)
@given(permutations_st(max_n=12), st.data())
def test_witnesses_match_oracle_existence(pi, data):
    n = pi.n
    s = data.draw(st.integers(1, n))
    k = data.draw(st.integers(1, n))
    r = data.draw(st.integers(1, 3))
    fast = find_multi_clashes(pi, s, k, r)
    all_clashes = {w.subset.members for w in oracle_clashes(pi, s, k, r)}
    assert (not fast) == (not all_clashes)
    assert {w.subset.members for w in fast} <= all_clashes
    assert brute_clash_free(pi.values, s, k, r) == (not all_clashes)


@given(permutations_st(max_n=25), st.data())
def test_pair_and_multi_agree_for_r_one(pi, data):
    s = data.draw(st.integers(1, pi.n))
    k = data.draw(st.integers(1, pi.n))
    assert (find_pair_clashes(pi, s, k) == []) == (find_multi_clashes(pi, s, k, 1) == [])


@given(permutations_st(max_n=25), st.data())
def test_inverse_swaps_parameters(pi, data):
    s = data.draw(st.integers(1, pi.n))
    k = data.draw(st.integers(1, pi.n))
    r = data.draw(st.integers(1, 4))
    assert is_clash_free_multi(pi, k, s, r) == is_clash_free_multi(invert(pi), s, k, r)


@given(permutations_st(max_n=25), st.data())
def test_translation_invariance(pi, data):
    n = pi.n
    s, k = data.draw(st.integers(1, n)), data.draw(st.integers(1, n))
    r = data.draw(st.integers(1, 3))
    a, b = data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, n - 1))
    assert is_clash_free_multi(pi, s, k, r) == is_clash_free_multi(translate(pi, a, b), s, k, r)


@given(permutations_st(max_n=25), st.data())
def test_monotone_in_both_parameters(pi, data):
    n = pi.n
    s, k = data.draw(st.integers(1, n)), data.draw(st.integers(1, n))
    if is_clash_free(pi, s, k):
        s2, k2 = data.draw(st.integers(1, s)), data.draw(st.integers(1, k))
        assert is_clash_free(pi, s2, k2)


def test_chunked_windows_give_same_answer(monkeypatch):
    import clashfree.verify as verify

    rng = random.Random(4)
    cases = [(Permutation.random(60, rng), rng.randint(2, 60), rng.randint(2, 30), rng.randint(1, 4)) for _ in range(30)]
    expected = [(verify.is_clash_free_multi(*c), verify.find_multi_clashes(*c)) for c in cases]
    monkeypatch.setattr(verify, "_CHUNK_ELEMENTS", 7)
    assert [(verify.is_clash_free_multi(*c), verify.find_multi_clashes(*c)) for c in cases] == expected
