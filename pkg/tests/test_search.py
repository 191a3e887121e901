from itertools import permutations

import pytest

from clashfree import (
    ParameterError,
    Permutation,
    ResourceError,
    exists_clash_free,
    is_clash_free_multi,
    sigma_exact,
    sigma_exact_multi,
)
from clashfree.search import known_bounds
from oracles import brute_clash_free


def brute_sigma(n, k, r):
    """Largest s with a clash-free permutation, by trying all n! permutations."""
    best = 0
    for values in permutations(range(n)):
        for s in range(n, best, -1):
            if brute_clash_free(values, s, min(k, n), r):
                best = s
                break
    return best


def test_exists_examples():
    assert exists_clash_free(5, 1, 5, 1) == Permutation.identity(5)
    assert exists_clash_free(6, 6, 2, 1) is None
    assert not any(brute_clash_free(v, 6, 2, 1) for v in permutations(range(6)))


def test_exists_finds_witness_for_figure_one_parameters():
    witness = exists_clash_free(20, 5, 3, 1, cap=20)
    assert witness is not None
    assert is_clash_free_multi(witness, 5, 3, 1)


def test_exists_returns_lexicographically_least():
    for n in range(3, 7):
        for s in range(1, n + 1):
            for k in range(1, n + 1):
                for r in (1, 2):
                    first = next(
                        (v for v in permutations(range(n)) if brute_clash_free(v, s, k, r)), None
                    )
                    got = exists_clash_free(n, s, k, r)
                    assert (got.values if got else None) == first


def test_caps_and_parameters():
    with pytest.raises(ResourceError):
        exists_clash_free(13, 2, 2)
    with pytest.raises(ResourceError):
        sigma_exact(13, 3)
    with pytest.raises(ResourceError):
        sigma_exact_multi(10, 4, 2)
    with pytest.raises(ParameterError):
        exists_clash_free(6, 7, 2)
    with pytest.raises(ParameterError):
        exists_clash_free(6, 2, 2, 0)


def test_sigma_trivial_regimes():
    assert sigma_exact(8, 8).value == 1
    assert sigma_exact(8, 1).value == 8
    assert sigma_exact_multi(6, 3, 5).value == 6
    assert sigma_exact_multi(6, 3, 4).value == 6


def test_sigma_examples_inside_bounds():
    res = sigma_exact(8, 3)
    assert res.value in (1, 2)
    assert res.upper_probe_infeasible is True
    res = sigma_exact_multi(7, 3, 2)
    assert res.value in (3, 4)


@pytest.mark.parametrize("n", range(2, 8))
def test_sigma_matches_brute_force(n):
    for k in range(1, n + 1):
        for r in (1, 2, 3):
            res = sigma_exact(n, k) if r == 1 else sigma_exact_multi(n, k, r)
            assert res.value == brute_sigma(n, k, r), (n, k, r)
            lo, hi = known_bounds(n, k, r)
            assert lo <= res.value <= hi
            assert brute_clash_free(res.witness.values, res.value, min(k, n), r)


def test_sigma_anti_monotone_in_k():
    for n in range(3, 10):
        values = [sigma_exact(n, k).value for k in range(1, n + 1)]
        assert values == sorted(values, reverse=True)


def test_parallel_search_is_deterministic():
    for n, k in [(9, 2), (9, 3), (10, 3)]:
        single = sigma_exact(n, k)
        fanned = sigma_exact(n, k, threads=3)
        assert fanned.value == single.value
        assert fanned.witness == single.witness
