"""Exact sigma(n, k) and sigma(n, k, r) for small n by backtracking.

Indices are assigned in order 0, 1, ..., n-1 with pi(0) = 0 fixed (image
translation preserves clash-freeness).  When index t receives a value, every
(r+1)-subset of {0, ..., t} that contains t and has domain span < s is
checked; each such subset is fully assigned, so pruning never discards a
completable prefix, and at t = n-1 every subset has been examined.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .construct import sigma_bounds, sigma_bounds_multi
from .errors import ParameterError, ResourceError
from .ring import Permutation, span_sorted

DEFAULT_CAP = 12
DEFAULT_MULTI_CAP = 9


@dataclass(frozen=True)
class SigmaResult:
    n: int
    k: int
    r: int
    value: int
    witness: Permutation
    nodes_explored: int = 0
    # True when the probe one above the theoretical upper bound found nothing;
    # None when no probe was run (trivial regimes)
    upper_probe_infeasible: Optional[bool] = None


def known_bounds(n: int, k: int, r: int = 1) -> tuple[int, int]:
    """Interval for sigma(n, k, r) covering every regime, including trivial ones."""
    if r >= n or r >= k:
        return (n, n)
    if r == 1:
        return sigma_bounds(n, k)
    if k >= n:
        # every image set already spans < k, so only the domain condition bites
        return (r, r)
    return sigma_bounds_multi(n, k, r)


class _Searcher:
    def __init__(self, n: int, s: int, k: int, r: int):
        self.n, self.s, self.k, self.r = n, s, k, r
        self.nodes = 0
        # groups[t]: r-subsets of [0, t) that form a small-span set together with t
        self.groups = [
            [c for c in combinations(range(t), r) if span_sorted(c + (t,), n) < s]
            for t in range(n)
        ]

    def _image_clash(self, perm: list[int], group, v: int) -> bool:
        images = sorted([perm[j] for j in group] + [v])
        return span_sorted(images, self.n) < self.k

    def fits(self, perm: list[int], t: int, v: int) -> bool:
        for group in self.groups[t]:
            if self._image_clash(perm, group, v):
                return False
        return True

    def extend(self, perm: list[int], used: list[bool], t: int) -> bool:
        n = self.n
        if t == n:
            return True
        for v in range(n):
            if used[v]:
                continue
            self.nodes += 1
            if not self.fits(perm, t, v):
                continue
            perm[t] = v
            used[v] = True
            if self.extend(perm, used, t + 1):
                return True
            used[v] = False
        return False

    def run(self, prefix: tuple[int, ...] = (0,)) -> Optional[Permutation]:
        n = self.n
        perm = [0] * n
        used = [False] * n
        for t, v in enumerate(prefix):
            if used[v] or not self.fits(perm, t, v):
                return None
            perm[t] = v
            used[v] = True
        if self.extend(perm, used, len(prefix)):
            return Permutation(n, tuple(perm))
        return None


def _check_params(n: int, s: int, k: int, r: int, cap: int) -> None:
    for name, v in (("n", n), ("s", s), ("k", k), ("r", r)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ParameterError(f"{name} must be a positive integer, got {v!r}")
    if n < 2:
        raise ParameterError(f"n must be >= 2, got {n}")
    if s > n or k > n:
        raise ParameterError(f"s and k must not exceed n={n}, got s={s}, k={k}")
    if n > cap:
        raise ResourceError(f"exhaustive search over Z_{n} exceeds the cap n <= {cap}")


def _branch(args) -> tuple[Optional[Permutation], int]:
    n, s, k, r, prefix = args
    searcher = _Searcher(n, s, k, r)
    return searcher.run(prefix), searcher.nodes


def _search(n: int, s: int, k: int, r: int, threads: int) -> tuple[Optional[Permutation], int]:
    if threads <= 1 or n < 3:
        searcher = _Searcher(n, s, k, r)
        return searcher.run(), searcher.nodes
    # one task per choice of pi(1); scanning results in branch order keeps
    # the returned witness the lexicographically least one
    tasks = [(n, s, k, r, (0, v)) for v in range(1, n)]
    nodes = 0
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for witness, count in pool.map(_branch, tasks):
            nodes += count
            if witness is not None:
                return witness, nodes
    return None, nodes


def exists_clash_free(
    n: int, s: int, k: int, r: int = 1, cap: int = DEFAULT_CAP, threads: int = 1
) -> Optional[Permutation]:
    """Lexicographically least (s, k, r)-clash-free permutation of Z_n, or None."""
    _check_params(n, s, k, r, cap)
    return _search(n, s, k, r, threads)[0]


def _sigma_search(n: int, k: int, r: int, upper: int, threads: int) -> SigmaResult:
    nodes = 0

    def probe(s):
        nonlocal nodes
        witness, count = _search(n, s, k, r, threads)
        nodes += count
        return witness

    probe_infeasible = None
    if upper < n:
        above = probe(upper + 1)
        probe_infeasible = above is None
        if above is not None:
            # the bound is beaten; climb until infeasible
            s, best = upper + 1, above
            while s < n:
                nxt = probe(s + 1)
                if nxt is None:
                    break
                s, best = s + 1, nxt
            return SigmaResult(n, k, r, s, best, nodes, probe_infeasible)
    for s in range(min(upper, n), 0, -1):
        witness = probe(s)
        if witness is not None:
            return SigmaResult(n, k, r, s, witness, nodes, probe_infeasible)
    raise AssertionError("every permutation is (1, k, r)-clash-free")


def sigma_exact(n: int, k: int, cap: int = DEFAULT_CAP, threads: int = 1) -> SigmaResult:
    """Largest s admitting an (s, k)-clash-free permutation of Z_n."""
    _check_params(n, 1, min(k, n), 1, cap)
    if k >= n:
        return SigmaResult(n, k, 1, 1, Permutation.identity(n))
    if k == 1:
        return SigmaResult(n, k, 1, n, Permutation.identity(n))
    return _sigma_search(n, k, 1, sigma_bounds(n, k)[1], threads)


def sigma_exact_multi(
    n: int, k: int, r: int, cap: int = DEFAULT_MULTI_CAP, threads: int = 1
) -> SigmaResult:
    """Largest s admitting an (s, k, r)-clash-free permutation of Z_n."""
    _check_params(n, 1, min(k, n), r, cap)
    if r >= n or r >= k:
        return SigmaResult(n, k, r, n, Permutation.identity(n))
    if r == 1:
        return sigma_exact(n, k, cap=cap, threads=threads)
    # image spans never reach n, so any k >= n behaves like k = n
    k_eff = min(k, n)
    result = _sigma_search(n, k_eff, r, known_bounds(n, k, r)[1], threads)
    return SigmaResult(
        n, k, r, result.value, result.witness, result.nodes_explored, result.upper_probe_infeasible
    )
