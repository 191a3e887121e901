"""Clash detection for (s, k)- and (s, k, r)-clash-freeness.

Two independent routes are provided.  The fast route slides a window of s
consecutive indices around Z_n: every index set of span < s lies inside one
such window.  Within a window the images are sorted, and an image interval
of length k-1 holds r+1 of them exactly when some r+1 cyclically consecutive
sorted images fit in it.  The oracle enumerates (r+1)-subsets literally and
is only usable for small instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

import numpy as np

from .errors import ParameterError, ResourceError
from .ring import Permutation, ResidueSet, span, span_sorted

# cap on the number of window rows materialised at once
_CHUNK_ELEMENTS = 1 << 21
DEFAULT_ORACLE_CAP = 2_000_000


@dataclass(frozen=True)
class ClashWitness:
    subset: ResidueSet
    domain_span: int
    image_span: int

    def to_dict(self) -> dict:
        return {
            "subset": list(self.subset.members),
            "domain_span": self.domain_span,
            "image_span": self.image_span,
        }


def _witness(pi: Permutation, indices) -> ClashWitness:
    X = ResidueSet(pi.n, tuple(indices))
    return ClashWitness(X, span(X), span(pi.image(X)))


def _check_positive(**params) -> None:
    for name, v in params.items():
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ParameterError(f"{name} must be a positive integer, got {v!r}")


def _pair_mask(values: np.ndarray, n: int, delta: int, k: int) -> np.ndarray:
    """mask[i] is set when i and i+delta have images at distance < k."""
    diff = (np.roll(values, -delta) - values) % n
    return np.minimum(diff, n - diff) < k


def _pair_deltas(n: int, s: int) -> range:
    return range(1, min(s - 1, n // 2) + 1)


def find_pair_clashes(pi: Permutation, s: int, k: int) -> list[ClashWitness]:
    """All unordered pairs at distance < s whose images are at distance < k."""
    _check_positive(s=s, k=k)
    n = pi.n
    values = np.asarray(pi.values, dtype=np.int64)
    pairs = set()
    for delta in _pair_deltas(n, s):
        for i in np.flatnonzero(_pair_mask(values, n, delta, k)):
            j = (int(i) + delta) % n
            pairs.add((min(int(i), j), max(int(i), j)))
    return [_witness(pi, p) for p in sorted(pairs)]


def is_clash_free(pi: Permutation, s: int, k: int) -> bool:
    _check_positive(s=s, k=k)
    values = np.asarray(pi.values, dtype=np.int64)
    for delta in _pair_deltas(pi.n, s):
        if _pair_mask(values, pi.n, delta, k).any():
            return False
    return True


def _check_multi(pi: Permutation, s: int, k: int, r: int) -> None:
    _check_positive(s=s, k=k, r=r)
    if s > pi.n or k > pi.n:
        raise ParameterError(f"s and k must not exceed n={pi.n}, got s={s}, k={k}")


def _window_starts(n: int, s: int) -> np.ndarray:
    # with s == n every window is the whole ring
    return np.arange(1 if s == n else n)


def _window_chunks(pi: Permutation, s: int) -> Iterator[tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Yield (starts, order, sorted_images) for blocks of domain windows.

    ``order[w]`` holds the window offsets arranged by increasing image, so
    the index of the a-th smallest image in window w is starts[w] + order[w, a].
    """
    n = pi.n
    values = np.asarray(pi.values, dtype=np.int64)
    starts = _window_starts(n, s)
    rows = max(1, _CHUNK_ELEMENTS // s)
    offsets = np.arange(s)
    for lo in range(0, len(starts), rows):
        block = starts[lo:lo + rows]
        images = values[(block[:, None] + offsets[None, :]) % n]
        order = np.argsort(images, axis=1, kind="stable")
        yield block, order, np.take_along_axis(images, order, axis=1)


def _consecutive_spreads(sorted_images: np.ndarray, n: int, r: int) -> np.ndarray:
    """spread[w, a]: length of the arc from the a-th image to the (a+r)-th, cyclically."""
    m = sorted_images.shape[1]
    doubled = np.concatenate([sorted_images, sorted_images + n], axis=1)
    return doubled[:, r:r + m] - sorted_images


def find_multi_clashes(pi: Permutation, s: int, k: int, r: int) -> list[ClashWitness]:
    """One canonical witness per offending domain window, deduplicated.

    Within a window the witness is the set of r+1 consecutive images with
    the smallest image span; ties go to the lexicographically least index set.
    """
    _check_multi(pi, s, k, r)
    n = pi.n
    if r + 1 > s:
        return []
    found = set()
    for block, order, sorted_images in _window_chunks(pi, s):
        spreads = _consecutive_spreads(sorted_images, n, r)
        bad_rows = np.flatnonzero((spreads < k).any(axis=1))
        for w in bad_rows:
            row = spreads[w]
            best = row.min()
            candidates = []
            for a in np.flatnonzero(row == best):
                picks = order[w, (a + np.arange(r + 1)) % s]
                candidates.append(tuple(sorted(int((block[w] + o) % n) for o in picks)))
            found.add(min(candidates))
    return [_witness(pi, X) for X in sorted(found)]


def is_clash_free_multi(pi: Permutation, s: int, k: int, r: int) -> bool:
    _check_multi(pi, s, k, r)
    if r + 1 > s:
        return True
    for _, _, sorted_images in _window_chunks(pi, s):
        if (_consecutive_spreads(sorted_images, pi.n, r) < k).any():
            return False
    return True


def iter_oracle_clashes(
    pi: Permutation, s: int, k: int, r: int, cap: int = DEFAULT_ORACLE_CAP
) -> Iterator[tuple[int, ...]]:
    """Every (r+1)-subset X with span(X) < s and span(pi(X)) < k, lexicographically."""
    _check_positive(s=s, k=k, r=r)
    n = pi.n
    count = comb(n, r + 1)
    if count > cap:
        raise ResourceError(
            f"oracle would enumerate {count} subsets of Z_{n}, above the cap of {cap}"
        )
    values = pi.values
    for X in combinations(range(n), r + 1):
        if span_sorted(X, n) < s and span_sorted(sorted(values[i] for i in X), n) < k:
            yield X


def oracle_multi(pi: Permutation, s: int, k: int, r: int, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """Clash-freeness decided by enumerating every (r+1)-subset."""
    return next(iter_oracle_clashes(pi, s, k, r, cap), None) is None


def oracle_clashes(pi: Permutation, s: int, k: int, r: int, cap: int = DEFAULT_ORACLE_CAP) -> list[ClashWitness]:
    return [_witness(pi, X) for X in iter_oracle_clashes(pi, s, k, r, cap)]
