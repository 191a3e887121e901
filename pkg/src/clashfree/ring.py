"""Residue arithmetic on Z_n: circular distance, interval span, permutations."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParameterError


def _check_modulus(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ParameterError(f"modulus must be an integer >= 2, got {n!r}")


def _check_residue(x: int, n: int, name: str = "residue") -> None:
    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
        raise ParameterError(f"{name} must lie in [0, {n - 1}], got {x!r}")


def circ_dist(i: int, j: int, n: int) -> int:
    """Distance between i and j with the residues of Z_n arranged on a cycle."""
    _check_modulus(n)
    _check_residue(i, n, "i")
    _check_residue(j, n, "j")
    d = (i - j) % n
    return min(d, n - d)


def span_sorted(members: Sequence[int], n: int) -> int:
    """Span of a sorted, duplicate-free residue list (no validation).

    The shortest covering interval leaves out the largest cyclic gap
    between consecutive members, so the span is n minus that gap.
    """
    m = len(members)
    if m == 1:
        return 0
    gap = members[0] + n - members[-1]
    for a, b in zip(members, members[1:]):
        if b - a > gap:
            gap = b - a
    return n - gap


@dataclass(frozen=True)
class ResidueSet:
    """A nonempty subset of Z_n, stored sorted."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        _check_modulus(self.n)
        members = tuple(sorted(self.members))
        if not members:
            raise ParameterError("residue set must be nonempty")
        for x in members:
            _check_residue(x, self.n, "member")
        if any(a == b for a, b in zip(members, members[1:])):
            raise ParameterError(f"residue set has repeated members: {members}")
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return x in self.members


def span(X: ResidueSet) -> int:
    """Minimum length t of a cyclic interval x+[0, t] containing X."""
    if not isinstance(X, ResidueSet):
        raise ParameterError("span expects a ResidueSet")
    return span_sorted(X.members, X.n)


@dataclass(frozen=True)
class Permutation:
    """A bijection of Z_n; ``values[t]`` is the image of t."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        _check_modulus(self.n)
        values = tuple(self.values)
        if len(values) != self.n:
            raise ParameterError(
                f"permutation of Z_{self.n} needs {self.n} values, got {len(values)}"
            )
        if any(not isinstance(v, int) or isinstance(v, bool) for v in values):
            raise ParameterError("permutation values must be integers")
        if sorted(values) != list(range(self.n)):
            raise ParameterError(f"values are not a bijection on Z_{self.n}")
        object.__setattr__(self, "values", values)

    def __call__(self, i: int) -> int:
        return self.values[i % self.n]

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.values)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(n)))

    @classmethod
    def random(cls, n: int, rng: random.Random) -> "Permutation":
        values = list(range(n))
        rng.shuffle(values)
        return cls(n, tuple(values))

    def image(self, indices: Iterable[int]) -> ResidueSet:
        return ResidueSet(self.n, tuple(self.values[i] for i in indices))

    def to_dict(self) -> dict:
        return {"n": self.n, "perm": list(self.values)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, obj) -> "Permutation":
        if not isinstance(obj, dict) or "n" not in obj or "perm" not in obj:
            raise ParameterError('permutation object needs fields "n" and "perm"')
        perm = obj["perm"]
        if not isinstance(perm, list):
            raise ParameterError('"perm" must be a list of integers')
        return cls(obj["n"], tuple(perm))

    @classmethod
    def from_json(cls, text: str) -> "Permutation":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParameterError(f"malformed permutation text: {exc}") from None
        return cls.from_dict(obj)


def translate(pi: Permutation, a: int, b: int) -> Permutation:
    """Shift indices by a and images by b: i -> pi(i - a) + b (mod n)."""
    n = pi.n
    _check_residue(a, n, "a")
    _check_residue(b, n, "b")
    return Permutation(n, tuple((pi.values[(i - a) % n] + b) % n for i in range(n)))


def invert(pi: Permutation) -> Permutation:
    inv = [0] * pi.n
    for i, v in enumerate(pi.values):
        inv[v] = i
    return Permutation(pi.n, tuple(inv))
