"""Matrix-cycle construction of clash-free permutations.

The residues of Z_n are laid out in a d x ell matrix with entry
``i + j*(s+1) mod n`` (d = gcd(s+1, n), ell = n/d).  A cyclic walk through
the matrix moves one column east at every step, dropping a row (southeast)
or climbing a row (northeast) on two anti-diagonals.  Reading the entries
in walk order gives a permutation whose consecutive increments are s, s+1
or s+2; its inverse is clash-free for the parameters chosen below.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .errors import ConstructionError, ParameterError
from .ring import Permutation, invert


class MoveKind(enum.Enum):
    EAST = "E"
    SOUTHEAST = "SE"
    NORTHEAST = "NE"


# row change for each move; every move advances one column
_ROW_STEP = {MoveKind.EAST: 0, MoveKind.SOUTHEAST: 1, MoveKind.NORTHEAST: -1}
# increment over s
_DELTA_OFFSET = {MoveKind.EAST: 1, MoveKind.SOUTHEAST: 2, MoveKind.NORTHEAST: 0}


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    delta: int

    @classmethod
    def of(cls, kind: MoveKind, s: int) -> "Move":
        return cls(kind, s + _DELTA_OFFSET[kind])


@dataclass(frozen=True)
class ConstructionParams:
    n: int
    s: int
    d: int
    ell: int


@dataclass(frozen=True)
class CycleWalk:
    params: ConstructionParams
    cells: tuple[tuple[int, int], ...]
    moves: tuple[Move, ...]

    def values(self) -> tuple[int, ...]:
        p = self.params
        return tuple((i + j * (p.s + 1)) % p.n for i, j in self.cells)


def _check_int(x, name: str, minimum: int) -> None:
    if not isinstance(x, int) or isinstance(x, bool) or x < minimum:
        raise ParameterError(f"{name} must be an integer >= {minimum}, got {x!r}")


def derive_params(n: int, s: int) -> ConstructionParams:
    _check_int(n, "n", 2)
    _check_int(s, "s", 1)
    if s + 1 >= n:
        raise ParameterError(f"construction needs s+1 < n, got s={s}, n={n}")
    d = gcd(s + 1, n)
    return ConstructionParams(n=n, s=s, d=d, ell=n // d)


def _check_cell(p: ConstructionParams, i: int, j: int) -> None:
    if not (0 <= i < p.d and 0 <= j < p.ell):
        raise ParameterError(f"cell ({i}, {j}) outside the {p.d} x {p.ell} matrix")


def matrix_entry(p: ConstructionParams, i: int, j: int) -> int:
    _check_cell(p, i, j)
    return (i + j * (p.s + 1)) % p.n


def matrix_rows(p: ConstructionParams) -> list[list[int]]:
    return [[matrix_entry(p, i, j) for j in range(p.ell)] for i in range(p.d)]


def _next_kind(p: ConstructionParams, i: int, j: int) -> MoveKind:
    ell = p.ell
    if (i + j) % ell == (ell - 1) % ell and i < p.d - 1:
        return MoveKind.SOUTHEAST
    if (i + j) % ell == 0 and i > 0:
        return MoveKind.NORTHEAST
    return MoveKind.EAST


def next_move(p: ConstructionParams, i: int, j: int) -> Move:
    """Move taken from cell (i, j).

    Southeast on the anti-diagonal i + j = ell-1 (mod ell) unless in the
    bottom row; northeast on i + j = ell (mod ell) unless in the top row;
    east otherwise.  The two anti-diagonals are distinct because ell >= 2.
    """
    _check_cell(p, i, j)
    return Move.of(_next_kind(p, i, j), p.s)


def cycle_walk(p: ConstructionParams) -> CycleWalk:
    n = p.n
    cells = []
    moves = []
    seen = set()
    i = j = 0
    for t in range(n):
        if (i, j) in seen:
            raise ConstructionError(f"walk revisits cell ({i}, {j}) at step {t}")
        seen.add((i, j))
        cells.append((i, j))
        kind = _next_kind(p, i, j)
        moves.append(Move.of(kind, p.s))
        i += _ROW_STEP[kind]
        j = (j + 1) % p.ell
    if (i, j) != (0, 0):
        raise ConstructionError(
            f"walk does not close: step {n} lands on ({i}, {j}) instead of (0, 0)"
        )
    return CycleWalk(params=p, cells=tuple(cells), moves=tuple(moves))


def build_cycle_permutation(n: int, s: int) -> Permutation:
    """Forward permutation: position t holds the t-th entry along the walk."""
    return Permutation(n, cycle_walk(derive_params(n, s)).values())


def sigma_bounds(n: int, k: int) -> tuple[int, int]:
    """Interval known to contain sigma(n, k).

    For 2 <= k < n this is [floor((n-1)/k) - 1, floor((n-1)/k)], with the
    lower end clamped to 1.  k >= n gives (1, 1) and k = 1 gives (n, n),
    since every permutation is (s, 1)-clash-free.
    """
    _check_int(n, "n", 2)
    _check_int(k, "k", 1)
    if k >= n:
        return (1, 1)
    if k == 1:
        return (n, n)
    q = (n - 1) // k
    return (max(1, q - 1), q)


def sigma_bounds_multi(n: int, k: int, r: int) -> tuple[int, int]:
    _check_int(n, "n", 2)
    _check_int(k, "k", 1)
    _check_int(r, "r", 1)
    if not 1 < r < k < n:
        raise ParameterError(
            f"multi-clash bounds assume 1 < r < k < n, got n={n}, k={k}, r={r}"
        )
    q = (r * n - 1) // k
    return (q - 1, q)


def construction_condition(n: int, k: int, s: int, r: int) -> bool:
    """Whether k(s+1) + gcd(s+1, n) - 3 <= rn - 1.

    When it holds, the inverse of the walk permutation for (n, s) is
    (s, k, r)-clash-free.
    """
    _check_int(k, "k", 1)
    _check_int(r, "r", 1)
    p = derive_params(n, s)
    if not r < k < n:
        raise ParameterError(f"condition assumes r < k < n, got n={n}, k={k}, r={r}")
    return k * (p.s + 1) + p.d - 3 <= r * n - 1


def construct_pairwise(n: int, k: int) -> tuple[int, Permutation]:
    """Return (s, pi) with pi (s, k)-clash-free and s = floor((n-1)/k) - 1.

    For s <= 1 every permutation qualifies and the identity is returned
    with s clamped to 1.
    """
    _check_int(n, "n", 2)
    _check_int(k, "k", 1)
    if not 2 <= k < n:
        raise ParameterError(f"construction needs 2 <= k < n, got n={n}, k={k}")
    s = (n - 1) // k - 1
    if s <= 1:
        return max(s, 1), Permutation.identity(n)
    return s, invert(build_cycle_permutation(n, s))


def construct_multi(n: int, k: int, r: int) -> tuple[int, Permutation]:
    """Return (s, pi) with pi (s, k, r)-clash-free and s = floor((rn-1)/k) - 1."""
    sigma_bounds_multi(n, k, r)
    s = (r * n - 1) // k - 1
    if not construction_condition(n, k, s, r):
        raise ConstructionError(
            f"construction inequality fails at n={n}, k={k}, r={r}, s={s}"
        )
    return s, invert(build_cycle_permutation(n, s))
