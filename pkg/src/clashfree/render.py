"""Torus picture: s x k rectangles centred at (i, pi(i)) on the n x n torus.

All geometry is done in doubled integer coordinates.  Rectangle edges sit
on half-integers (odd sizes) or integers (even sizes), so the open interior
of any positive-area overlap contains a point of the half-unit lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .ring import Permutation

_FILL = "#bfbfbf"
_STROKE = "#000000"
# heatmap colours for coverage r+1 and >= r+2
_HEAT = ("#f4a582", "#d6604d")


@dataclass(frozen=True)
class CoverageGrid:
    """counts[u, v] = rectangles whose open interior holds (u/2, v/2)."""

    n: int
    counts: np.ndarray
    resolution: int = 2

    def max(self) -> int:
        return int(self.counts.max())

    def total(self) -> int:
        return int(self.counts.sum())


def _check_sizes(n: int, s: int, k: int) -> None:
    for name, v in (("s", s), ("k", k)):
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
            raise ParameterError(f"{name} must lie in [1, {n}], got {v!r}")


def _covered(center2: int, size: int, n: int) -> np.ndarray:
    """Half-lattice coordinates within doubled distance < size of center2."""
    u = np.arange(2 * n)
    diff = (u - center2) % (2 * n)
    return u[np.minimum(diff, 2 * n - diff) < size]


def coverage_counts(pi: Permutation, s: int, k: int) -> CoverageGrid:
    n = pi.n
    _check_sizes(n, s, k)
    counts = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i, v in enumerate(pi.values):
        counts[np.ix_(_covered(2 * i, s, n), _covered(2 * v, k, n))] += 1
    return CoverageGrid(n=n, counts=counts)


def wrap_intervals(start2: int, length2: int, n: int) -> list[tuple[int, int]]:
    """Split the doubled-coordinate arc [start2, start2+length2] at the torus seam."""
    lo = start2 % (2 * n)
    hi = lo + length2
    if hi <= 2 * n:
        return [(lo, hi)]
    return [(lo, 2 * n), (0, hi - 2 * n)]


def rectangle_fragments(i: int, v: int, s: int, k: int, n: int) -> list[tuple[int, int, int, int]]:
    """Pieces (x0, x1, y0, y1) of rectangle i in doubled drawing coordinates.

    Drawing coordinates put lattice point (x, y) at the centre of grid
    cell (x, y), i.e. doubled drawing coordinate 2x + 1.
    """
    xs = wrap_intervals(2 * i + 1 - s, 2 * s, n)
    ys = wrap_intervals(2 * v + 1 - k, 2 * k, n)
    return [(x0, x1, y0, y1) for x0, x1 in xs for y0, y1 in ys]


@dataclass
class RenderOptions:
    cell_px: int = 20
    grid: bool = True
    heatmap: bool = False
    r: int = 1


def _fmt(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def render_svg(pi: Permutation, s: int, k: int, options: RenderOptions | None = None) -> str:
    opts = options or RenderOptions()
    n = pi.n
    _check_sizes(n, s, k)
    if opts.cell_px < 1:
        raise ParameterError(f"cell size must be positive, got {opts.cell_px}")
    half = opts.cell_px / 2
    size = n * opts.cell_px

    def px(x2):
        return _fmt(x2 * half)

    def py(y2):
        # SVG y grows downward; torus y grows upward
        return _fmt((2 * n - y2) * half)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<title>{n} rectangles of size {s}x{k} on the {n}x{n} torus</title>",
    ]
    if opts.grid:
        out.append('<g class="grid" stroke="#808080" stroke-width="0.5" stroke-dasharray="1,2">')
        for t in range(1, n):
            c = _fmt(t * opts.cell_px)
            out.append(f'<line x1="{c}" y1="0" x2="{c}" y2="{size}"/>')
            out.append(f'<line x1="0" y1="{c}" x2="{size}" y2="{c}"/>')
        out.append("</g>")
    out.append(
        f'<g class="rectangles" fill="{_FILL}" fill-opacity="0.6" stroke="{_STROKE}" stroke-width="1">'
    )
    for i, v in enumerate(pi.values):
        out.append(f'<g class="rect" data-index="{i}" data-image="{v}">')
        for x0, x1, y0, y1 in rectangle_fragments(i, v, s, k, n):
            out.append(
                f'<rect x="{px(x0)}" y="{py(y1)}" width="{px(x1 - x0)}" height="{px(y1 - y0)}"/>'
            )
        out.append("</g>")
    out.append("</g>")
    if opts.heatmap:
        grid = coverage_counts(pi, s, k)
        out.append('<g class="heatmap" stroke="none">')
        q = opts.cell_px / 4
        for u, w in zip(*np.nonzero(grid.counts > opts.r)):
            c = int(grid.counts[u, w])
            colour = _HEAT[0] if c == opts.r + 1 else _HEAT[1]
            # half-lattice point (u/2, w/2) sits at doubled drawing coordinate u + 1
            cx = (int(u) + 1) * half
            cy = (2 * n - int(w) - 1) * half
            out.append(
                f'<rect class="hot" data-count="{c}" x="{_fmt(cx - q)}" y="{_fmt(cy - q)}" '
                f'width="{_fmt(2 * q)}" height="{_fmt(2 * q)}" fill="{colour}"/>'
            )
        out.append("</g>")
    out.append(
        f'<rect class="boundary" x="0" y="0" width="{size}" height="{size}" '
        f'fill="none" stroke="{_STROKE}" stroke-width="1"/>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
