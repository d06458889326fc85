"""Polynomial matrices, and the path-counting matrix of a colored DAG.

Indices are 1-based everywhere: ``m[i, j]`` is the entry in row i, column j.
"""

from __future__ import annotations

import json
from typing import Iterator, Sequence

from .digraph import ColoredDigraph
from .polyring import Polynomial, poly_format, poly_parse

__all__ = ["PolyMatrix", "build_colored_matrix", "build_stanley_matrix"]


class PolyMatrix:
    """Immutable square matrix of :class:`Polynomial` entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[Polynomial | int]]) -> None:
        n = len(rows)
        built = []
        for r in rows:
            if len(r) != n:
                raise ValueError(f"matrix must be square; got a row of length {len(r)} with n={n}")
            built.append(tuple(e if isinstance(e, Polynomial) else Polynomial.constant(e) for e in r))
        self._rows: tuple[tuple[Polynomial, ...], ...] = tuple(built)

    @property
    def n(self) -> int:
        return len(self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i}, {j}) outside 1..{self.n}")
        return self._rows[i - 1][j - 1]

    def rows(self) -> tuple[tuple[Polynomial, ...], ...]:
        return self._rows

    def __iter__(self) -> Iterator[tuple[Polynomial, ...]]:
        return iter(self._rows)

    def transpose(self) -> PolyMatrix:
        return PolyMatrix([list(col) for col in zip(*self._rows)])

    def scale_row(self, i: int, factor: Polynomial | int) -> PolyMatrix:
        rows = [list(r) for r in self._rows]
        rows[i - 1] = [e * factor for e in rows[i - 1]]
        return PolyMatrix(rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"PolyMatrix({self.to_json()!r})"

    def to_json(self) -> list[list[str]]:
        return [[poly_format(e) for e in r] for r in self._rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> PolyMatrix:
        return cls([[poly_parse(s) for s in r] for r in data])

    def to_text(self) -> str:
        """Aligned grid, one row per line, columns separated by `` | ``."""
        cells = self.to_json()
        if not cells:
            return "(empty 0x0 matrix)"
        widths = [max(len(r[j]) for r in cells) for j in range(self.n)]
        return "\n".join(" | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def build_colored_matrix(g: ColoredDigraph) -> PolyMatrix:
    """Matrix whose determinant enumerates the colored paths of ``g``.

    Row i only involves the variables x_i^{(1..k)}: the diagonal is
    ``1 + sum_t x_i^{(t)}``, entries left of it are the full sum, and an
    entry (i, j) right of it sums the colors *missing* from the pair (i, j).
    """
    k = g.k
    all_colors = range(1, k + 1)
    rows = []
    for i in range(1, g.n + 1):
        full = Polynomial.sum_of_vars(i, all_colors)
        row = []
        for j in range(1, g.n + 1):
            if i == j:
                row.append(full + 1)
            elif i > j:
                row.append(full)
            else:
                present = g.colors(i, j)
                row.append(Polynomial.sum_of_vars(i, [t for t in all_colors if t not in present]))
        rows.append(row)
    return PolyMatrix(rows)


def build_stanley_matrix(g: ColoredDigraph) -> PolyMatrix:
    """Single-color matrix: 1 + x_i on the diagonal, x_i below, and above
    the diagonal 0 on edges and x_i on non-edges."""
    if g.k != 1:
        raise ValueError(f"the single-color matrix needs k == 1, got k = {g.k}")
    rows = []
    for i in range(1, g.n + 1):
        x = Polynomial.var(i, 1)
        row = []
        for j in range(1, g.n + 1):
            if i == j:
                row.append(1 + x)
            elif i < j and g.colors(i, j):
                row.append(Polynomial.zero())
            else:
                row.append(x)
        rows.append(row)
    return PolyMatrix(rows)


def matrix_to_json_text(m: PolyMatrix) -> str:
    return json.dumps(m.to_json())
