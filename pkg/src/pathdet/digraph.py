"""k-colored acyclic digraphs on the vertex set {1, ..., n}.

Acyclicity is encoded by labeling: every edge goes from a smaller to a
larger vertex.  Between an ordered pair (i, j) there may be several parallel
edges, each with a distinct color from {1, ..., k}.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Mapping

__all__ = [
    "ColoredDigraph",
    "ColoredPath",
    "GraphError",
    "enumerate_colored_paths",
    "graph_from_json",
    "graph_random",
    "graph_to_json",
    "graph_validate",
]


class GraphError(ValueError):
    """Invalid graph description.

    ``kind`` is one of ``"acyclicity"``, ``"multicolor"``, ``"range"``,
    ``"colors"`` (unsupported color count), ``"duplicate-edge"`` or
    ``"schema"``.
    """

    def __init__(self, kind: str, detail: str) -> None:
        super().__init__(f"{kind}: {detail}")
        self.kind = kind
        self.detail = detail


def _is_int(x: object) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


class ColoredDigraph:
    """Validated, immutable k-colored acyclic digraph.

    ``edges`` maps ``(i, j)`` with ``i < j`` to the frozenset of colors on
    that pair.  Pairs with no colors are simply absent.
    """

    __slots__ = ("_n", "_k", "_edges")

    def __init__(self, n: int, k: int, edges: Mapping[tuple[int, int], Iterable[int]] | None = None) -> None:
        if not _is_int(n) or n < 0:
            raise GraphError("range", f"vertex count must be a non-negative int, got {n!r}")
        if not _is_int(k) or k < 1:
            raise GraphError("colors", f"color count must be a positive int, got {k!r}")
        clean: dict[tuple[int, int], frozenset[int]] = {}
        for pair, colors in (edges or {}).items():
            i, j = pair
            if not (_is_int(i) and _is_int(j)) or not (1 <= i <= n and 1 <= j <= n):
                raise GraphError("range", f"edge ({i}, {j}) has a vertex outside 1..{n}")
            if i >= j:
                raise GraphError("acyclicity", f"edge ({i}, {j}) does not satisfy i < j")
            colors = list(colors)
            for c in colors:
                if not _is_int(c) or not 1 <= c <= k:
                    raise GraphError("range", f"edge ({i}, {j}) has color {c!r} outside 1..{k}")
            if len(set(colors)) != len(colors):
                raise GraphError("multicolor", f"edge ({i}, {j}) repeats a color: {sorted(colors)}")
            if colors:
                clean[(i, j)] = frozenset(colors)
        self._n = n
        self._k = k
        self._edges = dict(sorted(clean.items()))

    @property
    def n(self) -> int:
        return self._n

    @property
    def k(self) -> int:
        return self._k

    @property
    def edges(self) -> Mapping[tuple[int, int], frozenset[int]]:
        return dict(self._edges)

    def colors(self, i: int, j: int) -> frozenset[int]:
        """Colors on the pair (i, j); empty when there is no edge."""
        return self._edges.get((i, j), frozenset())

    def has_edge(self, i: int, j: int, color: int) -> bool:
        return color in self._edges.get((i, j), ())

    def successors(self, i: int) -> Iterator[tuple[int, frozenset[int]]]:
        for j in range(i + 1, self._n + 1):
            cs = self._edges.get((i, j))
            if cs:
                yield j, cs

    def num_colored_edges(self) -> int:
        return sum(len(cs) for cs in self._edges.values())

    def with_edge(self, i: int, j: int, color: int) -> ColoredDigraph:
        edges = {p: set(cs) for p, cs in self._edges.items()}
        edges.setdefault((i, j), set()).add(color)
        return ColoredDigraph(self._n, self._k, edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredDigraph):
            return NotImplemented
        return (self._n, self._k, self._edges) == (other._n, other._k, other._edges)

    def __hash__(self) -> int:
        return hash((self._n, self._k, tuple(self._edges.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{i}->{j}:{sorted(cs)}" for (i, j), cs in self._edges.items())
        return f"ColoredDigraph(n={self._n}, k={self._k}, edges={{{body}}})"


_TOP_KEYS = {"n", "k", "edges"}
_EDGE_KEYS = {"from", "to", "colors"}


def graph_validate(raw: Any) -> ColoredDigraph:
    """Validate a parsed JSON graph description (or pass a graph through).

    The JSON shape is ``{"n": 4, "k": 3, "edges": [{"from": 1, "to": 2,
    "colors": [1, 2]}, ...]}``.  Unknown fields and repeated ``(from, to)``
    entries are rejected; edge order does not matter.
    """
    if isinstance(raw, ColoredDigraph):
        return raw
    if not isinstance(raw, Mapping):
        raise GraphError("schema", "graph must be a JSON object")
    extra = set(raw) - _TOP_KEYS
    if extra:
        raise GraphError("schema", f"unknown field(s): {sorted(extra)}")
    missing = {"n", "k"} - set(raw)
    if missing:
        raise GraphError("schema", f"missing field(s): {sorted(missing)}")
    edges_raw = raw.get("edges", [])
    if not isinstance(edges_raw, list):
        raise GraphError("schema", "'edges' must be a list")
    edges: dict[tuple[int, int], list[int]] = {}
    for e in edges_raw:
        if not isinstance(e, Mapping):
            raise GraphError("schema", f"edge entry must be an object, got {e!r}")
        if set(e) != _EDGE_KEYS:
            raise GraphError("schema", f"edge entry must have exactly {sorted(_EDGE_KEYS)}, got {sorted(e)}")
        i, j, colors = e["from"], e["to"], e["colors"]
        if not (_is_int(i) and _is_int(j)):
            raise GraphError("schema", f"edge endpoints must be integers, got {i!r}, {j!r}")
        if not isinstance(colors, list):
            raise GraphError("schema", f"'colors' must be a list, got {colors!r}")
        if (i, j) in edges:
            raise GraphError("duplicate-edge", f"edge ({i}, {j}) listed more than once")
        edges[(i, j)] = colors
    return ColoredDigraph(raw["n"], raw["k"], edges)


def graph_to_json(g: ColoredDigraph) -> dict:
    return {
        "n": g.n,
        "k": g.k,
        "edges": [{"from": i, "to": j, "colors": sorted(cs)} for (i, j), cs in g.edges.items()],
    }


def graph_from_json(text: str) -> ColoredDigraph:
    return graph_validate(json.loads(text))


def graph_random(n: int, k: int, density: float, seed: int) -> ColoredDigraph:
    """Random colored DAG.

    Uses Python's Mersenne Twister (``random.Random(seed)``).  Triples
    ``(i, j, color)`` are visited with i, then j, then color ascending, and
    each is kept iff the next ``random()`` draw is below ``density``.
    """
    if not 0 <= density <= 1:
        raise ValueError(f"density must lie in [0, 1], got {density}")
    if k < 1:
        raise GraphError("colors", f"color count must be positive, got {k}")
    rng = random.Random(seed)
    edges: dict[tuple[int, int], list[int]] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for c in range(1, k + 1):
                if rng.random() < density:
                    edges.setdefault((i, j), []).append(c)
    return ColoredDigraph(n, k, edges)


@dataclass(frozen=True)
class ColoredPath:
    """Path ``vertices[0] -> ... -> vertices[-1]``; ``edge_colors[m]`` colors step m."""

    vertices: tuple[int, ...]
    edge_colors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a path has at least one vertex")
        if len(self.edge_colors) != len(self.vertices) - 1:
            raise ValueError("need exactly one color per step")
        if any(a >= b for a, b in zip(self.vertices, self.vertices[1:])):
            raise ValueError(f"path vertices must increase: {self.vertices}")

    def is_in(self, g: ColoredDigraph) -> bool:
        if not all(1 <= v <= g.n for v in self.vertices):
            return False
        return all(
            g.has_edge(a, b, c) for a, b, c in zip(self.vertices, self.vertices[1:], self.edge_colors)
        )

    def __str__(self) -> str:
        out = [str(self.vertices[0])]
        for c, v in zip(self.edge_colors, self.vertices[1:]):
            out.append(f"-c{c}-> {v}")
        return " ".join(out)


def enumerate_colored_paths(g: ColoredDigraph) -> list[ColoredPath]:
    """Every colored path of ``g``, single vertices included.

    Sorted by vertex tuple, then by color tuple.
    """
    found: list[ColoredPath] = []

    def extend(verts: list[int], cols: list[int]) -> None:
        found.append(ColoredPath(tuple(verts), tuple(cols)))
        for j, colors in g.successors(verts[-1]):
            for c in sorted(colors):
                verts.append(j)
                cols.append(c)
                extend(verts, cols)
                verts.pop()
                cols.pop()

    for v in range(1, g.n + 1):
        extend([v], [])
    found.sort(key=lambda p: (p.vertices, p.edge_colors))
    return found
