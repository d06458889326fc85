"""Path generating functions of colored DAGs, from two independent models.

Path model: every colored path ``i_1 -c_{r_1}-> ... -> i_t`` contributes
``x_{i_1}^{(r_1)} ... x_{i_{t-1}}^{(r_{t-1})} * (x_{i_t}^{(1)} + ... + x_{i_t}^{(k)})``.

Word model: a *nice* word is a sequence of variables with strictly increasing
vertices.  A consecutive pair ``(x_a^{(i)}, x_b^{(j)})`` is *bad* when there is
no color-i edge a -> b; note the second letter's color plays no part.  A
*best* word is a nice word without a bad consecutive pair.  Each letter's
color names the edge leaving it, except the last letter, which has no
successor and so carries a free color; that free color is exactly the
trailing ``x_{i_t}^{(1..k)}`` sum of the path model.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import ColoredDigraph, enumerate_colored_paths
from .polyring import PolyAccumulator, Polynomial, Variable

__all__ = [
    "Word",
    "best_word_sum",
    "enumerate_best_words",
    "is_bad_pair",
    "path_generating_function",
    "stanley_path_polynomial",
]


@dataclass(frozen=True)
class Word:
    letters: tuple[Variable, ...] = ()

    def __post_init__(self) -> None:
        vs = [x.vertex for x in self.letters]
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise ValueError(f"word is not nice (vertices must increase): {self}")

    def monomial(self) -> Polynomial:
        return Polynomial.from_terms([([(x, 1) for x in self.letters], 1)])

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "*".join(map(str, self.letters)) or "1"


def path_generating_function(g: ColoredDigraph) -> Polynomial:
    """``1 + sum_P (edge-color monomial of P) * sum_a x_{last(P)}^{(a)}``."""
    acc = PolyAccumulator()
    acc.add(Polynomial.one())
    colors = range(1, g.k + 1)
    for path in enumerate_colored_paths(g):
        head = [(Variable(v, c), 1) for v, c in zip(path.vertices, path.edge_colors)]
        last = path.vertices[-1]
        acc.add(Polynomial.from_terms((head + [(Variable(last, a), 1)], 1) for a in colors))
    return acc.result()


def is_bad_pair(g: ColoredDigraph, first: Variable, second: Variable) -> bool:
    """Whether ``(first, second)`` is a bad pair in ``g``.

    The answer depends only on ``first`` and on ``second.vertex``: it is the
    same for every color of ``second``.
    """
    if first.vertex >= second.vertex:
        raise ValueError("a pair needs strictly increasing vertices")
    return not g.has_edge(first.vertex, second.vertex, first.color)


def enumerate_best_words(g: ColoredDigraph) -> list[Word]:
    """All best words of ``g`` (the empty word included), sorted."""
    letters = [Variable(v, c) for v in range(1, g.n + 1) for c in range(1, g.k + 1)]
    words: list[tuple[Variable, ...]] = [()]
    frontier: list[tuple[Variable, ...]] = [(x,) for x in letters]
    while frontier:
        words.extend(frontier)
        grown = []
        for w in frontier:
            tail = w[-1]
            for x in letters:
                if x.vertex > tail.vertex and not is_bad_pair(g, tail, x):
                    grown.append(w + (x,))
        frontier = grown
    words.sort(key=lambda w: [(x.vertex, x.color) for x in w])
    return [Word(w) for w in words]


def best_word_sum(g: ColoredDigraph) -> Polynomial:
    """Commutative image of the sum of all best words."""
    acc = PolyAccumulator()
    for w in enumerate_best_words(g):
        acc.add(w.monomial())
    return acc.result()


def stanley_path_polynomial(g: ColoredDigraph) -> Polynomial:
    """``1 + sum over paths k_1 ... k_j of x_{k_1} ... x_{k_j}`` for k = 1.

    Paths follow the edges of ``g`` with colors ignored; ``x_v`` is
    ``x_v^{(1)}``.
    """
    if g.k != 1:
        raise ValueError(f"needs a single-color graph, got k = {g.k}")
    acc = PolyAccumulator()
    acc.add(Polynomial.one())

    def grow(path: list[int]) -> None:
        acc.add(Polynomial.from_terms([([(Variable(v, 1), 1) for v in path], 1)]))
        for j in range(path[-1] + 1, g.n + 1):
            if g.colors(path[-1], j):
                path.append(j)
                grow(path)
                path.pop()

    for v in range(1, g.n + 1):
        grow([v])
    return acc.result()
