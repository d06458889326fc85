import pytest
from conftest import graphs
from hypothesis import given

from pathdet import ColoredDigraph, PolyMatrix, Polynomial, build_colored_matrix, build_stanley_matrix, poly_parse
from pathdet.digraph import graph_random

x = Polynomial.var


def test_three_color_entries(three_color):
    m = build_colored_matrix(three_color)
    full = {i: sum((x(i, c) for c in (1, 2, 3)), Polynomial.zero()) for i in range(1, 5)}
    assert m[1, 2] == x(1, 3)
    assert m[2, 3] == m[2, 4] == x(2, 2) + x(2, 3)
    assert m[3, 4] == full[3]
    assert m[2, 1] == full[2]
    assert m[1, 1] == 1 + full[1]
    assert m.to_text().splitlines()[0].split(" | ")[1].strip() == "x1_3"


def test_two_vertex_examples():
    assert build_colored_matrix(ColoredDigraph(2, 1)) == PolyMatrix([[1 + x(1, 1), x(1, 1)], [x(2, 1), 1 + x(2, 1)]])
    assert build_stanley_matrix(ColoredDigraph(2, 1, {(1, 2): [1]})) == PolyMatrix(
        [[1 + x(1, 1), 0], [x(2, 1), 1 + x(2, 1)]]
    )


def test_all_colors_zero_the_entry():
    assert build_colored_matrix(ColoredDigraph(2, 3, {(1, 2): [1, 2, 3]}))[1, 2] == 0


def test_stanley_needs_one_color(three_color):
    with pytest.raises(ValueError):
        build_stanley_matrix(three_color)


def test_matrix_shape_and_indexing():
    with pytest.raises(ValueError):
        PolyMatrix([[1, 2]])
    m = PolyMatrix([[1, 2], [3, 4]])
    with pytest.raises(IndexError):
        m[0, 1]
    assert m.transpose()[1, 2] == 3
    assert PolyMatrix([]).to_text() == "(empty 0x0 matrix)"


def test_json_round_trip(three_color):
    m = build_colored_matrix(three_color)
    assert PolyMatrix.from_json(m.to_json()) == m
    assert poly_parse(m.to_json()[1][2]) == m[2, 3]


@given(graphs())
def test_term_counts_and_row_variables(g):
    m = build_colored_matrix(g)
    for i in range(1, g.n + 1):
        for j in range(1, g.n + 1):
            e = m[i, j]
            if i == j:
                expected = g.k + 1
            elif i > j:
                expected = g.k
            else:
                expected = g.k - len(g.colors(i, j))
            assert len(e) == expected
            assert all(v.vertex == i for v in e.variables())


@pytest.mark.parametrize("seed", range(20))
def test_stanley_matches_colored_for_one_color(seed):
    g = graph_random(6, 1, 0.2 + 0.03 * seed, seed)
    assert build_stanley_matrix(g) == build_colored_matrix(g)
