import pytest
from conftest import graphs
from hypothesis import given, settings

from pathdet import (
    ColoredDigraph,
    Polynomial,
    Variable,
    Word,
    best_word_sum,
    build_colored_matrix,
    det_division_free,
    enumerate_best_words,
    enumerate_colored_paths,
    is_bad_pair,
    path_generating_function,
)
from pathdet.digraph import graph_random
from pathdet.pathgf import stanley_path_polynomial

x = Polynomial.var


def singletons(n: int, k: int) -> Polynomial:
    p = Polynomial.one()
    for i in range(1, n + 1):
        for a in range(1, k + 1):
            p = p + x(i, a)
    return p


def test_three_color_generating_function(three_color, three_color_det_text):
    assert str(path_generating_function(three_color)) == three_color_det_text
    assert best_word_sum(three_color) == path_generating_function(three_color)


def test_empty_and_trivial_graphs():
    assert path_generating_function(ColoredDigraph(0, 2)) == 1
    assert path_generating_function(ColoredDigraph(3, 2)) == singletons(3, 2)
    assert best_word_sum(ColoredDigraph(3, 2)) == singletons(3, 2)
    assert all(len(w) <= 1 for w in enumerate_best_words(ColoredDigraph(3, 2)))


def test_bad_pairs_on_three_color_graph(three_color):
    for a in (1, 2, 3):
        assert is_bad_pair(three_color, Variable(1, 3), Variable(2, a))
        assert not is_bad_pair(three_color, Variable(1, 1), Variable(2, a))
    with pytest.raises(ValueError):
        is_bad_pair(three_color, Variable(2, 1), Variable(2, 1))


def test_words_must_be_nice():
    with pytest.raises(ValueError):
        Word((Variable(2, 1), Variable(1, 1)))
    assert Word().monomial() == 1 and str(Word()) == "1"


@pytest.mark.parametrize("n, k", [(3, 1), (3, 2), (4, 2)])
def test_complete_graph_makes_every_nice_word_best(n, k):
    g = graph_random(n, k, 1.0, seed=0)
    product = Polynomial.one()
    for i in range(1, n + 1):
        product = product * (1 + sum((x(i, a) for a in range(1, k + 1)), Polynomial.zero()))
    assert best_word_sum(g) == product == path_generating_function(g)


@settings(max_examples=60)
@given(graphs())
def test_generating_function_invariants(g):
    gf = path_generating_function(g)
    assert set(gf.coefficients()) <= {1}
    assert gf.constant_term() == 1
    assert len(gf) - 1 == g.k * len(enumerate_colored_paths(g))
    assert best_word_sum(g) == gf


@settings(max_examples=40)
@given(graphs(max_n=5))
def test_determinant_counts_paths(g):
    assert det_division_free(build_colored_matrix(g)) == path_generating_function(g)


@given(graphs(max_k=1))
def test_single_color_path_polynomial(g):
    assert stanley_path_polynomial(g) == path_generating_function(g)
