"""Determinants that count paths in k-colored acyclic digraphs."""

from .config import BoundExceeded, Limits, TermLimitExceeded
from .determinant import det_division_free, det_leibniz
from .digraph import (
    ColoredDigraph,
    ColoredPath,
    GraphError,
    enumerate_colored_paths,
    graph_random,
    graph_to_json,
    graph_validate,
)
from .lsd import (
    Cycle,
    LinearSubdigraph,
    classify,
    det_via_lsd,
    enumerate_lsd,
    involution_f,
    involution_step,
    lsd_signed_weight,
    verify_cancellation,
)
from .pathgf import Word, best_word_sum, enumerate_best_words, is_bad_pair, path_generating_function
from .pathmatrix import PolyMatrix, build_colored_matrix, build_stanley_matrix
from .polyring import Polynomial, Variable, poly_add, poly_format, poly_mul, poly_neg, poly_parse

__version__ = "0.1.0"
