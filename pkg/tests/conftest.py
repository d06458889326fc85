from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from pathdet import ColoredDigraph, Polynomial, Variable

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "data"


def three_color_graph() -> ColoredDigraph:
    return ColoredDigraph(4, 3, {(1, 2): [1, 2], (2, 3): [1], (2, 4): [1]})


@pytest.fixture
def three_color() -> ColoredDigraph:
    return three_color_graph()


@pytest.fixture
def three_color_det_text() -> str:
    return (DATA / "three_color_det.txt").read_text().strip()


def load_data_graph(name: str) -> ColoredDigraph:
    from pathdet import graph_validate

    return graph_validate(json.loads((DATA / name).read_text()))


variables = st.builds(Variable, st.integers(1, 4), st.integers(1, 3))
monomials = st.lists(st.tuples(variables, st.integers(1, 3)), max_size=3)
polynomials = st.lists(st.tuples(monomials, st.integers(-9, 9)), max_size=8).map(Polynomial.from_terms)


@st.composite
def graphs(draw: st.DrawFn, max_n: int = 6, max_k: int = 3) -> ColoredDigraph:
    n = draw(st.integers(0, max_n))
    k = draw(st.integers(1, max_k))
    triples = [(i, j, c) for i in range(1, n + 1) for j in range(i + 1, n + 1) for c in range(1, k + 1)]
    chosen = draw(st.lists(st.sampled_from(triples), unique=True)) if triples else []
    edges: dict[tuple[int, int], list[int]] = {}
    for i, j, c in chosen:
        edges.setdefault((i, j), []).append(c)
    return ColoredDigraph(n, k, edges)


# criterion id -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter) -> None:
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[cid]
        terminalreporter.write_line(f"criterion {cid}: {'PASS' if ok else 'FAIL'}  {detail}")
