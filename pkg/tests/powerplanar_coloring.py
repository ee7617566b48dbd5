from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from powerplanar.coloring import (
    SolverLimitError,
    bicolored_p4,
    coloring,
    is_proper,
    is_star_coloring,
)
from powerplanar.descriptors import build_group
from powerplanar.graphs import Graph, build_power_graph, graph_from_named, max_clique


def small_graphs(max_n: int = 6):
    def build(n):
        labels = [str(v) for v in range(n)]
        pairs = list(combinations(range(n), 2))
        if not pairs:
            return st.just(Graph.from_edges(labels, []))
        return st.sets(st.sampled_from(pairs)).map(lambda edges: Graph.from_edges(labels, edges))
    return st.integers(min_value=1, max_value=max_n).flatmap(build)


# -------------------------
# Проверки раскрасок
# -------------------------
def test_bicolored_path_detected():
    g = graph_from_named("P4")
    assert is_proper(g, (0, 1, 0, 1))
    assert bicolored_p4(g, (0, 1, 0, 1)) is not None
    assert not is_star_coloring(g, (0, 1, 0, 1))
    assert is_star_coloring(g, (0, 1, 0, 2))


def test_improper_coloring():
    g = graph_from_named("C4")
    assert not is_proper(g, (0, 0, 1, 1))
    assert not is_proper(g, (0, 1))


# -------------------------
# Точные значения
# -------------------------
@pytest.mark.parametrize("name, chi, chi_s", [
    ("C4", 2, 3),
    ("P3", 2, 2),
    ("P4", 2, 3),
    ("C5", 3, 4),
    ("K6", 6, 6),
    ("K3,3", 2, 4),
])
def test_named_graph_colorings(name, chi, chi_s):
    g = graph_from_named(name)
    result = coloring(g)
    assert (result.chromatic, result.star_chromatic) == (chi, chi_s)
    assert is_proper(g, result.chromatic_witness)
    assert is_star_coloring(g, result.star_witness)


def test_proper_power_graph_of_z6():
    g = build_power_graph(build_group("Z6"), proper=True)
    result = coloring(g)
    assert result.chromatic == 4
    assert result.star_chromatic == 4


def test_coloring_of_disconnected_graph():
    g = graph_from_named("union(K4,C5)")
    result = coloring(g)
    assert result.chromatic == 4
    assert is_star_coloring(g, result.star_witness)


def test_empty_and_edgeless_graphs():
    assert coloring(Graph.from_edges([], [])).chromatic == 0
    lonely = coloring(Graph.from_edges(["a", "b"], []))
    assert (lonely.chromatic, lonely.star_chromatic) == (1, 1)


def test_solver_limit():
    with pytest.raises(SolverLimitError, match="at most 64"):
        coloring(graph_from_named("P65"))


# -------------------------
# Свойства
# -------------------------
def _colorable(graph: Graph, k: int, check) -> bool:
    return any(check(graph, colors) for colors in product(range(k), repeat=graph.n))


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_colorings_are_valid_and_minimal(graph):
    result = coloring(graph)
    assert is_proper(graph, result.chromatic_witness)
    assert is_star_coloring(graph, result.star_witness)
    assert max_clique(graph)[0] <= result.chromatic <= result.star_chromatic
    if result.chromatic > 1:
        assert not _colorable(graph, result.chromatic - 1, is_proper)
    if result.star_chromatic > 1:
        assert not _colorable(graph, result.star_chromatic - 1, is_star_coloring)
