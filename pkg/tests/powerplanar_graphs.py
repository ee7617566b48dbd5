import json
import logging

import pytest

from powerplanar.catalog import default_descriptors
from powerplanar.descriptors import build_group
from powerplanar.graphs import (
    Graph,
    GraphFormatError,
    NodeBudget,
    SearchBudgetExceeded,
    automorphisms,
    blocks,
    build_power_graph,
    clique_lower_formula,
    export_dot,
    graph_from_named,
    graph_to_json,
    induced_subgraph,
    is_vertex_transitive,
    max_clique,
    read_graph,
)
from powerplanar.groups import make_cyclic
from powerplanar.logs import PACKAGE_LOGGER, close_run_logger, create_run_logger


# -------------------------
# Значение Graph
# -------------------------
def test_from_edges_normalizes_and_dedupes():
    g = Graph.from_edges(["a", "b", "c"], [(1, 0), (0, 1), (2, 1)])
    assert g.edges == frozenset({(0, 1), (1, 2)})
    assert g.degree(1) == 2


def test_self_loop_rejected():
    with pytest.raises(GraphFormatError, match="self-loop"):
        Graph.from_edges(["a"], [(0, 0)])


def test_duplicate_labels_rejected():
    with pytest.raises(GraphFormatError, match="unique"):
        Graph.from_edges(["a", "a"], [])


def test_unknown_label():
    with pytest.raises(GraphFormatError):
        Graph.complete(3).index("z")


def test_node_budget():
    with pytest.raises(ValueError):
        NodeBudget(0)
    budget = NodeBudget(2)
    budget.tick()
    budget.tick()
    with pytest.raises(SearchBudgetExceeded):
        budget.tick()


# -------------------------
# Степенные графы
# -------------------------
def test_power_graph_of_prime_power_is_complete():
    g = build_power_graph(make_cyclic(8))
    assert g.m == 28


def test_power_graph_z6():
    full = build_power_graph(make_cyclic(6))
    proper = build_power_graph(make_cyclic(6), proper=True)
    assert (full.n, full.m) == (6, 13)
    assert (proper.n, proper.m) == (5, 8)
    assert "1" not in proper.labels


def test_power_graph_d8_reflections_are_leaves():
    g = build_power_graph(build_group("D8"))
    assert g.m == 10
    assert sum(1 for v in range(g.n) if g.degree(v) == 1) == 4


def test_proper_power_graph_of_dihedral_is_disconnected():
    g = build_power_graph(build_group("D10"), proper=True)
    # K4 на поворотах и пять изолированных отражений
    assert len(g.components()) == 6
    assert max_clique(g)[0] == 4


def test_clique_lower_formula():
    assert clique_lower_formula(1) == 0
    assert clique_lower_formula(8) == 7
    assert clique_lower_formula(12) == 7
    size, _ = max_clique(build_power_graph(make_cyclic(12), proper=True))
    assert size >= clique_lower_formula(12)


def test_clique_of_proper_power_graph_z12():
    # порождающие, элементы порядка 6 и 3: 4 + 2 + 2
    size, clique = max_clique(build_power_graph(make_cyclic(12), proper=True))
    assert size == 8
    assert len(clique) == 8


def _power_edges_by_definition(g, proper):
    """x ~ y, если x в <y> или y в <x>; <x> считается прямо по таблице."""
    spans = []
    for x in range(g.order):
        span, p = {g.identity}, int(g.table[g.identity, x])
        while p != g.identity:
            span.add(p)
            p = int(g.table[p, x])
        spans.append(span)
    vertices = [x for x in range(g.order) if not (proper and x == g.identity)]
    return {
        (i, j)
        for i, x in enumerate(vertices)
        for j, y in enumerate(vertices)
        if i < j and (x in spans[y] or y in spans[x])
    }


@pytest.mark.parametrize("descriptor", default_descriptors())
def test_power_graph_matches_definition(descriptor):
    g = build_group(descriptor)
    for proper in (False, True):
        graph = build_power_graph(g, proper=proper)
        assert graph.n == g.order - proper
        assert set(graph.edges) == _power_edges_by_definition(g, proper)


# -------------------------
# Блоки, автоморфизмы
# -------------------------
def test_blocks_of_dot_product():
    g = graph_from_named("dot(K5,K5)")
    dec = blocks(g)
    assert len(dec.cut_vertices) == 1
    assert sorted(len(b) for b in dec.blocks) == [5, 5]


def test_induced_subgraph_keeps_labels():
    g = graph_from_named("K3,3")
    sub = induced_subgraph(g, [0, 3, 4])
    assert sub.labels == ("a0", "b0", "b1")
    assert sub.m == 2


def test_automorphisms_and_transitivity():
    assert len(automorphisms(Graph.complete(3))) == 6
    assert automorphisms(Graph.complete(6), limit=10) is None
    assert is_vertex_transitive(graph_from_named("C5"))
    assert not is_vertex_transitive(graph_from_named("P3"))


# -------------------------
# Именованные графы
# -------------------------
@pytest.mark.parametrize("name, n, m", [
    ("K5", 5, 10),
    ("K3,3", 6, 9),
    ("C4", 4, 4),
    ("P4", 4, 3),
    ("fig2gadget6", 6, 13),
    ("K9mK6p3", 9, 24),
    ("K9mK6p2", 9, 23),
    ("dot(K5, K3,3)", 10, 19),
    ("union(K5,C4)", 9, 14),
])
def test_named_graph_sizes(name, n, m):
    g = graph_from_named(name)
    assert (g.n, g.m) == (n, m)


def test_order_gadget_labels():
    g = graph_from_named("fig2gadget5")
    assert set(g.labels) == {"1", "d", "d2", "d3", "d4"}


def test_named_graph_errors():
    with pytest.raises(GraphFormatError, match="offset 0"):
        graph_from_named("X5")
    with pytest.raises(GraphFormatError, match="end of input"):
        graph_from_named("K5)")
    with pytest.raises(GraphFormatError):
        graph_from_named("fig2gadget7")


# -------------------------
# Экспорт и чтение
# -------------------------
def test_export_dot_lists_edges():
    text = export_dot(graph_from_named("P3")).decode("utf-8")
    assert text.startswith("graph G {")
    assert "  0 -- 1;" in text
    assert '  2 [label="2"];' in text


def test_json_roundtrip_of_named_graph():
    g = graph_from_named("dot(K5,C4)")
    assert read_graph(graph_to_json(g)) == g


def test_read_graph_rejects_duplicate_edge():
    record = json.dumps({"vertices": ["a", "b"], "edges": [[0, 1], [1, 0]]})
    with pytest.raises(GraphFormatError, match="duplicate"):
        read_graph(record)


def test_read_graph_rejects_missing_vertex():
    with pytest.raises(GraphFormatError, match="missing vertex"):
        read_graph('{"vertices": ["a"], "edges": [[0, 3]]}')


# -------------------------
# Логгер запуска
# -------------------------
def test_run_logger_writes_file(tmp_path):
    logger = create_run_logger(tmp_path, level=logging.DEBUG)
    logging.getLogger(f"{PACKAGE_LOGGER}.graphs").info("from a module")
    close_run_logger(logger)

    text = logger.log_file.read_text(encoding="utf-8")
    assert "START" in text
    assert "from a module" in text
    assert "QUIT" in text
    package = logging.getLogger(PACKAGE_LOGGER)
    assert not any(
        isinstance(h, logging.FileHandler) and h.baseFilename == str(logger.log_file.resolve())
        for h in package.handlers
    )


def test_run_logger_without_directory():
    logger = create_run_logger()
    assert logger.log_file is None
    close_run_logger(logger)
