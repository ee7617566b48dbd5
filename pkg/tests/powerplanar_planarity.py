from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from powerplanar.graphs import Graph, build_power_graph, graph_from_named
from powerplanar.descriptors import build_group
from powerplanar.planarity import (
    Embedding,
    almost_planar_edge,
    check_rotation,
    embedding_surface,
    is_almost_planar,
    is_maximal_planar,
    is_outerplanar,
    is_planar,
    ring_analysis,
    verify_planar_certificate,
)
from powerplanar.subdivisions import (
    PatternHit,
    contains_induced,
    contains_subdivision,
    contains_subgraph,
    has_k4_subdivision,
)


def petersen() -> Graph:
    g = nx.petersen_graph()
    return Graph.from_edges([str(v) for v in g], g.edges())


def random_graphs(max_n: int = 7):
    def build(n):
        labels = [str(v) for v in range(n)]
        pairs = list(combinations(range(n), 2))
        return st.sets(st.sampled_from(pairs)).map(lambda edges: Graph.from_edges(labels, edges))
    return st.integers(min_value=2, max_value=max_n).flatmap(build)


# -------------------------
# Планарность с сертификатами
# -------------------------
@pytest.mark.parametrize("name", ["C5", "K4", "K2,3", "dot(K4,C4)", "P1"])
def test_planar_embedding_certificate(name):
    g = graph_from_named(name)
    ok, cert = is_planar(g)
    assert ok
    assert isinstance(cert, Embedding)
    check_rotation(g, cert)
    assert verify_planar_certificate(g, cert)


@pytest.mark.parametrize("name, pattern", [("K5", "K5"), ("K3,3", "K33"), ("K6", None)])
def test_nonplanar_kuratowski_certificate(name, pattern):
    g = graph_from_named(name)
    ok, cert = is_planar(g)
    assert not ok
    assert isinstance(cert, PatternHit)
    if pattern is not None:
        assert cert.pattern == pattern
    assert verify_planar_certificate(g, cert)


def test_petersen_certificate_is_k33_subdivision():
    g = petersen()
    ok, cert = is_planar(g)
    assert not ok
    assert cert.pattern == "K33"
    assert any(len(p) > 2 for p in cert.paths)
    assert cert.verify(g)


def test_forged_certificate_rejected():
    g = graph_from_named("K5")
    hit = PatternHit("K5", (0, 1, 2, 3, 4), tuple((i, j) for i in range(5) for j in range(i + 1, 5)))
    assert hit.verify(g)
    assert not hit.verify(g.with_edges(removed=[(0, 1)]))


def test_check_rotation_rejects_wrong_neighbours():
    g = graph_from_named("P3")
    with pytest.raises(ValueError):
        check_rotation(g, Embedding(((1,), (0,), (1,))))


def test_embedding_surface_of_planar_rotation():
    g = graph_from_named("K4")
    _, cert = is_planar(g)
    assert embedding_surface(g, cert) == ("orientable", 0)


# -------------------------
# Внешнепланарные, кольцевые
# -------------------------
@pytest.mark.parametrize("name, expected", [("C5", True), ("K4", False), ("K2,3", False), ("P4", True)])
def test_outerplanar(name, expected):
    assert is_outerplanar(graph_from_named(name)) is expected


def test_cycle_is_ring():
    ring = ring_analysis(graph_from_named("C4"))
    assert (ring.cycle_rank, ring.free_rank) == (1, 1)
    assert ring.pcp is True
    assert ring.is_ring is True


def test_k4_is_not_ring():
    ring = ring_analysis(graph_from_named("K4"))
    assert ring.cycle_rank == 3
    assert ring.free_rank == 4
    assert ring.has_K4_subdivision
    assert ring.ring_by_rank is False
    assert ring.ring_by_pcp is False
    assert ring.is_ring is False


def test_tree_is_ring():
    assert ring_analysis(graph_from_named("P5")).is_ring is True


def test_ring_budget_exhaustion_marks_incomplete():
    ring = ring_analysis(graph_from_named("K6"), cycle_budget=3)
    assert not ring.complete
    # K4-подразбиение решает вопрос и без полного перебора
    assert ring.is_ring is False


def test_power_graph_of_klein_group_is_ring():
    assert ring_analysis(build_power_graph(build_group("Z2xZ2"))).is_ring is True


# -------------------------
# Почти и максимально планарные
# -------------------------
@pytest.mark.parametrize("name, expected", [("K5", True), ("K3,3", True), ("K6", False), ("C4", True)])
def test_almost_planar(name, expected):
    assert is_almost_planar(graph_from_named(name)) is expected


def test_almost_planar_edge_makes_planar():
    g = graph_from_named("K3,3")
    e = almost_planar_edge(g)
    assert e is not None
    assert is_planar(g.with_edges(removed=[e]))[0]
    assert almost_planar_edge(graph_from_named("C4")) is None


@pytest.mark.parametrize("name, expected", [("K4", True), ("C4", False), ("K5", False), ("P2", True)])
def test_maximal_planar(name, expected):
    assert is_maximal_planar(graph_from_named(name)) is expected


# -------------------------
# Подразбиения и подграфы
# -------------------------
def test_k4_subdivision_by_reduction():
    assert has_k4_subdivision(graph_from_named("K4"))
    assert not has_k4_subdivision(graph_from_named("C6"))
    assert not has_k4_subdivision(graph_from_named("K2,3"))


def test_subdivision_search_in_petersen():
    g = petersen()
    hit = contains_subdivision(g, "K33")
    assert hit is not None and hit.verify(g)
    # максимальная степень 3: K5 не помещается
    assert contains_subdivision(g, "K5") is None


def test_k23_subdivision():
    assert contains_subdivision(graph_from_named("C6"), "K23") is None
    g = graph_from_named("K2,3")
    hit = contains_subdivision(g, "K23")
    assert hit is not None and hit.verify(g)


def test_large_cycle_resolved_without_search():
    g = graph_from_named("C70")
    for pattern in ("K4", "K23", "K5", "K33"):
        assert contains_subdivision(g, pattern) is None


def test_k6_is_clique_pattern_only():
    with pytest.raises(ValueError, match="clique"):
        contains_subdivision(graph_from_named("K6"), "K6")
    with pytest.raises(ValueError, match="unknown pattern"):
        contains_induced(graph_from_named("K6"), "K7")


def test_induced_versus_plain_bipartite():
    k6 = graph_from_named("K6")
    assert contains_induced(k6, "K33") is None
    hit = contains_subgraph(k6, "K33")
    assert hit is not None and hit.verify(k6)

    k33 = graph_from_named("K3,3")
    induced = contains_induced(k33, "K33")
    assert induced is not None and induced.verify(k33, induced=True)


def test_clique_hit():
    hit = contains_induced(graph_from_named("dot(K6,C4)"), "K5")
    assert hit is not None
    assert hit.pattern == "K5"
    assert contains_induced(graph_from_named("K4"), "K5") is None


# -------------------------
# Свойства на случайных графах
# -------------------------
@settings(max_examples=200, deadline=None)
@given(random_graphs(12))
def test_ring_tests_agree(graph):
    ring = ring_analysis(graph)
    assert ring.complete
    assert ring.ring_by_rank == ring.ring_by_pcp
    if ring.is_ring:
        assert is_planar(graph)[0]


@settings(max_examples=60, deadline=None)
@given(random_graphs())
def test_almost_planar_matches_brute_force(graph):
    brute = nx.is_planar(graph.to_networkx()) or any(
        nx.is_planar(graph.with_edges(removed=[e]).to_networkx()) for e in graph.sorted_edges()
    )
    assert is_almost_planar(graph) is brute


@settings(max_examples=60, deadline=None)
@given(random_graphs())
def test_outerplanar_graphs_have_no_k4_subdivision(graph):
    if is_outerplanar(graph):
        assert is_planar(graph)[0]
        assert not has_k4_subdivision(graph)
