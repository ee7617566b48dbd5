"""
1-планарность: рисунок, где каждое ребро пересечено не более одного раза.

Рисунок задаётся паросочетанием пересекающихся пар рёбер; каждое пересечение
заменяется фиктивной вершиной степени 4, и рисунок корректен, если такая
планаризация планарна. Поиск перебирает паросочетания, ветвясь по рёбрам
текущего подграфа Куратовского.
"""
from dataclasses import dataclass, field
from itertools import combinations

import logging

import networkx as nx

from powerplanar.graphs import (
    GADGET_CROSSINGS,
    Graph,
    NodeBudget,
    SearchBudgetExceeded,
    automorphisms,
    blocks,
    induced_subgraph,
    k9_minus_k6_plus,
    max_clique,
    order_gadget,
)
from powerplanar.planarity import Embedding, is_planar, verify_planar_certificate
from powerplanar.surfaces import INCONCLUSIVE, NO, YES

log = logging.getLogger(__name__)

DEFAULT_ONEPLANAR_BUDGET = 10**6
LEMMA_ONEPLANAR_BUDGET = 10**8
# орбиты пар рёбер считаем, только если автоморфизмов немного
ORBIT_AUTOMORPHISM_LIMIT = 5_000
ORBIT_WORK_LIMIT = 2_000_000

Edge = tuple[int, int]
CrossingPair = tuple[Edge, Edge]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _pair(e: Edge, f: Edge) -> CrossingPair:
    return (e, f) if e < f else (f, e)


# =========================
# Рисунок и его проверка
# =========================

@dataclass(frozen=True)
class OnePlanarDrawing:
    """
    crossing_pairs - пары пересекающихся рёбер (u, v), u < v.
    planarization_embedding - планарная система вращений планаризации:
    вершины графа 0..n-1, затем по фиктивной вершине на каждую пару в порядке crossing_pairs.
    """
    crossing_pairs: tuple[CrossingPair, ...]
    planarization_embedding: Embedding | None = None

    @property
    def crossings(self) -> int:
        return len(self.crossing_pairs)


@dataclass(frozen=True)
class OnePlanarResult:
    verdict: str
    reason: str
    drawing: OnePlanarDrawing | None = None
    budget_spent: int = 0
    obstructions: tuple[str, ...] = field(default=())


def planarization(graph: Graph, crossing_pairs: tuple[CrossingPair, ...]) -> Graph:
    """Граф с фиктивной вершиной "+k" на месте k-го пересечения."""
    labels = list(graph.labels)
    removed: list[Edge] = []
    added: list[Edge] = []
    for k, (e, f) in enumerate(crossing_pairs):
        dummy = len(labels)
        labels.append(f"+{k}")
        removed += [e, f]
        added += [(e[0], dummy), (e[1], dummy), (f[0], dummy), (f[1], dummy)]
    drop = set(removed)
    return Graph.from_edges(labels, [e for e in graph.edges if e not in drop] + added)


def validate_1planar_drawing(graph: Graph, drawing: OnePlanarDrawing) -> bool:
    """
    Паросочетание на рёбрах, пары без общих концов, планаризация планарна.
    Если к рисунку приложена система вращений, она тоже проверяется.

    :raises ValueError: Пара ссылается на отсутствующее ребро.
    """
    for e, f in drawing.crossing_pairs:
        for edge in (e, f):
            if _edge(*edge) not in graph.edges:
                raise ValueError(f"crossing pair refers to {edge}, which is not an edge of {graph!r}")

    used: set[Edge] = set()
    for e, f in drawing.crossing_pairs:
        e, f = _edge(*e), _edge(*f)
        if e == f or set(e) & set(f):
            return False
        if e in used or f in used:
            return False
        used |= {e, f}

    normalized = tuple((_edge(*e), _edge(*f)) for e, f in drawing.crossing_pairs)
    plane = planarization(graph, normalized)
    if drawing.planarization_embedding is None:
        return nx.is_planar(plane.to_networkx())
    try:
        return verify_planar_certificate(plane, drawing.planarization_embedding)
    except ValueError:
        return False


def _drawing(graph: Graph, crossing_pairs: list[CrossingPair]) -> OnePlanarDrawing:
    pairs = tuple(sorted(crossing_pairs))
    ok, embedding = is_planar(planarization(graph, pairs))
    assert ok, "search returned a non-planar planarization"
    return OnePlanarDrawing(pairs, embedding)


# =========================
# Известные препятствия
# =========================

def edge_bound_violated(graph: Graph) -> bool:
    """В 1-планарном графе с v >= 3 вершинами не больше 4v - 8 рёбер."""
    return graph.n >= 3 and graph.m > 4 * graph.n - 8


def lemma_pattern(graph: Graph) -> tuple[tuple[int, ...], tuple[Edge, ...]] | None:
    """
    Треугольник и три непересекающихся ребра в общей окрестности его вершин:
    тогда граф содержит K9mK6p3 как подграф.
    """
    adj = graph.adjacency
    nxg = graph.to_networkx()
    for triangle in nx.enumerate_all_cliques(nxg):
        if len(triangle) < 3:
            continue
        if len(triangle) > 3:
            break
        common = adj[triangle[0]] & adj[triangle[1]] & adj[triangle[2]]
        if len(common) < 6:
            continue
        matching = nx.max_weight_matching(nxg.subgraph(common), maxcardinality=True)
        if len(matching) >= 3:
            chosen = tuple(sorted(_edge(u, v) for u, v in matching))[:3]
            return tuple(sorted(triangle)), chosen
    return None


def known_obstruction(graph: Graph) -> str | None:
    """Имя найденного препятствия к 1-планарности или None."""
    if edge_bound_violated(graph):
        return "edge-bound"
    size, _ = max_clique(graph)
    if size >= 7:
        return "K7"
    if lemma_pattern(graph) is not None:
        return "K9mK6p3"
    return None


# =========================
# Перебор пересечений
# =========================

class _CrossingSearch:
    """
    Перебор для 2-связного графа. forbidden - рёбра, которые не пересекаются.

    Если текущая планаризация непланарна, хотя бы одно непересечённое ребро её
    подграфа Куратовского должно быть пересечено. Ветка i пересекает i-е
    ребро-кандидат и запрещает предыдущие. Ветка отсекается, если непланарен
    остов: запрещённые рёбра плюс уже выбранные пересечения.
    """

    def __init__(self, graph: Graph, forbidden: frozenset[Edge], budget: NodeBudget) -> None:
        self.graph = graph
        self.budget = budget
        self.forbidden = forbidden
        self.edges = graph.sorted_edges()

    def _plane(self, pairs: list[CrossingPair], keep: set[Edge] | None = None) -> nx.Graph:
        n = self.graph.n
        crossed = {e for pair in pairs for e in pair}
        g = nx.Graph()
        g.add_nodes_from(range(n))
        for e in self.edges:
            if e not in crossed and (keep is None or e in keep):
                g.add_edge(*e)
        for k, (e, f) in enumerate(pairs):
            g.add_edges_from([(e[0], n + k), (e[1], n + k), (f[0], n + k), (f[1], n + k)])
        return g

    def _skeleton_planar(self, pairs: list[CrossingPair], forbidden: set[Edge]) -> bool:
        return nx.is_planar(self._plane(pairs, keep=forbidden))

    def _partners(self, e: Edge, crossed: set[Edge], forbidden: set[Edge]) -> list[Edge]:
        return [
            f for f in self.edges
            if f != e and f not in crossed and f not in forbidden and not set(e) & set(f)
        ]

    def solve(self, pairs: list[CrossingPair], forbidden: set[Edge]) -> list[CrossingPair] | None:
        self.budget.tick()
        ok, counterexample = nx.check_planarity(self._plane(pairs), counterexample=True)
        if ok:
            return pairs
        n = self.graph.n
        crossed = {e for pair in pairs for e in pair}
        candidates = sorted(
            _edge(u, v) for u, v in counterexample.edges
            if u < n and v < n and _edge(u, v) not in forbidden
        )
        local = set(forbidden)
        for e in candidates:
            for f in self._partners(e, crossed, local):
                extended = pairs + [_pair(e, f)]
                if not self._skeleton_planar(extended, local):
                    continue
                found = self.solve(extended, local)
                if found is not None:
                    return found
            local.add(e)
            if not self._skeleton_planar(pairs, local):
                break
        return None

    def root_orbits(self) -> list[CrossingPair] | None:
        """Представители орбит пар непересекающихся рёбер, если группа автоморфизмов мала."""
        autos = automorphisms(self.graph, ORBIT_AUTOMORPHISM_LIMIT)
        if autos is None or len(autos) < 2:
            return None
        pairs = [
            (e, f) for e, f in combinations(self.edges, 2) if not set(e) & set(f)
        ]
        if len(pairs) * len(autos) > ORBIT_WORK_LIMIT:
            return None
        representatives = set()
        for e, f in pairs:
            images = (
                _pair(_edge(a[e[0]], a[e[1]]), _edge(a[f[0]], a[f[1]]))
                for a in autos
            )
            representatives.add(min(images))
        return sorted(representatives)

    def run(self) -> list[CrossingPair] | None:
        if not self.forbidden:
            roots = self.root_orbits()
            if roots is not None:
                log.debug("1-planar search: %d root orbits on %r", len(roots), self.graph)
                for pair in roots:
                    found = self.solve([pair], set())
                    if found is not None:
                        return found
                return None
        return self.solve([], set(self.forbidden))


def _edge_separation(block: Graph) -> tuple[Edge, list[frozenset[int]]] | None:
    """Ребро uv, после удаления концов которого блок распадается; части - компоненты."""
    g = block.to_networkx()
    for u, v in block.sorted_edges():
        rest = g.copy()
        rest.remove_nodes_from((u, v))
        comps = sorted((frozenset(c) for c in nx.connected_components(rest)), key=min)
        if len(comps) >= 2:
            return (u, v), comps
    return None


def _solve_block(block: Graph, forbidden: frozenset[Edge], budget: NodeBudget) -> list[CrossingPair] | None:
    if nx.is_planar(block.to_networkx()):
        return []
    if edge_bound_violated(block):
        return None
    separation = _edge_separation(block)
    if separation is not None:
        (u, v), pieces = separation
        combined: list[CrossingPair] = []
        for piece in pieces:
            members = sorted(piece | {u, v})
            local = {w: i for i, w in enumerate(members)}
            sub = induced_subgraph(block, members)
            sub_forbidden = frozenset(
                {_edge(local[a], local[b]) for a, b in forbidden if a in local and b in local}
                | {_edge(local[u], local[v])}
            )
            found = _solve_block(sub, sub_forbidden, budget)
            if found is None:
                break
            combined += [
                _pair(_edge(members[e[0]], members[e[1]]), _edge(members[f[0]], members[f[1]]))
                for e, f in found
            ]
        else:
            if nx.is_planar(planarization(block, tuple(combined)).to_networkx()):
                return combined
        log.debug("edge separation at %s did not settle %r, searching the whole block", (u, v), block)
    return _CrossingSearch(block, forbidden, budget).run()


def is_1_planar(
        graph: Graph,
        node_budget: int = DEFAULT_ONEPLANAR_BUDGET,
        *,
        use_obstructions: bool = True,
) -> OnePlanarResult:
    """
    yes с проверенным рисунком, no по препятствию или после полного перебора,
    inconclusive при исчерпании бюджета.

    use_obstructions=False отключает проверку на K7 и K9mK6p3 (граница по рёбрам остаётся).
    """
    if nx.is_planar(graph.to_networkx()):
        return OnePlanarResult(YES, "planar", _drawing(graph, []))
    if edge_bound_violated(graph):
        return OnePlanarResult(NO, f"{graph.m} edges > 4*{graph.n}-8", obstructions=("edge-bound",))
    if use_obstructions:
        obstruction = known_obstruction(graph)
        if obstruction is not None:
            return OnePlanarResult(NO, f"contains {obstruction}", obstructions=(obstruction,))

    budget = NodeBudget(node_budget)
    pairs: list[CrossingPair] = []
    try:
        for block in blocks(graph).blocks:
            members = sorted(block)
            found = _solve_block(induced_subgraph(graph, members), frozenset(), budget)
            if found is None:
                log.info("1-planar search: block of %d vertices has no drawing (%d nodes)",
                         len(members), budget.spent)
                return OnePlanarResult(NO, "exhaustive search", budget_spent=budget.spent)
            pairs += [
                _pair(_edge(members[e[0]], members[e[1]]), _edge(members[f[0]], members[f[1]]))
                for e, f in found
            ]
    except SearchBudgetExceeded:
        log.warning("1-planar budget %d exhausted on %r", node_budget, graph)
        return OnePlanarResult(INCONCLUSIVE, "budget exhausted", budget_spent=budget.spent)

    drawing = _drawing(graph, pairs)
    log.debug("1-planar drawing with %d crossings (%d nodes)", drawing.crossings, budget.spent)
    return OnePlanarResult(YES, f"{drawing.crossings} crossings", drawing, budget.spent)


def lemma_graph() -> Graph:
    return k9_minus_k6_plus(3)


def gadget_drawing(order: int) -> tuple[Graph, OnePlanarDrawing]:
    """Компонента P(Z_order) и её готовый 1-планарный рисунок."""
    graph = order_gadget(order)
    pairs = tuple(
        _pair(_edge(graph.index(a), graph.index(b)), _edge(graph.index(c), graph.index(d)))
        for (a, b), (c, d) in GADGET_CROSSINGS[order]
    )
    return graph, OnePlanarDrawing(pairs)
