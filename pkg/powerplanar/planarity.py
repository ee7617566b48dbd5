"""
Планарность и родственные свойства: планарный, внешнепланарный, кольцевой,
почти планарный, максимально планарный граф. Здесь же - системы вращений
(Embedding) и обход граней, общий для рода и непланарного рода.
"""
from dataclasses import dataclass
from itertools import combinations

import logging

import networkx as nx

from powerplanar.graphs import Graph, NodeBudget, SearchBudgetExceeded, induced_subgraph
from powerplanar.subdivisions import PatternHit, has_k4_subdivision, hit_from_kuratowski

log = logging.getLogger(__name__)

DEFAULT_CYCLE_BUDGET = 10**6


# =========================
# Системы вращений
# =========================

@dataclass(frozen=True)
class Embedding:
    """
    rotation[v] - циклический порядок соседей v.
    negative - рёбра со знаком -1 (только для неориентируемых схем), пары (u, v), u < v.
    """
    rotation: tuple[tuple[int, ...], ...]
    negative: frozenset[tuple[int, int]] | None = None

    @property
    def signed(self) -> bool:
        return self.negative is not None

    def sign(self, u: int, v: int) -> int:
        if self.negative is None:
            return 1
        return -1 if (min(u, v), max(u, v)) in self.negative else 1


def check_rotation(graph: Graph, embedding: Embedding) -> None:
    if len(embedding.rotation) != graph.n:
        raise ValueError(f"rotation has {len(embedding.rotation)} vertices, graph has {graph.n}")
    for v, order in enumerate(embedding.rotation):
        if len(order) != len(set(order)) or set(order) != graph.adjacency[v]:
            raise ValueError(f"rotation at vertex {v} is not a cyclic order of its neighbours")
    for e in embedding.negative or ():
        if e not in graph.edges:
            raise ValueError(f"signed edge {e} is not an edge of the graph")


def trace_faces(graph: Graph, embedding: Embedding) -> list[list[tuple[int, int]]]:
    """
    Грани как списки дуг.

    Состояние обхода - (u, v, s): идём по дуге u->v с локальной ориентацией s.
    Пройдя ребро, s умножается на его знак; в v следующий сосед - следующий
    за u при s = +1 и предыдущий при s = -1. Обратный обход той же грани
    проходит состояния (v, u, -s * sign(uv)); они помечаются сразу.
    """
    check_rotation(graph, embedding)
    position = [{w: i for i, w in enumerate(order)} for order in embedding.rotation]
    seen: set[tuple[int, int, int]] = set()
    faces: list[list[tuple[int, int]]] = []
    for u, v in graph.sorted_edges():
        for start in ((u, v, 1), (v, u, 1), (u, v, -1), (v, u, -1)):
            if start in seen:
                continue
            walk = []
            state = start
            while state not in seen:
                seen.add(state)
                a, b, s = state
                walk.append((a, b))
                s *= embedding.sign(a, b)
                seen.add((b, a, -s))
                order = embedding.rotation[b]
                state = (b, order[(position[b][a] + s) % len(order)], s)
            faces.append(walk)
    return faces


def count_faces(graph: Graph, embedding: Embedding) -> int:
    """Число граней; изолированная вершина - одна грань."""
    isolated = sum(1 for v in range(graph.n) if graph.degree(v) == 0)
    return len(trace_faces(graph, embedding)) + isolated


def is_balanced(graph: Graph, negative: frozenset[tuple[int, int]]) -> bool:
    """Знаковый граф сбалансирован (схема ориентируема), если вершины 2-раскрашиваются по знакам."""
    side: dict[int, int] = {}
    for root in range(graph.n):
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in graph.adjacency[u]:
                flip = 1 if (min(u, w), max(u, w)) in negative else 0
                if w not in side:
                    side[w] = side[u] ^ flip
                    stack.append(w)
                elif side[w] != side[u] ^ flip:
                    return False
    return True


def euler_genus_by_component(graph: Graph, embedding: Embedding) -> list[int]:
    """2 - v + e - f для каждой компоненты связности."""
    result = []
    for comp in graph.components():
        members = sorted(comp)
        sub = induced_subgraph(graph, members)
        local = {v: i for i, v in enumerate(members)}
        negative = None
        if embedding.negative is not None:
            negative = frozenset((local[u], local[v]) for u, v in embedding.negative if u in local and v in local)
        sub_emb = Embedding(tuple(tuple(local[w] for w in embedding.rotation[v]) for v in members), negative)
        result.append(2 - sub.n + sub.m - count_faces(sub, sub_emb))
    return result


def embedding_surface(graph: Graph, embedding: Embedding) -> tuple[str, int]:
    """
    Поверхность, на которую схема вкладывает граф: ("orientable", род) или
    ("nonorientable", число плёнок Мёбиуса). Для несвязного графа - сумма по компонентам.
    """
    genera = euler_genus_by_component(graph, embedding)
    if embedding.negative is None or is_balanced(graph, embedding.negative):
        return "orientable", sum(g // 2 for g in genera)
    return "nonorientable", sum(genera)


# =========================
# Планарность
# =========================

def is_planar(graph: Graph) -> tuple[bool, Embedding | PatternHit]:
    """(True, планарная система вращений) или (False, подразбиение K5 / K33)."""
    planar, cert = nx.check_planarity(graph.to_networkx(), counterexample=True)
    if not planar:
        return False, hit_from_kuratowski(cert)
    rotation = tuple(
        tuple(cert.neighbors_cw_order(v)) if graph.degree(v) else ()
        for v in range(graph.n)
    )
    return True, Embedding(rotation)


def planar(graph: Graph) -> bool:
    return nx.is_planar(graph.to_networkx())


def verify_planar_certificate(graph: Graph, certificate: Embedding | PatternHit) -> bool:
    if isinstance(certificate, PatternHit):
        return certificate.pattern in ("K5", "K33") and certificate.verify(graph)
    return all(g == 0 for g in euler_genus_by_component(graph, certificate))


def is_outerplanar(graph: Graph) -> bool:
    """Внешнепланарен, если планарен граф с добавленной вершиной, смежной со всеми."""
    g = graph.to_networkx()
    apex = graph.n
    g.add_edges_from((apex, v) for v in range(graph.n))
    g.add_node(apex)
    return nx.is_planar(g)


# =========================
# Кольцевые графы
# =========================

@dataclass(frozen=True)
class RingAnalysis:
    """
    cycle_rank = e - v + c, free_rank - число бесхордовых циклов.
    complete = False: перебор циклов упёрся в бюджет, free_rank - нижняя оценка,
    pcp известно только при найденном нарушении.
    """
    cycle_rank: int
    free_rank: int
    pcp: bool | None
    has_K4_subdivision: bool
    complete: bool = True

    @property
    def ring_by_rank(self) -> bool | None:
        if self.complete:
            return self.cycle_rank == self.free_rank
        return False if self.free_rank > self.cycle_rank else None

    @property
    def ring_by_pcp(self) -> bool | None:
        if self.has_K4_subdivision or self.pcp is False:
            return False
        return None if self.pcp is None else True

    @property
    def is_ring(self) -> bool | None:
        """Обе выводимые оценки; None, если ни одна не завершена."""
        for verdict in (self.ring_by_rank, self.ring_by_pcp):
            if verdict is not None:
                return verdict
        return None


def ring_analysis(graph: Graph, cycle_budget: int = DEFAULT_CYCLE_BUDGET) -> RingAnalysis:
    g = graph.to_networkx()
    rank = graph.m - graph.n + nx.number_connected_components(g)
    k4 = has_k4_subdivision(graph)

    budget = NodeBudget(cycle_budget)
    pair_owner: dict[frozenset, int] = {}
    pcp: bool | None = True
    count = 0
    complete = True
    try:
        for cycle in nx.chordless_cycles(g):
            budget.tick()
            count += 1
            edges = [frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))]
            if pcp:
                for e, f in combinations(edges, 2):
                    key = frozenset((e, f))
                    if pair_owner.setdefault(key, count) != count:
                        pcp = False
                        break
    except SearchBudgetExceeded:
        complete = False
        log.warning("cycle budget %d exhausted on %r, ring analysis incomplete", cycle_budget, graph)
        if pcp:
            pcp = None
    return RingAnalysis(
        cycle_rank=rank, free_rank=count, pcp=pcp, has_K4_subdivision=k4, complete=complete,
    )


# =========================
# Почти планарные и максимально планарные
# =========================

def almost_planar_edge(graph: Graph) -> tuple[int, int] | None:
    """
    Ребро, после удаления которого граф планарен. Достаточно перебрать рёбра
    одного подграфа Куратовского: удаление любого другого его сохраняет.
    """
    ok, cert = is_planar(graph)
    if ok:
        return None
    assert isinstance(cert, PatternHit)
    candidates = sorted({(min(u, v), max(u, v)) for p in cert.paths for u, v in zip(p, p[1:])})
    for e in candidates:
        if planar(graph.with_edges(removed=[e])):
            return e
    return None


def is_almost_planar(graph: Graph) -> bool:
    """Планарные графы (и графы без рёбер) считаются почти планарными."""
    if planar(graph):
        return True
    return almost_planar_edge(graph) is not None


def is_maximal_planar(graph: Graph) -> bool:
    """Планарен, и добавление любого отсутствующего ребра ломает планарность."""
    if not planar(graph):
        return False
    g = graph.to_networkx()
    for u, v in combinations(range(graph.n), 2):
        if graph.has_edge(u, v):
            continue
        g.add_edge(u, v)
        still_planar = nx.is_planar(g)
        g.remove_edge(u, v)
        if still_planar:
            return False
    return True
