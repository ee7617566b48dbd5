"""
Поиск образцов: подразбиения K5, K33, K4, K23, индуцированные и обычные подграфы.

Любая находка - PatternHit, которую можно перепроверить по смежности хоста
(PatternHit.verify). Отсутствие образца и исчерпание бюджета различаются:
второе поднимает SearchBudgetExceeded.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import logging

import networkx as nx

from powerplanar.graphs import Graph, NodeBudget, SearchBudgetExceeded, blocks, induced_subgraph, max_clique

log = logging.getLogger(__name__)

DEFAULT_SUBDIVISION_BUDGET = 10**6
MAX_SUBDIVISION_VERTICES = 64


def _complete(k: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(k), 2))


def _bipartite(a: int, b: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, a + j) for i in range(a) for j in range(b))


# имя -> (число вершин образца, рёбра образца, размер первой доли или None для полных)
PATTERNS: dict[str, tuple[int, tuple[tuple[int, int], ...], int | None]] = {
    "K4": (4, _complete(4), None),
    "K5": (5, _complete(5), None),
    "K6": (6, _complete(6), None),
    "K33": (6, _bipartite(3, 3), 3),
    "K23": (5, _bipartite(2, 3), 2),
}


def _pattern(name: str) -> tuple[int, tuple[tuple[int, int], ...], int | None]:
    try:
        return PATTERNS[name]
    except KeyError:
        raise ValueError(f"unknown pattern {name!r}, expected one of {sorted(PATTERNS)}") from None


@dataclass(frozen=True)
class PatternHit:
    """
    Свидетельство образца в хосте.

    branch[i] - вершина хоста для вершины i образца; paths[k] - путь хоста для
    k-го ребра образца (в порядке PATTERNS). Для подграфов все пути - рёбра.
    """
    pattern: str
    branch: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def verify(self, graph: Graph, *, induced: bool = False) -> bool:
        k, edges, _ = _pattern(self.pattern)
        if len(self.branch) != k or len(set(self.branch)) != k or len(self.paths) != len(edges):
            return False
        branch_set = set(self.branch)
        inner_seen: set[int] = set()
        for (a, b), path in zip(edges, self.paths):
            if len(path) < 2 or path[0] != self.branch[a] or path[-1] != self.branch[b]:
                return False
            if any(not graph.has_edge(u, v) for u, v in zip(path, path[1:])):
                return False
            inner = path[1:-1]
            if len(set(inner)) != len(inner) or branch_set & set(inner) or inner_seen & set(inner):
                return False
            inner_seen |= set(inner)
        if induced:
            if any(len(p) != 2 for p in self.paths):
                return False
            wanted = {frozenset((self.branch[a], self.branch[b])) for a, b in edges}
            for u, v in combinations(self.branch, 2):
                if graph.has_edge(u, v) != (frozenset((u, v)) in wanted):
                    return False
        return True


# =========================
# Куратовский из networkx
# =========================

def hit_from_kuratowski(counterexample: nx.Graph) -> PatternHit:
    """Переводит контрпример check_planarity (подразбиение K5 или K33) в PatternHit."""
    branch = sorted(v for v in counterexample if counterexample.degree(v) >= 3)
    # каждый путь - от вершины ветвления по вершинам степени 2 до следующей
    routes: dict[frozenset[int], tuple[int, ...]] = {}
    for start in branch:
        for first in sorted(counterexample[start]):
            path = [start, first]
            while path[-1] not in branch:
                prev, cur = path[-2], path[-1]
                path.append(next(w for w in counterexample[cur] if w != prev))
            routes.setdefault(frozenset((start, path[-1])), tuple(path))

    if len(branch) == 5:
        name, order = "K5", branch
    elif len(branch) == 6:
        name = "K33"
        side_a = [branch[0]] + [v for v in branch[1:] if frozenset((branch[0], v)) not in routes]
        side_b = [v for v in branch if v not in side_a]
        order = sorted(side_a) + sorted(side_b)
    else:
        raise ValueError(f"counterexample has {len(branch)} branch vertices, expected 5 or 6")

    _, edges, _ = PATTERNS[name]
    paths = []
    for a, b in edges:
        path = routes[frozenset((order[a], order[b]))]
        paths.append(path if path[0] == order[a] else tuple(reversed(path)))
    return PatternHit(name, tuple(order), tuple(paths))


# =========================
# K4-подразбиение: последовательно-параллельная редукция
# =========================

def has_k4_subdivision(graph: Graph) -> bool:
    """
    Удаляем вершины степени <= 1 и стягиваем вершины степени 2 (кратные рёбра
    склеиваются). Граф без K4-подразбиения сжимается в пустой; иначе остаётся
    простой граф с минимальной степенью >= 3, а такой всегда содержит K4.
    """
    g = graph.to_networkx()
    queue = [v for v in g if g.degree(v) <= 2]
    while queue:
        v = queue.pop()
        if v not in g or g.degree(v) > 2:
            continue
        nbrs = list(g[v])
        g.remove_node(v)
        if len(nbrs) == 2:
            g.add_edge(*nbrs)
        queue.extend(w for w in nbrs if g.degree(w) <= 2)
    return g.number_of_nodes() > 0


# =========================
# Перебор подразбиений
# =========================

def _paths_between(
        adj: tuple[frozenset[int], ...], src: int, dst: int, blocked: set[int], budget: NodeBudget,
) -> Iterator[list[int]]:
    """Простые пути src -> dst, внутренние вершины вне blocked; ребро прямо в dst пробуется первым."""
    path = [src]
    on_path = {src}

    def extend() -> Iterator[list[int]]:
        budget.tick()
        u = path[-1]
        if dst in adj[u]:
            yield path + [dst]
        for w in sorted(adj[u]):
            if w == dst or w in blocked or w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            yield from extend()
            path.pop()
            on_path.discard(w)

    yield from extend()


def _route(
        adj: tuple[frozenset[int], ...],
        branch: tuple[int, ...],
        pending: tuple[tuple[int, int], ...],
        used: set[int],
        budget: NodeBudget,
) -> list[tuple[int, ...]] | None:
    if not pending:
        return []
    (a, b), rest = pending[0], pending[1:]
    for path in _paths_between(adj, branch[a], branch[b], used, budget):
        inner = set(path[1:-1])
        tail = _route(adj, branch, rest, used | inner, budget)
        if tail is not None:
            return [tuple(path)] + tail
    return None


def _branch_choices(block: Graph, pattern: str) -> Iterator[tuple[int, ...]]:
    k, edges, part = _pattern(pattern)
    need = [sum(1 for e in edges if i in e) for i in range(k)]
    if part is None:
        cands = [v for v in range(block.n) if block.degree(v) >= need[0]]
        yield from combinations(cands, k)
        return
    rest = k - part
    side_a = [v for v in range(block.n) if block.degree(v) >= need[0]]
    side_b = [v for v in range(block.n) if block.degree(v) >= need[-1]]
    for a in combinations(side_a, part):
        for b in combinations([v for v in side_b if v not in a], rest):
            # K33 симметричен по долям
            if part == rest and min(b) < min(a):
                continue
            yield a + b


def _search_block(block: Graph, pattern: str, budget: NodeBudget) -> PatternHit | None:
    _, edges, _ = _pattern(pattern)
    for branch in _branch_choices(block, pattern):
        budget.tick()
        paths = _route(block.adjacency, branch, edges, set(branch), budget)
        if paths is not None:
            return PatternHit(pattern, branch, tuple(paths))
    return None


def contains_subdivision(
        graph: Graph, pattern: str, budget: int = DEFAULT_SUBDIVISION_BUDGET,
) -> PatternHit | None:
    """
    Подразбиение K5 / K33 / K4 / K23 или None.

    Подразбиение 2-связного образца лежит в одном блоке, поэтому перебор идёт
    по блокам. Быстрые отсечения: планарность (K5, K33), редукция (K4),
    внешнепланарность (K23).

    :raises SearchBudgetExceeded: Быстрые отсечения не решили вопрос, а граф
        больше 64 вершин; или перебор исчерпал budget.
    """
    from powerplanar.planarity import is_outerplanar

    k, _, _ = _pattern(pattern)
    if pattern == "K6":
        raise ValueError("K6 is a clique pattern, use contains_induced")
    if pattern in ("K5", "K33"):
        planar, counterexample = nx.check_planarity(graph.to_networkx(), counterexample=True)
        if planar:
            return None
        hit = hit_from_kuratowski(counterexample)
        if hit.pattern == pattern:
            return hit
    elif pattern == "K4" and not has_k4_subdivision(graph):
        return None
    elif pattern == "K23" and is_outerplanar(graph):
        return None

    if graph.n > MAX_SUBDIVISION_VERTICES:
        raise SearchBudgetExceeded(budget, 0)

    counter = NodeBudget(budget)
    for block in blocks(graph).blocks:
        if len(block) < k:
            continue
        members = sorted(block)
        hit = _search_block(induced_subgraph(graph, members), pattern, counter)
        if hit is not None:
            log.debug("%s subdivision found after %d nodes", pattern, counter.spent)
            return PatternHit(
                hit.pattern,
                tuple(members[v] for v in hit.branch),
                tuple(tuple(members[v] for v in p) for p in hit.paths),
            )
    return None


# =========================
# Индуцированные и обычные подграфы
# =========================

def _bipartite_hit(graph: Graph, a: int, b: int, induced: bool, name: str) -> PatternHit | None:
    adj = graph.adjacency
    cands = [v for v in range(graph.n) if graph.degree(v) >= b]
    for side_a in combinations(cands, a):
        if induced and any(graph.has_edge(u, v) for u, v in combinations(side_a, 2)):
            continue
        common = frozenset.intersection(*(adj[v] for v in side_a)) - set(side_a)
        for side_b in combinations(sorted(common), b):
            if a == b and min(side_b) < min(side_a):
                continue
            if induced and any(graph.has_edge(u, v) for u, v in combinations(side_b, 2)):
                continue
            branch = side_a + side_b
            paths = tuple((branch[i], branch[j]) for i, j in _bipartite(a, b))
            return PatternHit(name, branch, paths)
    return None


def _clique_hit(graph: Graph, k: int, name: str) -> PatternHit | None:
    size, members = max_clique(graph)
    if size < k:
        return None
    branch = tuple(sorted(members)[:k])
    return PatternHit(name, branch, tuple((branch[i], branch[j]) for i, j in _complete(k)))


def contains_induced(graph: Graph, pattern: str) -> PatternHit | None:
    """K4 / K5 / K6 - запрос клики; K33 / K23 - перебор упорядоченных долей."""
    k, _, part = _pattern(pattern)
    if part is None:
        return _clique_hit(graph, k, pattern)
    return _bipartite_hit(graph, part, k - part, True, pattern)


def contains_subgraph(graph: Graph, pattern: str) -> PatternHit | None:
    """Как contains_induced, но доли K33 / K23 могут иметь рёбра внутри."""
    k, _, part = _pattern(pattern)
    if part is None:
        return _clique_hit(graph, k, pattern)
    return _bipartite_hit(graph, part, k - part, False, pattern)
