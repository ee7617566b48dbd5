"""
Точные хроматическое и звёздное хроматическое числа.

Звёздная раскраска - правильная раскраска без двухцветного пути на 4 вершинах.
Перебор с возвратом по компонентам; новый цвет разрешён только на единицу больше
уже использованных (симметрия цветов).
"""
from dataclasses import dataclass

import logging

from powerplanar.graphs import Graph, induced_subgraph, max_clique

log = logging.getLogger(__name__)

MAX_COLORING_VERTICES = 64


class SolverLimitError(ValueError):
    """Граф больше, чем допускает точный решатель."""


@dataclass(frozen=True)
class ColoringResult:
    """witness[v] - цвет вершины v, цвета 0..k-1."""
    chromatic: int
    star_chromatic: int
    chromatic_witness: tuple[int, ...]
    star_witness: tuple[int, ...]


# =========================
# Проверки раскрасок
# =========================

def is_proper(graph: Graph, colors: tuple[int, ...]) -> bool:
    return len(colors) == graph.n and all(colors[u] != colors[v] for u, v in graph.edges)


def bicolored_p4(graph: Graph, colors: tuple[int, ...]) -> tuple[int, int, int, int] | None:
    """Путь a-b-c-d с colors[a] == colors[c] и colors[b] == colors[d] или None."""
    adj = graph.adjacency
    for b in range(graph.n):
        for c in adj[b]:
            if colors[b] == colors[c]:
                continue
            for a in adj[b]:
                if a == c or colors[a] != colors[c]:
                    continue
                for d in adj[c]:
                    if d != b and d != a and colors[d] == colors[b]:
                        return a, b, c, d
    return None


def is_star_coloring(graph: Graph, colors: tuple[int, ...]) -> bool:
    return is_proper(graph, colors) and bicolored_p4(graph, colors) is None


# =========================
# Перебор
# =========================

class _Colorer:
    def __init__(self, graph: Graph, star: bool) -> None:
        self.adj = graph.adjacency
        self.star = star
        self.order = self._order(graph)
        self.colors: list[int | None] = [None] * graph.n

    @staticmethod
    def _order(graph: Graph) -> list[int]:
        # от вершины наибольшей степени, дальше - самая связанная с уже выбранными
        if graph.n == 0:
            return []
        chosen = [max(range(graph.n), key=lambda v: (graph.degree(v), -v))]
        placed = {chosen[0]}
        while len(chosen) < graph.n:
            v = max(
                (w for w in range(graph.n) if w not in placed),
                key=lambda w: (len(graph.adjacency[w] & placed), graph.degree(w), -w),
            )
            chosen.append(v)
            placed.add(v)
        return chosen

    def _allowed(self, v: int, c: int) -> bool:
        colors = self.colors
        if any(colors[w] == c for w in self.adj[v]):
            return False
        if not self.star:
            return True
        for w in self.adj[v]:
            d = colors[w]
            if d is None:
                continue
            beyond = False
            for x in self.adj[w]:
                if x != v and colors[x] == c:
                    beyond = True
                    # v - w - x - y
                    if any(y != w and colors[y] == d for y in self.adj[x]):
                        return False
            # u - v - w - x
            if beyond and any(u != w and colors[u] == d for u in self.adj[v]):
                return False
        return True

    def _extend(self, i: int, k: int, used: int) -> bool:
        if i == len(self.order):
            return True
        v = self.order[i]
        for c in range(min(k, used + 1)):
            if self._allowed(v, c):
                self.colors[v] = c
                if self._extend(i + 1, k, max(used, c + 1)):
                    return True
                self.colors[v] = None
        return False

    def solve(self, k: int) -> tuple[int, ...] | None:
        self.colors = [None] * len(self.colors)
        if self._extend(0, k, 0):
            return tuple(c for c in self.colors)
        return None


def _minimum(graph: Graph, star: bool, lower: int) -> tuple[int, tuple[int, ...]]:
    if graph.n == 0:
        return 0, ()
    colorer = _Colorer(graph, star)
    k = max(lower, 1)
    while True:
        witness = colorer.solve(k)
        if witness is not None:
            return k, witness
        k += 1


def coloring(graph: Graph) -> ColoringResult:
    """
    Точные χ и χ_s со свидетелями; считаются по компонентам связности.

    :raises SolverLimitError: Больше 64 вершин.
    """
    if graph.n > MAX_COLORING_VERTICES:
        raise SolverLimitError(
            f"exact coloring supports at most {MAX_COLORING_VERTICES} vertices, got {graph.n}")

    chromatic = star = 0
    proper_colors = [0] * graph.n
    star_colors = [0] * graph.n
    for comp in graph.components():
        members = sorted(comp)
        sub = induced_subgraph(graph, members)
        clique, _ = max_clique(sub)
        k, witness = _minimum(sub, False, clique)
        s, star_witness = _minimum(sub, True, k)
        chromatic, star = max(chromatic, k), max(star, s)
        for i, v in enumerate(members):
            proper_colors[v] = witness[i]
            star_colors[v] = star_witness[i]
    log.debug("coloring of %r: chi=%d chi_s=%d", graph, chromatic, star)
    return ColoringResult(chromatic, star, tuple(proper_colors), tuple(star_colors))
