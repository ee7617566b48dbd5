"""
Род и непланарный род (число плёнок Мёбиуса) графа.

Порядок работы для каждого блока:
    планарен -> 0;
    K_n / K_{m,n} -> формула;
    отрезаем планарные «уши» на рёбрах-разделителях;
    нижние оценки (Эйлер, клика, K_{3,c}, удаление вершины) и верхняя (K_v);
    если оценки не сошлись - перебор систем вращений с углублением.

Род аддитивен по блокам. Для непланарного рода складывается эйлеров род
eg = min(2γ, γ̄); итог равен eg(G) или eg(G) + 1, если у всех непланарных
блоков γ̄ = 2γ + 1.
"""
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Union

import logging

import networkx as nx

from powerplanar.graphs import (
    Graph,
    NodeBudget,
    SearchBudgetExceeded,
    blocks,
    induced_subgraph,
    max_clique,
)
from powerplanar.planarity import Embedding, is_planar, planar

log = logging.getLogger(__name__)

DEFAULT_GENUS_BUDGET = 10**7
DEFAULT_CROSSCAP_BUDGET = 10**7

EXACT = "exact"
LOWER_BOUND = "lower_bound"
INCONCLUSIVE = "inconclusive"

YES = "yes"
NO = "no"


# =========================
# Формулы
# =========================

def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def genus_formula_complete(n: int) -> int:
    if n < 3:
        return 0
    return _ceil_div((n - 3) * (n - 4), 12)


def genus_formula_bipartite(m: int, n: int) -> int:
    if min(m, n) < 2:
        return 0
    return _ceil_div((m - 2) * (n - 2), 4)


def crosscap_formula_complete(n: int) -> int:
    if n <= 4:
        return 0
    if n == 7:
        return 3
    return _ceil_div((n - 3) * (n - 4), 6)


def crosscap_formula_bipartite(m: int, n: int) -> int:
    if min(m, n) < 2:
        return 0
    return _ceil_div((m - 2) * (n - 2), 2)


# =========================
# Результаты
# =========================

@dataclass(frozen=True)
class Formula:
    """Известное значение для распознанного K_n / K_{m,n}."""
    family: str
    value: int


@dataclass(frozen=True)
class Bounds:
    """Нижняя оценка с её источником и верхняя оценка."""
    lower: int
    upper: int
    reason: str


@dataclass(frozen=True)
class BlockSum:
    """Результаты по блокам (вершины исходного графа) для собранного ответа."""
    parts: tuple[tuple[frozenset[int], "SurfaceResult"], ...]


Certificate = Union[Embedding, Formula, Bounds, BlockSum, None]


@dataclass(frozen=True)
class SurfaceResult:
    kind: str
    value: int
    certificate: Certificate = None
    budget_spent: int = 0

    @property
    def exact(self) -> bool:
        return self.kind == EXACT


@dataclass(frozen=True)
class Decision:
    """Вердикт yes / no / inconclusive с причиной."""
    verdict: str
    reason: str
    result: SurfaceResult | None = None
    obstructions: tuple[str, ...] = field(default=())


# =========================
# Распознавание и редукции
# =========================

def recognize_family(graph: Graph) -> tuple[int, ...] | None:
    """(n,) для K_n, (m, n) с m <= n для K_{m,n}, иначе None. Граф связный."""
    n, m = graph.n, graph.m
    if m == n * (n - 1) // 2:
        return (n,)
    g = graph.to_networkx()
    if n < 2 or not nx.is_connected(g) or not nx.is_bipartite(g):
        return None
    left, right = nx.bipartite.sets(g)
    if len(left) * len(right) == m:
        return tuple(sorted((len(left), len(right))))
    return None


def ear_reduce(block: Graph) -> Graph:
    """
    Для ребра uv и куска C графа B - {u, v}: если B[C + {u, v}] планарен,
    C удаляется (кусок рисуется в окрестности ребра uv). Род и непланарный
    род не меняются. Повторяем до неподвижной точки.
    """
    g = block
    changed = True
    while changed:
        changed = False
        for u, v in g.sorted_edges():
            rest = g.to_networkx()
            rest.remove_nodes_from((u, v))
            pieces = sorted((set(c) for c in nx.connected_components(rest)), key=min)
            if len(pieces) < 2:
                continue
            removable = [c for c in pieces if planar(induced_subgraph(g, c | {u, v}))]
            if len(removable) == len(pieces):
                removable = removable[1:]
            if removable:
                drop = set().union(*removable)
                g = induced_subgraph(g, [w for w in range(g.n) if w not in drop])
                changed = True
                break
    if g.n != block.n:
        log.debug("ear reduction: %d -> %d vertices", block.n, g.n)
    return g


# =========================
# Оценки
# =========================

def _triangle_free(graph: Graph) -> bool:
    return not any(nx.triangles(graph.to_networkx()).values())


def euler_bound(graph: Graph, *, orientable: bool) -> int:
    """Из v - e + f = 2 - eg и f <= 2e/3 (f <= e/2 без треугольников). Граф связный."""
    v, e = graph.n, graph.m
    if v < 3:
        return 0
    if _triangle_free(graph):
        eg = _ceil_div(e - 2 * v + 4, 2)
    else:
        eg = _ceil_div(e - 3 * v + 6, 3)
    eg = max(eg, 0)
    return _ceil_div(eg, 2) if orientable else eg


def _max_common_neighbourhood(graph: Graph, a: int) -> int:
    adj = graph.adjacency
    best = 0
    for group in combinations(range(graph.n), a):
        common = frozenset.intersection(*(adj[v] for v in group)) - set(group)
        best = max(best, len(common))
    return best


def _euler_genus_of_clique(k: int) -> int:
    return min(2 * genus_formula_complete(k), crosscap_formula_complete(k)) if k >= 5 else 0


def _cheap_euler_genus(block: Graph) -> int:
    if planar(block):
        return 0
    size, _ = max_clique(block)
    return max(1, euler_bound(block, orientable=False), _euler_genus_of_clique(size))


def _deletion_bound(graph: Graph) -> int:
    """max по x: сумма грубых оценок эйлерова рода блоков G - x."""
    best = 0
    for x in range(graph.n):
        rest = induced_subgraph(graph, [w for w in range(graph.n) if w != x])
        total = 0
        for members in blocks(rest).blocks:
            if len(members) >= 5:
                total += _cheap_euler_genus(induced_subgraph(rest, members))
        best = max(best, total)
    return best


def lower_bound(graph: Graph, *, orientable: bool, full: bool = True) -> tuple[int, str]:
    """
    Нижняя оценка рода (orientable) или непланарного рода связного графа.

    full=False - только оценка Эйлера (для «сырого» перебора).
    """
    candidates = [(euler_bound(graph, orientable=orientable), "euler")]
    if full:
        if not planar(graph):
            candidates.append((1, "nonplanar"))
        size, _ = max_clique(graph)
        clique = genus_formula_complete(size) if orientable else crosscap_formula_complete(size)
        candidates.append((clique, f"K{size} subgraph"))
        bipartite = genus_formula_bipartite if orientable else crosscap_formula_bipartite
        for a in (3, 4):
            if a == 4 and graph.n > 40:
                continue
            c = _max_common_neighbourhood(graph, a)
            candidates.append((bipartite(a, c), f"K{a},{c} subgraph"))
        eg = _deletion_bound(graph)
        candidates.append((_ceil_div(eg, 2) if orientable else eg, "vertex deletion"))
    value, reason = max(candidates, key=lambda c: c[0])
    return value, reason


# =========================
# Перебор систем вращений
# =========================

class _RotationSearch:
    """
    Поиск системы вращений (со знаками рёбер при signed) с не менее чем
    target_faces гранями.

    Вершины назначаются в порядке BFS; у каждой вершины первый сосед
    зафиксирован, у корня дополнительно снята зеркальная симметрия. Рёбра
    остовного дерева BFS положительны, знаки остальных выбираются, когда
    назначен второй конец. Состояния обхода граней связываются в цепочки по мере
    назначения; замкнутая цепочка - готовая грань. Отсечение: закрытые грани
    плюс максимум будущих меньше цели. Открытая цепочка длины >= face_floor
    войдёт в одну грань, поэтому при цели «все грани - треугольники» первая же
    цепочка из четырёх состояний обрывает ветку.
    """

    def __init__(self, graph: Graph, *, signed: bool, budget: NodeBudget) -> None:
        self.graph = graph
        self.signed = signed
        self.budget = budget
        self.sides = (1, -1) if signed else (1,)
        self.factor = 2 if signed else 1

        root = max(range(graph.n), key=lambda v: (graph.degree(v), -v))
        self.order = [root]
        self.parent = {root: None}
        for u in self.order:
            for w in sorted(graph.adjacency[u]):
                if w not in self.parent:
                    self.parent[w] = u
                    self.order.append(w)
        if len(self.order) != graph.n:
            raise ValueError("rotation search needs a connected graph")

        self.dart_id: dict[tuple[int, int], int] = {}
        for u, v in graph.sorted_edges():
            self.dart_id[(u, v)] = len(self.dart_id)
            self.dart_id[(v, u)] = len(self.dart_id)
        total = len(self.dart_id) * len(self.sides)
        min_degree = min((graph.degree(v) for v in range(graph.n)), default=0)
        self.face_floor = 3 if min_degree >= 2 else 2
        # цепочки состояний: start/end валидны на концах, size - в начале
        self.start = list(range(total))
        self.end = list(range(total))
        self.size = [1] * total
        self.closed = 0
        self.open_chains = total
        # открытая цепочка длины >= face_floor даст не больше одной грани;
        # короткие считаются по состояниям
        self.long_chains = 0 if self.face_floor > 1 else total
        self.short_states = total - self.long_chains
        self.trail: list[tuple] = []

        self.rotation: dict[int, tuple[int, ...]] = {}
        self.position: dict[int, dict[int, int]] = {}
        self.sign: dict[tuple[int, int], int] = {}

    def _state(self, a: int, b: int, s: int) -> int:
        return self.dart_id[(a, b)] * len(self.sides) + (0 if s == 1 else 1)

    def _drop_open(self, size: int) -> None:
        if size >= self.face_floor:
            self.long_chains -= 1
        else:
            self.short_states -= size

    def _add_open(self, size: int) -> None:
        if size >= self.face_floor:
            self.long_chains += 1
        else:
            self.short_states += size

    def _link(self, x: int, y: int) -> None:
        s = self.start[x]
        self.trail.append(("counts", self.long_chains, self.short_states))
        if s == y:
            self.trail.append(("close", s))
            self.closed += 1
            self.open_chains -= 1
            self._drop_open(self.size[s])
            return
        t = self.end[y]
        self.trail.append(("join", s, t, self.end[s], self.start[t], self.size[s]))
        self._drop_open(self.size[s])
        self._drop_open(self.size[y])
        self.end[s] = t
        self.start[t] = s
        self.size[s] += self.size[y]
        self._add_open(self.size[s])
        self.open_chains -= 1

    def _undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            entry = self.trail.pop()
            if entry[0] == "counts":
                _, self.long_chains, self.short_states = entry
                continue
            if entry[0] == "close":
                self.closed -= 1
            else:
                _, s, t, old_end, old_start, old_size = entry
                self.end[s] = old_end
                self.start[t] = old_start
                self.size[s] = old_size
            self.open_chains += 1

    def _link_arrivals(self, a: int, b: int) -> None:
        """Все состояния, приходящие по дуге a -> b (вращение b и знак ab известны)."""
        sigma = self.sign[(min(a, b), max(a, b))]
        order = self.rotation[b]
        i = self.position[b][a]
        for s in self.sides:
            s2 = s * sigma
            c = order[(i + s2) % len(order)]
            self._link(self._state(a, b, s), self._state(b, c, s2))

    def _rotations(self, v: int, is_root: bool):
        nbrs = sorted(self.graph.adjacency[v])
        if not nbrs:
            yield ()
            return
        for perm in permutations(nbrs[1:]):
            if is_root and len(perm) >= 2 and perm[0] > perm[-1]:
                continue
            yield (nbrs[0],) + perm

    def _sign_choices(self, v: int):
        back = [w for w in self.graph.adjacency[v] if w in self.rotation]
        free = sorted(w for w in back if self.parent[v] != w)
        fixed = [w for w in back if self.parent[v] == w]
        if not self.signed:
            yield {(min(v, w), max(v, w)): 1 for w in back}
            return
        for bits in range(1 << len(free)):
            choice = {(min(v, w), max(v, w)): 1 for w in fixed}
            for k, w in enumerate(free):
                choice[(min(v, w), max(v, w))] = -1 if bits >> k & 1 else 1
            yield choice

    def _feasible(self, target_orbits: int) -> bool:
        future = min(self.open_chains, self.long_chains + self.short_states // self.face_floor)
        return self.closed + future >= target_orbits

    def run(self, target_faces: int) -> Embedding | None:
        target_orbits = target_faces * self.factor
        return self._assign(0, target_orbits)

    def _assign(self, i: int, target_orbits: int) -> Embedding | None:
        if i == len(self.order):
            if self.closed < target_orbits:
                return None
            negative = frozenset(e for e, s in self.sign.items() if s < 0)
            if self.signed and not negative:
                return None
            rotation = tuple(self.rotation[v] for v in range(self.graph.n))
            return Embedding(rotation, negative if self.signed else None)

        v = self.order[i]
        back = [w for w in self.graph.adjacency[v] if w in self.rotation]
        for rot in self._rotations(v, i == 0):
            for signs in self._sign_choices(v):
                self.budget.tick()
                mark = len(self.trail)
                self.rotation[v] = rot
                self.position[v] = {w: k for k, w in enumerate(rot)}
                self.sign.update(signs)
                for w in back:
                    self._link_arrivals(w, v)
                    self._link_arrivals(v, w)
                if self._feasible(target_orbits):
                    found = self._assign(i + 1, target_orbits)
                    if found is not None:
                        return found
                self._undo(mark)
                for e in signs:
                    del self.sign[e]
                del self.rotation[v]
                del self.position[v]
        return None


def search_embedding(graph: Graph, euler_genus: int, *, signed: bool, budget: NodeBudget) -> Embedding | None:
    """
    Вложение связного графа с эйлеровым родом <= euler_genus: ориентируемое
    (signed=False) или неориентируемое.

    :raises SearchBudgetExceeded: Перебор не уложился в budget.
    """
    target_faces = 2 - euler_genus - graph.n + graph.m
    if graph.m == 0:
        return Embedding(tuple(() for _ in range(graph.n))) if not signed else None
    return _RotationSearch(graph, signed=signed, budget=budget).run(target_faces)


# =========================
# Род блока
# =========================

def _block_genus(
        block: Graph, budget: NodeBudget, *, recognize: bool, decompose: bool, stop_above: int | None,
) -> SurfaceResult:
    if recognize:
        ok, cert = is_planar(block)
        if ok:
            return SurfaceResult(EXACT, 0, cert, budget.spent)
        family = recognize_family(block)
        if family is not None:
            value = genus_formula_complete(*family) if len(family) == 1 else genus_formula_bipartite(*family)
            return SurfaceResult(EXACT, value, Formula(_family_name(family), value), budget.spent)
    if decompose:
        reduced = ear_reduce(block)
        if reduced.n != block.n:
            return _block_genus(reduced, budget, recognize=recognize, decompose=False, stop_above=stop_above)

    lower, reason = lower_bound(block, orientable=True, full=recognize)
    upper = genus_formula_complete(block.n)
    return _deepen(
        block, budget, lower, upper, reason,
        lambda g: search_embedding(block, 2 * g, signed=False, budget=budget),
        raw=not recognize, stop_above=stop_above, what="genus",
    )


def _deepen(
        block: Graph, budget: NodeBudget, lower: int, upper: int, reason: str, search, *,
        raw: bool, stop_above: int | None, what: str,
) -> SurfaceResult:
    """
    Углубление от нижней оценки: search(k) ищет вложение уровня k.
    Обычно уровень upper не перебирается (он уже доказан); в сыром режиме
    перебор идёт до найденного вложения.
    """
    if not raw and lower >= upper:
        return SurfaceResult(EXACT, upper, Bounds(lower, upper, reason), budget.spent)
    last = upper if raw else upper - 1
    level = lower
    try:
        while level <= last:
            if stop_above is not None and level > stop_above:
                return SurfaceResult(LOWER_BOUND, level, Bounds(level, upper, reason), budget.spent)
            found = search(level)
            if found is not None:
                return SurfaceResult(EXACT, level, found, budget.spent)
            log.debug("%s > %d proven by search (%d nodes)", what, level, budget.spent)
            level += 1
            reason = "search"
    except SearchBudgetExceeded:
        log.warning("%s search budget exhausted at level %d on %r", what, level, block)
        return SurfaceResult(LOWER_BOUND, level, Bounds(level, upper, reason), budget.spent)
    return SurfaceResult(EXACT, upper, Bounds(upper, upper, "search"), budget.spent)


def _family_name(family: tuple[int, ...]) -> str:
    return f"K{family[0]}" if len(family) == 1 else f"K{family[0]},{family[1]}"


def _parts(graph: Graph, decompose: bool) -> list[frozenset[int]]:
    """Блоки (decompose) или компоненты связности, только с рёбрами."""
    if decompose:
        return [b for b in blocks(graph).blocks if len(b) >= 3]
    return [c for c in graph.components() if len(c) >= 2]


def genus(
        graph: Graph,
        node_budget: int = DEFAULT_GENUS_BUDGET,
        *,
        recognize: bool = True,
        decompose: bool = True,
        stop_above: int | None = None,
) -> SurfaceResult:
    """
    Род графа: сумма по блокам.

    :param recognize: Распознавать планарность, K_n, K_{m,n} и считать полные нижние оценки.
    :param decompose: Делить на блоки и отрезать уши; иначе - только компоненты.
    :param stop_above: Достаточно знать, что род больше этого числа.
    """
    budget = NodeBudget(node_budget)
    parts = _parts(graph, decompose)
    results = []
    for members in parts:
        block = induced_subgraph(graph, sorted(members))
        if decompose and len(members) <= 4:
            results.append((members, SurfaceResult(EXACT, 0, is_planar(block)[1], budget.spent)))
            continue
        remaining = None
        if stop_above is not None:
            remaining = stop_above - sum(r.value for _, r in results)
        results.append((members, _block_genus(
            block, budget, recognize=recognize, decompose=decompose, stop_above=remaining)))
    return _assemble_sum(graph, results, budget)


def _assemble_sum(graph: Graph, results: list, budget: NodeBudget) -> SurfaceResult:
    if not results:
        return SurfaceResult(EXACT, 0, is_planar(graph)[1], budget.spent)
    total = sum(r.value for _, r in results)
    kind = EXACT if all(r.exact for _, r in results) else LOWER_BOUND
    if len(results) == 1 and results[0][0] == frozenset(range(graph.n)):
        return results[0][1]
    return SurfaceResult(kind, total, BlockSum(tuple(results)), budget.spent)


def is_toroidal(graph: Graph, node_budget: int = DEFAULT_GENUS_BUDGET) -> Decision:
    if planar(graph):
        return Decision(NO, "planar")
    result = genus(graph, node_budget, stop_above=1)
    if result.exact:
        return Decision(YES if result.value == 1 else NO, f"genus {result.value}", result)
    if result.value >= 2:
        return Decision(NO, f"genus >= {result.value}", result)
    return Decision(INCONCLUSIVE, f"genus >= {result.value}, budget exhausted", result)


# =========================
# Непланарный род
# =========================

def _block_crosscap(
        block: Graph, budget: NodeBudget, *, recognize: bool, decompose: bool, stop_above: int | None,
) -> SurfaceResult:
    if recognize:
        ok, cert = is_planar(block)
        if ok:
            return SurfaceResult(EXACT, 0, cert, budget.spent)
        family = recognize_family(block)
        if family is not None:
            value = (crosscap_formula_complete(*family) if len(family) == 1
                     else crosscap_formula_bipartite(*family))
            return SurfaceResult(EXACT, value, Formula(_family_name(family), value), budget.spent)
    if decompose:
        reduced = ear_reduce(block)
        if reduced.n != block.n:
            return _block_crosscap(reduced, budget, recognize=recognize, decompose=False, stop_above=stop_above)

    lower, reason = lower_bound(block, orientable=False, full=recognize)
    upper = min(crosscap_formula_complete(block.n), 2 * genus_formula_complete(block.n) + 1)
    # уровень 0 - плоскость, ищется ориентируемой схемой
    return _deepen(
        block, budget, lower, upper, reason,
        lambda k: search_embedding(block, k, signed=k > 0, budget=budget),
        raw=not recognize, stop_above=stop_above, what="crosscap",
    )


def _orientably_simple(block: Graph, crosscap_value: int, budget: NodeBudget, recognize: bool) -> bool | None:
    """γ̄ = 2γ + 1? None, если род не удалось установить."""
    if crosscap_value % 2 == 0 or crosscap_value == 1:
        return False
    target = (crosscap_value - 1) // 2
    result = _block_genus(block, budget, recognize=recognize, decompose=True, stop_above=target)
    if result.exact:
        return result.value == target
    return False if result.value > target else None


def crosscap(
        graph: Graph,
        node_budget: int = DEFAULT_CROSSCAP_BUDGET,
        *,
        recognize: bool = True,
        decompose: bool = True,
        stop_above: int | None = None,
) -> SurfaceResult:
    """
    Непланарный род. Планарный граф имеет непланарный род 0.

    Эйлеров род блока eg(B) = γ̄(B) либо γ̄(B) - 1 (если γ̄ = 2γ + 1);
    eg аддитивен, а γ̄(G) = eg(G) + 1 ровно тогда, когда все непланарные
    блоки такие. Без decompose граф считается одним куском.
    """
    budget = NodeBudget(node_budget)
    parts = _parts(graph, decompose)
    results = []
    nonplanar_parts = 0
    for members in parts:
        block = induced_subgraph(graph, sorted(members))
        if decompose and len(members) <= 4:
            results.append((members, SurfaceResult(EXACT, 0, is_planar(block)[1], budget.spent)))
            continue
        if recognize and not planar(block):
            nonplanar_parts += 1
        results.append((members, _block_crosscap(
            block, budget, recognize=recognize, decompose=decompose, stop_above=stop_above)))

    if not results:
        return SurfaceResult(EXACT, 0, is_planar(graph)[1], budget.spent)
    if len(results) == 1 and results[0][0] == frozenset(range(graph.n)):
        return results[0][1]

    certificate = BlockSum(tuple(results))
    nonplanar = [(m, r) for m, r in results if not (r.exact and r.value == 0)]
    if stop_above is not None:
        quick = max(sum(max(r.value - 1, min(r.value, 1)) for _, r in nonplanar), max(r.value for _, r in results))
        if quick > stop_above:
            return SurfaceResult(LOWER_BOUND, quick, certificate, budget.spent)

    eg_low = 0
    simple: list[bool | None] = []
    exact = True
    for members, result in nonplanar:
        if result.exact:
            flag = _orientably_simple(induced_subgraph(graph, sorted(members)), result.value, budget, recognize)
            simple.append(flag)
            eg_low += result.value - (1 if flag is not False else 0)
            exact = exact and flag is not None
        else:
            simple.append(None)
            eg_low += max(result.value - 1, min(result.value, 1))
            exact = False

    if exact:
        value = eg_low if not all(simple) else eg_low + 1
        if not simple:
            value = 0
        return SurfaceResult(EXACT, value, certificate, budget.spent)
    lower = max(eg_low, nonplanar_parts, max(r.value for _, r in results))
    return SurfaceResult(LOWER_BOUND, lower, certificate, budget.spent)


def projective_obstruction(graph: Graph) -> str | None:
    """
    Запрещённые для проективной плоскости конфигурации: K7 или два непланарных
    блока (K5·K5, 2K5, K33·K33, 2K33, K33·K5, K33∪K5).
    """
    size, _ = max_clique(graph)
    if size >= 7:
        return "K7"
    found = []
    for members in blocks(graph).blocks:
        if len(members) < 5:
            continue
        ok, cert = is_planar(induced_subgraph(graph, sorted(members)))
        if not ok:
            found.append((members, cert.pattern))
    if len(found) < 2:
        return None
    (first, kind_a), (second, kind_b) = found[0], found[1]
    kinds = sorted((kind_a, kind_b))
    if first & second:
        return f"{kinds[0]}·{kinds[1]}"
    if kind_a == kind_b:
        return f"2{kind_a}"
    return f"{kinds[0]}∪{kinds[1]}"


def is_projective(graph: Graph, node_budget: int = DEFAULT_CROSSCAP_BUDGET) -> Decision:
    if planar(graph):
        return Decision(NO, "planar")
    obstruction = projective_obstruction(graph)
    if obstruction is not None:
        return Decision(NO, f"contains {obstruction}", obstructions=(obstruction,))
    result = crosscap(graph, node_budget, stop_above=1)
    if result.exact:
        return Decision(YES if result.value == 1 else NO, f"crosscap {result.value}", result)
    if result.value >= 2:
        return Decision(NO, f"crosscap >= {result.value}", result)
    return Decision(INCONCLUSIVE, f"crosscap >= {result.value}, budget exhausted", result)
