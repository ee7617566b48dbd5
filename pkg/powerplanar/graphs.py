"""
Графы: степенные графы групп, именованные графы-фикстуры, блоки, клики, экспорт.

Graph - неизменяемое значение: метки вершин + множество рёбер (i < j) на
индексах 0..n-1. Все алгоритмы networkx получают свежую копию через to_networkx().
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import BinaryIO, Iterable, Sequence

import json
import logging

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from sympy import factorint

from powerplanar.groups import Group, cyclic_subgroups, make_cyclic, totient

log = logging.getLogger(__name__)

AUTOMORPHISM_LIMIT = 50_000


class GraphFormatError(ValueError):
    """Неверный файл графа или описание именованного графа."""


class SearchBudgetExceeded(ValueError):
    """Перебор исчерпал лимит узлов; на границе операции превращается в inconclusive."""

    def __init__(self, budget: int, spent: int) -> None:
        super().__init__(f"search budget of {budget} nodes exhausted after {spent} nodes")
        self.budget = budget
        self.spent = spent


class NodeBudget:
    """Счётчик узлов перебора, общий для вложенных поисков одной операции."""

    def __init__(self, limit: int) -> None:
        if limit <= 0:
            raise ValueError(f"budget must be positive, got {limit}")
        self.limit = limit
        self.spent = 0

    def tick(self, nodes: int = 1) -> None:
        self.spent += nodes
        if self.spent > self.limit:
            raise SearchBudgetExceeded(self.limit, self.spent)


# =========================
# Доменные структуры
# =========================

@dataclass(frozen=True)
class Graph:
    labels: tuple[str, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            dup = sorted({x for x in self.labels if self.labels.count(x) > 1})
            raise GraphFormatError(f"vertex labels must be unique, repeated: {dup}")
        for u, v in self.edges:
            if not (0 <= u < v < n):
                raise GraphFormatError(f"edge ({u},{v}) is a loop, unordered or out of range")

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[tuple[int, int]]) -> "Graph":
        """Рёбра в любом порядке концов; повторы схлопываются, петли запрещены."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            normalized.add((min(u, v), max(u, v)))
        return cls(tuple(labels), frozenset(normalized))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges([str(i) for i in range(n)], combinations(range(n), 2))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in self.labels]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphFormatError(f"unknown vertex label {label!r}") from None

    def with_edges(self, added: Iterable[tuple[int, int]] = (), removed: Iterable[tuple[int, int]] = ()) -> "Graph":
        drop = {(min(u, v), max(u, v)) for u, v in removed}
        return Graph.from_edges(self.labels, [e for e in self.edges if e not in drop] + list(added))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def components(self) -> list[frozenset[int]]:
        comps = nx.connected_components(self.to_networkx())
        return sorted((frozenset(c) for c in comps), key=min)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class BlockDecomposition:
    cut_vertices: frozenset[int]
    blocks: tuple[frozenset[int], ...]


# =========================
# Степенной граф
# =========================

def build_power_graph(g: Group, proper: bool = False) -> Graph:
    """
    P(G): x ~ y, если x в <y> или y в <x>. P*(G) - то же без единицы.

    Принадлежность <x> хранится битовой маской, так что пара проверяется за O(1).
    """
    masks = [0] * g.order
    for sub in cyclic_subgroups(g):
        bits = sum(1 << y for y in sub.members)
        # все образующие подгруппы дают одну и ту же маску
        for x in sub.members:
            if g.orders[x] == sub.order:
                masks[x] = bits
    vertices = [x for x in range(g.order) if not (proper and x == g.identity)]
    position = {x: i for i, x in enumerate(vertices)}
    edges = [
        (position[x], position[y])
        for x, y in combinations(vertices, 2)
        if (masks[y] >> x) & 1 or (masks[x] >> y) & 1
    ]
    return Graph.from_edges([g.name(x) for x in vertices], edges)


# =========================
# Подграфы, блоки, клики
# =========================

def induced_subgraph(graph: Graph, verts: Iterable[int]) -> Graph:
    chosen = sorted(set(verts))
    for v in chosen:
        if not 0 <= v < graph.n:
            raise GraphFormatError(f"unknown vertex {v}")
    position = {v: i for i, v in enumerate(chosen)}
    edges = [(position[u], position[v]) for u, v in graph.edges if u in position and v in position]
    return Graph.from_edges([graph.labels[v] for v in chosen], edges)


def blocks(graph: Graph) -> BlockDecomposition:
    nxg = graph.to_networkx()
    found = sorted((frozenset(b) for b in nx.biconnected_components(nxg)), key=lambda b: (min(b), sorted(b)))
    return BlockDecomposition(
        cut_vertices=frozenset(nx.articulation_points(nxg)),
        blocks=tuple(found),
    )


def max_clique(graph: Graph) -> tuple[int, frozenset[int]]:
    """Точная наибольшая клика (ветви и границы networkx)."""
    if graph.n == 0:
        return 0, frozenset()
    clique, size = nx.max_weight_clique(graph.to_networkx(), weight=None)
    return int(size), frozenset(clique)


def clique_lower_formula(n: int) -> int:
    """
    Размер клики в P*(Z_n), собранной из элементов порядка, делящего p^m, и
    порождающих: p^m - 1 + φ(n) для наибольшей примарной части p^m числа n.
    """
    if n == 1:
        return 0
    prime_power = max(p**k for p, k in factorint(n).items())
    if prime_power == n:
        return n - 1
    return prime_power - 1 + totient(n)


# =========================
# Автоморфизмы
# =========================

def automorphisms(graph: Graph, limit: int = AUTOMORPHISM_LIMIT) -> list[dict[int, int]] | None:
    """Все автоморфизмы или None, если их больше limit."""
    nxg = graph.to_networkx()
    result = []
    for mapping in GraphMatcher(nxg, nxg).isomorphisms_iter():
        result.append(mapping)
        if len(result) > limit:
            return None
    return result


def is_vertex_transitive(graph: Graph) -> bool:
    """Для каждой v ищем автоморфизм 0 -> v (VF2++ с пометкой корня)."""
    if graph.n <= 1:
        return True
    base = graph.to_networkx()
    nx.set_node_attributes(base, {v: v == 0 for v in base}, "root")
    for target in range(1, graph.n):
        other = graph.to_networkx()
        nx.set_node_attributes(other, {v: v == target for v in other}, "root")
        if not nx.vf2pp_is_isomorphic(base, other, node_label="root"):
            return False
    return True


# =========================
# Именованные графы
# =========================

GADGET_LETTERS = {2: "a", 3: "b", 4: "c", 5: "d", 6: "e"}

# Пары пересекающихся рёбер 1-планарных рисунков компонент; ребро {1, инволюция}
# остаётся непересечённым, по нему компоненты склеиваются.
GADGET_CROSSINGS: dict[int, tuple[tuple[tuple[str, str], tuple[str, str]], ...]] = {
    2: (),
    3: (),
    4: (),
    5: ((("1", "d2"), ("d", "d3")),),
    6: ((("1", "e2"), ("e", "e4")),),
}


def order_gadget(order: int) -> Graph:
    """P(Z_order) с метками 1, a / b, b2 / c, c2, c3 / ... , буква по порядку элемента."""
    if order not in GADGET_LETTERS:
        raise GraphFormatError(f"fig2gadget needs an element order in 2..6, got {order}")
    letter = GADGET_LETTERS[order]
    g = build_power_graph(make_cyclic(order))
    labels = [lab.replace("x", letter) for lab in g.labels]
    return Graph(tuple(labels), g.edges)


def complete_bipartite(m: int, n: int) -> Graph:
    labels = [f"a{i}" for i in range(m)] + [f"b{j}" for j in range(n)]
    return Graph.from_edges(labels, [(i, m + j) for i in range(m) for j in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphFormatError(f"C_n needs n >= 3, got {n}")
    return Graph.from_edges([str(i) for i in range(n)], [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges([str(i) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def k9_minus_k6_plus(k: int) -> Graph:
    """K_9 без K_6 на v1..v6 плюс k непересекающихся рёбер v1v2, v3v4, v5v6."""
    if k not in (2, 3):
        raise GraphFormatError(f"K9mK6p needs k in {{2,3}}, got {k}")
    labels = ["u1", "u2", "u3"] + [f"v{i}" for i in range(1, 7)]
    edges = [(u, w) for u in range(3) for w in range(u + 1, 9)]
    edges += [(3 + 2 * i, 4 + 2 * i) for i in range(k)]
    return Graph.from_edges(labels, edges)


def dot_product(left: Graph, right: Graph, left_vertex: int = 0, right_vertex: int = 0) -> Graph:
    """Склейка вершины left_vertex с right_vertex; метка склейки хранит обе вершины."""
    labels = []
    for v, lab in enumerate(left.labels):
        if v == left_vertex:
            labels.append(f"a:{lab}=b:{right.labels[right_vertex]}")
        else:
            labels.append(f"a:{lab}")
    position = {}
    for v, lab in enumerate(right.labels):
        if v == right_vertex:
            position[v] = left_vertex
        else:
            position[v] = len(labels)
            labels.append(f"b:{lab}")
    edges = list(left.edges) + [(position[u], position[v]) for u, v in right.edges]
    return Graph.from_edges(labels, edges)


def disjoint_union(left: Graph, right: Graph) -> Graph:
    labels = [f"a:{lab}" for lab in left.labels] + [f"b:{lab}" for lab in right.labels]
    shift = left.n
    edges = list(left.edges) + [(u + shift, v + shift) for u, v in right.edges]
    return Graph.from_edges(labels, edges)


class _NamedParser:
    def __init__(self, text: str) -> None:
        self.text = "".join(text.split())
        self.pos = 0

    def _error(self, expected: str) -> GraphFormatError:
        return GraphFormatError(f"cannot parse {self.text!r} at offset {self.pos}: expected {expected}")

    def _take(self, literal: str) -> bool:
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def _int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self._error("INT")
        return int(self.text[start:self.pos])

    def _pair(self) -> tuple[Graph, Graph]:
        left = self.graph()
        if not self._take(","):
            raise self._error("','")
        right = self.graph()
        if not self._take(")"):
            raise self._error("')'")
        return left, right

    def graph(self) -> Graph:
        if self._take("dot("):
            left, right = self._pair()
            return dot_product(left, right)
        if self._take("union("):
            left, right = self._pair()
            return disjoint_union(left, right)
        if self._take("K9mK6p"):
            return k9_minus_k6_plus(self._int())
        if self._take("fig2gadget"):
            return order_gadget(self._int())
        if self._take("C"):
            return cycle_graph(self._int())
        if self._take("P"):
            return path_graph(self._int())
        if self._take("K"):
            m = self._int()
            nxt = self.pos + 1
            if self.text.startswith(",", self.pos) and nxt < len(self.text) and self.text[nxt].isdigit():
                self.pos += 1
                return complete_bipartite(m, self._int())
            return Graph.complete(m)
        raise self._error("'K', 'C', 'P', 'dot(', 'union(', 'K9mK6p' or 'fig2gadget'")


def graph_from_named(descriptor: str) -> Graph:
    parser = _NamedParser(descriptor)
    graph = parser.graph()
    if parser.pos != len(parser.text):
        raise parser._error("end of input")
    return graph


# =========================
# Экспорт / импорт
# =========================

def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(graph: Graph, name: str = "G") -> bytes:
    lines = [f"graph {name} {{"]
    lines += [f'  {v} [label="{_dot_escape(lab)}"];' for v, lab in enumerate(graph.labels)]
    lines += [f"  {u} -- {v};" for u, v in graph.sorted_edges()]
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def graph_to_json(graph: Graph) -> bytes:
    record = {"vertices": list(graph.labels), "edges": [list(e) for e in graph.sorted_edges()]}
    return json.dumps(record, ensure_ascii=False, indent=2).encode("utf-8")


def read_graph(source: BinaryIO | bytes | str) -> Graph:
    """Читает {"vertices": [...], "edges": [[i, j], ...]}; петли и повторы отвергаются."""
    if hasattr(source, "read"):
        source = source.read()  # type: ignore[union-attr]
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    try:
        record = json.loads(source)  # type: ignore[arg-type]
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed JSON: {exc.msg} at line {exc.lineno}") from exc
    if not isinstance(record, dict) or "vertices" not in record or "edges" not in record:
        raise GraphFormatError("graph record needs 'vertices' and 'edges'")
    labels = [str(x) for x in record["vertices"]]
    seen: set[tuple[int, int]] = set()
    for item in record["edges"]:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) for x in item)):
            raise GraphFormatError(f"edge {item!r} is not a pair of indices")
        u, v = item
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        if not (0 <= u < len(labels) and 0 <= v < len(labels)):
            raise GraphFormatError(f"edge {item!r} refers to a missing vertex")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {item!r}")
        seen.add(key)
    return Graph(tuple(labels), frozenset(seen))
