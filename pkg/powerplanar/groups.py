"""
Конечные группы как проверенные таблицы Кэли.

Элементы - плотные индексы 0..n-1, единица всегда имеет индекс 0
(таблицы из файлов переиндексируются). Группа неизменяема после создания.

Что внутри
----------
Group               - таблица умножения + имена элементов + источник (descriptor)
make_*              - конструкторы семейств: Z_n, D_n, Q_n, QD_16, Z_n x| Z_m, A x B
ingest_cayley_table - чтение одной таблицы из JSON-записи с полной проверкой
element_order / omega / cyclic_subgroups / centralizer / totient - запросы
"""
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import BinaryIO, Iterable, Iterator, Sequence

import json
import logging

import numpy as np
from sympy import totient as _sympy_totient

log = logging.getLogger(__name__)

FULL_ASSOCIATIVITY_LIMIT = 256
SAMPLED_TRIPLES = 10**6
SAMPLE_SEED = 20240521
MAX_CATALOG_ORDER = 512


# =========================
# Ошибки
# =========================

class GroupError(ValueError):
    """Нарушено предусловие конструктора группы."""


class GroupValidationError(ValueError):
    """Таблица не задаёт группу. indices - индексы, на которых сломалось свойство."""

    def __init__(self, message: str, *, indices: tuple[int, ...] = ()) -> None:
        super().__init__(message)
        self.indices = indices


class CatalogFormatError(ValueError):
    """Запись каталога не разбирается."""


# =========================
# Доменные структуры
# =========================

@dataclass(frozen=True, eq=False)
class Group:
    order: int
    table: np.ndarray
    identity: int = 0
    names: tuple[str, ...] | None = None
    descriptor: str | None = None
    # "full" - проверены все тройки, "sampled" - случайная выборка
    associativity: str = "full"

    def __post_init__(self) -> None:
        self.table.setflags(write=False)

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def name(self, x: int) -> str:
        if self.names is None:
            return str(x)
        return self.names[x]

    @property
    def label(self) -> str:
        return self.descriptor or f"<group of order {self.order}>"

    @property
    def sampled_associativity(self) -> bool:
        return self.associativity == "sampled"

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        # в строке x единица стоит ровно в одном столбце
        return tuple(int(np.flatnonzero(self.table[x] == self.identity)[0]) for x in range(self.order))

    @cached_property
    def power_lists(self) -> tuple[tuple[int, ...], ...]:
        """powers[x] = (1, x, x^2, ..., x^(k-1)), k = |x|."""
        result = []
        for x in range(self.order):
            seq = [self.identity]
            y = x
            while y != self.identity:
                seq.append(y)
                y = int(self.table[y, x])
            result.append(tuple(seq))
        return tuple(result)

    @cached_property
    def orders(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.power_lists)

    def __repr__(self) -> str:
        return f"Group({self.label}, order={self.order})"


@dataclass(frozen=True)
class OrderSpectrum:
    values: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __contains__(self, item: object) -> bool:
        return item in self.values

    def __len__(self) -> int:
        return len(self.values)

    def issubset(self, allowed: Iterable[int]) -> bool:
        return set(self.values) <= set(allowed)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.values)) + "}"


@dataclass(frozen=True)
class CyclicSubgroup:
    generator: int
    members: frozenset[int]
    order: int


# =========================
# Проверка таблиц
# =========================

def _as_table(rows: Sequence[Sequence[int]] | np.ndarray) -> np.ndarray:
    try:
        table = np.asarray(rows, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise CatalogFormatError(f"table is not an integer matrix: {exc}") from exc
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise CatalogFormatError(f"table must be a non-empty square matrix, got shape {table.shape}")
    return table


def _check_latin(table: np.ndarray) -> None:
    n = table.shape[0]
    bad = np.argwhere((table < 0) | (table >= n))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise GroupValidationError(
            f"entry ({i},{j}) = {int(table[i, j])} is outside 0..{n - 1}", indices=(i, j))
    expected = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(table[i]), expected):
            dup = [int(v) for v, c in Counter(table[i].tolist()).items() if c > 1]
            raise GroupValidationError(f"row {i} is not a permutation (repeated {dup})", indices=(i,))
    for j in range(n):
        if not np.array_equal(np.sort(table[:, j]), expected):
            dup = [int(v) for v, c in Counter(table[:, j].tolist()).items() if c > 1]
            raise GroupValidationError(f"column {j} is not a permutation (repeated {dup})", indices=(j,))


def _find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    expected = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], expected) and np.array_equal(table[:, e], expected):
            return e
    raise GroupValidationError("no two-sided identity element")


def _normalize_identity(table: np.ndarray, e: int) -> np.ndarray:
    """Переставляет индексы 0 и e, чтобы единица стала нулём."""
    if e == 0:
        return table
    perm = np.arange(table.shape[0])
    perm[0], perm[e] = e, 0
    # perm - инволюция, поэтому обратная перестановка совпадает с ней
    return perm[table[np.ix_(perm, perm)]]


def check_associativity(table: np.ndarray) -> str:
    """
    Полная проверка до FULL_ASSOCIATIVITY_LIMIT, дальше - выборка троек.

    :return: "full" или "sampled".
    :raises GroupValidationError: с индексами (i, j, k) первой неассоциативной тройки.
    """
    n = table.shape[0]
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        for i in range(n):
            left = table[table[i]]        # (i*j)*k, строки по j, столбцы по k
            right = table[i][table]       # i*(j*k)
            diff = np.argwhere(left != right)
            if diff.size:
                j, k = (int(v) for v in diff[0])
                raise GroupValidationError(f"associativity fails for ({i},{j},{k})", indices=(i, j, k))
        return "full"

    rng = np.random.default_rng(SAMPLE_SEED)
    i, j, k = rng.integers(0, n, size=(3, SAMPLED_TRIPLES))
    left = table[table[i, j], k]
    right = table[i, table[j, k]]
    diff = np.flatnonzero(left != right)
    if diff.size:
        p = int(diff[0])
        raise GroupValidationError(
            f"associativity fails for ({int(i[p])},{int(j[p])},{int(k[p])})",
            indices=(int(i[p]), int(j[p]), int(k[p])))
    log.warning("associativity of order-%d table checked on %d random triples only", n, SAMPLED_TRIPLES)
    return "sampled"


def group_from_table(
        rows: Sequence[Sequence[int]] | np.ndarray,
        *,
        names: Sequence[str] | None = None,
        descriptor: str | None = None,
) -> Group:
    """Проверяет таблицу (латинский квадрат, единица, ассоциативность) и строит Group."""
    table = _as_table(rows)
    _check_latin(table)
    e = _find_identity(table)
    if e != 0:
        table = _normalize_identity(table, e)
        if names is not None:
            names = list(names)
            names[0], names[e] = names[e], names[0]
    policy = check_associativity(table)
    if names is not None and len(names) != table.shape[0]:
        raise CatalogFormatError(f"{len(names)} names for a group of order {table.shape[0]}")
    return Group(
        order=int(table.shape[0]),
        table=table,
        identity=0,
        names=tuple(names) if names is not None else None,
        descriptor=descriptor,
        associativity=policy,
    )


# =========================
# Конструкторы семейств
# =========================

def _power_name(symbol: str, k: int) -> str:
    if k == 0:
        return ""
    return symbol if k == 1 else f"{symbol}{k}"


def _join_names(*parts: str) -> str:
    text = " ".join(p for p in parts if p)
    return text or "1"


def make_cyclic(n: int) -> Group:
    if n < 1:
        raise GroupError(f"Z_n needs n >= 1, got {n}")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    names = tuple(_join_names(_power_name("x", k)) for k in range(n))
    return Group(order=n, table=table, names=names, descriptor=f"Z{n}")


def _metacyclic(m: int, mult: int, s_square: int, descriptor: str) -> Group:
    """
    Группа <r, s | r^m = 1, s^-1 r s = r^mult, s^2 = r^s_square> порядка 2m.

    Нормальная форма элемента: s^j r^i, индекс j*m + i.
    """
    n = 2 * m
    table = np.empty((n, n), dtype=np.int64)
    for b in range(2):
        for a in range(m):
            for d in range(2):
                for c in range(m):
                    # s^b r^a * s^d r^c = s^(b+d) r^(a*mult^d + c)
                    i = (a * pow(mult, d, m) + c) % m
                    j = b + d
                    if j == 2:
                        j = 0
                        i = (i + s_square) % m
                    table[b * m + a, d * m + c] = j * m + i
    names = tuple(
        _join_names(_power_name("s", j), _power_name("r", i))
        for j in range(2) for i in range(m)
    )
    return Group(order=n, table=table, names=names, descriptor=descriptor)


def make_dihedral(n: int) -> Group:
    """Диэдральная группа ПОРЯДКА n (обозначение D_10, D_12 как в теоремах)."""
    if n < 4 or n % 2:
        raise GroupError(f"D_n needs an even order n >= 4, got {n}")
    m = n // 2
    return _metacyclic(m, m - 1, 0, f"D{n}")


def make_dicyclic(n: int) -> Group:
    """Дициклическая группа порядка n; при n = 2^k это обобщённая кватернионная Q_n."""
    if n < 8 or n % 4:
        raise GroupError(f"Q_n needs n >= 8 divisible by 4, got {n}")
    m = n // 2
    return _metacyclic(m, m - 1, m // 2, f"Q{n}")


def make_semidihedral_16() -> Group:
    return _metacyclic(8, 3, 0, "QD16")


def _multiplicative_order(t: int, n: int) -> int:
    if n == 1:
        return 1
    k, value = 1, t % n
    while value != 1:
        value = value * t % n
        k += 1
    return k


def semidirect_is_frobenius(n: int, m: int, t: int) -> bool:
    """Действие x -> x^t без неподвижных точек: gcd(t^h - 1, n) = 1 для 0 < h < m."""
    if n < 2 or m < 2:
        return False
    if _multiplicative_order(t, n) != m:
        return False
    return all(gcd((pow(t, h, n) - 1) % n, n) == 1 for h in range(1, m))


def make_semidirect(n: int, m: int, t: int) -> Group:
    """
    Z_n x| Z_m с действием образующей Z_m на Z_n по правилу x -> x^t.

    Элемент (k, h) = x^k y^h имеет индекс h*n + k,
    (k1, h1)(k2, h2) = (k1 + t^h1 * k2, h1 + h2).
    """
    if n < 1 or m < 1 or t < 1:
        raise GroupError(f"SD({n},{m},{t}): all parameters must be positive")
    if gcd(t, n) != 1:
        raise GroupError(f"SD({n},{m},{t}): gcd(t, n) = {gcd(t, n)} != 1")
    if pow(t, m, n) != 1 % n:
        raise GroupError(f"SD({n},{m},{t}): t^m = {pow(t, m, n)} (mod {n}), expected 1")
    size = n * m
    table = np.empty((size, size), dtype=np.int64)
    for h1 in range(m):
        twist = pow(t, h1, n)
        for k1 in range(n):
            for h2 in range(m):
                for k2 in range(n):
                    k = (k1 + twist * k2) % n
                    h = (h1 + h2) % m
                    table[h1 * n + k1, h2 * n + k2] = h * n + k
    names = tuple(
        _join_names(_power_name("x", k), _power_name("y", h))
        for h in range(m) for k in range(n)
    )
    return Group(order=size, table=table, names=names, descriptor=f"SD({n},{m},{t})")


def make_direct_product(a: Group, b: Group) -> Group:
    """Покомпонентное произведение, индекс элемента (x, y) равен x*|b| + y."""
    ta = a.table.astype(np.int64)
    tb = b.table.astype(np.int64)
    table = (ta[:, None, :, None] * b.order + tb[None, :, None, :]).reshape(a.order * b.order, a.order * b.order)
    names = tuple(
        "1" if x == 0 and y == 0 else f"({a.name(x)},{b.name(y)})"
        for x in range(a.order) for y in range(b.order)
    )
    descriptor = None
    if a.descriptor and b.descriptor:
        descriptor = f"{a.descriptor}x{b.descriptor}"
    return Group(order=a.order * b.order, table=table, names=names, descriptor=descriptor)


# =========================
# Чтение таблиц
# =========================

def ingest_cayley_table(source: BinaryIO | bytes | str) -> Group:
    """
    Читает одну группу: JSON-объект {"name", "order", "table"} или голую матрицу.

    :raises CatalogFormatError: Неразборчивый вход или несогласованный order.
    :raises GroupValidationError: Таблица не задаёт группу.
    """
    if hasattr(source, "read"):
        source = source.read()  # type: ignore[union-attr]
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    try:
        record = json.loads(source)  # type: ignore[arg-type]
    except json.JSONDecodeError as exc:
        raise CatalogFormatError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return group_from_record(record)


def group_from_record(record: object) -> Group:
    if isinstance(record, list):
        record = {"table": record}
    if not isinstance(record, dict) or "table" not in record:
        raise CatalogFormatError("record must be an object with a 'table' field")
    table = _as_table(record["table"])
    n = table.shape[0]
    if n > MAX_CATALOG_ORDER:
        raise CatalogFormatError(f"order {n} exceeds the catalog limit {MAX_CATALOG_ORDER}")
    declared = record.get("order")
    if declared is not None and declared != n:
        raise CatalogFormatError(f"declared order {declared} does not match {n}x{n} table")
    name = record.get("name")
    if name is not None and not isinstance(name, str):
        raise CatalogFormatError("'name' must be a string")
    return group_from_table(table, names=record.get("names"), descriptor=name)


def group_to_record(g: Group) -> dict:
    return {"name": g.label, "order": g.order, "table": g.table.tolist()}


# =========================
# Запросы
# =========================

def _check_index(g: Group, x: int) -> None:
    if not 0 <= x < g.order:
        raise IndexError(f"element index {x} is out of range 0..{g.order - 1}")


def element_order(g: Group, x: int) -> int:
    _check_index(g, x)
    return g.orders[x]


def omega(g: Group) -> OrderSpectrum:
    return OrderSpectrum(tuple(sorted(set(g.orders))))


def order_counts(g: Group) -> dict[int, int]:
    """Сколько элементов каждого порядка."""
    return dict(sorted(Counter(g.orders).items()))


def cyclic_subgroups(g: Group) -> tuple[CyclicSubgroup, ...]:
    """Одна запись на каждую различную <x>; генератор - наименьший индекс."""
    seen: dict[frozenset[int], CyclicSubgroup] = {}
    for x in range(g.order):
        members = frozenset(g.power_lists[x])
        if members not in seen:
            seen[members] = CyclicSubgroup(generator=x, members=members, order=len(members))
    return tuple(sorted(seen.values(), key=lambda c: (c.order, c.generator)))


def cyclic_subgroup_counts(g: Group) -> dict[int, int]:
    return dict(sorted(Counter(c.order for c in cyclic_subgroups(g)).items()))


def centralizer(g: Group, x: int) -> frozenset[int]:
    _check_index(g, x)
    return frozenset(np.flatnonzero(g.table[x, :] == g.table[:, x]).tolist())


def center(g: Group) -> frozenset[int]:
    t = g.table
    return frozenset(x for x in range(g.order) if np.array_equal(t[x, :], t[:, x]))


def totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient needs n >= 1, got {n}")
    return int(_sympy_totient(n))


def fingerprint(g: Group) -> tuple:
    """Порядок, ω, число элементов и циклических подгрупп каждого порядка."""
    return (
        g.order,
        omega(g).values,
        tuple(order_counts(g).items()),
        tuple(cyclic_subgroup_counts(g).items()),
    )
