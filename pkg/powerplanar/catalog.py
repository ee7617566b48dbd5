"""
Каталог групп: встроенные семейства и файлы JSON Lines (одна таблица Кэли на строку).
"""
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import gcd
from typing import BinaryIO, Iterable

import json
import logging

from powerplanar.descriptors import build_group
from powerplanar.groups import CatalogFormatError, Group, group_from_record, group_to_record

log = logging.getLogger(__name__)

SWEEP_MAX_ORDER = 32
SEMIDIRECT_MAX_ORDER = 48
PRODUCT_MAX_ORDER = 32

# произведения трёх и более множителей, которых нет среди попарных
ITERATED_PRODUCTS = (
    "Z2xZ2xZ2",
    "Z2xZ2xZ2xZ2",
    "Z2xZ2xZ2xZ2xZ2",
    "Z2xZ2xZ4",
    "Z2xZ2xD8",
    "Z2xZ2xQ8",
)


@dataclass(frozen=True)
class Budgets:
    """Лимиты узлов перебора для одной операции."""
    genus: int = 10**7
    crosscap: int = 10**7
    one_planar: int = 10**6
    cycles: int = 10**6

    def __post_init__(self) -> None:
        for name in ("genus", "crosscap", "one_planar", "cycles"):
            value = getattr(self, name)
            if value <= 0:
                raise ValueError(f"budget {name} must be positive, got {value}")

    @property
    def lemma_one_planar(self) -> int:
        """Перебор для графа K9mK6p3 получает в 100 раз больше узлов."""
        return self.one_planar * 100


# =========================
# Встроенные семейства
# =========================

def _semidirect_descriptors(max_order: int) -> list[str]:
    """
    SD(n, m, t) с нетривиальным действием. Пары t с одинаковой подгруппой <t>
    в Z_n^* дают изоморфные группы, оставляем наименьшее t; SD(n, 2, n-1) - это D_2n.
    """
    result = []
    for n in range(3, max_order // 2 + 1):
        for m in range(2, max_order // n + 1):
            seen: set[frozenset[int]] = set()
            for t in range(2, n):
                if gcd(t, n) != 1 or pow(t, m, n) != 1:
                    continue
                if m == 2 and t == n - 1:
                    continue
                generated = frozenset(pow(t, h, n) for h in range(m))
                if generated in seen:
                    continue
                seen.add(generated)
                result.append(f"SD({n},{m},{t})")
    return result


def _atoms(max_order: int) -> list[str]:
    atoms = [f"Z{n}" for n in range(1, max_order + 1)]
    atoms += [f"D{n}" for n in range(4, max_order + 1, 2)]
    atoms += [f"Q{n}" for n in range(8, max_order + 1, 4)]
    if max_order >= 16:
        atoms.append("QD16")
    return atoms


def _atom_order(descriptor: str) -> int:
    if descriptor == "QD16":
        return 16
    if descriptor.startswith("SD("):
        n, m, _ = descriptor[3:-1].split(",")
        return int(n) * int(m)
    return int(descriptor[1:])


def default_descriptors(max_order: int = SWEEP_MAX_ORDER) -> list[str]:
    """
    Z_n, D_2k, Q_4k, QD16 до max_order; SD(n,m,t) до порядка 48 (в малых каталогах
    до max_order); попарные произведения до порядка 32 и несколько кратных.
    """
    sd_limit = SEMIDIRECT_MAX_ORDER if max_order >= SWEEP_MAX_ORDER else max_order
    atoms = _atoms(max_order)
    semidirect = _semidirect_descriptors(sd_limit)

    factors = [a for a in atoms + semidirect if 2 <= _atom_order(a) <= PRODUCT_MAX_ORDER // 2]
    products = []
    for a, b in combinations_with_replacement(factors, 2):
        order = _atom_order(a) * _atom_order(b)
        if order > min(PRODUCT_MAX_ORDER, max_order):
            continue
        # Z_m x Z_n при взаимно простых m, n - это Z_mn
        if a[0] == "Z" and b[0] == "Z" and gcd(_atom_order(a), _atom_order(b)) == 1:
            continue
        products.append(f"{a}x{b}")

    extra = [d for d in ITERATED_PRODUCTS if build_order(d) <= max_order]
    descriptors = atoms + semidirect + products + extra
    return sorted(dict.fromkeys(descriptors), key=lambda d: (build_order(d), d))


def build_order(descriptor: str) -> int:
    order = 1
    for atom in descriptor.split("x"):
        order *= _atom_order(atom)
    return order


def default_catalog(max_order: int = SWEEP_MAX_ORDER) -> list[Group]:
    groups = [build_group(d) for d in default_descriptors(max_order)]
    log.info("built-in catalog: %d groups up to order %d", len(groups), max(g.order for g in groups))
    return groups


# =========================
# Файлы каталога
# =========================

def read_catalog(source: BinaryIO | bytes | str) -> list[Group]:
    """
    Одна JSON-запись {"name", "order", "table"} на строку, пустые строки пропускаются.

    :raises CatalogFormatError: Ошибка разбора с номером строки.
    :raises GroupValidationError: Таблица не задаёт группу.
    """
    if hasattr(source, "read"):
        source = source.read()  # type: ignore[union-attr]
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    groups = []
    for lineno, line in enumerate(source.splitlines(), start=1):  # type: ignore[union-attr]
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CatalogFormatError(f"line {lineno}: malformed JSON: {exc.msg}") from exc
        try:
            groups.append(group_from_record(record))
        except CatalogFormatError as exc:
            raise CatalogFormatError(f"line {lineno}: {exc}") from exc
    log.info("read %d groups from catalog", len(groups))
    return groups


def write_catalog(groups: Iterable[Group]) -> bytes:
    lines = [json.dumps(group_to_record(g), separators=(",", ":")) for g in groups]
    return ("\n".join(lines) + "\n").encode("utf-8") if lines else b""
