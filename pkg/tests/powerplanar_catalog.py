import pytest

from powerplanar.catalog import (
    Budgets,
    build_order,
    default_catalog,
    default_descriptors,
    read_catalog,
    write_catalog,
)
from powerplanar.groups import CatalogFormatError, GroupValidationError, make_cyclic, make_dihedral


# -------------------------
# Бюджеты
# -------------------------
def test_budgets_defaults_and_lemma_budget():
    budgets = Budgets()
    assert budgets.one_planar == 10**6
    assert budgets.lemma_one_planar == 10**8


@pytest.mark.parametrize("field", ["genus", "crosscap", "one_planar", "cycles"])
def test_budgets_must_be_positive(field):
    with pytest.raises(ValueError, match=field):
        Budgets(**{field: 0})


# -------------------------
# Встроенный каталог
# -------------------------
def test_small_catalog_descriptors():
    descriptors = default_descriptors(8)
    for d in ("Z1", "Z8", "D4", "D8", "Q8", "Z2xZ4", "Z2xZ2xZ2"):
        assert d in descriptors
    # Z2 x Z3 совпадает с Z6
    assert "Z2xZ3" not in descriptors
    orders = [build_order(d) for d in descriptors]
    assert orders == sorted(orders)
    assert max(orders) == 8


def test_full_catalog_contains_theorem_groups():
    descriptors = default_descriptors()
    for d in ("QD16", "SD(3,4,2)", "SD(5,4,2)", "SD(7,3,2)", "SD(7,6,3)", "Z2xZ6", "Z2xZ2xQ8"):
        assert d in descriptors
    # SD(n, 2, n-1) - это диэдральная группа
    assert "SD(5,2,4)" not in descriptors
    # одна запись на подгруппу <t>
    assert "SD(7,6,5)" not in descriptors
    assert len(descriptors) == len(set(descriptors))


def test_build_order():
    assert build_order("Z2xQD16") == 32
    assert build_order("SD(7,6,3)") == 42
    assert build_order("Z2xZ2xD8") == 32


def test_default_catalog_builds_groups():
    groups = default_catalog(6)
    assert all(g.order <= 6 for g in groups)
    assert [g.label for g in groups][:3] == ["Z1", "Z2", "Z3"]


# -------------------------
# Файлы каталога
# -------------------------
def test_catalog_file_roundtrip():
    data = write_catalog([make_cyclic(5), make_dihedral(6)])
    assert data.count(b"\n") == 2
    groups = read_catalog(data)
    assert [g.label for g in groups] == ["Z5", "D6"]
    assert [g.order for g in groups] == [5, 6]


def test_catalog_skips_blank_lines():
    text = '\n{"name": "Z2", "table": [[0,1],[1,0]]}\n\n'
    assert [g.label for g in read_catalog(text)] == ["Z2"]


def test_empty_catalog():
    assert write_catalog([]) == b""
    assert read_catalog(b"") == []


def test_catalog_reports_line_number():
    text = '{"table": [[0]]}\n{"table": [[0,1],[1,0]\n'
    with pytest.raises(CatalogFormatError, match="line 2"):
        read_catalog(text)


def test_catalog_record_without_table():
    with pytest.raises(CatalogFormatError, match="line 1"):
        read_catalog('{"name": "Z2"}')


def test_catalog_invalid_group_table():
    with pytest.raises(GroupValidationError):
        read_catalog('{"table": [[0,1],[1,1]]}')
