import json
import logging

import pytest

from powerplanar.catalog import Budgets, default_catalog
from powerplanar.descriptors import build_group
from powerplanar.graphs import graph_from_named
from powerplanar.groups import ingest_cayley_table, make_cyclic
from powerplanar.surfaces import INCONCLUSIVE, Formula, is_toroidal
from powerplanar.verifier import (
    ALMOST_P_LIST,
    CLAIMS,
    COVERAGE,
    FAIL,
    PASS,
    REPORT_VERSION,
    Sweep,
    SubjectVerdict,
    TheoremReport,
    UnknownClaimError,
    certificate_record,
    check_block_additivity,
    get_claim,
    is_cyclic,
    member,
    order6_intersections_small,
    surface_claim,
    three_z6_configuration,
    verify,
)


@pytest.fixture(scope="module")
def small_sweep():
    return Sweep(tuple(default_catalog(8)), sweep_max_order=8)


# -------------------------
# Реестр утверждений
# -------------------------
def test_registry_has_twenty_claims():
    assert len(CLAIMS) == 20
    assert set(COVERAGE.values()) == set(CLAIMS)


def test_unknown_claim_lists_available_ids():
    with pytest.raises(UnknownClaimError) as info:
        get_claim("nope")
    assert "planar-P" in str(info.value)
    assert info.value.claim_id == "nope"


def test_verify_rejects_unknown_id_before_running(small_sweep):
    with pytest.raises(UnknownClaimError):
        verify(["planar-P", "nope"], small_sweep)


# -------------------------
# Вердикты и отчёты
# -------------------------
def test_fail_needs_witness():
    with pytest.raises(ValueError, match="witness"):
        SubjectVerdict("Z5", FAIL, {"reason": "x"})


def test_inconclusive_needs_budget():
    with pytest.raises(ValueError, match="budget"):
        SubjectVerdict("Z5", INCONCLUSIVE, {})


def test_report_text_and_json():
    report = TheoremReport(
        "toroidal-P",
        "statement",
        "3 catalog groups of order <= 8",
        (
            SubjectVerdict("Z5", PASS, {}),
            SubjectVerdict("Z2xZ6", INCONCLUSIVE, {"reason": "genus >= 1, budget exhausted", "stretch": True}, 100),
            SubjectVerdict("Z8", FAIL, {"reason": "genus 2", "witness": {"genus": 2}}),
        ),
    )
    assert report.counts == {PASS: 1, FAIL: 1, INCONCLUSIVE: 1}
    assert report.failed

    lines = report.to_text()
    assert lines[0] == "toroidal-P: 1 pass, 1 fail, 1 inconclusive"
    assert "  INCONCLUSIVE Z2xZ6 [stretch]: genus >= 1, budget exhausted (budget 100)" in lines
    assert "  FAIL Z8: genus 2" in lines
    assert not any("Z5" in line for line in lines)

    record = json.loads(report.to_json())
    assert record["v"] == REPORT_VERSION
    assert record["verdicts"][1]["budget"] == 100
    assert "budget" not in record["verdicts"][0]


def test_certificate_records():
    assert certificate_record(None) is None
    assert certificate_record(Formula("K5", 1)) == {"formula": "K5", "value": 1}
    with pytest.raises(TypeError):
        certificate_record(object())


# -------------------------
# Группы и списки теорем
# -------------------------
def test_member_by_descriptor_and_fingerprint(caplog):
    assert member(build_group("D10"), ALMOST_P_LIST)
    assert not member(make_cyclic(7), ALMOST_P_LIST)
    with caplog.at_level(logging.WARNING, logger="powerplanar"):
        assert member(build_group("Z2xZ3"), ALMOST_P_LIST)
    assert "fingerprint" in caplog.text


def test_unnamed_table_matched_by_fingerprint():
    table = [[(i + j) % 5 for j in range(5)] for i in range(5)]
    g = ingest_cayley_table(json.dumps(table))
    assert member(g, ALMOST_P_LIST)


def test_order6_configurations():
    z2z6 = build_group("Z2xZ6")
    assert not order6_intersections_small(z2z6)
    assert three_z6_configuration(z2z6)
    z6 = make_cyclic(6)
    assert order6_intersections_small(z6)
    assert not three_z6_configuration(z6)
    assert is_cyclic(build_group("Z2xZ3"))
    assert not is_cyclic(z2z6)


def test_sweep_universe_names_listed_extras(small_sweep):
    text = small_sweep.universe(("Z5", "D10"))
    assert text.startswith(f"{len(small_sweep.groups)} catalog groups of order <= 8")
    assert text.endswith("+ listed D10")
    labels = [g.label for g in small_sweep.with_listed(("D10",))]
    assert labels.count("D10") == 1


# -------------------------
# Утверждения на малом каталоге
# -------------------------
@pytest.mark.parametrize("claim_id", [
    "planar-P",
    "properplanar-equiv",
    "ring",
    "outerplanar",
    "maxplanar-P",
    "maxplanar-Pstar",
    "almost-P",
    "almost-Pstar",
    "1planar-P",
    "1planar-Pstar",
    "star-chromatic",
])
def test_catalog_claims_pass_on_small_sweep(small_sweep, claim_id):
    (report,) = verify([claim_id], small_sweep)
    assert report.claim == claim_id
    assert report.counts[FAIL] == 0, report.to_text()
    assert report.counts[PASS] > 0


@pytest.mark.parametrize("claim_id", ["k7-not-1planar", "fabrici-madaras"])
def test_fixture_claims_pass(small_sweep, claim_id):
    (report,) = verify([claim_id], small_sweep)
    assert report.counts == {PASS: len(report.verdicts), FAIL: 0, INCONCLUSIVE: 0}


def test_planar_claim_records_omega(small_sweep):
    (report,) = verify(["planar-P"], small_sweep)
    z8 = next(v for v in report.verdicts if v.subject == "Z8")
    assert z8.status == PASS
    assert z8.evidence["expected"] is False
    assert z8.evidence["omega"] == "{1,2,4,8}"


def test_reports_are_reproducible():
    claims = ["planar-P", "ring", "1planar-Pstar"]
    first = verify(claims, Sweep(tuple(default_catalog(8)), sweep_max_order=8))
    second = verify(claims, Sweep(tuple(default_catalog(8)), sweep_max_order=8))
    assert [r.to_json() for r in first] == [r.to_json() for r in second]


# -------------------------
# Аддитивность рода по блокам
# -------------------------
@pytest.mark.parametrize("name, expected", [("dot(K5,K5)", 2), ("union(K5,K3,3)", 2), ("dot(fig2gadget6,C4)", 1)])
def test_block_additivity_with_glued_embedding(name, expected):
    observed, evidence = check_block_additivity(graph_from_named(name), Budgets())
    assert observed is True
    assert evidence["genus"] == evidence["block_sum"] == expected
    assert evidence["glued_genus"] == expected


def test_surface_claim_checks_additivity_of_block_sums():
    sweep = Sweep(tuple(), sweep_max_order=1)
    report = surface_claim(sweep, "toroidal-Pstar", ("D14",), True, is_toroidal, Budgets().genus)
    (verdict,) = report.verdicts
    assert verdict.status == PASS
    # P*(D14) = K6 и семь изолированных вершин
    additivity = verdict.evidence["block_additivity"]
    assert additivity["observed"] is True
    assert additivity["genus"] == additivity["glued_genus"] == 1


# -------------------------
# Долгие переборы
# -------------------------
@pytest.mark.slow
@pytest.mark.parametrize("claim_id", [
    "toroidal-P", "toroidal-Pstar", "projective-P", "projective-Pstar", "blocks-additivity",
])
def test_surface_claims_small_sweep(small_sweep, claim_id):
    (report,) = verify([claim_id], small_sweep)
    assert report.counts[FAIL] == 0, report.to_text()


@pytest.mark.slow
def test_lemma_claim():
    sweep = Sweep(tuple(), sweep_max_order=1)
    (report,) = verify(["lemma-K9p3"], sweep)
    assert report.counts[FAIL] == 0


@pytest.mark.slow
def test_minimality_claim_is_stretch_when_inconclusive():
    sweep = Sweep(tuple(), Budgets(one_planar=10**4), sweep_max_order=1)
    (report,) = verify(["prop-K9p2"], sweep)
    (verdict,) = report.verdicts
    assert verdict.status != FAIL
    if verdict.status == INCONCLUSIVE:
        assert verdict.evidence["stretch"] is True
