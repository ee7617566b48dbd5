import json
import logging

import pytest

from powerplanar.catalog import write_catalog
from powerplanar.cli import RunConfig, build_parser, config_from_args, main
from powerplanar.groups import make_cyclic


def run(argv):
    out, err = [], []
    status = main(argv, output_func=out.append, error_func=err.append)
    return status, out, err


# -------------------------
# Конфигурация
# -------------------------
def test_run_config_validation():
    with pytest.raises(ValueError, match="format"):
        RunConfig("info", descriptor="Z6", fmt="xml")
    with pytest.raises(ValueError, match="exactly one"):
        RunConfig("analyze")
    with pytest.raises(ValueError, match="sweep-max-order"):
        RunConfig("verify", sweep_max_order=0)


def test_config_from_args_budgets():
    args = build_parser().parse_args(["verify", "planar-P", "--budget-1planar", "500", "--no-obstructions"])
    config = config_from_args(args)
    assert config.claims == ("planar-P",)
    assert config.budgets.one_planar == 500
    assert config.budgets.lemma_one_planar == 50_000
    assert not config.use_obstructions


def test_argparse_rejects_unknown_format():
    with pytest.raises(SystemExit):
        main(["info", "Z6", "--format", "dot"])


# -------------------------
# info
# -------------------------
def test_info_text(capsys):
    status = main(["info", "Z6"])
    captured = capsys.readouterr()
    assert status == 0
    lines = captured.out.splitlines()
    assert lines[0] == "Z6: order 6, omega {1,2,3,6}"
    assert "  order 6: 2 elements, 1 cyclic subgroups" in lines


def test_info_json():
    status, out, _ = run(["info", "SD(5,4,2)", "--format", "json"])
    assert status == 0
    record = json.loads(out[0])
    assert record["v"] == 1
    assert record["order"] == 20
    assert record["omega"] == [1, 2, 4, 5]


def test_info_parse_error_exit_code():
    status, out, err = run(["info", "Dx"])
    assert status == 2
    assert out == []
    assert "offset 1" in err[0]
    assert err[0].startswith("error: ")


def test_info_bad_family_parameter():
    status, _, err = run(["info", "SD(6,2,2)"])
    assert status == 2
    assert "gcd" in err[0]


# -------------------------
# analyze
# -------------------------
def test_analyze_named_k5():
    status, out, _ = run(["analyze", "K5", "--named", "--format", "json"])
    assert status == 0
    record = json.loads(out[0])
    results = record["results"]
    assert results["planar"] == "no"
    assert results["1-planar"] == "yes"
    assert results["almost planar"] == "yes"
    assert results["genus"] == "1"
    assert results["crosscap"] == "1"
    assert results["toroidal"] == "yes"
    assert results["projective"] == "yes"
    assert (results["chi"], results["chi_s"]) == (5, 5)
    assert record["certificates"]["planar"]["pattern"] == "K5"


def test_analyze_proper_power_graph_of_z6_text():
    status, out, _ = run(["analyze", "Z6", "--proper"])
    assert status == 0
    assert out[0] == "P*(Z6)  omega={1,2,3,6}"
    assert any(line.split() == ["planar", "yes"] for line in out)
    assert any(line.split() == ["chi_s", "4"] for line in out)


def test_analyze_proper_power_graph_of_z7():
    # P*(Z7) = K6
    status, out, _ = run(["analyze", "Z7", "--proper", "--format", "json"])
    assert status == 0
    results = json.loads(out[0])["results"]
    assert results["genus"] == "1"
    assert results["toroidal"] == "yes"
    assert results["projective"] == "yes"
    assert results["1-planar"] == "yes"


def test_analyze_output_is_reproducible():
    first = run(["analyze", "K5", "--named", "--format", "json"])
    second = run(["analyze", "K5", "--named", "--format", "json"])
    assert first == second


def test_analyze_needs_one_source(tmp_path):
    status, _, err = run(["analyze"])
    assert status == 2
    assert "exactly one" in err[0]


def test_analyze_catalog_file(tmp_path):
    path = tmp_path / "groups.jsonl"
    path.write_bytes(write_catalog([make_cyclic(4), make_cyclic(3)]))
    status, out, _ = run(["analyze", "--catalog", str(path), "--format", "json"])
    assert status == 0
    subjects = [json.loads(line)["subject"] for line in out]
    assert subjects == ["Z3", "Z4"]


def test_analyze_missing_catalog_file(tmp_path):
    status, _, err = run(["analyze", "--catalog", str(tmp_path / "none.jsonl")])
    assert status == 2
    assert err


def test_analyze_rejects_bad_budget():
    status, _, err = run(["analyze", "Z5", "--budget-genus", "0"])
    assert status == 2
    assert "budget genus" in err[0]


# -------------------------
# verify
# -------------------------
def test_verify_small_sweep_passes():
    status, out, _ = run(["verify", "planar-P", "maxplanar-P", "--sweep-max-order", "8"])
    assert status == 0
    headers = [line for line in out if not line.startswith(" ")]
    assert headers[0].startswith("planar-P: ")
    assert headers[0].endswith(" 0 fail, 0 inconclusive")
    assert headers[1].startswith("maxplanar-P: ")


def test_verify_json_lines(tmp_path):
    path = tmp_path / "report.jsonl"
    status, out, _ = run(["verify", "k7-not-1planar", "--sweep-max-order", "4", "--format", "json", "--out", str(path)])
    assert status == 0
    assert out == [f"written {path}"]
    record = json.loads(path.read_text(encoding="utf-8").splitlines()[0])
    assert record["claim"] == "k7-not-1planar"
    assert record["counts"]["pass"] == 1


def test_verify_unknown_claim():
    status, _, err = run(["verify", "planar-P", "no-such-claim"])
    assert status == 2
    assert "no-such-claim" in err[0]


def test_verify_inconclusive_warning():
    status, out, _ = run(["verify", "fabrici-madaras", "--sweep-max-order", "4", "--budget-1planar", "1"])
    assert status == 0
    assert out[-1].startswith("WARNING: ")
    assert any("INCONCLUSIVE K6" in line for line in out)


def test_verify_inconclusive_warning_is_logged_for_json(caplog):
    with caplog.at_level(logging.WARNING, logger="powerplanar"):
        status, out, _ = run(["verify", "fabrici-madaras", "--sweep-max-order", "4",
                              "--budget-1planar", "1", "--format", "json"])
    assert status == 0
    assert json.loads(out[0])["counts"]["inconclusive"] >= 1
    warnings = [r for r in caplog.records if r.levelno == logging.WARNING and "inconclusive" in r.getMessage()]
    assert warnings and warnings[0].name.startswith("powerplanar")


# -------------------------
# export
# -------------------------
def test_export_dot_to_stdout(capsys):
    assert main(["export", "Z4"]) == 0
    text = capsys.readouterr().out
    assert text.startswith("graph G {")
    assert text.count(" -- ") == 6


def test_export_json_file(tmp_path):
    path = tmp_path / "pstar.json"
    status, out, _ = run(["export", "Z6", "--proper", "--format", "json", "--out", str(path)])
    assert status == 0
    record = json.loads(path.read_text(encoding="utf-8"))
    assert len(record["vertices"]) == 5
    assert len(record["edges"]) == 8


def test_log_dir_receives_run_log(tmp_path):
    status, _, _ = run(["--log-dir", str(tmp_path), "info", "Z6"])
    assert status == 0
    logs = list(tmp_path.glob("run_*.log"))
    assert len(logs) == 1
    assert "command info" in logs[0].read_text(encoding="utf-8")
