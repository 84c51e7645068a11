"""CLI and batch-runner tests: config parsing, determinism, parallelism
independence, report formats, precision backend, and exit codes."""

import csv
import json
import os

import pytest

from qident import cli
from qident.cli import (
    CaseConfig,
    _parse_param_option,
    _validate_config,
    exit_code,
    list_cases,
    load_configs,
    main,
    report_json,
    run,
    write_csv,
)
from qident.errors import ConfigError
from qident.identities import CASES, run_case, sample_params
from qident.policy import QPower


def _strip_timing(text):
    doc = json.loads(text)
    doc["meta"].pop("timestamp", None)
    return doc


# ---------------------------------------------------------------------------
# registry listing and samplers
# ---------------------------------------------------------------------------

def test_list_cases_complete():
    cases = list_cases()
    assert len(cases) == 17
    ids = [cid for cid, _, _ in cases]
    assert "3psi3delta1" in ids and "jackson8phi7" in ids
    for cid, desc, schema in cases:
        assert desc and schema


def test_sample_params_deterministic():
    assert sample_params("jackson8phi7", 7) == sample_params("jackson8phi7", 7)
    assert sample_params("jackson8phi7", 7) != sample_params("jackson8phi7", 8)


def test_sample_params_unknown_case():
    with pytest.raises(ConfigError):
        sample_params("nosuchcase", 0)


def test_sampled_6psi6_respects_convergence_gate():
    # the sampler must only emit draws inside the convergence region
    for seed in range(30):
        p = sample_params("bailey6psi6", seed)
        x = p["q"] * p["a"] ** 2 / (p["b"] * p["c"] * p["d"] * p["e"])
        assert abs(x) <= 0.5


# ---------------------------------------------------------------------------
# run() and determinism
# ---------------------------------------------------------------------------

def test_run_empty_config_list():
    rset = run([])
    assert rset.runs == []
    assert rset.summary == {"pass": 0, "fail": 0, "error": 0}
    assert exit_code(rset) == 0


def test_run_parallelism_invariance():
    configs = [CaseConfig(case_id=cid, seed=3, samples=2)
               for cid in ("jackson8phi7", "c1macdonald", "ramanujan1psi1",
                           "bilateralfinite", "flippedsummand")]
    r1 = run(configs, parallelism=1)
    r8 = run(configs, parallelism=8)
    assert _strip_timing(report_json(r1)) == _strip_timing(report_json(r8))


def test_run_invalid_parallelism():
    with pytest.raises(ConfigError):
        run([], parallelism=0)


# ---------------------------------------------------------------------------
# config parsing
# ---------------------------------------------------------------------------

def test_validate_config_errors():
    with pytest.raises(ConfigError):
        _validate_config({"case_id": "nosuchcase"})
    with pytest.raises(ConfigError):
        _validate_config({"case_id": "jackson8phi7", "bogus": 1})
    with pytest.raises(ConfigError):
        _validate_config({"case_id": "jackson8phi7", "tol": -1})
    with pytest.raises(ConfigError):
        _validate_config({"case_id": "jackson8phi7", "seed": -1})
    with pytest.raises(ConfigError):
        _validate_config({"case_id": "jackson8phi7", "samples": 0})
    with pytest.raises(ConfigError):
        _validate_config({"case_id": "jackson8phi7", "params": {"zz": 1}})


def test_validate_config_decodes_values():
    cfg = _validate_config({
        "case_id": "multijackson",
        "params": {"lam": "[2,1]", "a": [0.7, 0.1], "q": 0.3},
        "tol": 1e-8, "seed": 5, "samples": 2,
    })
    assert cfg.params["lam"] == (2, 1)
    assert cfg.params["a"] == complex(0.7, 0.1)
    assert cfg.params["q"] == 0.3
    assert cfg.tol == 1e-8 and cfg.seed == 5 and cfg.samples == 2


def test_load_configs_forms(tmp_path):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps([{"case_id": "c1macdonald", "samples": 2}]))
    assert len(load_configs(str(p))) == 1
    p.write_text(json.dumps({"cases": [{"case_id": "c1macdonald"},
                                       {"case_id": "jackson8phi7"}]}))
    assert len(load_configs(str(p))) == 2
    p.write_text("{not json")
    with pytest.raises(ConfigError):
        load_configs(str(p))
    with pytest.raises(ConfigError):
        load_configs(str(tmp_path / "missing.json"))
    p.write_text(json.dumps({"nothing": []}))
    with pytest.raises(ConfigError):
        load_configs(str(p))


def test_parse_param_option():
    name, val = _parse_param_option("jackson8phi7", "a=0.5")
    assert name == "a" and val == 0.5
    name, val = _parse_param_option("jackson8phi7", "a=[0.5, 0.1]")
    assert val == complex(0.5, 0.1)
    name, val = _parse_param_option("bailey6psi6", 'b={"qpow": -2}')
    assert val == QPower(-2)
    name, val = _parse_param_option("multijackson", "lam=[2,1]")
    assert val == (2, 1)
    with pytest.raises(ConfigError):
        _parse_param_option("jackson8phi7", "a")
    with pytest.raises(ConfigError):
        _parse_param_option("jackson8phi7", "zz=1")
    with pytest.raises(ConfigError):
        _parse_param_option("jackson8phi7", "a=not-json")


# ---------------------------------------------------------------------------
# main() end to end
# ---------------------------------------------------------------------------

def test_main_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    lines = [ln for ln in out.splitlines() if ln.strip()]
    assert len(lines) == 17


def test_main_run_case_with_out_and_csv(tmp_path):
    out_p, csv_p = tmp_path / "rep.json", tmp_path / "rep.csv"
    rc = main(["run", "--case", "c1macdonald", "--seed", "1", "--samples", "3",
               "--out", str(out_p), "--csv", str(csv_p)])
    assert rc == 0
    doc = json.loads(out_p.read_text())
    assert doc["summary"] == {"pass": 3, "fail": 0, "error": 0}
    assert len(doc["runs"]) == 3
    assert doc["runs"][0]["case_id"] == "c1macdonald"
    assert doc["runs"][1]["seed"] == 2  # base seed 1 + sample index 1
    assert "NaN" not in out_p.read_text()
    with open(csv_p, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 3
    assert all(r["status"] == "pass" for r in rows)


def test_main_run_param_override(tmp_path):
    out_p = tmp_path / "rep.json"
    rc = main(["run", "--case", "c1macdonald", "--param", "x=2.5",
               "--out", str(out_p)])
    assert rc == 0
    doc = json.loads(out_p.read_text())
    assert doc["runs"][0]["params"]["x"] == 2.5


def test_main_usage_errors(capsys):
    assert main(["run"]) == 2
    assert main(["run", "--case", "nosuchcase"]) == 2
    assert main(["run", "--config", "/nonexistent.json"]) == 2
    assert main(["run", "--config", "x.json", "--case", "c1macdonald"]) == 2
    capsys.readouterr()


def test_main_failing_tolerance_exits_1(tmp_path, capsys):
    # precondition: the case genuinely has a nonzero floating-point residual
    params = sample_params("jackson8phi7", 0)
    rep = run_case("jackson8phi7", params)
    assert rep.status == "pass" and rep.rel_residual > 0
    rc = main(["run", "--case", "jackson8phi7", "--seed", "0", "--samples", "1",
               "--tol", "1e-30", "--out", str(tmp_path / "r.json")])
    assert rc == 1
    capsys.readouterr()


def test_precision_high_backend(tmp_path, monkeypatch):
    monkeypatch.setenv("QIDENT_PRECISION", "high")
    out_p = tmp_path / "rep.json"
    rc = main(["run", "--case", "jackson8phi7", "--seed", "2", "--samples", "2",
               "--out", str(out_p)])
    assert rc == 0
    doc = json.loads(out_p.read_text())
    assert doc["meta"]["precision"] == "high"
    assert doc["summary"]["pass"] == 2


def test_precision_invalid_value(monkeypatch, capsys):
    monkeypatch.setenv("QIDENT_PRECISION", "quadruple")
    assert main(["run", "--case", "c1macdonald"]) == 2
    capsys.readouterr()
