import json
import math
import re

import pytest

from focklab.cli import run


def _strip_timestamp(text: str) -> str:
    return re.sub(r'"timestamp": "[^"]*"', '"timestamp": null', text)


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# value subcommands
# ---------------------------------------------------------------------------

def test_norm_of_constant(capsys):
    code, out, _ = _run(capsys, "norm", "--f", "poly: 1", "--p", "2", "--alpha", "1", "--n", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["values"][0]["value"] == pytest.approx(1.0, rel=1e-9)
    assert doc["config"]["f"] == "poly: 1"


def test_norm_inf_route(capsys):
    code, out, _ = _run(capsys, "norm", "--f", "poly: z1", "--p", "inf")
    assert code == 0
    doc = json.loads(out)
    assert doc["values"][0]["value"] == pytest.approx(math.exp(-0.5), rel=1e-8)


def test_supnorm_kernel(capsys):
    code, out, _ = _run(capsys, "supnorm", "--f", "kernel: alpha=1; w=(1)", "--alpha", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["values"][0]["value"] == pytest.approx(math.exp(0.5), rel=1e-8)


def test_distance_both_integrators(capsys):
    code, out, _ = _run(
        capsys, "distance", "--z", "(2)", "--w", "(0)", "--alpha", "1",
        "--integrator", "both", "--samples", "20000",
    )
    assert code == 0
    doc = json.loads(out)
    values = {v["name"]: v for v in doc["values"]}
    assert "distance[quad]" in values and "distance[mc]" in values
    q = values["distance[quad]"]["value"]
    m = values["distance[mc]"]["value"]
    assert abs(q - m) <= max(4 * values["distance[mc]"]["stderr"], 1e-3 * q)


def test_energy_and_coordinate_variant(capsys):
    code, out, _ = _run(capsys, "energy", "--z", "(0)", "--alpha", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["values"][0]["value"] == pytest.approx(0.5 * math.sqrt(math.pi), rel=1e-8)
    code, out, _ = _run(capsys, "energy", "--z", "(3, 0)", "--alpha", "1", "--n", "2", "--k", "1")
    assert code == 0


def test_project_reproduces(capsys):
    code, out, _ = _run(capsys, "project", "--f", "poly: z1^2", "--z", "(1+0.5i)")
    assert code == 0
    doc = json.loads(out)
    resid = [v for v in doc["values"] if v["name"].startswith("reproduction")][0]
    assert resid["value"] <= 1e-8


def test_gamma_value(capsys):
    code, out, _ = _run(capsys, "gamma", "--n", "1", "--x", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["values"][0]["value"] == pytest.approx(0.367879441, rel=1e-8)


def test_family_listing(capsys):
    code, out, _ = _run(capsys, "family", "--alpha", "1", "--n", "1")
    assert code == 0
    doc = json.loads(out)
    names = {v["name"] for v in doc["values"]}
    assert "witness" in names and "kernel" in names
    assert all("dsl" in v for v in doc["values"])


# ---------------------------------------------------------------------------
# verify / explore
# ---------------------------------------------------------------------------

def test_verify_lemma4_exit_zero(capsys):
    code, out, _ = _run(capsys, "verify", "lemma4", "--alpha", "2", "--n", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "pass"
    assert all(c["pass"] for c in doc["checks"])


def test_verify_unknown_suite_usage_error(capsys):
    code, _, err = _run(capsys, "verify", "nonsense")
    assert code == 2
    assert "unknown suite" in err


def test_explore_aliases(capsys):
    code, out, _ = _run(capsys, "explore", "13")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "evidence-only"


def test_csv_format(capsys, tmp_path):
    out_path = tmp_path / "report.csv"
    code, out, _ = _run(
        capsys, "verify", "lemma4", "--alpha", "1", "--format", "csv",
        "--out", str(out_path),
    )
    assert code == 0
    text = out_path.read_text()
    lines = text.strip().splitlines()
    assert lines[0].startswith("#")  # config echo
    assert lines[1].split(",")[:3] == ["suite", "check", "lhs"]
    assert len(lines) >= 10


# ---------------------------------------------------------------------------
# reproducibility and config plumbing
# ---------------------------------------------------------------------------

def test_report_byte_identical_modulo_timestamp(capsys, tmp_path):
    p1 = tmp_path / "a.json"
    args = ["verify", "lemma1", "--alpha", "1", "--triples", "8",
            "--samples", "5000", "--seed", "42", "--out", str(p1)]
    assert run(list(args)) == 0
    first = p1.read_text()
    assert run(list(args)) == 0
    second = p1.read_text()
    capsys.readouterr()
    assert first != ""
    assert _strip_timestamp(first) == _strip_timestamp(second)


def test_env_seed_override(capsys, monkeypatch):
    monkeypatch.setenv("FOCKLAB_SEED", "777")
    code, out, _ = _run(capsys, "verify", "lemma4", "--seed", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["seed"] == 777


def test_config_file_defaults(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("alpha=2.0\nsamples=5000\n")
    code, out, _ = _run(capsys, "verify", "lemma4", "--config", str(cfg))
    assert code == 0
    doc = json.loads(out)
    assert doc["params"]["alpha"] == 2.0
    # explicit flags beat the config file
    code, out, _ = _run(capsys, "verify", "lemma4", "--config", str(cfg), "--alpha", "1")
    doc = json.loads(out)
    assert doc["params"]["alpha"] == 1.0


def test_malformed_dsl_exit_two(capsys):
    code, _, err = _run(capsys, "norm", "--f", "poly: 1 + * z1")
    assert code == 2
    assert "position" in err


def test_bad_point_exit_two(capsys):
    code, _, err = _run(capsys, "distance", "--z", "(1+2j)", "--w", "(0)")
    assert code == 2


def test_atomic_write_creates_file(capsys, tmp_path):
    out_path = tmp_path / "sub" / "r.json"
    out_path.parent.mkdir()
    code, _, _ = _run(capsys, "gamma", "--n", "2", "--x", "1", "--out", str(out_path))
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["values"][0]["value"] == pytest.approx(2 * math.exp(-1), rel=1e-10)
