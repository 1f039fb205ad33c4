import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

import orliczlab
from orliczlab.cli import main, parse_params
from orliczlab.config import load_config, parse_config
from orliczlab.errors import ConfigError
from orliczlab.grid import Domain1D, GridFunction, write_csv
from orliczlab.harness import BLReport

CONFIGS = Path(orliczlab.__file__).parent / "configs"


def _doc(name):
    return json.loads((CONFIGS / name).read_text())


def _write(tmp_path, doc, name="cfg.cfg"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_parse_params():
    assert parse_params("p=2,scale=0.5") == {"p": 2.0, "scale": 0.5}
    assert parse_params("-") == {}
    with pytest.raises(ConfigError):
        parse_params("p2")
    with pytest.raises(ConfigError):
        parse_params("p=two")


@pytest.mark.parametrize("name", sorted(p.name for p in CONFIGS.glob("*.cfg")))
def test_bundled_configs_parse(name):
    cfg = load_config(CONFIGS / name)
    assert cfg.seed == 20261015
    assert cfg.expect is not None


def test_audit_exit_ok(tmp_path, capsys):
    assert main(["audit", str(CONFIGS / "audit_power2.cfg"), "--out-dir", str(tmp_path)]) == 0
    summary = json.loads((tmp_path / "audit_power2.audit.json").read_text())
    assert summary["total_failures"] == 0
    assert summary["constants"]["K_est"] == pytest.approx(4.0, rel=1e-12)
    assert "PASS young" in capsys.readouterr().out


def test_audit_failure_exit_2(tmp_path):
    doc = _doc("audit_power2.cfg")
    doc["tolerances"]["conjugate_relative"] = 1e-30
    assert main(["audit", _write(tmp_path, doc), "--out-dir", str(tmp_path)]) == 2


def test_audit_unexpected_delta2_verdict_exit_3(tmp_path):
    doc = _doc("audit_expminus.cfg")
    doc["expect"] = "Delta2"
    assert main(["audit", _write(tmp_path, doc), "--out-dir", str(tmp_path)]) == 3


def test_expminus_expected_non_delta2(tmp_path):
    assert main(["audit", str(CONFIGS / "audit_expminus.cfg"), "--out-dir", str(tmp_path)]) == 0
    summary = json.loads((tmp_path / "audit_expminus.audit.json").read_text())
    assert summary["constants"]["delta2_holds"] is False
    assert summary["constants"]["K_growth"] >= 10.0


def test_missing_orlicz_exit_1(tmp_path, capsys):
    doc = _doc("translation_p3.cfg")
    del doc["orlicz"]
    assert main(["bl", _write(tmp_path, doc)]) == 1
    assert "orlicz" in capsys.readouterr().err


def test_unknown_key_is_named(tmp_path, capsys):
    doc = _doc("translation_p3.cfg")
    doc["sequence"]["speed"] = 3
    assert main(["bl", _write(tmp_path, doc)]) == 1
    assert "sequence.speed" in capsys.readouterr().err


def test_missing_tolerance_is_named():
    doc = _doc("translation_p3.cfg")
    del doc["tolerances"]["aeconv"]
    with pytest.raises(ConfigError, match="tolerances.aeconv"):
        parse_config(doc)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(seed=-1),
        lambda d: d.update(seed=2**64),
        lambda d: d.update(expect="Maybe"),
        lambda d: d.update(eps_ladder=[1.5]),
        lambda d: d["sequence"].update(family="spiral"),
        lambda d: d["orlicz"].update(family="gaussian"),
        lambda d: d["output"].update(format="xml"),
    ],
)
def test_invalid_configs(mutate):
    doc = _doc("translation_p3.cfg")
    mutate(doc)
    with pytest.raises(ConfigError):
        parse_config(doc)


def test_bad_json_and_missing_file(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("{not json")
    assert main(["bl", str(bad)]) == 1
    assert main(["bl", str(tmp_path / "nope.cfg")]) == 1
    assert main(["frobnicate"]) == 1


def test_bl_translation_outputs(tmp_path):
    assert main(["bl", str(CONFIGS / "translation_p3.cfg"), "--out-dir", str(tmp_path)]) == 0
    rep = BLReport.from_json((tmp_path / "translation_p3.json").read_text())
    assert rep.verdict == "ConvergenceObserved"
    lines = (tmp_path / "translation_p3.csv").read_text().splitlines()
    col = lines[0].split(",").index("defect")
    assert all(float(l.split(",")[col]) <= 1e-12 for l in lines[1:])


def test_bl_violator_expected(tmp_path):
    assert main(["bl", str(CONFIGS / "violator.cfg"), "--out-dir", str(tmp_path)]) == 0


def test_bl_unexpected_verdict_exit_3(tmp_path):
    doc = _doc("violator.cfg")
    doc["expect"] = "ConvergenceObserved"
    assert main(["bl", _write(tmp_path, doc), "--out-dir", str(tmp_path)]) == 3


def test_format_override(tmp_path):
    assert main(["bl", str(CONFIGS / "translation_p3.cfg"), "--out-dir", str(tmp_path), "--format", "csv"]) == 0
    assert (tmp_path / "translation_p3.csv").exists()
    assert not (tmp_path / "translation_p3.json").exists()


def test_seed_override_changes_audit_samples(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    cfg = str(CONFIGS / "audit_power3.cfg")
    assert main(["audit", cfg, "--out-dir", str(a)]) == 0
    assert main(["audit", cfg, "--out-dir", str(b), "--seed", "7"]) == 0
    assert (a / "audit_power3.audit.json").read_text() != (b / "audit_power3.audit.json").read_text()
    assert main(["audit", cfg, "--seed", "-3"]) == 1


@pytest.mark.parametrize("cmd,name", [("audit", "audit_powerlog2.cfg"), ("bl", "plateau_p2.cfg")])
def test_repeat_runs_byte_identical(tmp_path, cmd, name):
    outs = []
    for sub in ("one", "two"):
        d = tmp_path / sub
        assert main([cmd, str(CONFIGS / name), "--out-dir", str(d)]) == 0
        outs.append({p.name: p.read_bytes() for p in sorted(d.iterdir())})
    assert outs[0] == outs[1] and outs[0]


def test_conjugate_command(capsys):
    assert main(["conjugate", "power", "p=2,scale=0.5", "3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["value"] == pytest.approx(4.5, rel=1e-12)
    assert main(["conjugate", "expminus", "-", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["value"] == pytest.approx(2 * np.log(2) - 1, rel=1e-10)
    assert main(["conjugate", "power", "p=0.5", "1"]) == 1


def test_norm_command(tmp_path, capsys):
    d = Domain1D(0.0, 1.0, 4096)
    path = tmp_path / "u.csv"
    write_csv(GridFunction(d, np.full(4096, 2.0)), path)
    assert main(["norm", "power", "p=2", str(path)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["luxemburg_norm"] == pytest.approx(2.0, rel=1e-9)
    assert out["modular"] == pytest.approx(4.0, rel=1e-12)
    assert main(["norm", "power", "p=2", str(tmp_path / "missing.csv")]) == 1


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "orliczlab", "conjugate", "power", "p=3", "2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0, proc.stderr
    # sup(2t - t³) at t = sqrt(2/3)
    assert json.loads(proc.stdout)["value"] == pytest.approx(2 * (2 / 3) ** 1.5, rel=1e-10)
