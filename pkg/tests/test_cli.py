import csv
import io
import json
import math
import subprocess
import sys

import pytest

from isingnet.cli import main, parse_args, run

PHI_C = math.acosh(math.sqrt(2))


def run_capture(argv):
    cfg = parse_args(argv)
    out, err = io.StringIO(), io.StringIO()
    status = run(cfg, out, err)
    return status, out.getvalue(), err.getvalue()


def test_parse_spectrum_example():
    cfg = parse_args("spectrum --N 8 --phi 1.0 --theta ising --regime su11 --format csv".split())
    assert (cfg.command, cfg.N, cfg.phi, cfg.theta, cfg.output_format) == ("spectrum", 8, "1.0", "ising", "csv")


def test_parse_sweep_example():
    cfg = parse_args("sweep --phi-lo 0.3 --phi-hi 1.6 --steps 400 --fd-step 1e-5".split())
    assert (cfg.phi_lo, cfg.phi_hi, cfg.steps, cfg.fd_step) == (0.3, 1.6, 400, 1e-5)


@pytest.mark.parametrize(
    "argv, message",
    [
        ("spectrum --N 1", "N must be an integer >= 2"),
        ("spectrum --bogus 3", "unrecognized arguments"),
        ("spectrum --N", "expected one argument"),
        ("spectrum --theta ising --regime su2", "'ising' is only accepted"),
        ("propagate --N 4 --input superposition:n=4", "0 <= n < N"),
        ("propagate --N 4 --input mode:j=9", "1 <= j <= 2N"),
        ("propagate --input wave", "input must be"),
        ("sweep --phi-lo 1.0 --phi-hi 0.5", "0 < phi_lo < phi_hi"),
    ],
)
def test_parse_rejects(argv, message, capsys):
    with pytest.raises(SystemExit) as exc:
        parse_args(argv.split())
    assert exc.value.code == 2
    assert message in capsys.readouterr().err


def test_config_file_and_override(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"N": 5, "phi": "0.7", "format": "json"}))
    cfg = parse_args(["spectrum", "--config", str(path), "--N", "6"])
    assert (cfg.N, cfg.phi, cfg.output_format) == (6, "0.7", "json")
    path.write_text(json.dumps({"nodes": 5}))
    with pytest.raises(SystemExit):
        parse_args(["spectrum", "--config", str(path)])


def test_spectrum_csv():
    status, out, _ = run_capture("spectrum --N 4 --phi critical".split())
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["n", "re_gamma", "im_gamma", "abs_exp_gamma"]
    assert len(rows) == 4 and float(rows[0]["re_gamma"]) <= 1e-10


def test_critical_json():
    status, out, _ = run_capture("critical --regime su11".split())
    doc = json.loads(out)
    assert status == 0 and doc["schema"] == 1
    rec = doc["records"][0]
    assert rec["G_c"] == 2.0
    assert abs(rec["kTc_over_eps"] - 2.269) <= 1e-3


def test_propagate_transparency():
    status, out, _ = run_capture(
        "propagate --N 4 --M 16 --phi 0.8813736 --theta ising --input superposition:n=0".split()
    )
    assert status == 0
    rows = [r for r in csv.DictReader(io.StringIO(out)) if not r["mode"].startswith("#")]
    inten = [float(r["intensity"]) for r in rows]
    expected = [0.25, 0.0] * 4
    assert all(abs(a - b) <= 1e-6 for a, b in zip(inten, expected))


def test_sweep_reports_one_kink():
    status, out, _ = run_capture("sweep --phi-lo 0.3 --phi-hi 1.6 --steps 400 --fd-step 1e-5".split())
    assert status == 0
    lines = out.splitlines()
    summaries = [ln for ln in lines if ln.startswith("#")]
    assert len(summaries) == 1 and "detected=true" in summaries[0]
    fields = dict(kv.split("=") for kv in summaries[0][2:].split())
    assert abs(float(fields["kink_phi"]) - PHI_C) <= 2 * 1.3 / 399
    body = [ln for ln in lines if not ln.startswith("#")]
    assert body[0] == "phi,gamma0,dleft,dright,gain,gain_theta,regime"
    assert sum(1 for ln in body if ln.endswith(",critical")) == 1


def test_sweep_json_summary():
    status, out, _ = run_capture("sweep --steps 50 --format json".split())
    doc = json.loads(out)
    assert doc["summary"]["detected"] is True and len(doc["records"]) == 51


def test_regime_command():
    _, out, _ = run_capture("regime --phi 0.5".split())
    assert json.loads(out)["records"][0]["regime_label"] == "quantum"
    _, out, _ = run_capture("regime --regime su2 --phi 0.9 --format csv".split())
    assert out == "regime_label\nadiabatic\n"


def test_numerical_error_gives_nonzero_exit():
    status, out, err = run_capture("regime --theta 0.3 --phi 0.5".split())
    assert status == 1 and out == "" and "Ising constraint" in err


@pytest.mark.parametrize(
    "argv",
    [
        "spectrum --N 7 --phi 0.4 --format json",
        "sweep --steps 120",
        "propagate --N 5 --M 9 --phi 0.6 --input mode:j=3",
        "critical --regime su2 --format csv",
    ],
)
def test_deterministic_output(argv, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(argv.split() + ["--output", str(a)]) == 0
    assert main(argv.split() + ["--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "isingnet", "critical"], capture_output=True, text=True, check=True
    )
    assert json.loads(proc.stdout)["records"][0]["G_c"] == 2.0
    proc = subprocess.run([sys.executable, "-m", "isingnet", "spectrum", "--N", "1"], capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stdout == ""
