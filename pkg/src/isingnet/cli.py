"""Command-line front end.

Subcommands ``spectrum``, ``sweep``, ``propagate``, ``critical`` and
``regime`` write CSV or JSON to standard output (or ``--output``). Options
may also come from a JSON file given with ``--config``; flags on the
command line take precedence over the file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import asdict, dataclass, fields

import numpy as np

from .algebra import Regime
from .errors import IsingNetError
from .network import NetworkSpec
from .propagate import j_form_value, output_intensities, propagate, single_mode_input, superposition_input
from .spectrum import PHI_C, PHI_PRIME_C, critical_point, gamma_all, locate_kink, regime_classify, sweep_gamma0

SCHEMA_VERSION = 1
COMMANDS = ("spectrum", "sweep", "propagate", "critical", "regime")
_INPUT_RE = re.compile(r"^(superposition:n=(?P<n>\d+)|mode:j=(?P<j>\d+))$")


@dataclass(frozen=True)
class RunConfig:
    command: str
    N: int = 8
    M: int = 1
    theta: str | None = None
    phi: str = "critical"
    regime: str = "su11"
    phi_lo: float = 0.3
    phi_hi: float = 1.6
    steps: int = 400
    fd_step: float = 1e-5
    input: str = "superposition:n=0"
    format: str | None = None
    output: str | None = None

    @property
    def output_format(self) -> str:
        if self.format is not None:
            return self.format
        return "json" if self.command in ("critical", "regime") else "csv"


_FIELDS = {f.name for f in fields(RunConfig)} - {"command"}


def _parse_angle(token, regime: Regime, allow_ising: bool) -> float | None:
    tok = str(token).strip().lower()
    if tok == "critical":
        return PHI_C if regime is Regime.SU11 else PHI_PRIME_C
    if tok == "ising":
        if not allow_ising:
            raise ValueError("'ising' is only accepted for theta in the su11 regime")
        return None
    value = float(tok)
    if not math.isfinite(value):
        raise ValueError(f"angle must be finite, got {token!r}")
    return value


def build_spec(cfg: RunConfig) -> NetworkSpec:
    regime = Regime(cfg.regime)
    theta_tok = cfg.theta if cfg.theta is not None else ("ising" if regime is Regime.SU11 else "critical")
    phi = _parse_angle(cfg.phi, regime, allow_ising=False)
    theta = _parse_angle(theta_tok, regime, allow_ising=regime is Regime.SU11)
    if regime is Regime.SU2:
        return NetworkSpec.su2(cfg.N, phi, theta, M=cfg.M)
    if theta is None:
        return NetworkSpec.ising(cfg.N, phi, M=cfg.M)
    return NetworkSpec.su11(cfg.N, theta, phi, M=cfg.M)


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isingnet", description="Ising-analogue quantum network simulator")
    sub = parser.add_subparsers(dest="command", required=True)
    S = argparse.SUPPRESS
    for name in COMMANDS:
        p = sub.add_parser(name, argument_default=S)
        p.add_argument("--config", help="JSON file with option values")
        p.add_argument("--format", choices=("csv", "json"))
        p.add_argument("--output", help="output path (default: standard output)")
        p.add_argument("--regime", choices=("su11", "su2"))
        if name in ("spectrum", "propagate", "regime"):
            p.add_argument("--N", type=int, help="node pairs per column (2N modes)")
            p.add_argument("--M", type=int, help="number of periods")
            p.add_argument("--theta", help="decimal angle, 'ising' or 'critical'")
            p.add_argument("--phi", help="decimal angle or 'critical'")
        if name == "propagate":
            p.add_argument("--input", help="'superposition:n=K' or 'mode:j=J'")
        if name == "sweep":
            p.add_argument("--phi-lo", dest="phi_lo", type=float)
            p.add_argument("--phi-hi", dest="phi_hi", type=float)
            p.add_argument("--steps", type=int)
            p.add_argument("--fd-step", dest="fd_step", type=float)
    return parser


def parse_args(argv=None) -> RunConfig:
    """Parse and validate command-line arguments; exits with status 2 on error."""
    parser = _make_parser()
    ns = vars(parser.parse_args(argv))
    values = {}
    path = ns.pop("config", None)
    if path is not None:
        try:
            with open(path) as fh:
                loaded = json.load(fh)
        except (OSError, ValueError) as exc:
            parser.error(f"cannot read config {path}: {exc}")
        if not isinstance(loaded, dict):
            parser.error("config file must hold a JSON object")
        unknown = set(loaded) - _FIELDS
        if unknown:
            parser.error(f"unknown config fields: {', '.join(sorted(unknown))}")
        values.update(loaded)
    values.update(ns)
    try:
        cfg = RunConfig(**values)
        _validate(cfg)
    except (TypeError, ValueError) as exc:
        parser.error(str(exc))
    return cfg


def _validate(cfg: RunConfig) -> None:
    if cfg.regime not in ("su11", "su2"):
        raise ValueError(f"regime must be su11 or su2, got {cfg.regime!r}")
    if cfg.format not in (None, "csv", "json"):
        raise ValueError(f"format must be csv or json, got {cfg.format!r}")
    if cfg.command in ("spectrum", "propagate", "regime"):
        if int(cfg.N) != cfg.N or cfg.N < 2:
            raise ValueError(f"N must be an integer >= 2, got {cfg.N}")
        if int(cfg.M) != cfg.M or cfg.M < 0:
            raise ValueError(f"M must be a non-negative integer, got {cfg.M}")
        build_spec(cfg)
    if cfg.command == "propagate":
        m = _INPUT_RE.match(cfg.input)
        if m is None:
            raise ValueError(f"input must be 'superposition:n=K' or 'mode:j=J', got {cfg.input!r}")
        if m["n"] is not None and not int(m["n"]) < cfg.N:
            raise ValueError(f"superposition index must satisfy 0 <= n < N = {cfg.N}")
        if m["j"] is not None and not 1 <= int(m["j"]) <= 2 * cfg.N:
            raise ValueError(f"mode index must satisfy 1 <= j <= 2N = {2 * cfg.N}")
    if cfg.command == "sweep":
        if not 0 < cfg.phi_lo < cfg.phi_hi:
            raise ValueError("sweep needs 0 < phi_lo < phi_hi")
        if cfg.steps < 2:
            raise ValueError("steps must be >= 2")
        if not cfg.fd_step > 0:
            raise ValueError("fd_step must be positive")


def _spectrum(cfg):
    spec = build_spec(cfg)
    rows = [
        {"n": n, "re_gamma": g.real, "im_gamma": g.imag, "abs_exp_gamma": math.exp(g.real)}
        for n, g in enumerate(complex(x) for x in gamma_all(spec))
    ]
    return rows, None


def _sweep(cfg):
    rows = sweep_gamma0(cfg.phi_lo, cfg.phi_hi, cfg.steps, cfg.fd_step, cfg.regime)
    kink = locate_kink(rows)
    records = [
        {
            "phi": r.phi,
            "gamma0": r.gamma0,
            "dleft": r.dleft,
            "dright": r.dright,
            "gain": r.gain,
            "gain_theta": r.gain_theta,
            "regime": r.regime_label,
        }
        for r in rows
    ]
    summary = {
        "kink_phi": kink.phi,
        "jump": kink.jump,
        "background": kink.background,
        "detected": kink.detected,
    }
    return records, summary


def _propagate(cfg):
    spec = build_spec(cfg)
    m = _INPUT_RE.match(cfg.input)
    if m["n"] is not None:
        state = superposition_input(spec.N, int(m["n"]))
    else:
        state = single_mode_input(spec.N, int(m["j"]))
    out = propagate(state, spec)
    inten = output_intensities(out)
    records = [
        {"mode": k + 1, "re": float(z.real), "im": float(z.imag), "intensity": float(i)}
        for k, (z, i) in enumerate(zip(out, inten))
    ]
    summary = {"norm_sq": float(inten.sum()), "j_form": j_form_value(out)}
    return records, summary


def _critical(cfg):
    return [critical_point(cfg.regime).as_dict()], None


def _regime(cfg):
    return [{"regime_label": regime_classify(build_spec(cfg))}], None


_HANDLERS = {
    "spectrum": _spectrum,
    "sweep": _sweep,
    "propagate": _propagate,
    "critical": _critical,
    "regime": _regime,
}


def _fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _render(cfg: RunConfig, records, summary) -> str:
    if cfg.output_format == "json":
        config = {k: v for k, v in asdict(cfg).items() if k != "output"}
        doc = {"schema": SCHEMA_VERSION, "command": cfg.command, "config": config, "records": records}
        if summary is not None:
            doc["summary"] = summary
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(records[0]))
    for rec in records:
        writer.writerow([_fmt(v) for v in rec.values()])
    if summary is not None:
        buf.write("# " + " ".join(f"{k}={_fmt(v)}" for k, v in summary.items()) + "\n")
    return buf.getvalue()


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    """Execute ``cfg`` and write its output; returns the process exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        records, summary = _HANDLERS[cfg.command](cfg)
        text = _render(cfg, records, summary)
    except IsingNetError as exc:
        print(f"isingnet: error: {exc}", file=stderr)
        return 1
    if cfg.output is None:
        stdout.write(text)
    else:
        with open(cfg.output, "w", newline="") as fh:
            fh.write(text)
    return 0


def main(argv=None) -> int:
    try:
        cfg = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
