"""Command line entry point.

    orliczlab audit <config>
    orliczlab bl <config>
    orliczlab conjugate <family> <params> <b>
    orliczlab norm <family> <params> <csv-file>

Exit codes: 0 success or expected outcome, 1 usage/config error,
2 audit failure, 3 unexpected verdict (including an unexpected Δ₂ verdict).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict, replace
from pathlib import Path
from typing import Optional, Sequence

from .config import ExperimentConfig, load_config
from .core import conjugate, from_params
from .errors import ConfigError, OrliczError
from .grid import luxemburg_norm, modular, read_csv
from .harness import BLReport, run
from .report import AuditSummary, run_audits

logger = logging.getLogger("orliczlab")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_AUDIT_FAILURE = 2
EXIT_UNEXPECTED = 3


def parse_params(text: str) -> dict:
    """``"p=2,scale=0.5"`` -> ``{"p": 2.0, "scale": 0.5}``; ``"-"`` or ``""`` -> ``{}``."""
    text = text.strip()
    if text in ("", "-"):
        return {}
    out = {}
    for item in text.split(","):
        key, sep, val = item.partition("=")
        if not sep:
            raise ConfigError(f"parameter {item!r} is not of the form key=value")
        try:
            out[key.strip()] = float(val)
        except ValueError:
            raise ConfigError(f"parameter {key.strip()!r} has non-numeric value {val!r}") from None
    return out


def _outputs(cfg: ExperimentConfig, out_dir: Optional[str], fmt: Optional[str]) -> tuple[Path, str]:
    directory = Path(out_dir if out_dir is not None else cfg.output.dir)
    directory.mkdir(parents=True, exist_ok=True)
    return directory, fmt or cfg.output.format


def cmd_audit(cfg: ExperimentConfig, out_dir: Optional[str] = None, fmt: Optional[str] = None) -> tuple[AuditSummary, int]:
    if cfg.audit is None:
        raise ConfigError("missing key 'audit'")
    G = cfg.orlicz()
    summary = run_audits(G, cfg.audit, cfg.audit_tolerances, cfg.seed)
    directory, fmt = _outputs(cfg, out_dir, fmt)
    # the summary is JSON regardless of --format
    (directory / f"{cfg.output.stem}.audit.json").write_text(summary.to_json())

    if summary.failures:
        code = EXIT_AUDIT_FAILURE
    elif summary.delta2_holds != (cfg.expect == "Delta2"):
        code = EXIT_UNEXPECTED
    else:
        code = EXIT_OK
    return summary, code


def cmd_brezis_lieb(cfg: ExperimentConfig, out_dir: Optional[str] = None, fmt: Optional[str] = None) -> tuple[BLReport, int]:
    if cfg.sequence is None:
        raise ConfigError("missing key 'sequence'")
    G = cfg.orlicz()
    report = run(cfg.sequence, G, cfg.eps_ladder, cfg.harness_tolerances)
    directory, fmt = _outputs(cfg, out_dir, fmt)
    if fmt in ("csv", "both"):
        (directory / f"{cfg.output.stem}.csv").write_text(report.to_csv())
    if fmt in ("json", "both"):
        (directory / f"{cfg.output.stem}.json").write_text(report.to_json())
    code = EXIT_OK if report.verdict == cfg.expect else EXIT_UNEXPECTED
    return report, code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orliczlab", description="Numerical Orlicz-space audits and Brezis-Lieb experiments")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out-dir", default=None, help="directory for report files (default: config output.dir)")
        p.add_argument("--format", choices=("csv", "json", "both"), default=None)
        p.add_argument("--seed", type=int, default=None, help="override the config seed")

    p = sub.add_parser("audit", help="run inequality audits for one Orlicz function")
    p.add_argument("config")
    common(p)
    p = sub.add_parser("bl", help="run the Brezis-Lieb harness")
    p.add_argument("config")
    common(p)
    p = sub.add_parser("conjugate", help="evaluate the complementary function G*(b)")
    p.add_argument("family")
    p.add_argument("params", help="comma separated key=value, or '-' for none")
    p.add_argument("b", type=float)
    p.add_argument("--tol", type=float, default=1e-10)
    p = sub.add_parser("norm", help="Luxemburg norm of a grid function stored as x,value CSV")
    p.add_argument("family")
    p.add_argument("params")
    p.add_argument("csv_file")
    p.add_argument("--tol", type=float, default=1e-10)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")

    try:
        if args.command in ("audit", "bl"):
            cfg = load_config(args.config)
            if args.seed is not None:
                if not 0 <= args.seed < 2**64:
                    raise ConfigError("'--seed' must be a 64-bit unsigned integer")
                cfg = replace(cfg, seed=args.seed)
            if args.command == "audit":
                summary, code = cmd_audit(cfg, args.out_dir, args.format)
                print(f"{summary.orlicz}: delta2_holds={summary.delta2_holds} "
                      f"K_est={summary.constants['K_est']:.12g} p_est={summary.constants['p_est']:.12g}")
                for a in summary.audits:
                    status = "PASS" if a.failures == 0 else "FAIL"
                    print(f"  {status} {a.name:<40s} checked={a.checked:<6d} failures={a.failures:<5d} worst_margin={a.margin:.3e}")
            else:
                report, code = cmd_brezis_lieb(cfg, args.out_dir, args.format)
                print(f"{report.orlicz} {report.spec['family']}: verdict={report.verdict} (expected {cfg.expect})")
                for r in report.rows:
                    print(f"  n={r.n:<6d} defect={r.defect:.3e} lux={r.lux_norm_un:.6f} aeconv={r.aeconv_sup:.3e}")
            return code
        G = from_params(args.family, parse_params(args.params))
        if args.command == "conjugate":
            res = conjugate(G, args.b, args.tol)
            print(json.dumps({"orlicz": G.name, "b": args.b, **asdict(res)}))
        else:
            u = read_csv(args.csv_file)
            norm = luxemburg_norm(G, u, args.tol)
            print(json.dumps({"orlicz": G.name, "cells": len(u), "modular": modular(G, u).value, "luxemburg_norm": norm}))
        return EXIT_OK
    except (ConfigError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OrliczError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
