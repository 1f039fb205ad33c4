"""Experiment configs: JSON documents with a closed set of keys.

Committed configs carry every tolerance explicitly; there are no defaults
for the ``tolerances`` section.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from .core import LogGrid, OrliczFunction, from_params
from .errors import ConfigError, OrliczError
from .grid import Domain1D
from .harness import HarnessTolerances, Profile, SequenceSpec, Verdict

__all__ = [
    "AuditSettings",
    "AuditTolerances",
    "OutputSettings",
    "ExperimentConfig",
    "load_config",
    "parse_config",
]

TOP_KEYS = {"orlicz", "domain", "sequence", "eps_ladder", "tolerances", "audit", "output", "expect", "seed"}
AUDIT_EXPECT = ("Delta2", "NonDelta2")


def _section(d: Any, where: str, allowed: set, required: set = frozenset()) -> dict:
    if not isinstance(d, dict):
        raise ConfigError(f"{where}: expected an object, got {type(d).__name__}")
    for k in d:
        if k not in allowed:
            raise ConfigError(f"unknown key '{where}.{k}'" if where else f"unknown key '{k}'")
    for k in sorted(required):
        if k not in d:
            raise ConfigError(f"missing key '{where}.{k}'" if where else f"missing key '{k}'")
    return d


def _number(d: dict, key: str, where: str) -> float:
    v = d[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f"'{where}.{key}' must be a number, got {v!r}")
    return float(v)


@dataclass(frozen=True)
class AuditTolerances:
    margin: float
    young_equality: float
    conjugate_relative: float
    conjugation: float
    cross_check: float
    biconjugation: float

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class AuditSettings:
    samples: int
    low: float
    high: float
    eps: tuple[float, ...]
    t_grid: tuple[float, float, int]
    scan_grid: LogGrid

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "range": [self.low, self.high],
            "eps": list(self.eps),
            "t_grid": {"low": self.t_grid[0], "high": self.t_grid[1], "points": self.t_grid[2]},
            "scan_grid": {"low": self.scan_grid.low, "high": self.scan_grid.high, "per_decade": self.scan_grid.per_decade},
        }


@dataclass(frozen=True)
class OutputSettings:
    stem: str = "report"
    dir: str = "."
    format: str = "both"


@dataclass(frozen=True)
class ExperimentConfig:
    orlicz_family: str
    orlicz_params: dict
    sequence: Optional[SequenceSpec] = None
    eps_ladder: tuple[float, ...] = ()
    harness_tolerances: Optional[HarnessTolerances] = None
    audit: Optional[AuditSettings] = None
    audit_tolerances: Optional[AuditTolerances] = None
    output: OutputSettings = OutputSettings()
    expect: Optional[str] = None
    seed: int = 0

    def orlicz(self) -> OrliczFunction:
        return from_params(self.orlicz_family, self.orlicz_params)


def _parse_orlicz(d) -> tuple[str, dict]:
    d = _section(d, "orlicz", {"family", "params"}, {"family"})
    fam = d["family"]
    params = _section(d.get("params", {}), "orlicz.params", {"p", "scale"})
    params = {k: _number(params, k, "orlicz.params") for k in params}
    try:
        from_params(fam, params)
    except OrliczError as exc:
        raise ConfigError(f"orlicz: {exc}") from None
    return fam, params


def _parse_profile(d, where: str) -> Profile:
    d = _section(d, where, {"kind", "center", "radius", "amplitude"}, {"kind"})
    kw = {k: _number(d, k, where) for k in ("center", "radius", "amplitude") if k in d}
    try:
        return Profile(kind=d["kind"], **kw)
    except OrliczError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def _parse_sequence(seq, dom) -> SequenceSpec:
    dom = _section(dom, "domain", {"left", "right", "cells"}, {"left", "right", "cells"})
    seq = _section(
        seq,
        "sequence",
        {"family", "limit", "bump", "n_schedule", "normalization", "point", "height", "cells_per_bump", "exceptional_radius"},
        {"family", "limit", "bump", "n_schedule"},
    )
    try:
        domain = Domain1D(_number(dom, "left", "domain"), _number(dom, "right", "domain"), int(dom["cells"]))
        kw = {k: _number(seq, k, "sequence") for k in ("point", "height", "exceptional_radius") if k in seq}
        if "cells_per_bump" in seq:
            kw["cells_per_bump"] = int(seq["cells_per_bump"])
        if "normalization" in seq:
            kw["normalization"] = seq["normalization"]
        sched = seq["n_schedule"]
        if not isinstance(sched, list):
            raise ConfigError("'sequence.n_schedule' must be a list of integers")
        return SequenceSpec(
            family=seq["family"],
            domain=domain,
            limit=_parse_profile(seq["limit"], "sequence.limit"),
            bump=_parse_profile(seq["bump"], "sequence.bump"),
            n_schedule=tuple(sched),
            **kw,
        )
    except (OrliczError, ValueError, TypeError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"sequence: {exc}") from None


def _parse_audit(d) -> AuditSettings:
    d = _section(d, "audit", {"samples", "range", "eps", "t_grid", "scan_grid"}, {"samples", "range", "eps", "t_grid", "scan_grid"})
    rng = d["range"]
    if not (isinstance(rng, list) and len(rng) == 2):
        raise ConfigError("'audit.range' must be [low, high]")
    tg = _section(d["t_grid"], "audit.t_grid", {"low", "high", "points"}, {"low", "high", "points"})
    sg = _section(d["scan_grid"], "audit.scan_grid", {"low", "high", "per_decade"}, {"low", "high", "per_decade"})
    eps = tuple(float(e) for e in d["eps"])
    if any(not 0.0 < e < 1.0 for e in eps):
        raise ConfigError(f"'audit.eps' entries must lie in (0, 1): {eps}")
    try:
        scan = LogGrid(_number(sg, "low", "audit.scan_grid"), _number(sg, "high", "audit.scan_grid"), int(sg["per_decade"]))
    except OrliczError as exc:
        raise ConfigError(f"audit.scan_grid: {exc}") from None
    return AuditSettings(
        samples=int(d["samples"]),
        low=float(rng[0]),
        high=float(rng[1]),
        eps=eps,
        t_grid=(_number(tg, "low", "audit.t_grid"), _number(tg, "high", "audit.t_grid"), int(tg["points"])),
        scan_grid=scan,
    )


def parse_config(doc: dict) -> ExperimentConfig:
    """Validate a decoded config document; raises :class:`ConfigError` naming the bad key."""
    doc = _section(doc, "", TOP_KEYS, {"orlicz", "tolerances"})
    fam, params = _parse_orlicz(doc["orlicz"])
    out = _section(doc.get("output", {}), "output", {"stem", "dir", "format"})
    if out.get("format", "both") not in ("csv", "json", "both"):
        raise ConfigError(f"'output.format' must be csv, json or both, got {out['format']!r}")
    output = OutputSettings(**out)
    seed = doc.get("seed", 0)
    if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed < 2**64:
        raise ConfigError(f"'seed' must be a 64-bit unsigned integer, got {seed!r}")

    kw: dict = {}
    tol = doc["tolerances"]
    if "audit" in doc:
        kw["audit"] = _parse_audit(doc["audit"])
        t = _section(tol, "tolerances", set(AuditTolerances.__dataclass_fields__), set(AuditTolerances.__dataclass_fields__))
        kw["audit_tolerances"] = AuditTolerances(**{k: _number(t, k, "tolerances") for k in t})
        expect = doc.get("expect", "Delta2")
        if expect not in AUDIT_EXPECT:
            raise ConfigError(f"'expect' must be one of {AUDIT_EXPECT} for audits, got {expect!r}")
        kw["expect"] = expect
    if "sequence" in doc or "domain" in doc:
        if "sequence" not in doc or "domain" not in doc:
            raise ConfigError("missing key 'sequence'" if "sequence" not in doc else "missing key 'domain'")
        if "audit" in doc:
            raise ConfigError("unknown key 'audit': a config is either an audit or a harness experiment")
        kw["sequence"] = _parse_sequence(doc["sequence"], doc["domain"])
        if "eps_ladder" not in doc:
            raise ConfigError("missing key 'eps_ladder'")
        eps = tuple(float(e) for e in doc["eps_ladder"])
        if not eps or any(not 0.0 < e < 1.0 for e in eps):
            raise ConfigError(f"'eps_ladder' entries must lie in (0, 1): {eps}")
        kw["eps_ladder"] = eps
        names = set(HarnessTolerances.__dataclass_fields__)
        t = _section(tol, "tolerances", names, names)
        kw["harness_tolerances"] = HarnessTolerances(**{k: _number(t, k, "tolerances") for k in t})
        expect = doc.get("expect", Verdict.CONVERGENCE_OBSERVED.value)
        try:
            kw["expect"] = Verdict(expect).value
        except ValueError:
            raise ConfigError(f"'expect' is not a verdict: {expect!r}") from None
    elif "audit" not in doc:
        raise ConfigError("missing key 'audit' or 'sequence'")
    elif "eps_ladder" in doc:
        raise ConfigError("unknown key 'eps_ladder' in an audit config")
    return ExperimentConfig(fam, params, output=output, seed=seed, **kw)


def load_config(path: str | Path) -> ExperimentConfig:
    try:
        doc = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from None
    return parse_config(doc)
