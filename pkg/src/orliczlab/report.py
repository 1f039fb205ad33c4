"""Inequality audit suite for one Orlicz function, and its summary record."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .config import AuditSettings, AuditTolerances
from .core import (
    InequalityAudit,
    OrliczFunction,
    audit_conjugate_derivative,
    audit_lemma_i,
    audit_lemma_ii,
    conjugate_values,
    custom,
    derivative,
    estimate_delta2_K,
    estimate_p_index,
    evaluate,
    summarize,
)

__all__ = ["AuditSummary", "run_audits"]


@dataclass
class AuditSummary:
    orlicz: str
    seed: int
    constants: dict
    audits: list = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(a.failures for a in self.audits)

    @property
    def delta2_holds(self) -> bool:
        return bool(self.constants["delta2_holds"])

    def to_dict(self) -> dict:
        return {
            "orlicz": self.orlicz,
            "seed": self.seed,
            "constants": self.constants,
            "total_checked": sum(a.checked for a in self.audits),
            "total_failures": self.failures,
            "audits": [a.to_dict() for a in self.audits],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _flatten(audit: InequalityAudit, suffix: str = "") -> list:
    out = [audit if not suffix else _renamed(audit, audit.name + suffix)]
    for v in audit.extras.values():
        if isinstance(v, InequalityAudit):
            out.extend(_flatten(v, suffix))
    return out


def _renamed(a: InequalityAudit, name: str) -> InequalityAudit:
    return InequalityAudit(name, a.lhs, a.rhs, a.margin, a.witness, a.checked, a.failures, a.tol, a.extras)


def run_audits(G: OrliczFunction, settings: AuditSettings, tol: AuditTolerances, seed: int) -> AuditSummary:
    """Run every inequality audit that applies to ``G``.

    Young-type checks run for any convex ``G``; audits that need the Δ₂
    constant or the growth index run only when Δ₂ is detected.
    """
    rng = np.random.default_rng(seed)
    d2 = estimate_delta2_K(G, settings.scan_grid)
    ip = estimate_p_index(G, settings.scan_grid)
    K, p = d2.K_est, ip.p_est
    constants = {
        "K_est": K,
        "K_extended": d2.K_extended,
        "K_growth": d2.growth,
        "p_est": p,
        "C": max(p - 1.0, 1.0),
        "delta2_holds": d2.delta2_holds,
        "scan_grid": [settings.scan_grid.low, settings.scan_grid.high, settings.scan_grid.per_decade],
    }
    summary = AuditSummary(G.name, seed, constants)
    add = summary.audits.extend

    n = settings.samples
    a, b = rng.uniform(settings.low, settings.high, size=(2, n))
    star_b = np.asarray(conjugate_values(G, b, tol.conjugation))
    add(_flatten(summarize("young", a * b, evaluate(G, a) + star_b, tol.margin, {"a": a, "b": b})))

    a_eq = rng.uniform(settings.low, settings.high, size=n)
    g_eq = np.asarray(derivative(G, a_eq))
    G_eq = np.asarray(evaluate(G, a_eq))
    with np.errstate(over="ignore", invalid="ignore"):
        gap = G_eq + np.asarray(conjugate_values(G, g_eq, tol.conjugation)) - a_eq * g_eq
    add(_flatten(summarize("young_equality", np.abs(gap), tol.young_equality * (1.0 + G_eq), 0.0, {"a": a_eq})))

    t_lo, t_hi, t_n = settings.t_grid
    t = np.logspace(math.log10(t_lo), math.log10(t_hi), t_n)
    s = np.asarray(derivative(G, t))
    if G.analytic_conjugate is not None:
        num = np.asarray(conjugate_values(G, s, tol.conjugation))
        ref = np.asarray(G.analytic_conjugate(s))
        rel = np.abs(num - ref) / np.maximum(np.abs(ref), np.finfo(float).tiny)
        add(_flatten(summarize("conjugate_oracle", rel, tol.conjugate_relative, 0.0, {"b": s})))

        G_star = custom(G.analytic_conjugate, name=f"{G.name}*")
        back = np.asarray(conjugate_values(G_star, t, tol.conjugation))
        rel = np.abs(back - evaluate(G, t)) / np.maximum(evaluate(G, t), np.finfo(float).tiny)
        add(_flatten(summarize("biconjugation", rel, tol.biconjugation, 0.0, {"a": t})))

    # midpoint convexity of the numerical conjugate on a b-grid
    b_grid = np.linspace(0.0, float(s.max()), 257) if np.isfinite(s.max()) else np.linspace(0.0, 1.0, 257)
    star_grid = np.asarray(conjugate_values(G, b_grid, tol.conjugation))
    mid = 0.5 * (star_grid[:-2] + star_grid[2:])
    add(_flatten(summarize(
        "conjugate_midpoint_convexity",
        star_grid[1:-1],
        mid,
        tol.conjugate_relative * (1.0 + np.abs(mid)),
        {"b": b_grid[1:-1]},
    )))

    if not d2.delta2_holds:
        return summary

    add(_flatten(summarize("delta2_cross_check", K, 2.0**p * (1.0 + tol.cross_check), 0.0, {"K": K, "p": p})))
    add(_flatten(audit_lemma_i(G, a, b, K, tol=tol.margin)))
    for eps in settings.eps:
        add(_flatten(
            audit_lemma_ii(G, a, b, eps, p, tol=tol.margin, conj_tol=tol.conjugation),
            suffix=f"[eps={eps:g}]",
        ))
    add(_flatten(audit_conjugate_derivative(
        G, t, p, rel_tol=tol.conjugate_relative, conj_tol=tol.conjugation
    )))
    return summary
