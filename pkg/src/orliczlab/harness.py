"""Brezis–Lieb experiments: sequence generators, defect measurement, proof audits.

A run walks an increasing schedule of ``n``, builds ``u_n`` and the limit
``u`` on a common grid, and records per ``n`` the three modulars, the
defect ``|ρ(u_n) - ρ(u_n - u) - ρ(u)|``, the Luxemburg norm of ``u_n``, the
a.e.-convergence proxy and the truncated remainders ``∫ W_{ε,n}``.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass, field, fields
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import (
    InequalityAudit,
    LogGrid,
    OrliczFunction,
    StructuralConstants,
    structural_constants,
    summarize,
)
from .errors import BracketError, DomainError, GenerationError
from .grid import Domain1D, GridFunction, integrate, luxemburg_norm

__all__ = [
    "SequenceFamily",
    "Verdict",
    "Profile",
    "SequenceSpec",
    "SequenceSample",
    "HarnessTolerances",
    "BLRow",
    "BLReport",
    "sample",
    "generate",
    "pointwise_taylor_bound_audit",
    "dominated_bound_audit",
    "w_epsilon_integral",
    "measure_row",
    "run",
    "DEFAULT_EPS_LADDER",
    "concentration_spec",
    "translation_spec",
    "plateau_spec",
    "violator_spec",
]

DEFAULT_EPS_LADDER = (0.5, 0.1, 0.01)


class SequenceFamily(str, enum.Enum):
    TRANSLATION = "translation"
    CONCENTRATION = "concentration"
    SHRINKING_PLATEAU = "shrinking_plateau"
    UNBOUNDED_VIOLATOR = "unbounded_violator"


class Verdict(str, enum.Enum):
    CONVERGENCE_OBSERVED = "ConvergenceObserved"
    HYPOTHESIS_VIOLATED = "HypothesisViolated"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Profile:
    """Shape recipe ``x -> amplitude * shape((x - center) / radius)``.

    ``bump`` is the smooth compactly supported ``exp(1 - 1/(1 - z²))`` on
    ``|z| < 1`` (peak value 1), ``sine`` is ``sin(π z)`` and ``zero`` is 0.
    """

    kind: str = "bump"
    center: float = 0.5
    radius: float = 0.5
    amplitude: float = 1.0

    KINDS = ("bump", "sine", "zero")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise DomainError(f"unknown profile kind {self.kind!r}")
        if not self.radius > 0.0:
            raise DomainError("profile radius must be positive")

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        z = (x - self.center) / self.radius
        if self.kind == "zero":
            return np.zeros_like(z)
        if self.kind == "sine":
            return self.amplitude * np.sin(np.pi * z)
        inside = np.abs(z) < 1.0
        zz = np.where(inside, z, 0.0)
        return np.where(inside, self.amplitude * np.exp(1.0 - 1.0 / (1.0 - zz * zz)), 0.0)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "center": self.center, "radius": self.radius, "amplitude": self.amplitude}


@dataclass(frozen=True)
class SequenceSpec:
    """Recipe for ``(u_n)`` and its limit ``u``.

    ``domain`` is the reference domain of ``u``.  ``bump`` is the moving or
    concentrating profile: for concentration it is evaluated at
    ``n (x - point)``, for translation at ``x - n * |domain|``.  The
    exceptional set of the a.e. audit is the set of cells within
    ``exceptional_radius`` (default: one reference cell) of ``point``.
    """

    family: SequenceFamily
    domain: Domain1D
    limit: Profile
    bump: Profile
    n_schedule: tuple[int, ...]
    normalization: str = "none"
    point: float = 0.0
    height: float = 1.0
    cells_per_bump: int = 64
    exceptional_radius: Optional[float] = None

    def __post_init__(self):
        try:
            object.__setattr__(self, "family", SequenceFamily(self.family))
        except ValueError:
            known = ", ".join(f.value for f in SequenceFamily)
            raise DomainError(f"unknown sequence family {self.family!r} (expected one of {known})") from None
        sched = tuple(int(n) for n in self.n_schedule)
        if not sched:
            raise DomainError("empty n_schedule")
        if any(n < 1 for n in sched) or any(b <= a for a, b in zip(sched, sched[1:])):
            raise DomainError(f"n_schedule must be strictly increasing positive integers: {sched}")
        object.__setattr__(self, "n_schedule", sched)
        if self.normalization not in ("none", "unit_modular"):
            raise DomainError(f"unknown normalization {self.normalization!r}")
        if self.cells_per_bump < 1:
            raise DomainError("cells_per_bump must be >= 1")

    @property
    def has_exceptional_set(self) -> bool:
        return self.family in (SequenceFamily.CONCENTRATION, SequenceFamily.SHRINKING_PLATEAU)

    @property
    def radius(self) -> float:
        return self.domain.h if self.exceptional_radius is None else self.exceptional_radius

    def grid_for(self, n: int) -> Domain1D:
        d = self.domain
        if self.family is SequenceFamily.TRANSLATION:
            return Domain1D(d.left, d.right + n * d.length, d.cells * (n + 1))
        if self.family is SequenceFamily.UNBOUNDED_VIOLATOR:
            return d
        # refine proportionally to n so the bump keeps ~cells_per_bump cells
        m = max(1, math.ceil(self.cells_per_bump * n * d.length / d.cells))
        return Domain1D(d.left, d.right, d.cells * m)

    def exceptional_set(self, n: int) -> tuple[int, ...]:
        """Cell indices (on the grid of ``u_n``) excluded from the a.e. audit."""
        if not self.has_exceptional_set:
            return ()
        x = self.grid_for(n).midpoints()
        return tuple(int(i) for i in np.flatnonzero(np.abs(x - self.point) <= self.radius))

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "domain": {"left": self.domain.left, "right": self.domain.right, "cells": self.domain.cells},
            "limit": self.limit.to_dict(),
            "bump": self.bump.to_dict(),
            "n_schedule": list(self.n_schedule),
            "normalization": self.normalization,
            "point": self.point,
            "height": self.height,
            "cells_per_bump": self.cells_per_bump,
            "exceptional_radius": self.exceptional_radius,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SequenceSpec":
        d = dict(d)
        d["domain"] = Domain1D(**d["domain"])
        d["limit"] = Profile(**d["limit"])
        d["bump"] = Profile(**d["bump"])
        d["n_schedule"] = tuple(d["n_schedule"])
        return cls(**d)


@dataclass(frozen=True, eq=False)
class SequenceSample:
    n: int
    un: GridFunction
    u: GridFunction
    window: np.ndarray  # cells inside the reference domain
    exceptional: np.ndarray  # cells excluded from the a.e. audit
    scale: float = 1.0  # a_n for concentration

    @property
    def diff(self) -> GridFunction:
        return self.un - self.u


def sample(spec: SequenceSpec, n: int, G: OrliczFunction | None = None) -> SequenceSample:
    """Build ``u_n`` and ``u`` on a common grid for step ``n``."""
    if int(n) != n or n < 1:
        raise GenerationError(f"n must be a positive integer, got {n}")
    n = int(n)
    dom = spec.grid_for(n)
    x = dom.midpoints()
    ref = spec.domain
    window = (x >= ref.left) & (x <= ref.right)
    u_vals = np.where(window, spec.limit(x), 0.0)
    scale = 1.0
    fam = spec.family

    if fam is SequenceFamily.TRANSLATION:
        w = spec.bump(x - n * ref.length)
    elif fam is SequenceFamily.CONCENTRATION:
        w = spec.bump(n * (x - spec.point))
        if spec.normalization == "unit_modular":
            if G is None:
                raise GenerationError("unit_modular normalization needs an Orlicz function")
            try:
                norm = luxemburg_norm(G, GridFunction(dom, w), tol=1e-14)
            except BracketError as exc:
                raise GenerationError(f"n={n}: could not normalise bump: {exc}") from None
            if norm == 0.0:
                raise GenerationError(f"n={n}: bump vanishes on the grid")
            scale = 1.0 / norm
            w = scale * w
            rho = integrate(dom, G.eval(np.abs(w)))
            if abs(rho - 1.0) > 1e-8:
                raise GenerationError(f"n={n}: normalised bump has modular {rho!r}")
    elif fam is SequenceFamily.SHRINKING_PLATEAU:
        w = np.where((x >= spec.point) & (x <= spec.point + 1.0 / n), spec.height, 0.0)
    else:
        w = n * spec.bump(x)

    exceptional = np.zeros(dom.cells, dtype=bool)
    exceptional[list(spec.exceptional_set(n))] = True
    u = GridFunction(dom, u_vals)
    un = GridFunction(dom, u_vals + w)
    return SequenceSample(n, un, u, window, exceptional, scale)


def generate(spec: SequenceSpec, n: int, G: OrliczFunction | None = None) -> GridFunction:
    """Return ``u_n`` (``G`` is needed only for unit-modular normalisation)."""
    return sample(spec, n, G).un


# -- pointwise pieces of the proof --------------------------------------------------


def _abs_parts(G, un: GridFunction, u: GridFunction):
    a_un = np.abs(un.values)
    a_u = np.abs(u.values)
    a_d = np.abs(un.values - u.values)
    with np.errstate(over="ignore", invalid="ignore"):
        return a_un, a_u, a_d, G.eval(a_un), G.eval(a_u), G.eval(a_d)


def _check_eps(eps: float) -> None:
    if not (0.0 < eps < 1.0):
        raise DomainError(f"eps must lie in (0, 1), got {eps}")


def _rel_tol(tol, scale):
    return tol * (1.0 + np.abs(scale))


def pointwise_taylor_bound_audit(
    G: OrliczFunction, un: GridFunction, u: GridFunction, tol: float = 1e-9
) -> InequalityAudit:
    """Check ``|G(|u_n|) - G(|u_n - u|)| <= g(|u| + 2|u_n - u|) |u|`` at every cell."""
    a_un, a_u, a_d, G_un, _, G_d = _abs_parts(G, un, u)
    lhs = np.abs(G_un - G_d)
    rhs = G.deriv(a_u + 2.0 * a_d) * a_u
    return summarize(
        "pointwise_taylor_bound", lhs, rhs, _rel_tol(tol, rhs), {"x": un.x, "u": u.values, "un": un.values}
    )


def _w_values(eps, K, C, G_un, G_u, G_d):
    D = np.abs(G_un - G_d - G_u)
    return D, np.maximum(D - eps * 0.5 * C * K * K * G_d, 0.0)


def dominated_bound_audit(
    G: OrliczFunction,
    un: GridFunction,
    u: GridFunction,
    eps: float,
    K: float,
    C: float,
    tol: float = 1e-9,
) -> InequalityAudit:
    """Check, cell by cell,

    (a) ``|G(|u_n|) - G(|u_n - u|)| <= (C K²/2) (ε G(|u_n - u|) + 2 G(|u|/ε))``
    (b) ``W_{ε,n} <= (C K² + 1) G(|u|/ε)``

    Part (b) is returned under ``extras["domination"]``.
    """
    _check_eps(eps)
    a_un, a_u, a_d, G_un, G_u, G_d = _abs_parts(G, un, u)
    G_ue = G.eval(a_u / eps)
    ck = C * K * K
    lhs = np.abs(G_un - G_d)
    rhs = 0.5 * ck * (eps * G_d + 2.0 * G_ue)
    _, W = _w_values(eps, K, C, G_un, G_u, G_d)
    dom_rhs = (ck + 1.0) * G_ue
    wit = {"x": un.x, "u": u.values, "un": un.values}
    domination = summarize("w_domination", W, dom_rhs, _rel_tol(tol, dom_rhs), wit)
    return summarize(
        "dominated_bound", lhs, rhs, _rel_tol(tol, rhs), wit, {"eps": eps, "domination": domination}
    )


def w_epsilon_integral(
    G: OrliczFunction, un: GridFunction, u: GridFunction, eps: float, K: float, C: float
) -> float:
    """``∫ [|G(|u_n|) - G(|u_n-u|) - G(|u|)| - ε (C K²/2) G(|u_n-u|)]₊ dx``."""
    _check_eps(eps)
    _, _, _, G_un, G_u, G_d = _abs_parts(G, un, u)
    _, W = _w_values(eps, K, C, G_un, G_u, G_d)
    return integrate(un.domain, W)


# -- rows and reports -----------------------------------------------------------------


@dataclass(frozen=True)
class HarnessTolerances:
    defect: float = 1e-3
    decrease: float = 10.0
    norm_growth: float = 0.01
    aeconv: float = 1e-3
    lux: float = 1e-10
    margin: float = 1e-9

    @classmethod
    def from_dict(cls, d: dict) -> "HarnessTolerances":
        return cls(**d)

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _eps_key(eps: float) -> str:
    return repr(float(eps))


@dataclass(frozen=True)
class BLRow:
    n: int
    modular_un: float
    modular_diff: float
    modular_u: float
    defect: float
    lux_norm_un: float
    aeconv_sup: float
    w_integrals: dict  # eps -> ∫W_{eps,n}
    abs_defect_integral: float = 0.0
    taylor_margin: float = 0.0
    dominated_margins: dict = field(default_factory=dict)  # eps -> [margin (a), margin (b)]
    decomposition_margins: dict = field(default_factory=dict)  # eps -> min cellwise margin
    audits_passed: bool = True

    def to_dict(self) -> dict:
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        for k in ("w_integrals", "dominated_margins", "decomposition_margins"):
            d[k] = {_eps_key(e): v for e, v in d[k].items()}
        d["dominated_margins"] = {k: list(v) for k, v in d["dominated_margins"].items()}
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "BLRow":
        d = dict(d)
        for k in ("w_integrals", "dominated_margins", "decomposition_margins"):
            d[k] = {float(e): v for e, v in d.get(k, {}).items()}
        d["dominated_margins"] = {e: tuple(v) for e, v in d["dominated_margins"].items()}
        return cls(**d)


def measure_row(
    G: OrliczFunction,
    smp: SequenceSample,
    eps_ladder: Sequence[float],
    constants: StructuralConstants,
    tol: HarnessTolerances,
) -> BLRow:
    un, u = smp.un, smp.u
    dom = un.domain
    a_un, a_u, a_d, G_un, G_u, G_d = _abs_parts(G, un, u)
    m_un = integrate(dom, G_un)
    m_d = integrate(dom, G_d)
    m_u = integrate(dom, G_u)
    D = np.abs(G_un - G_d - G_u)
    keep = smp.window & ~smp.exceptional
    aeconv = float(a_d[keep].max()) if keep.any() else 0.0
    taylor = pointwise_taylor_bound_audit(G, un, u, tol.margin)

    w_int, dominated, decomposition = {}, {}, {}
    passed = taylor.passed
    if constants.delta2_holds:
        K, C = constants.K_est, constants.C
        for eps in eps_ladder:
            _, W = _w_values(eps, K, C, G_un, G_u, G_d)
            w_int[eps] = integrate(dom, W)
            dom_audit = dominated_bound_audit(G, un, u, eps, K, C, tol.margin)
            b_audit = dom_audit.extras["domination"]
            dominated[eps] = (dom_audit.margin, b_audit.margin)
            rest = W + eps * 0.5 * C * K * K * G_d
            dec = summarize("decomposition", D, rest, _rel_tol(tol.margin, D), {"x": un.x})
            decomposition[eps] = dec.margin
            passed = passed and dom_audit.passed and dec.passed

    return BLRow(
        n=smp.n,
        modular_un=m_un,
        modular_diff=m_d,
        modular_u=m_u,
        defect=abs(m_un - m_d - m_u),
        lux_norm_un=luxemburg_norm(G, un, tol.lux),
        aeconv_sup=aeconv,
        w_integrals=w_int,
        abs_defect_integral=integrate(dom, D),
        taylor_margin=taylor.margin,
        dominated_margins=dominated,
        decomposition_margins=decomposition,
        audits_passed=bool(passed),
    )


@dataclass(frozen=True)
class BLReport:
    spec: dict
    orlicz: str
    constants: dict
    eps_ladder: tuple
    rows: tuple
    certificates: dict
    limsup: tuple  # one dict per eps, evaluated at n_max
    tolerances: dict
    verdict: str

    @property
    def final(self) -> BLRow:
        return self.rows[-1]

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "orlicz": self.orlicz,
            "constants": self.constants,
            "eps_ladder": list(self.eps_ladder),
            "tolerances": self.tolerances,
            "certificates": self.certificates,
            "limsup": [dict(x) for x in self.limsup],
            "verdict": self.verdict,
            "rows": [r.to_dict() for r in self.rows],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BLReport":
        return cls(
            spec=d["spec"],
            orlicz=d["orlicz"],
            constants=d["constants"],
            eps_ladder=tuple(d["eps_ladder"]),
            rows=tuple(BLRow.from_dict(r) for r in d["rows"]),
            certificates=d["certificates"],
            limsup=tuple(d["limsup"]),
            tolerances=d["tolerances"],
            verdict=d["verdict"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "BLReport":
        return cls.from_dict(json.loads(text))

    def csv_columns(self) -> list[str]:
        cols = ["n", "modular_un", "modular_diff", "modular_u", "defect", "lux_norm_un", "aeconv_sup"]
        cols += [f"w_int_eps_{e:g}" for e in self.eps_ladder]
        cols += ["abs_defect_integral", "taylor_margin"]
        cols += [f"dominated_a_eps_{e:g}" for e in self.eps_ladder]
        cols += [f"dominated_b_eps_{e:g}" for e in self.eps_ladder]
        return cols

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.csv_columns())
        for r in self.rows:
            row = [r.n] + [
                _fmt(v)
                for v in (r.modular_un, r.modular_diff, r.modular_u, r.defect, r.lux_norm_un, r.aeconv_sup)
            ]
            row += [_fmt(r.w_integrals.get(e, math.nan)) for e in self.eps_ladder]
            row += [_fmt(r.abs_defect_integral), _fmt(r.taylor_margin)]
            row += [_fmt(r.dominated_margins.get(e, (math.nan,) * 2)[0]) for e in self.eps_ladder]
            row += [_fmt(r.dominated_margins.get(e, (math.nan,) * 2)[1]) for e in self.eps_ladder]
            writer.writerow(row)
        return buf.getvalue()


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _norm_certificate(norms: Sequence[float], growth_tol: float) -> tuple[bool, float]:
    """Tail of the norm sequence must not exceed the head's sup by more than ``growth_tol``."""
    norms = list(norms)
    if not all(math.isfinite(x) for x in norms):
        return False, math.inf
    half = len(norms) // 2
    head = norms[: max(half, 1)]
    tail = norms[half:]
    ref = max(head)
    growth = max(tail) / ref - 1.0 if ref > 0.0 else (0.0 if max(tail) == 0.0 else math.inf)
    return growth <= growth_tol, growth


def run(
    spec: SequenceSpec,
    G: OrliczFunction,
    eps_ladder: Iterable[float] = DEFAULT_EPS_LADDER,
    tolerances: HarnessTolerances | None = None,
    constants: StructuralConstants | None = None,
    grid: LogGrid | None = None,
) -> BLReport:
    """Run the harness over ``spec.n_schedule`` and assemble a report.

    The verdict is ``HypothesisViolated`` if Δ₂, norm-boundedness or a.e.
    convergence off the exceptional set fails; ``ConvergenceObserved`` if the
    final defect is below ``tolerances.defect`` and at most the first defect
    divided by ``tolerances.decrease``; ``Inconclusive`` otherwise.
    """
    tol = tolerances or HarnessTolerances()
    eps_ladder = tuple(float(e) for e in eps_ladder)
    for e in eps_ladder:
        _check_eps(e)
    if not spec.n_schedule:
        raise DomainError("empty n_schedule")
    consts = constants or structural_constants(G, grid)

    rows = tuple(
        measure_row(G, sample(spec, n, G), eps_ladder, consts, tol) for n in spec.n_schedule
    )

    bounded, growth = _norm_certificate([r.lux_norm_un for r in rows], tol.norm_growth)
    aeconv_ok = rows[-1].aeconv_sup <= tol.aeconv
    certificates = {
        "delta2": consts.delta2_holds,
        "norm_bounded": bounded,
        "norm_growth": growth,
        "aeconv_final": rows[-1].aeconv_sup,
        "aeconv_ok": bool(aeconv_ok),
        "proof_audits_passed": all(r.audits_passed for r in rows),
    }
    if spec.normalization == "unit_modular":
        dev = max(abs(r.modular_diff - 1.0) for r in rows)
        certificates["unit_modular_deviation"] = dev

    first, last = rows[0], rows[-1]
    limsup = []
    if consts.delta2_holds:
        ck2 = 0.5 * consts.C * consts.K_est**2
        for e in eps_ladder:
            bound = last.w_integrals[e] + e * ck2 * last.modular_diff
            limsup.append(
                {
                    "eps": e,
                    "w_integral": last.w_integrals[e],
                    "bound": bound,
                    "abs_defect_integral": last.abs_defect_integral,
                    "bound_margin": bound - last.abs_defect_integral,
                    "c_prime_ratio": last.abs_defect_integral / (e * consts.K_est),
                }
            )

    if not (consts.delta2_holds and bounded and aeconv_ok):
        verdict = Verdict.HYPOTHESIS_VIOLATED
    elif last.defect <= tol.defect and last.defect <= first.defect / tol.decrease:
        verdict = Verdict.CONVERGENCE_OBSERVED
    else:
        verdict = Verdict.INCONCLUSIVE

    return BLReport(
        spec=spec.to_dict(),
        orlicz=G.name,
        constants={
            "K_est": consts.K_est,
            "p_est": consts.p_est,
            "C": consts.C,
            "delta2_holds": consts.delta2_holds,
            "grid": {"low": consts.grid.low, "high": consts.grid.high, "per_decade": consts.grid.per_decade},
        },
        eps_ladder=eps_ladder,
        rows=rows,
        certificates=certificates,
        limsup=tuple(limsup),
        tolerances=tol.to_dict(),
        verdict=verdict.value,
    )


# -- bundled recipes -------------------------------------------------------------------


def concentration_spec(
    schedule: Sequence[int] = tuple(2**k for k in range(4, 13)), cells: int = 1024, cells_per_bump: int = 64
) -> SequenceSpec:
    """``u = sin(πx)`` on [0, 1] plus a unit-modular bump squeezed onto ``[0, 1/n]``."""
    return SequenceSpec(
        family=SequenceFamily.CONCENTRATION,
        domain=Domain1D(0.0, 1.0, cells),
        limit=Profile("sine", 0.0, 1.0, 1.0),
        bump=Profile("bump", 0.5, 0.5, 1.0),
        n_schedule=tuple(schedule),
        normalization="unit_modular",
        point=0.0,
        cells_per_bump=cells_per_bump,
    )


def translation_spec(schedule: Sequence[int] = tuple(range(1, 9)), cells: int = 512) -> SequenceSpec:
    """A bump on [0, 1] plus a copy translated by ``n``; supports are disjoint for ``n >= 1``."""
    return SequenceSpec(
        family=SequenceFamily.TRANSLATION,
        domain=Domain1D(0.0, 1.0, cells),
        limit=Profile("bump", 0.5, 0.4, 1.0),
        bump=Profile("bump", 0.5, 0.4, 1.0),
        n_schedule=tuple(schedule),
    )


def plateau_spec(schedule: Sequence[int] = tuple(2**k for k in range(1, 11)), cells: int = 1024, height: float = 1.0) -> SequenceSpec:
    return SequenceSpec(
        family=SequenceFamily.SHRINKING_PLATEAU,
        domain=Domain1D(0.0, 1.0, cells),
        limit=Profile("zero"),
        bump=Profile("zero"),
        n_schedule=tuple(schedule),
        point=0.0,
        height=height,
    )


def violator_spec(schedule: Sequence[int] = tuple(range(1, 9)), cells: int = 512) -> SequenceSpec:
    """``u_n = u + n φ``: norms diverge, so the boundedness certificate must fail."""
    return SequenceSpec(
        family=SequenceFamily.UNBOUNDED_VIOLATOR,
        domain=Domain1D(0.0, 1.0, cells),
        limit=Profile("bump", 0.5, 0.4, 1.0),
        bump=Profile("bump", 0.3, 0.2, 1.0),
        n_schedule=tuple(schedule),
    )
