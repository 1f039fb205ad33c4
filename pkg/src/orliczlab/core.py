"""Orlicz functions, complementary functions and structural constants.

An Orlicz function ``G`` is stored as a pair of vectorised callables for
``G`` and ``g = G'``.  Everything here accepts scalars or numpy arrays and
returns the matching shape.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

import numpy as np

from .errors import (
    DegenerateFunctionError,
    DomainError,
    UnboundedConjugateError,
)

__all__ = [
    "Family",
    "OrliczFunction",
    "ConjugateResult",
    "LogGrid",
    "Delta2Estimate",
    "IndexEstimate",
    "StructuralConstants",
    "InequalityAudit",
    "power",
    "power_log",
    "exp_minus",
    "custom",
    "from_params",
    "evaluate",
    "derivative",
    "conjugate",
    "conjugate_values",
    "young_gap",
    "estimate_delta2_K",
    "estimate_p_index",
    "structural_constants",
    "audit_conjugate_derivative",
    "audit_lemma_i",
    "audit_lemma_ii",
]

Array = np.ndarray
Fn = Callable[[Array], Array]

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI2 = 1.0 - INV_PHI

DEFAULT_CONJ_TOL = 1e-10


class Family(str, enum.Enum):
    POWER = "power"
    POWER_LOG = "powerlog"
    EXP_MINUS = "expminus"
    CUSTOM = "custom"


@dataclass(frozen=True, eq=False)
class OrliczFunction:
    """Evaluator for an Orlicz function ``G`` and its derivative ``g``.

    ``analytic_conjugate``, ``analytic_K`` and ``analytic_p`` are reference
    values used by tests and never by the numerical routines.  ``log_eval``
    is an optional overflow-free ``log G`` used by the Δ₂ estimator.
    """

    family: Family
    params: tuple[tuple[str, float], ...]
    eval: Fn
    deriv: Fn
    analytic_conjugate: Optional[Fn] = None
    analytic_K: Optional[float] = None
    analytic_p: Optional[float] = None
    log_eval: Optional[Fn] = None

    def __post_init__(self):
        _validate_shape(self)

    @property
    def name(self) -> str:
        if not self.params:
            return self.family.value
        args = ",".join(f"{k}={v:g}" for k, v in self.params)
        return f"{self.family.value}({args})"

    def param(self, key: str) -> float:
        return dict(self.params)[key]

    def __call__(self, t):
        return self.eval(np.asarray(t, dtype=float))

    def __repr__(self) -> str:
        return f"OrliczFunction<{self.name}>"


def _validate_shape(G: OrliczFunction) -> None:
    # Cheap construction-time screen; rejects G identically zero on an
    # interval, G(0) != 0 and obviously non-monotone inputs.
    t = np.logspace(-3, 3, 25)
    with np.errstate(over="ignore"):
        vals = np.asarray(G.eval(t), dtype=float)
    zero = float(np.asarray(G.eval(np.zeros(1)))[0])
    if zero != 0.0:
        raise DegenerateFunctionError(f"{G.name}: G(0) = {zero!r}, expected 0")
    if np.any(vals <= 0.0):
        bad = t[np.argmax(vals <= 0.0)]
        raise DegenerateFunctionError(f"{G.name}: G vanishes at t={bad:g} > 0")
    finite = np.isfinite(vals)
    if np.any(np.diff(vals[finite]) < 0.0):
        raise DegenerateFunctionError(f"{G.name}: G is not increasing")


# -- families ----------------------------------------------------------------


def power(p: float, scale: float = 1.0) -> OrliczFunction:
    """``G(t) = scale * t**p`` with ``p > 1``.

    ``power(p, 1/p)`` is the normalised form ``t**p / p`` whose conjugate is
    ``s**q / q`` with ``1/p + 1/q = 1``.
    """
    p = float(p)
    scale = float(scale)
    if not p > 1.0:
        raise DomainError(f"power family needs p > 1, got {p}")
    if not scale > 0.0:
        raise DomainError(f"power family needs scale > 0, got {scale}")

    def G(t):
        return scale * np.power(t, p)

    def g(t):
        return scale * p * np.power(t, p - 1.0)

    def G_star(s):
        s = np.asarray(s, dtype=float)
        return (p - 1.0) * scale * np.power(s / (scale * p), p / (p - 1.0))

    def log_G(t):
        with np.errstate(divide="ignore"):
            return math.log(scale) + p * np.log(t)

    return OrliczFunction(
        family=Family.POWER,
        params=(("p", p), ("scale", scale)),
        eval=G,
        deriv=g,
        analytic_conjugate=G_star,
        analytic_K=2.0**p,
        analytic_p=p,
        log_eval=log_G,
    )


def power_log(p: float) -> OrliczFunction:
    """``G(t) = t**p * log(1 + t)`` for ``p >= 1``.

    The Δ₂ ratio ``G(2x)/G(x)`` and the index ``t g(t)/G(t)`` both take their
    supremum as ``t -> 0``: ``K = 2**(p+1)`` and index ``p + 1``.
    """
    p = float(p)
    if not p >= 1.0:
        raise DomainError(f"powerlog family needs p >= 1, got {p}")

    def G(t):
        return np.power(t, p) * np.log1p(t)

    def g(t):
        return p * np.power(t, p - 1.0) * np.log1p(t) + np.power(t, p) / (1.0 + t)

    def log_G(t):
        with np.errstate(divide="ignore"):
            return p * np.log(t) + np.log(np.log1p(t))

    return OrliczFunction(
        family=Family.POWER_LOG,
        params=(("p", p),),
        eval=G,
        deriv=g,
        analytic_K=2.0 ** (p + 1.0),
        analytic_p=p + 1.0,
        log_eval=log_G,
    )


def exp_minus() -> OrliczFunction:
    """``G(t) = e**t - t - 1``: convex, but violates Δ₂ (negative control)."""

    def G(t):
        t = np.asarray(t, dtype=float)
        small = t < 1e-3
        # series branch avoids the cancellation in expm1(t) - t
        ts = np.where(small, t, 0.0)
        series = ts * ts * (0.5 + ts * (1.0 / 6 + ts * (1.0 / 24 + ts / 120)))
        with np.errstate(over="ignore"):
            direct = np.expm1(np.where(small, 0.0, t)) - t
        return np.where(small, series, direct)

    def g(t):
        with np.errstate(over="ignore"):
            return np.expm1(t)

    def G_star(s):
        s = np.asarray(s, dtype=float)
        return (1.0 + s) * np.log1p(s) - s

    def log_G(t):
        t = np.asarray(t, dtype=float)
        big = t > 1.0
        tb = np.where(big, t, 2.0)
        large = tb + np.log1p(-(1.0 + tb) * np.exp(-tb))
        with np.errstate(divide="ignore"):
            small = np.log(G(np.where(big, 1.0, t)))
        return np.where(big, large, small)

    return OrliczFunction(
        family=Family.EXP_MINUS,
        params=(),
        eval=G,
        deriv=g,
        analytic_conjugate=G_star,
        log_eval=log_G,
    )


def custom(
    eval: Fn,
    deriv: Optional[Fn] = None,
    *,
    name: str = "custom",
    analytic_conjugate: Optional[Fn] = None,
    step: float = 1e-6,
) -> OrliczFunction:
    """Wrap user callables.  Without ``deriv`` a central difference is used,
    one-sided near 0, with ``g(0) = 0``."""
    if deriv is None:

        def deriv(t):
            t = np.asarray(t, dtype=float)
            h = step * np.maximum(1.0, t)
            left = np.maximum(t - h, 0.0)
            d = (eval(t + h) - eval(left)) / (t + h - left)
            return np.where(t == 0.0, 0.0, d)

    return OrliczFunction(
        family=Family.CUSTOM,
        params=(),
        eval=eval,
        deriv=deriv,
        analytic_conjugate=analytic_conjugate,
    )


def from_params(family: str, params: Mapping[str, float] | None = None) -> OrliczFunction:
    """Build a shipped family from its name and keyword parameters."""
    params = dict(params or {})
    key = family.lower().replace("_", "").replace("-", "")
    try:
        if key == "power":
            return power(**params)
        if key == "powerlog":
            return power_log(**params)
        if key == "expminus":
            return exp_minus(**params)
    except TypeError as exc:
        raise DomainError(f"bad parameters for family {family!r}: {exc}") from None
    raise DomainError(f"unknown Orlicz family {family!r}")


# -- evaluation ----------------------------------------------------------------


def _checked_argument(t, what: str = "t") -> Array:
    arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{what} must be finite")
    if np.any(arr < 0.0):
        raise DomainError(f"{what} must be >= 0")
    return arr


def _out(x):
    x = np.asarray(x, dtype=float)
    return float(x) if x.ndim == 0 else x


def evaluate(G: OrliczFunction, t):
    """Return ``G(t)`` for ``t >= 0``; raises :class:`DomainError` otherwise."""
    arr = _checked_argument(t)
    return _out(np.where(arr == 0.0, 0.0, G.eval(arr)))


def derivative(G: OrliczFunction, t):
    """Return ``g(t) = G'(t)`` with ``g(0) = 0``."""
    arr = _checked_argument(t)
    return _out(np.where(arr == 0.0, 0.0, G.deriv(arr)))


# -- complementary function ------------------------------------------------------


@dataclass(frozen=True)
class ConjugateResult:
    value: float
    argmax: float
    bracket_width: float
    iterations: int


def _objective(G: OrliczFunction, b: Array, t: Array) -> Array:
    with np.errstate(over="ignore", invalid="ignore"):
        h = b * t - G.eval(t)
    return np.where(np.isnan(h), -np.inf, h)


def _finite_edge(G, b: float, T: float) -> tuple[float, float]:
    """Largest point in ``[T, 2T]`` (to bisection accuracy) where ``G`` is finite."""
    ok, bad = T, 2.0 * T
    for _ in range(60):
        mid = 0.5 * (ok + bad)
        if _objective(G, np.array([b]), np.array([mid]))[0] == -np.inf:
            bad = mid
        else:
            ok = mid
    return ok, float(_objective(G, np.array([b]), np.array([ok]))[0])


def _conjugate_arrays(G, b, tol, max_doublings):
    """Vectorised bracket-then-golden-section maximisation of ``b t - G(t)``.

    Returns ``(value, argmax, width, iterations)`` arrays/ints.
    """
    n = b.size
    lo = np.zeros(n)
    up = np.full(n, 2.0)
    active = b > 0.0

    # Growing phase: h(2T) >= h(T) means the maximiser lies beyond T.
    T = np.ones(n)
    hT = _objective(G, b, T)
    h2T = _objective(G, b, 2.0 * T)
    grow = active & (h2T >= hT)
    grew = grow.copy()
    lo_fixed = np.zeros(n, dtype=bool)
    steps = 0
    while grow.any():
        steps += 1
        if steps > max_doublings or np.any(T[grow] > 1e300):
            worst = float(b[grow].max())
            raise UnboundedConjugateError(
                f"{G.name}: could not bracket sup(b t - G(t)) for b={worst:g}"
            )
        lo[grow] = T[grow]
        T[grow] *= 2.0
        hT[grow] = h2T[grow]
        h2T[grow] = _objective(G, b[grow], 2.0 * T[grow])
        for i in np.flatnonzero(grow & (h2T == -np.inf)):
            # G overflowed at 2T; a decrease is only certified at a finite point
            T_f, h_f = _finite_edge(G, b[i], T[i])
            if not h_f < hT[i]:
                raise UnboundedConjugateError(
                    f"{G.name}: G overflows before sup(b t - G(t)) is bracketed for b={b[i]:g}"
                )
            up[i] = T_f
            grow[i] = False
            grew[i] = False
            lo_fixed[i] = True
        grow &= h2T >= hT
    up[grew] = 2.0 * T[grew]
    grew |= lo_fixed

    # Shrinking phase for maximisers below 1: h(U/4) > h(U/2) means argmax < U/2.
    shrink = active & ~grew
    steps = 0
    while shrink.any():
        steps += 1
        m = up[shrink] / 2.0
        left = _objective(G, b[shrink], m / 2.0) > _objective(G, b[shrink], m)
        idx = np.flatnonzero(shrink)
        up[idx[left]] = m[left]
        done = idx[~left]
        lo[done] = m[~left] / 2.0
        shrink[done] = False
        tiny = up < 1e-300
        if np.any(shrink & tiny):
            lo[shrink & tiny] = 0.0
            shrink &= ~tiny
        if steps > 2 * max_doublings:
            break

    # Golden-section shrink until width <= tol * upper end.
    a = lo.copy()
    c_hi = up.copy()
    width0 = np.max(np.where(active, (c_hi - a) / np.maximum(c_hi, 1e-300), 0.0), initial=0.0)
    iters = 0
    if width0 > tol:
        iters = int(math.ceil(math.log(tol / width0) / math.log(INV_PHI))) + 1
    x1 = a + INV_PHI2 * (c_hi - a)
    x2 = a + INV_PHI * (c_hi - a)
    f1 = _objective(G, b, x1)
    f2 = _objective(G, b, x2)
    for _ in range(iters):
        keep_left = f1 > f2
        # maximum in [a, x2] when f1 > f2, else in [x1, c_hi]
        c_hi = np.where(keep_left, x2, c_hi)
        a = np.where(keep_left, a, x1)
        new_x = np.where(keep_left, a + INV_PHI2 * (c_hi - a), a + INV_PHI * (c_hi - a))
        f_new = _objective(G, b, new_x)
        x2, f2, x1, f1 = (
            np.where(keep_left, x1, new_x),
            np.where(keep_left, f1, f_new),
            np.where(keep_left, new_x, x2),
            np.where(keep_left, f_new, f2),
        )
    mid = 0.5 * (a + c_hi)
    fm = _objective(G, b, mid)
    cand_x = np.stack([mid, x1, x2])
    cand_f = np.stack([fm, f1, f2])
    best = np.argmax(cand_f, axis=0)
    arg = cand_x[best, np.arange(n)]
    val = cand_f[best, np.arange(n)]
    arg = np.where(active, arg, 0.0)
    val = np.where(active, np.maximum(val, 0.0), 0.0)
    width = np.where(active, c_hi - a, 0.0)
    return val, arg, width, iters


def _check_tol(tol: float) -> None:
    if not (tol > 0.0 and math.isfinite(tol)):
        raise DomainError(f"tolerance must be positive, got {tol}")


def conjugate(
    G: OrliczFunction, b: float, tol: float = DEFAULT_CONJ_TOL, max_doublings: int = 1100
) -> ConjugateResult:
    """Complementary function ``G*(b) = sup_{t>0} (b t - G(t))``.

    ``h(t) = b t - G(t)`` is concave, so the maximiser is bracketed by
    doubling/halving and then located by golden-section search to a relative
    bracket width ``tol``.
    """
    _check_tol(tol)
    bb = _checked_argument(b, "b")
    if bb.ndim != 0:
        raise DomainError("conjugate takes a scalar b; use conjugate_values for arrays")
    val, arg, width, iters = _conjugate_arrays(G, bb.reshape(1), tol, max_doublings)
    return ConjugateResult(float(val[0]), float(arg[0]), float(width[0]), iters)


def conjugate_values(G: OrliczFunction, b, tol: float = DEFAULT_CONJ_TOL):
    """Vectorised ``G*(b)`` (values only)."""
    _check_tol(tol)
    bb = _checked_argument(b, "b")
    flat = bb.reshape(-1)
    val, _, _, _ = _conjugate_arrays(G, flat, tol, 1100)
    return _out(val.reshape(bb.shape))


def young_gap(G: OrliczFunction, a, b, tol: float = DEFAULT_CONJ_TOL):
    """``G(a) + G*(b) - a b``, nonnegative up to the conjugation error."""
    aa = _checked_argument(a, "a")
    bb = _checked_argument(b, "b")
    aa, bb = np.broadcast_arrays(aa, bb)
    return _out(evaluate(G, aa) + np.asarray(conjugate_values(G, bb, tol)) - aa * bb)


# -- structural constants ----------------------------------------------------------


@dataclass(frozen=True)
class LogGrid:
    """Log-spaced scan grid ``[low, high]`` with ``per_decade`` points per decade."""

    low: float = 1e-6
    high: float = 1e6
    per_decade: int = 50

    def __post_init__(self):
        if not (0.0 < self.low < self.high) or self.per_decade < 1:
            raise DomainError(f"invalid log grid {self}")

    @property
    def decades(self) -> float:
        return math.log10(self.high / self.low)

    def points(self) -> Array:
        n = int(round(self.decades * self.per_decade)) + 1
        return np.logspace(math.log10(self.low), math.log10(self.high), n)

    def extended(self, decades: float = 1.0) -> "LogGrid":
        f = 10.0**decades
        return LogGrid(self.low / f, self.high * f, self.per_decade)


@dataclass(frozen=True)
class Delta2Estimate:
    K_est: float
    log_K: float
    K_extended: float
    log_K_extended: float
    witness: float
    grid: LogGrid
    delta2_holds: bool

    @property
    def growth(self) -> float:
        """Factor by which the estimate grew when the grid was extended."""
        d = self.log_K_extended - self.log_K
        return math.exp(d) if d < 700 else math.inf


@dataclass(frozen=True)
class IndexEstimate:
    p_est: float
    witness: float
    grid: LogGrid


@dataclass(frozen=True)
class StructuralConstants:
    K_est: float
    p_est: float
    grid: LogGrid
    delta2_holds: bool
    K_growth: float = 1.0

    @property
    def C(self) -> float:
        """Constant ``max(p - 1, 1)`` of the ε-Young bound."""
        return max(self.p_est - 1.0, 1.0)

    def cross_consistent(self, rel: float = 1e-3) -> bool:
        """``K <= 2**p (1 + rel)``: integrating ``g/G <= p/t`` over ``[x, 2x]``."""
        return self.K_est <= 2.0**self.p_est * (1.0 + rel)


def _log_ratio_scan(G: OrliczFunction, x: Array) -> tuple[Array, Array]:
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        Gx = np.asarray(G.eval(x), dtype=float)
        G2x = np.asarray(G.eval(2.0 * x), dtype=float)
    if np.any(Gx == 0.0):
        bad = x[np.argmax(Gx == 0.0)]
        raise DegenerateFunctionError(f"{G.name}: G({bad:g}) = 0 on the Δ₂ scan grid")
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        ratio = G2x / Gx
        ok = np.isfinite(ratio) & np.isfinite(Gx) & np.isfinite(G2x)
        log_ratio = np.where(ok, np.log(np.where(ok, ratio, 1.0)), np.nan)
        if not ok.all():
            if G.log_eval is not None:
                alt = G.log_eval(2.0 * x) - G.log_eval(x)
            else:
                alt = np.full_like(x, np.inf)
            log_ratio = np.where(ok, log_ratio, alt)
            ratio = np.where(ok, ratio, np.exp(np.minimum(alt, 710.0)))
    return ratio, log_ratio


def estimate_delta2_K(
    G: OrliczFunction,
    grid: LogGrid | None = None,
    *,
    blowup: float = 1e6,
    stability: float = 0.01,
    extend_decades: float = 1.0,
    min_decades: float = 8.0,
) -> Delta2Estimate:
    """Estimate the Δ₂ constant ``K = sup G(2x)/G(x)`` on a log grid.

    Δ₂ is declared to hold when the estimate is below ``blowup`` and moves
    by at most ``stability`` (relative) when the grid is extended by
    ``extend_decades`` at both ends.
    """
    grid = grid or LogGrid()
    if grid.decades < min_decades - 1e-9:
        raise DomainError(f"scan grid spans {grid.decades:.2f} decades, need >= {min_decades}")
    x = grid.points()
    ratio, log_ratio = _log_ratio_scan(G, x)
    i = int(np.nanargmax(log_ratio))
    _, log_ext = _log_ratio_scan(G, grid.extended(extend_decades).points())
    log_K = float(log_ratio[i])
    log_K_ext = float(np.nanmax(log_ext))
    K = float(ratio[i]) if log_K < 709.0 else math.inf
    K_ext = math.exp(log_K_ext) if log_K_ext < 709.0 else math.inf
    holds = (
        math.isfinite(K)
        and K < blowup
        and abs(log_K_ext - log_K) <= math.log1p(stability)
    )
    return Delta2Estimate(K, log_K, K_ext, log_K_ext, float(x[i]), grid, bool(holds))


def estimate_p_index(
    G: OrliczFunction, grid: LogGrid | None = None, *, min_decades: float = 8.0
) -> IndexEstimate:
    """Estimate ``p = sup t g(t) / G(t)`` on a log grid (``inf`` on overflow)."""
    grid = grid or LogGrid()
    if grid.decades < min_decades - 1e-9:
        raise DomainError(f"scan grid spans {grid.decades:.2f} decades, need >= {min_decades}")
    a = grid.points()
    with np.errstate(over="ignore", invalid="ignore"):
        Ga = np.asarray(G.eval(a), dtype=float)
        ga = np.asarray(G.deriv(a), dtype=float)
    if np.any(Ga == 0.0):
        bad = a[np.argmax(Ga == 0.0)]
        raise DegenerateFunctionError(f"{G.name}: G({bad:g}) = 0 on the index scan grid")
    with np.errstate(over="ignore", invalid="ignore"):
        idx = a * ga / Ga
    idx = np.where(np.isfinite(idx), idx, np.inf)
    i = int(np.argmax(idx))
    return IndexEstimate(float(idx[i]), float(a[i]), grid)


def structural_constants(G: OrliczFunction, grid: LogGrid | None = None, **kw) -> StructuralConstants:
    d2 = estimate_delta2_K(G, grid, **kw)
    ip = estimate_p_index(G, d2.grid)
    return StructuralConstants(d2.K_est, ip.p_est, d2.grid, d2.delta2_holds, d2.growth)


# -- inequality audits ---------------------------------------------------------------


@dataclass(frozen=True)
class InequalityAudit:
    """Outcome of checking ``lhs <= rhs`` at one or many inputs.

    ``lhs``, ``rhs``, ``margin`` and ``witness`` refer to the worst input
    (smallest ``rhs - lhs``).  ``extras`` holds side diagnostics, possibly
    nested audits.
    """

    name: str
    lhs: float
    rhs: float
    margin: float
    witness: dict
    checked: int = 1
    failures: int = 0
    tol: float = 0.0
    extras: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        nested = all(v.passed for v in self.extras.values() if isinstance(v, InequalityAudit))
        return self.failures == 0 and nested

    def to_dict(self) -> dict:
        extras = {
            k: (v.to_dict() if isinstance(v, InequalityAudit) else v)
            for k, v in self.extras.items()
        }
        return {
            "name": self.name,
            "checked": self.checked,
            "failures": self.failures,
            "worst_margin": self.margin,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "tol": self.tol,
            "witness": self.witness,
            "extras": extras,
        }


def summarize(name, lhs, rhs, tol, witness: Mapping[str, Array], extras=None) -> InequalityAudit:
    """Reduce elementwise ``lhs <= rhs + tol`` checks to one audit record."""
    lhs, rhs, tol_arr = np.broadcast_arrays(
        np.asarray(lhs, float), np.asarray(rhs, float), np.asarray(tol, float)
    )
    lhs = lhs.reshape(-1)
    rhs = rhs.reshape(-1)
    tol_arr = tol_arr.reshape(-1)
    margin = rhs - lhs
    margin = np.where(np.isnan(margin), -np.inf, margin)
    failures = int(np.count_nonzero(margin < -tol_arr))
    i = int(np.argmin(margin + tol_arr)) if margin.size else 0
    wit = {}
    for k, v in witness.items():
        v = np.broadcast_to(np.asarray(v, float), np.broadcast_shapes(np.shape(v), lhs.shape))
        wit[k] = float(v.reshape(-1)[i])
    return InequalityAudit(
        name=name,
        lhs=float(lhs[i]),
        rhs=float(rhs[i]),
        margin=float(margin[i]),
        witness=wit,
        checked=int(margin.size),
        failures=failures,
        tol=float(tol_arr[i]),
        extras=dict(extras or {}),
    )


def audit_conjugate_derivative(
    G: OrliczFunction,
    t,
    p: float,
    *,
    rel_tol: float = 1e-6,
    conj_tol: float = DEFAULT_CONJ_TOL,
) -> InequalityAudit:
    """Check ``G*(g(t)) <= (p - 1) G(t)`` and the identity ``G*(g(t)) = t g(t) - G(t)``.

    The margin tolerance is ``rel_tol * (1 + G(t))``; the identity residual is
    reported relative to ``|t g(t) - G(t)|`` under ``extras``.
    """
    tt = _checked_argument(t)
    if np.any(tt <= 0.0):
        raise DomainError("t must be > 0")
    Gt = evaluate(G, tt)
    gt = derivative(G, tt)
    lhs = np.asarray(conjugate_values(G, gt, conj_tol))
    rhs = (p - 1.0) * np.asarray(Gt)
    ident = tt * gt - Gt
    resid = np.abs(lhs - ident) / np.maximum(np.abs(ident), np.finfo(float).tiny)
    identity = summarize("conjugate_identity_residual", resid, rel_tol, 0.0, {"t": tt})
    extras = {"identity_residual": float(np.max(resid)), "identity": identity}
    return summarize(
        "conjugate_of_derivative", lhs, rhs, rel_tol * (1.0 + np.asarray(Gt)), {"t": tt}, extras
    )


def audit_lemma_i(G: OrliczFunction, a, b, K: float, *, tol: float = 1e-9) -> InequalityAudit:
    """Check ``G(a + b) <= (K/2) (G(a) + G(b))``."""
    aa, bb = np.broadcast_arrays(_checked_argument(a, "a"), _checked_argument(b, "b"))
    lhs = evaluate(G, aa + bb)
    rhs = 0.5 * K * (np.asarray(evaluate(G, aa)) + np.asarray(evaluate(G, bb)))
    return summarize("lemma_i_quasi_subadditivity", lhs, rhs, tol, {"a": aa, "b": bb})


def audit_lemma_ii(
    G: OrliczFunction,
    a,
    b,
    eps: float,
    p: float,
    *,
    tol: float = 1e-9,
    conj_tol: float = DEFAULT_CONJ_TOL,
) -> InequalityAudit:
    """Check ``g(a) b <= C (eps G(a) + G(b/eps))`` with ``C = max(p-1, 1)``.

    Also audits the convexity step ``G*(eps s) <= eps G*(s)`` at ``s = g(a)``,
    returned as ``extras["convexity_step"]``.
    """
    if not (0.0 < eps < 1.0):
        raise DomainError(f"eps must lie in (0, 1), got {eps}")
    aa, bb = np.broadcast_arrays(_checked_argument(a, "a"), _checked_argument(b, "b"))
    C = max(p - 1.0, 1.0)
    ga = np.asarray(derivative(G, aa))
    lhs = ga * bb
    rhs = C * (eps * np.asarray(evaluate(G, aa)) + np.asarray(evaluate(G, bb / eps)))
    star_eps = np.asarray(conjugate_values(G, eps * ga, conj_tol))
    star = np.asarray(conjugate_values(G, ga, conj_tol))
    convexity = summarize(
        "conjugate_convexity_step", star_eps, eps * star, tol, {"a": aa, "s": ga}
    )
    return summarize(
        "lemma_ii_eps_young",
        lhs,
        rhs,
        tol,
        {"a": aa, "b": bb, "eps": eps},
        {"C": C, "convexity_step": convexity},
    )
