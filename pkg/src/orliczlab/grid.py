"""Functions sampled at cell midpoints of a uniform 1-D grid.

Modulars ``∫ G(|u|) dx`` are computed by the midpoint rule (default) or by a
trapezoid rule on the midpoint samples, and the Luxemburg norm by bisection
on the scaling parameter.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Union

import numpy as np

from .core import OrliczFunction
from .errors import BracketError, DomainError, DomainMismatchError, EvaluationError

__all__ = [
    "Domain1D",
    "GridFunction",
    "ModularValue",
    "integrate",
    "modular",
    "luxemburg_norm",
    "pointwise_combine",
    "to_csv",
    "from_csv",
    "write_csv",
    "read_csv",
]

RULES = ("midpoint", "trapezoid")


@dataclass(frozen=True)
class Domain1D:
    left: float
    right: float
    cells: int

    def __post_init__(self):
        if not (math.isfinite(self.left) and math.isfinite(self.right)):
            raise DomainError("domain endpoints must be finite")
        if not self.left < self.right:
            raise DomainError(f"need left < right, got [{self.left}, {self.right}]")
        if int(self.cells) != self.cells or self.cells < 1:
            raise DomainError(f"cells must be a positive integer, got {self.cells}")
        object.__setattr__(self, "cells", int(self.cells))

    @property
    def h(self) -> float:
        return (self.right - self.left) / self.cells

    @property
    def length(self) -> float:
        return self.right - self.left

    def midpoints(self) -> np.ndarray:
        return self.left + (np.arange(self.cells) + 0.5) * self.h

    def weights(self, rule: str = "midpoint") -> np.ndarray:
        """Quadrature weights for samples at the cell midpoints."""
        h = self.h
        w = np.full(self.cells, h)
        if rule == "midpoint":
            return w
        if rule != "trapezoid":
            raise DomainError(f"unknown quadrature rule {rule!r}")
        if self.cells < 2:
            raise DomainError("trapezoid rule needs at least 2 cells")
        # Integral of the piecewise-linear interpolant through the midpoint
        # samples, extrapolated linearly over the two half cells at the ends.
        w[0] = w[-1] = 0.5 * h
        w[0] += 5.0 * h / 8.0
        w[1] -= h / 8.0
        w[-1] += 5.0 * h / 8.0
        w[-2] -= h / 8.0
        return w

    def matches(self, other: "Domain1D") -> bool:
        if self.cells != other.cells:
            return False
        scale = max(abs(self.left), abs(self.right), self.length)
        tol = 1e-12 * scale
        return abs(self.left - other.left) <= tol and abs(self.right - other.right) <= tol


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Real values at the cell midpoints of ``domain`` (read-only array)."""

    domain: Domain1D
    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=float, copy=True).reshape(-1)
        if vals.size != self.domain.cells:
            raise DomainError(f"{vals.size} values for {self.domain.cells} cells")
        if not np.all(np.isfinite(vals)):
            i = int(np.argmin(np.isfinite(vals)))
            raise DomainError(f"non-finite value at cell {i}")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_callable(cls, domain: Domain1D, f: Callable[[np.ndarray], np.ndarray]) -> "GridFunction":
        return cls(domain, np.broadcast_to(f(domain.midpoints()), (domain.cells,)))

    @classmethod
    def zeros(cls, domain: Domain1D) -> "GridFunction":
        return cls(domain, np.zeros(domain.cells))

    @property
    def x(self) -> np.ndarray:
        return self.domain.midpoints()

    def __len__(self) -> int:
        return self.domain.cells

    def __eq__(self, other) -> bool:
        if not isinstance(other, GridFunction):
            return NotImplemented
        return self.domain == other.domain and np.array_equal(self.values, other.values)

    def __add__(self, other: "GridFunction") -> "GridFunction":
        return pointwise_combine(self, other, "sum")

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        return pointwise_combine(self, other, "difference")

    def __abs__(self) -> "GridFunction":
        return pointwise_combine(self, op="abs")

    def __mul__(self, c: float) -> "GridFunction":
        return pointwise_combine(self, op="scale", c=c)

    __rmul__ = __mul__

    def __neg__(self) -> "GridFunction":
        return self * -1.0


@dataclass(frozen=True)
class ModularValue:
    value: float
    rule: str = "midpoint"

    def __float__(self) -> float:
        return self.value


def integrate(domain: Domain1D, integrand: np.ndarray, rule: str = "midpoint") -> float:
    """Quadrature of cell-midpoint samples; raises on non-finite samples."""
    f = np.asarray(integrand, dtype=float)
    bad = ~np.isfinite(f)
    if bad.any():
        i = int(np.argmax(bad))
        x = domain.left + (i + 0.5) * domain.h
        raise EvaluationError(f"non-finite integrand {f[i]!r} at cell {i} (x={x!r})")
    return float(np.dot(domain.weights(rule), f))


def modular(G: OrliczFunction, u: GridFunction, rule: str = "midpoint") -> ModularValue:
    """``∫ G(|u(x)|) dx`` over ``u.domain``."""
    if rule not in RULES:
        raise DomainError(f"unknown quadrature rule {rule!r}")
    with np.errstate(over="ignore", invalid="ignore"):
        integrand = G.eval(np.abs(u.values))
    return ModularValue(integrate(u.domain, integrand, rule), rule)


def _modular_of_scaled(G: OrliczFunction, domain: Domain1D, absvals: np.ndarray, lam: float, w: np.ndarray) -> float:
    with np.errstate(over="ignore", invalid="ignore"):
        f = G.eval(absvals / lam)
    s = float(np.dot(w, f))
    return s if math.isfinite(s) else math.inf


def luxemburg_norm(
    G: OrliczFunction,
    u: GridFunction,
    tol: float = 1e-10,
    rule: str = "midpoint",
    max_steps: int = 2000,
) -> float:
    """``inf{λ > 0 : modular(u/λ) <= 1}`` by bracket doubling/halving and bisection.

    Bisection stops once the bracket is narrower than ``tol`` relative to its
    upper end; the returned value satisfies ``modular(u/λ) <= 1``.
    """
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    absvals = np.abs(u.values)
    nz = absvals > 0.0
    if not nz.any():
        return 0.0
    w = u.domain.weights(rule)[nz]
    absvals = absvals[nz]

    def rho(lam):
        return _modular_of_scaled(G, u.domain, absvals, lam, w)

    lam = float(absvals.max())
    steps = 0
    if rho(lam) > 1.0:
        lo = lam
        while rho(lam) > 1.0:
            lo = lam
            lam *= 2.0
            steps += 1
            if steps > max_steps or not math.isfinite(lam):
                raise BracketError("Luxemburg bracket expansion exceeded its cap")
        hi = lam
    else:
        hi = lam
        while rho(lam) <= 1.0:
            hi = lam
            lam /= 2.0
            steps += 1
            if steps > max_steps or lam == 0.0:
                raise BracketError("Luxemburg bracket contraction exceeded its cap")
        lo = lam
    while hi - lo > tol * hi:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if rho(mid) <= 1.0:
            hi = mid
        else:
            lo = mid
    return hi


def pointwise_combine(
    u: GridFunction,
    v: GridFunction | None = None,
    op: str = "difference",
    c: float | None = None,
) -> GridFunction:
    """Cell-wise ``difference`` (u - v), ``sum``, ``abs`` (of u) or ``scale`` (c * u)."""
    if op in ("difference", "sum"):
        if v is None:
            raise DomainError(f"{op} needs two grid functions")
        if not u.domain.matches(v.domain):
            raise DomainMismatchError(f"grids differ: {u.domain} vs {v.domain}")
        vals = u.values - v.values if op == "difference" else u.values + v.values
    elif op == "abs":
        vals = np.abs(u.values)
    elif op == "scale":
        if c is None or not math.isfinite(c):
            raise DomainError("scale needs a finite factor c")
        vals = c * u.values
    else:
        raise DomainError(f"unknown pointwise operation {op!r}")
    return GridFunction(u.domain, vals)


# -- CSV -------------------------------------------------------------------------

PathLike = Union[str, Path]


def to_csv(u: GridFunction) -> str:
    buf = io.StringIO()
    buf.write("x,value\n")
    for x, val in zip(u.x, u.values):
        buf.write(f"{x:.17g},{val:.17g}\n")
    return buf.getvalue()


def from_csv(text: str) -> GridFunction:
    """Parse ``x,value`` rows; the domain is rebuilt from the midpoint spacing."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or [h.strip() for h in header] != ["x", "value"]:
        raise DomainError(f"expected header 'x,value', got {header!r}")
    xs, vals = [], []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 2:
            raise DomainError(f"line {lineno}: expected 2 columns, got {len(row)}")
        xs.append(float(row[0]))
        vals.append(float(row[1]))
    if len(xs) < 2:
        raise DomainError("need at least two rows to recover the grid spacing")
    x = np.asarray(xs)
    n = x.size
    h = (x[-1] - x[0]) / (n - 1)
    if not np.allclose(np.diff(x), h, rtol=1e-9, atol=0.0):
        raise DomainError("x column is not uniformly spaced")
    return GridFunction(Domain1D(x[0] - 0.5 * h, x[-1] + 0.5 * h, n), np.asarray(vals))


def write_csv(u: GridFunction, path: PathLike) -> None:
    Path(path).write_text(to_csv(u))


def read_csv(path: PathLike) -> GridFunction:
    return from_csv(Path(path).read_text())
