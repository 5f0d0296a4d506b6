"""The planar quadratic system

    x' = y + g x y
    y' = 1 - 2 x**2 - g y**2 / 2

its fixed points and their stability, parameter scans over ``g``, and RK4
trajectories with the conserved Hamiltonian tracked alongside.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable

import numpy as np

from .errors import NoReturn, NonFiniteState, NonRealFixedPoint
from .numerics import rk4_step
from .params import ModelParams

__all__ = [
    "ModelParams",
    "FPClass",
    "FixedPointReport",
    "Trajectory",
    "vector_field",
    "jacobian",
    "fixed_points",
    "classify",
    "bifurcation_scan",
    "integrate",
    "measure_period",
]

SQRT2 = math.sqrt(2.0)
FAMILIES = ("i", "ii", "iii", "iv")


class FPClass(str, Enum):
    CENTER = "Center"
    SADDLE = "Saddle"
    DEGENERATE = "Degenerate"
    NONREAL = "NonReal"


@dataclass(frozen=True)
class FixedPointReport:
    family: str
    location: tuple[complex, complex]
    eigenvalues: tuple[complex, complex]
    lambda_sq: complex
    cls: FPClass
    is_complex: bool = False

    @property
    def x(self) -> float:
        return self.location[0].real

    @property
    def y(self) -> float:
        return self.location[1].real


@dataclass
class Trajectory:
    samples: np.ndarray  # columns t, x, y, H
    dt: float
    method: str = "rk4"
    error: str | None = None
    max_energy_drift: float = 0.0

    @property
    def t(self) -> np.ndarray:
        return self.samples[:, 0]

    @property
    def x(self) -> np.ndarray:
        return self.samples[:, 1]

    @property
    def y(self) -> np.ndarray:
        return self.samples[:, 2]

    @property
    def H(self) -> np.ndarray:
        return self.samples[:, 3]


def vector_field(p: ModelParams, s) -> np.ndarray:
    x, y = s[0], s[1]
    g = p.g
    return np.array([y + g * x * y, 1.0 - 2.0 * x * x - 0.5 * g * y * y])


def jacobian(p: ModelParams, s) -> np.ndarray:
    x, y = s[0], s[1]
    g = p.g
    return np.array([[g * y, 1.0 + g * x], [-4.0 * x, -g * y]])


def _lambda_sq(g: float, x: complex, y: complex) -> complex:
    # trace vanishes at every fixed point, so lambda**2 = -det(J)
    return g * g * y * y - 4.0 * x * (1.0 + g * x)


def _report(p: ModelParams, family: str, x: complex, y: complex, is_complex: bool) -> FixedPointReport:
    lam2 = _lambda_sq(p.g, x, y)
    if not is_complex:
        lam2 = complex(lam2.real if isinstance(lam2, complex) else lam2, 0.0)
    lam = cmath.sqrt(lam2)
    rep = FixedPointReport(
        family=family,
        location=(complex(x), complex(y)),
        eigenvalues=(lam, -lam),
        lambda_sq=lam2,
        cls=FPClass.NONREAL,
        is_complex=is_complex,
    )
    if is_complex:
        return rep
    scale = max(1.0, float(np.max(np.abs(jacobian(p, (rep.x, rep.y))))) ** 2)
    return replace(rep, cls=classify(rep, 1e-12 * scale))


def fixed_points(p: ModelParams, include_complex: bool = False) -> list[FixedPointReport]:
    """Fixed points in family order (i)-(iv).

    Families (iii)/(iv) sit at ``x = -1/g`` with ``y**2 = (2/g)(1 - 2/g**2)``;
    they are real when that quantity is non-negative and are otherwise
    returned only with ``include_complex`` (and never classified).
    """
    out = [
        _report(p, "i", 1 / SQRT2, 0.0, False),
        _report(p, "ii", -1 / SQRT2, 0.0, False),
    ]
    g = p.g
    if g == 0:
        return out
    ysq = (2.0 / g) * (1.0 - 2.0 / g**2)
    if ysq >= 0:
        ys = math.sqrt(ysq)
        out.append(_report(p, "iii", -1.0 / g, ys, False))
        out.append(_report(p, "iv", -1.0 / g, -ys, False))
    elif include_complex:
        ys = cmath.sqrt(ysq)
        out.append(_report(p, "iii", complex(-1.0 / g), ys, True))
        out.append(_report(p, "iv", complex(-1.0 / g), -ys, True))
    return out


def classify(fp: FixedPointReport, tol: float = 1e-12) -> FPClass:
    if fp.is_complex:
        raise NonRealFixedPoint(f"family {fp.family} fixed point is complex")
    lam2 = fp.lambda_sq.real
    if lam2 < -tol:
        return FPClass.CENTER
    if lam2 > tol:
        return FPClass.SADDLE
    return FPClass.DEGENERATE


@dataclass(frozen=True)
class ScanRow:
    g: float
    fp: str
    re_lambda: float
    im_lambda: float
    cls: FPClass


def bifurcation_scan(
    g_min: float, g_max: float, steps: int, a: float = 2.0 / 3.0, b: float = 1.0
) -> list[ScanRow]:
    """One row per (grid point, real fixed point); ``lambda`` is the root with Re, Im >= 0."""
    if steps < 2:
        raise ValueError("steps must be >= 2")
    rows = []
    for g in np.linspace(g_min, g_max, steps):
        for fp in fixed_points(ModelParams(a, b, float(g))):
            lam = fp.eigenvalues[0]
            rows.append(ScanRow(float(g), fp.family, abs(lam.real), abs(lam.imag), fp.cls))
    return rows


def integrate(p: ModelParams, s0, dt: float, t_max: float) -> Trajectory:
    """Fixed-step RK4 from ``s0`` to ``t_max``.

    Blow-up does not raise: the trajectory up to the last finite state is
    returned with ``error`` set.
    """
    from .hamiltonics import hamiltonian_value

    if dt <= 0 or t_max <= dt:
        raise ValueError("need dt > 0 and t_max > dt")
    n = int(round(t_max / dt))
    g = p.g

    def f(st):
        x, y = st
        return (y + g * x * y, 1.0 - 2.0 * x * x - 0.5 * g * y * y)

    xy = np.empty((n + 1, 2))
    s = (float(s0[0]), float(s0[1]))
    xy[0] = s
    error = None
    last = n
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(1, n + 1):
            try:
                s = rk4_step(f, s, dt)
            except (NonFiniteState, OverflowError) as exc:
                error = f"NonFiniteState: {exc}"
                last = k - 1
                break
            xy[k] = s
        xy = xy[: last + 1]
        H = hamiltonian_value(p, (xy[:, 0], xy[:, 1]))
    samples = np.column_stack([np.arange(last + 1) * dt, xy, H])
    drift = float(np.max(np.abs(H - H[0])))
    return Trajectory(samples, dt, "rk4", error, drift)


def measure_period(tr: Trajectory, field_fn: Callable | None = None) -> float:
    """Time between the first two same-direction crossings of the section y = y0.

    The crossing direction is the sign of y' at the start. ``field_fn`` supplies
    y' there; if omitted it is estimated from the first step. Crossing times
    are linearly interpolated between bracketing samples.
    """
    t, y = tr.t, tr.y
    if len(t) < 3:
        raise NoReturn("trajectory too short")
    y0 = y[0]
    if field_fn is not None:
        ydot0 = field_fn(tr.samples[0, 1:3])[1]
    else:
        ydot0 = (y[1] - y[0]) / (t[1] - t[0])
    d = np.sign(ydot0)
    if d == 0:
        raise NoReturn("initial velocity tangent to section (fixed point?)")
    s = d * (y - y0)
    idx = np.nonzero((s[:-1] <= 0) & (s[1:] > 0))[0]
    if len(idx) < 2:
        raise NoReturn(f"only {len(idx)} crossing(s) of y = {y0:.6g} within t = {t[-1]:.6g}")
    times = []
    for k in idx[:2]:
        frac = -s[k] / (s[k + 1] - s[k])
        times.append(t[k] + frac * (t[k + 1] - t[k]))
    return float(times[1] - times[0])


def linear_period(p: ModelParams) -> float:
    """Small-oscillation period about the family-(i) center."""
    lam2 = -2.0 * SQRT2 * (1.0 + p.g / SQRT2)
    if lam2 >= 0:
        raise ValueError("family (i) is not a center at this g")
    return 2.0 * math.pi / math.sqrt(-lam2)
