"""Position-dependent-mass Hamiltonian, the point transformation to (Q, P), and
the gauge reduction of the resulting radial-type Schrodinger equation.

Units have hbar = 1. The quantum problem is taken to be

    psi'' - psi'/Q + (16/g**2) (E - V(Q)) psi = 0

with the sextic ``V(Q)`` below; writing ``psi = exp(-alpha Q**2 - beta Q**4) eta``
gives a second-order equation for ``eta`` whose Q**4 and Q**6 terms vanish
for the gauge returned by :func:`gauge_params`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .errors import BadParams, SingularMap
from .numerics import central_difference_jacobian
from .params import ModelParams


@dataclass(frozen=True)
class OscillatorState:
    Q: float
    P: float


@dataclass(frozen=True)
class GaugeParams:
    alpha: float
    beta: float


@dataclass(frozen=True)
class ReducedEquation:
    """``eta'' + (-1/Q - 4 alpha Q - 8 beta Q**3) eta' + (c0 + c2 Q**2) eta = 0``."""

    c0: float
    c2: float
    alpha: float
    beta: float

    def drift(self, Q):
        return -1.0 / Q - 4.0 * self.alpha * Q - 8.0 * self.beta * Q**3

    def potential_term(self, Q):
        return self.c0 + self.c2 * Q**2

    def lhs(self, Q, eta, deta, d2eta):
        return d2eta + self.drift(Q) * deta + self.potential_term(Q) * eta


def potential_x(p: ModelParams, x):
    return p.a * x**3 - p.b * x


def hamiltonian_value(p: ModelParams, s):
    x, y = s[0], s[1]
    return (1.0 + p.g * x) * y * y / 2.0 + p.a * x * x * x - p.b * x


def canonical_map(p: ModelParams, o: OscillatorState) -> tuple[float, float]:
    """(Q, P) -> (x, p): x = (2Q**2 - 1)/g, p = (g/4) P/Q."""
    if p.g == 0:
        raise SingularMap("g = 0 makes the map singular")
    if o.Q == 0:
        raise SingularMap("Q = 0 is outside the map's domain")
    return (2.0 * o.Q**2 - 1.0) / p.g, p.g * o.P / (4.0 * o.Q)


def canonical_jacobian(p: ModelParams, Q: float, P: float) -> np.ndarray:
    """Analytic d(x, p)/d(Q, P)."""
    g = p.g
    return np.array([[4.0 * Q / g, 0.0], [-g * P / (4.0 * Q * Q), g / (4.0 * Q)]])


def verify_canonical(p: ModelParams, samples: int = 100, seed: int = 0, h: float = 1e-6) -> float:
    """Max |det d(x,p)/d(Q,P) - 1| over random samples, by central differences.

    A unit determinant is the one-degree-of-freedom statement that the map
    preserves the Poisson bracket {x, p} = {Q, P} = 1.
    """
    if p.g == 0:
        raise SingularMap("g = 0 makes the map singular")
    rng = np.random.default_rng(seed)
    worst = 0.0
    fn = lambda v: np.array(canonical_map(p, OscillatorState(v[0], v[1])))
    drawn = 0
    while drawn < samples:
        Q = rng.uniform(-2.0, 2.0)
        P = rng.uniform(-5.0, 5.0)
        if abs(Q) < 1e-3 + 10 * h:
            continue
        drawn += 1
        jac = central_difference_jacobian(fn, [Q, P], h)
        worst = max(worst, abs(np.linalg.det(jac) - 1.0))
    return worst


def potential_Q(p: ModelParams, Q):
    if p.g == 0:
        raise BadParams("g must be nonzero")
    a, b, g = p.a, p.b, p.g
    g3 = g**3
    return (
        8 * a * Q**6 / g3
        - 12 * a * Q**4 / g3
        + (6 * a / g3 - 2 * b / g) * Q**2
        + (-a / g3 + b / g)
    )


def max_pullback_residual(p: ModelParams, samples: int = 1000, seed: int = 0) -> float:
    """Max relative gap between V(Q) and V(x(Q)) at random Q in [-2, 2]."""
    rng = np.random.default_rng(seed)
    Q = rng.uniform(-2.0, 2.0, samples)
    lhs = potential_Q(p, Q)
    rhs = potential_x(p, (2 * Q**2 - 1) / p.g)
    terms = np.abs(8 * p.a * Q**6 / p.g**3) + np.abs(p.b / p.g) * (1 + 2 * Q**2) + abs(p.a / p.g**3)
    return float(np.max(np.abs(lhs - rhs) / np.maximum(terms, 1.0)))


def gauge_params(p: ModelParams) -> GaugeParams:
    if not p.g > 0 or not p.a > 0:
        raise BadParams(f"gauge needs g > 0 and a > 0, got g={p.g}, a={p.a}")
    r = p.a / p.g**5
    return GaugeParams(alpha=-math.sqrt(18.0 * r), beta=math.sqrt(8.0 * r))


def gauge_identities(p: ModelParams) -> dict[str, float]:
    """Relative residuals of the two cancellation conditions (Q**4 and Q**6 terms)."""
    gp = gauge_params(p)
    r = p.a / p.g**5
    return {
        "alpha_beta": abs(gp.alpha * gp.beta + 12.0 * r) / (12.0 * r),
        "beta_sq": abs(gp.beta**2 - 8.0 * r) / (8.0 * r),
    }


def reduced_equation(p: ModelParams, E: float) -> ReducedEquation:
    gp = gauge_params(p)
    a, b, g = p.a, p.b, p.g
    c0 = 16.0 * E / g**2 + 16.0 * a / g**5 - 16.0 * b / g**3
    c2 = 4.0 * gp.alpha**2 - 8.0 * gp.beta - (32.0 / g**2) * (3.0 * a / g**3 - b / g)
    return ReducedEquation(c0, c2, gp.alpha, gp.beta)


PsiFn = Callable[[float], tuple[float, float, float]]


def schrodinger_residual(p: ModelParams, E: float, psi: PsiFn, Q_samples: Iterable[float]) -> float:
    """Max over samples of |psi'' - psi'/Q + (16/g**2)(E - V) psi| / max(|psi|, |psi'|, |psi''|).

    ``psi(Q)`` returns the triple (psi, psi', psi''). Any common positive factor
    may be dropped from all three, since the per-sample ratio is scale invariant.
    """
    worst = 0.0
    k = 16.0 / p.g**2
    for Q in Q_samples:
        f, df, d2f = psi(Q)
        res = d2f - df / Q + k * (E - potential_Q(p, Q)) * f
        norm = max(abs(f), abs(df), abs(d2f))
        if norm == 0.0:
            continue
        worst = max(worst, abs(res) / norm)
    return worst


def gauge_psi(gp: GaugeParams, eta_coeffs) -> PsiFn:
    """psi = exp(-alpha Q**2 - beta Q**4) * eta(Q) with ``eta`` given by power-series coefficients.

    The exponential is dropped from the returned triple (it is a common positive
    factor) so that large ``beta`` cannot underflow the evaluation.
    """
    eta = np.polynomial.Polynomial(np.asarray(eta_coeffs, dtype=float))
    deta, d2eta = eta.deriv(1), eta.deriv(2)
    phi = np.polynomial.Polynomial([0.0, 0.0, -gp.alpha, 0.0, -gp.beta])
    dphi, d2phi = phi.deriv(1), phi.deriv(2)

    def psi(Q):
        e, de, d2e = eta(Q), deta(Q), d2eta(Q)
        p1 = dphi(Q)
        return e, p1 * e + de, (d2phi(Q) + p1 * p1) * e + 2.0 * p1 * de + d2e

    return psi


def canon_check(p: ModelParams, samples: int = 100, seed: int = 0) -> dict:
    return {
        "max_det_deviation": verify_canonical(p, samples, seed),
        "max_pullback_residual": max_pullback_residual(p, 1000, seed),
        "gauge_identities": gauge_identities(p),
    }
