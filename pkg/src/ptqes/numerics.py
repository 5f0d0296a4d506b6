"""Shared numerical kernels.

Everything here is a pure function of its arguments. The polynomial and
eigenvalue helpers work in double precision by default; ``poly_roots`` also
accepts ``prec_bits`` to run the companion-matrix route in mpmath at an
arbitrary mantissa width, which is what the golden-value oracle uses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import mpmath
import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DegenerateInput, NonFiniteState, NoSignChange


@dataclass(frozen=True)
class Poly:
    """Real polynomial in ascending-degree order.

    ``coeffs[k]`` multiplies ``z**k`` where ``z = (E - center) / scale``.
    The default ``center=0, scale=1`` is the plain power basis in ``E``;
    a nontrivial affine map keeps expanded coefficients well conditioned
    when the roots sit in a narrow band far from the origin.
    """

    coeffs: tuple[float, ...]
    center: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        c = tuple(float(x) for x in self.coeffs)
        # trim trailing (highest-degree) zeros so the leading coefficient is nonzero
        while len(c) > 1 and c[-1] == 0.0:
            c = c[:-1]
        if not c:
            c = (0.0,)
        object.__setattr__(self, "coeffs", c)
        if self.scale == 0.0:
            raise DegenerateInput("Poly scale must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c == 0.0 for c in self.coeffs)

    def monic(self) -> "Poly":
        if self.is_zero():
            raise DegenerateInput("zero polynomial has no monic form")
        lead = self.coeffs[-1]
        return Poly(tuple(c / lead for c in self.coeffs), self.center, self.scale)

    def __call__(self, E):
        z = (np.asarray(E, dtype=float) - self.center) / self.scale
        return np.polynomial.polynomial.polyval(z, self.coeffs)


@dataclass(frozen=True)
class TriDiag:
    diag: tuple[float, ...]
    offdiag: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(float(x) for x in self.diag))
        object.__setattr__(self, "offdiag", tuple(float(x) for x in self.offdiag))
        if len(self.diag) < 1 or len(self.offdiag) != len(self.diag) - 1:
            raise DegenerateInput(
                f"TriDiag needs len(offdiag) == len(diag) - 1, got "
                f"{len(self.diag)} and {len(self.offdiag)}"
            )


def find_root_bracketed(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-14,
    max_newton: int = 8,
) -> float:
    """Bisection down to a bracket of width ``tol``, then a Newton polish.

    The Newton iterate is kept only if it stays inside the final bracket and
    does not increase ``|f|``, so the returned point is always certified by
    a sign change of ``f`` across a bracket no wider than ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo, hi = float(lo), float(hi)
    if lo > hi:
        lo, hi = hi, lo
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0:
        raise NoSignChange(f"f({lo})={flo:.6g} and f({hi})={fhi:.6g} have the same sign")

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm

    r = lo if abs(flo) <= abs(fhi) else hi
    fr = f(r)
    h = max(tol, 1e-8 * max(1.0, abs(r)))
    for _ in range(max_newton):
        d = (f(r + h) - f(r - h)) / (2 * h)
        if d == 0 or not math.isfinite(d):
            break
        cand = r - fr / d
        if not (lo <= cand <= hi):
            break
        fc = f(cand)
        if abs(fc) >= abs(fr):
            break
        r, fr = cand, fc
        if fr == 0.0:
            break
    return r


def eig_symmetric_tridiagonal(m: TriDiag) -> np.ndarray:
    """Ascending eigenvalues of a real symmetric tridiagonal matrix (LAPACK stemr)."""
    d = np.asarray(m.diag, dtype=float)
    if d.size == 1:
        return d.copy()
    w = eigh_tridiagonal(d, np.asarray(m.offdiag, dtype=float), eigvals_only=True)
    return np.sort(w)


def companion_matrix(p: Poly) -> np.ndarray:
    """Frobenius companion matrix of the monic form of ``p`` (last-column convention)."""
    q = p.monic()
    n = q.degree
    c = np.zeros((n, n))
    if n > 1:
        c[1:, :-1] = np.eye(n - 1)
    c[:, -1] = -np.asarray(q.coeffs[:-1])
    return c


def poly_roots(p: Poly, prec_bits: int | None = None) -> np.ndarray:
    """All roots of ``p`` with multiplicity, sorted by real part.

    Double precision uses LAPACK on the companion matrix. With ``prec_bits``
    the same companion matrix is diagonalized by mpmath at that mantissa width
    and the result is rounded back to complex128.
    """
    if p.is_zero():
        raise DegenerateInput("cannot take roots of the zero polynomial")
    if p.degree < 1:
        raise DegenerateInput("constant polynomial has no roots")
    if prec_bits is None:
        z = np.linalg.eigvals(companion_matrix(p))
    else:
        z = mp_companion_eigvals(p.coeffs, prec_bits)
    r = p.center + p.scale * np.asarray(z, dtype=complex)
    return r[np.lexsort((r.imag, r.real))]


def mp_companion_eigvals(coeffs: Sequence, prec_bits: int) -> np.ndarray:
    """Eigenvalues of the companion matrix of ascending ``coeffs`` (any mpmath-coercible numbers)."""
    with mpmath.workprec(prec_bits):
        c = [mpmath.mpf(x) for x in coeffs]
        n = len(c) - 1
        lead = c[-1]
        if n == 1:
            return np.array([complex(-c[0] / lead)])
        m = mpmath.zeros(n, n)
        for i in range(1, n):
            m[i, i - 1] = 1
        for i in range(n):
            m[i, n - 1] = -c[i] / lead
        ev = mpmath.eig(m, left=False, right=False)
        return np.array([complex(e) for e in ev])


def rk4_step(f: Callable[[Sequence[float]], Sequence[float]], s: Sequence[float], dt: float) -> tuple[float, ...]:
    """One classical fourth-order Runge-Kutta step of the autonomous ODE s' = f(s).

    Works on plain float sequences (the state here is tiny, and per-step numpy
    overhead would dominate long integrations).
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    s = tuple(float(v) for v in s)
    h2 = 0.5 * dt
    k1 = f(s)
    k2 = f(tuple(v + h2 * k for v, k in zip(s, k1)))
    k3 = f(tuple(v + h2 * k for v, k in zip(s, k2)))
    k4 = f(tuple(v + dt * k for v, k in zip(s, k3)))
    out = tuple(v + (dt / 6.0) * (a + 2.0 * b + 2.0 * c + d) for v, a, b, c, d in zip(s, k1, k2, k3, k4))
    if not all(math.isfinite(v) for v in out):
        raise NonFiniteState(f"non-finite state after RK4 step from {list(s)}")
    return out


def central_difference_jacobian(
    f: Callable[[np.ndarray], np.ndarray], x: Sequence[float], h: float = 1e-6
) -> np.ndarray:
    """Jacobian of a vector function by second-order central differences."""
    x = np.asarray(x, dtype=float)
    f0 = np.atleast_1d(np.asarray(f(x), dtype=float))
    jac = np.empty((f0.size, x.size))
    for j in range(x.size):
        e = np.zeros_like(x)
        e[j] = h
        jac[:, j] = (np.atleast_1d(f(x + e)) - np.atleast_1d(f(x - e))) / (2 * h)
    return jac


def max_derivative_deviation(
    f: Callable[[np.ndarray], np.ndarray],
    jac: Callable[[np.ndarray], np.ndarray],
    points: Sequence[Sequence[float]],
    h: float = 1e-6,
) -> float:
    """Largest entrywise |analytic - finite-difference| Jacobian gap over ``points``."""
    worst = 0.0
    for x in points:
        gap = np.max(np.abs(np.asarray(jac(np.asarray(x, float))) - central_difference_jacobian(f, x, h)))
        worst = max(worst, float(gap))
    return worst
