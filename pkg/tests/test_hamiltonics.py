import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from ptqes.dynamics import vector_field
from ptqes.errors import BadParams, SingularMap
from ptqes.hamiltonics import (
    GaugeParams,
    OscillatorState,
    canon_check,
    canonical_jacobian,
    canonical_map,
    gauge_identities,
    gauge_params,
    gauge_psi,
    hamiltonian_value,
    max_pullback_residual,
    potential_Q,
    potential_x,
    reduced_equation,
    schrodinger_residual,
    verify_canonical,
)
from ptqes.params import ModelParams

G2 = 0.477122


def test_potential_x_examples():
    p = ModelParams()
    assert potential_x(p, 0.0) == 0.0
    assert potential_x(p, 1.0) == pytest.approx(-1 / 3)
    assert potential_x(p, -1.5) == pytest.approx(2 / 3 * -3.375 + 1.5)


def test_hamiltonian_value():
    p = ModelParams(g=1.0)
    assert hamiltonian_value(p, (0.0, 2.0)) == pytest.approx(2.0)
    assert hamiltonian_value(p, (1.0, 1.0)) == pytest.approx(1.0 - 1 / 3)


def test_generator_reproduces_vector_field():
    rng = np.random.default_rng(3)
    h = 1e-6
    for _ in range(100):
        g = rng.uniform(-2, 2)
        p = ModelParams(g=g)
        x, y = rng.uniform(-2, 2, 2)
        dHdx = (hamiltonian_value(p, (x + h, y)) - hamiltonian_value(p, (x - h, y))) / (2 * h)
        dHdy = (hamiltonian_value(p, (x, y + h)) - hamiltonian_value(p, (x, y - h))) / (2 * h)
        np.testing.assert_allclose([dHdy, -dHdx], vector_field(p, (x, y)), atol=1e-8)


class TestCanonicalMap:
    def test_unit_point(self):
        assert canonical_map(ModelParams(g=1.0), OscillatorState(1.0, 0.0)) == (1.0, 0.0)

    def test_momentum(self):
        x, mom = canonical_map(ModelParams(g=2.0), OscillatorState(0.5, 4.0))
        assert x == pytest.approx(-0.25)
        assert mom == pytest.approx(4.0)

    def test_singular(self):
        with pytest.raises(SingularMap):
            canonical_map(ModelParams(g=1.0), OscillatorState(0.0, 1.0))
        with pytest.raises(SingularMap):
            canonical_map(ModelParams(g=0.0), OscillatorState(1.0, 1.0))

    @given(st.floats(0.05, 5), st.floats(-3, 3).filter(lambda q: abs(q) > 1e-2), st.floats(-5, 5))
    def test_analytic_determinant_is_one(self, g, Q, P):
        jac = canonical_jacobian(ModelParams(g=g), Q, P)
        assert np.linalg.det(jac) == pytest.approx(1.0, rel=1e-12)

    @pytest.mark.parametrize("g", [0.3, 0.5, 1.0, 2.0])
    def test_fd_determinant(self, g):
        assert verify_canonical(ModelParams(g=g), samples=100, seed=1) <= 1e-8

    def test_seed_reproducible(self):
        p = ModelParams(g=0.7)
        assert verify_canonical(p, 50, seed=9) == verify_canonical(p, 50, seed=9)


class TestTransformedPotential:
    @pytest.mark.parametrize("g", [0.2, G2, 1.0, 3.0])
    def test_pullback(self, g):
        assert max_pullback_residual(ModelParams(g=g)) <= 1e-12

    def test_symbolic_pullback(self):
        Q, a, b, g = sp.symbols("Q a b g", positive=True)
        x = (2 * Q**2 - 1) / g
        target = (
            8 * a * Q**6 / g**3 - 12 * a * Q**4 / g**3 + (6 * a / g**3 - 2 * b / g) * Q**2 + (b / g - a / g**3)
        )
        assert sp.simplify(sp.expand(a * x**3 - b * x - target)) == 0

    def test_g_zero(self):
        with pytest.raises(BadParams):
            potential_Q(ModelParams(g=0.0), 1.0)


class TestGauge:
    def test_values_at_g1(self):
        gp = gauge_params(ModelParams(g=1.0))
        assert gp.alpha == pytest.approx(-math.sqrt(12.0))
        assert gp.beta == pytest.approx(math.sqrt(16 / 3))

    @given(st.floats(0.05, 5), st.floats(0.01, 5))
    def test_cancellation_identities(self, g, a):
        res = gauge_identities(ModelParams(a=a, g=g))
        assert res["alpha_beta"] <= 1e-14
        assert res["beta_sq"] <= 1e-14

    def test_rejects_nonpositive_g(self):
        with pytest.raises(BadParams):
            gauge_params(ModelParams(g=-1.0))
        with pytest.raises(BadParams):
            gauge_params(ModelParams(g=0.0))

    def test_c0_at_E0(self):
        from fractions import Fraction

        eq = reduced_equation(ModelParams(g=G2), 0.0)
        gq, aq = Fraction(G2), Fraction(2, 3)
        exact = 16 * aq / gq**5 - 16 / gq**3
        assert eq.c0 == pytest.approx(float(exact), rel=1e-13)
        # rounding g**5 and g**3 to three figures moves this by about one unit
        assert eq.c0 == pytest.approx(284.09, abs=0.01)

    def test_symbolic_reduction(self):
        # sympy oracle: substitute psi = exp(phi) eta into the radial equation and divide by exp(phi)
        Q, E, a, b, g, al, be = sp.symbols("Q E a b g alpha beta")
        eta = sp.Function("eta")(Q)
        phi = -al * Q**2 - be * Q**4
        psi = sp.exp(phi) * eta
        V = 8 * a * Q**6 / g**3 - 12 * a * Q**4 / g**3 + (6 * a / g**3 - 2 * b / g) * Q**2 + (b / g - a / g**3)
        radial = sp.diff(psi, Q, 2) - sp.diff(psi, Q) / Q + 16 / g**2 * (E - V) * psi
        reduced = sp.expand(sp.simplify(radial / sp.exp(phi)))
        d2, d1 = sp.diff(eta, Q, 2), sp.diff(eta, Q)
        no_deriv = sp.expand(reduced.subs({d2: 0}).subs({d1: 0}) / eta)
        poly = sp.Poly(no_deriv, Q)
        assert sp.simplify(poly.coeff_monomial(Q**4) - (16 * al * be + 192 * a / g**5)) == 0
        assert sp.simplify(poly.coeff_monomial(Q**6) - (16 * be**2 - 128 * a / g**5)) == 0
        # numeric coefficients against reduced_equation
        p = ModelParams(g=G2)
        eqn = reduced_equation(p, 1.3)
        vals = {a: p.a, b: p.b, g: p.g, E: 1.3, al: eqn.alpha, be: eqn.beta}
        assert float(poly.coeff_monomial(1).subs(vals)) == pytest.approx(eqn.c0, rel=1e-12)
        assert float(poly.coeff_monomial(Q**2).subs(vals)) == pytest.approx(eqn.c2, rel=1e-12)
        assert abs(float(poly.coeff_monomial(Q**4).subs(vals))) <= 1e-12 * 192 * p.a / p.g**5
        assert abs(float(poly.coeff_monomial(Q**6).subs(vals))) <= 1e-12 * 128 * p.a / p.g**5

    def test_chain_rule_substitution(self):
        # arbitrary eta: radial equation on psi equals exp(phi) times the reduced left side
        p = ModelParams(g=G2)
        E = -2.5
        eq = reduced_equation(p, E)
        gp = GaugeParams(eq.alpha, eq.beta)
        eta = np.polynomial.Polynomial([0.7, -1.1, 0.4, 2.0, -0.3])
        psi = gauge_psi(gp, eta.coef)
        k = 16 / p.g**2
        for Q in np.linspace(0.1, 2.0, 50):
            f, df, d2f = psi(Q)
            radial = d2f - df / Q + k * (E - potential_Q(p, Q)) * f
            red = eq.lhs(Q, eta(Q), eta.deriv(1)(Q), eta.deriv(2)(Q))
            scale = max(abs(f), abs(df), abs(d2f), abs(k * potential_Q(p, Q) * f))
            assert abs(radial - red) <= 1e-12 * scale


class TestSchrodingerResidual:
    def test_scale_invariant(self):
        p = ModelParams(g=1.0)
        psi = lambda Q: (math.exp(-Q * Q), -2 * Q * math.exp(-Q * Q), (4 * Q * Q - 2) * math.exp(-Q * Q))
        psi3 = lambda Q: tuple(3 * v for v in psi(Q))
        qs = np.linspace(0.1, 2, 20)
        assert schrodinger_residual(p, 0.0, psi, qs) == pytest.approx(schrodinger_residual(p, 0.0, psi3, qs))

    def test_gaussian_is_not_a_solution(self):
        p = ModelParams(g=1.0)
        psi = lambda Q: (math.exp(-Q * Q), -2 * Q * math.exp(-Q * Q), (4 * Q * Q - 2) * math.exp(-Q * Q))
        assert schrodinger_residual(p, 0.0, psi, np.linspace(0.1, 2, 50)) > 0.1

    def test_constant_eta_at_structural_energy(self):
        # eta = 1 solves the reduced equation when c0 = c2 = 0
        from ptqes.bdpoly import Branch, solve_qes_g

        g = solve_qes_g(1, branch=Branch.PRINTED)[0]
        p = ModelParams(g=g)
        E = p.b / g - p.a / g**3  # c0 vanishes here
        eq = reduced_equation(p, E)
        assert abs(eq.c0) <= 1e-10 * 16 * p.a / g**5
        assert abs(eq.c2) <= 1e-10 * 16 * p.a / g**5
        res = schrodinger_residual(p, E, gauge_psi(GaugeParams(eq.alpha, eq.beta), [1.0]), np.linspace(0.1, 2, 50))
        assert res <= 1e-10


@settings(max_examples=20)
@given(st.floats(0.1, 3))
def test_canon_check_keys(g):
    out = canon_check(ModelParams(g=g), samples=20)
    assert set(out) == {"max_det_deviation", "max_pullback_residual", "gauge_identities"}
    assert out["max_det_deviation"] <= 1e-8
    assert set(out["gauge_identities"]) == {"alpha_beta", "beta_sq"}
