"""Tests for the Whittaker-quantization solver.

"oracle" values were produced by an independent mpmath run (30 digits,
mpmath's own whitm/hyp1f1 and findroot) before this module was written;
"reference chain" values are the published four (nu, a, X, alpha-beta,
eps) figures the library is expected to reproduce.
"""

import math

import numpy as np
import pytest

from bicatom.analytic_solver import (
    AnalyticSolution,
    ModelConstants,
    calibrate_nu,
    first_root,
    observables,
    quantization_residual,
    solve_a,
)
from bicatom.morse_fit import REFERENCE_MORSE, MorseParams
from bicatom.specfun import whittaker_m

C = ModelConstants()

NU_REF = 2.89873
# reference chain, published values
A_REF, X_REF = 4.414424, 6.756270935
AB_REF, EPS_REF = 1.823373498, -0.4997331195
# oracle: mpmath solve of the same chain
A_ORACLE = 4.41442436004627
X_ORACLE = 6.75627149122248
AB_ORACLE = 1.8233737948405
EPS_ORACLE = -0.499732968097427
# oracle: mpmath solve at nu = 2.5
A25_ORACLE = 3.969663503727
EPS25_ORACLE = -0.5750798061765
# oracle: the misprint-sign variant of the energy relation at the reference
# chain point; it must stay far from the true eps
EPS_PRINTED_ORACLE = 0.3657783422


class TestQuantizationResidual:
    def test_reference_chain_is_a_root(self):
        res = quantization_residual(A_REF, NU_REF, REFERENCE_MORSE)
        z0 = 2.0 * A_REF * math.exp(-REFERENCE_MORSE.kappa * abs(REFERENCE_MORSE.b))
        slope = abs(whittaker_m(A_REF, NU_REF, z0 + 0.01)
                    - whittaker_m(A_REF, NU_REF, z0 - 0.01)) / 0.02
        assert abs(res) <= 1e-3 * slope

    def test_small_a_has_positive_residual(self):
        assert quantization_residual(0.1, 1.0, REFERENCE_MORSE) > 0.0
        assert quantization_residual(1.0, 2.0, REFERENCE_MORSE) > 0.0

    def test_validation(self):
        with pytest.raises(ValueError):
            quantization_residual(0.0, 1.0, REFERENCE_MORSE)
        with pytest.raises(ValueError):
            quantization_residual(1.0, -1.0, REFERENCE_MORSE)
        with pytest.raises(ValueError):
            quantization_residual(math.nan, 1.0, REFERENCE_MORSE)


class TestFirstRoot:
    @pytest.mark.parametrize("nu", [0.7, 1.0, 1.3, 2.2])
    def test_linear_polynomial_case(self, nu):
        # a = nu + 3/2 truncates the series to 1 - z/(1+2nu)
        assert first_root(nu + 1.5, nu) == pytest.approx(1.0 + 2.0 * nu, abs=1e-9)

    def test_quadratic_polynomial_case(self):
        # a = nu + 5/2, nu = 1: series is 1 - 2z/3 + z^2/12, roots 2 and 6
        assert first_root(3.5, 1.0) == pytest.approx(2.0, abs=1e-9)

    def test_reference_chain_root(self):
        assert first_root(A_REF, NU_REF) == pytest.approx(X_REF, abs=2e-3)

    def test_no_roots_when_series_is_positive(self):
        with pytest.raises(RuntimeError):
            first_root(0.5, 1.0)

    def test_no_root_below_cap(self):
        # the series parameter is negative so a root exists, but for an
        # order this large it sits beyond the z = 200 scan cap
        with pytest.raises(RuntimeError):
            first_root(101.0, 100.0)

    def test_validation(self):
        with pytest.raises(ValueError):
            first_root(-1.0, 1.0)
        with pytest.raises(ValueError):
            first_root(1.0, 0.0)


class TestSolveA:
    def test_reference_chain(self):
        a = solve_a(NU_REF, REFERENCE_MORSE)
        assert a == pytest.approx(A_REF, abs=1e-3)
        assert a == pytest.approx(A_ORACLE, abs=1e-8)

    def test_boundary_point_is_first_root(self):
        a = solve_a(NU_REF, REFERENCE_MORSE)
        z0 = 2.0 * a * math.exp(-REFERENCE_MORSE.kappa * abs(REFERENCE_MORSE.b))
        assert first_root(a, NU_REF) - z0 == pytest.approx(0.0, abs=1e-8)

    def test_oracle_value_at_nu_2p5(self):
        assert solve_a(2.5, REFERENCE_MORSE) == pytest.approx(A25_ORACLE, abs=1e-8)

    def test_validation(self):
        with pytest.raises(ValueError):
            solve_a(0.0, REFERENCE_MORSE)
        with pytest.raises(ValueError):
            solve_a(math.inf, REFERENCE_MORSE)


class TestObservables:
    def test_reference_chain_values(self):
        sol = observables(NU_REF, A_REF, C)
        assert sol.alpha_beta == pytest.approx(AB_REF, abs=1e-4)
        assert sol.eps_over_alpha2 == pytest.approx(EPS_REF, abs=1e-5)

    def test_solved_chain_matches_oracle(self):
        sol = observables(NU_REF, solve_a(NU_REF, REFERENCE_MORSE), C)
        assert sol.X == pytest.approx(X_ORACLE, abs=1e-7)
        assert sol.alpha_beta == pytest.approx(AB_ORACLE, abs=1e-7)
        assert sol.eps_over_alpha2 == pytest.approx(EPS_ORACLE, abs=1e-7)
        # and the published figures at their stated tolerances
        assert sol.a == pytest.approx(A_REF, abs=1e-3)
        assert sol.X == pytest.approx(X_REF, abs=2e-3)
        assert sol.alpha_beta == pytest.approx(AB_REF, abs=1e-3)
        assert sol.eps_over_alpha2 == pytest.approx(EPS_REF, abs=1e-4)

    def test_degenerate_zero_a(self):
        sol = observables(2.0, 0.0, C)
        assert sol.alpha_beta == 0.0
        assert sol.X == 0.0
        assert sol.eps_over_alpha2 == -math.inf

    def test_alpha_beta_quadratic_in_a(self):
        base = observables(2.0, 1.25, C).alpha_beta
        assert observables(2.0, 2.5, C).alpha_beta == 4.0 * base

    @pytest.mark.parametrize("nu", [2.5, NU_REF])
    def test_all_five_invariants_hold(self, nu):
        m = REFERENCE_MORSE
        sol = observables(nu, solve_a(nu, m), C)
        assert abs(sol.a - math.sqrt(2.0 * sol.A_abs)) <= 1e-12
        assert abs(sol.E + 0.5 * nu ** 2) <= 1e-12
        assert abs(sol.X - 2.0 * sol.a * math.exp(-m.kappa * abs(m.b))) <= 1e-10
        assert abs(sol.alpha_beta - m.kappa ** 2 * sol.a ** 2 / (2.0 * abs(m.G))) <= 1e-12
        assert sol.eps_over_alpha2 < 0.0

    def test_validation(self):
        with pytest.raises(ValueError):
            observables(-1.0, 1.0, C)
        with pytest.raises(ValueError):
            observables(1.0, -1.0, C)


class TestAnalyticSolutionType:
    def test_inconsistent_fields_rejected(self):
        with pytest.raises(ValueError):
            AnalyticSolution(nu=2.0, a=1.0, X=1.5, A_abs=3.0, E=-2.0,
                             alpha_beta=0.1, eps_over_alpha2=-0.5)
        with pytest.raises(ValueError):
            AnalyticSolution(nu=2.0, a=1.0, X=1.5, A_abs=0.5, E=-1.0,
                             alpha_beta=0.1, eps_over_alpha2=-0.5)
        with pytest.raises(ValueError):
            AnalyticSolution(nu=2.0, a=1.0, X=1.5, A_abs=0.5, E=-2.0,
                             alpha_beta=0.1, eps_over_alpha2=0.5)
        with pytest.raises(ValueError):
            AnalyticSolution(nu=-2.0, a=1.0, X=1.5, A_abs=0.5, E=-2.0,
                             alpha_beta=0.1, eps_over_alpha2=-0.5)


class TestModelConstants:
    def test_defaults(self):
        assert C.morse == REFERENCE_MORSE
        assert C.alpha == pytest.approx(1.0 / 137.036, rel=0.0)
        assert C.quarter_beta == pytest.approx(1.8540746773, abs=1e-9)

    def test_validation(self):
        with pytest.raises(ValueError):
            ModelConstants(quarter_beta=1.85407468)
        with pytest.raises(ValueError):
            ModelConstants(alpha=1.0 / 137.0)


class TestEnergyRelationSign:
    def test_misprint_variant_does_not_reproduce_chain(self):
        m = REFERENCE_MORSE
        sol = observables(NU_REF, solve_a(NU_REF, m), C)
        ab = sol.alpha_beta
        eps_printed = (0.5 * m.kappa ** 2 * NU_REF ** 2
                       - ab * (m.V0 + C.quarter_beta - abs(m.G))) / ab ** 2
        assert eps_printed == pytest.approx(EPS_PRINTED_ORACLE, abs=1e-6)
        assert abs(eps_printed - EPS_REF) > 0.1
        assert sol.eps_over_alpha2 == pytest.approx(EPS_REF, abs=1e-4)


class TestCalibrateNu:
    def test_empirical_target(self):
        sol = calibrate_nu(-0.49973, C)
        assert sol.nu == pytest.approx(NU_REF, abs=1e-3)
        assert sol.alpha_beta == pytest.approx(1.8234, abs=1e-3)
        assert sol.eps_over_alpha2 == pytest.approx(-0.49973, abs=1e-7)

    def test_round_trip(self):
        target = observables(NU_REF, solve_a(NU_REF, REFERENCE_MORSE), C).eps_over_alpha2
        sol = calibrate_nu(target, C)
        assert sol.nu == pytest.approx(NU_REF, abs=1e-6)

    def test_eps_monotone_increasing_in_nu(self):
        eps = [observables(nu, solve_a(nu, REFERENCE_MORSE), C).eps_over_alpha2
               for nu in (2.0, 2.5, 3.0, 3.5)]
        assert all(a < b for a, b in zip(eps, eps[1:]))
        assert eps[0] < -0.6 and eps[-1] > -0.45
        assert eps[1] == pytest.approx(EPS25_ORACLE, abs=1e-8)

    def test_unattainable_target(self):
        with pytest.raises(RuntimeError):
            calibrate_nu(-0.05, C)

    def test_validation(self):
        with pytest.raises(ValueError):
            calibrate_nu(math.nan, C)


class TestGroundStateGeometry:
    def test_nodeless_on_interior(self):
        a = solve_a(NU_REF, REFERENCE_MORSE)
        sol = observables(NU_REF, a, C)
        zs = np.linspace(sol.X / 1000.0, sol.X * (1.0 - 1.0 / 1000.0), 1000)
        vals = whittaker_m(a, NU_REF, zs)
        assert np.all(vals > 0.0)

    def test_domain_mapping_endpoints(self):
        m = REFERENCE_MORSE
        a = solve_a(NU_REF, m)
        sol = observables(NU_REF, a, C)
        z_at_origin = 2.0 * a * math.exp(-m.kappa * (0.0 - m.b))
        assert z_at_origin == sol.X
        z_far = 2.0 * a * math.exp(-m.kappa * (1000.0 - m.b))
        assert 0.0 < z_far < 1e-200
