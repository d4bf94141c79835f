import cmath
import math
from itertools import combinations

import pytest

from mittleff.asymptotic import ml_asymptotic
from mittleff.contours import build_hyperbolic_rule
from mittleff.dispatch import DEFAULT_TOL, ml_auto, mittag_leffler, quadrature_n_for_tol
from mittleff.exceptions import DomainError
from mittleff.kernels import reciprocal_gamma
from mittleff.quadrature import Method, ml_quad, ml_quad_neg_axis_wide_alpha
from mittleff.series import ml_series

HYP14 = build_hyperbolic_rule(14)


class TestRouting:
    def test_origin_uses_series(self) -> None:
        res = ml_auto(0j, 0.7, 1.3)
        assert res.method is Method.SERIES
        assert res.value == complex(reciprocal_gamma(1.3))

    def test_unit_disk_uses_series(self) -> None:
        assert ml_auto(complex(0.9), 0.5, 1.0).method is Method.SERIES
        assert ml_auto(complex(0.0, -1.0), 3.2, 1.0).method is Method.SERIES

    def test_large_negative_uses_asymptotic(self) -> None:
        res = ml_auto(complex(-15.0), 0.7, 1.0, 1e-12)
        assert res.method is Method.ASYMPTOTIC

    def test_moderate_uses_quadrature(self) -> None:
        res = ml_auto(complex(3.0), 0.5, 1.0)
        assert res.method is Method.QUAD_HYPERBOLIC

    def test_unconverged_asymptotic_falls_back(self) -> None:
        # x=5 at alpha=0.7 passes the size gate but the expansion cannot
        # reach 1e-12, so quadrature must take over
        res = ml_auto(complex(-5.0), 0.7, 1.0, 1e-12)
        assert res.method is Method.QUAD_HYPERBOLIC

    def test_wide_alpha_uses_reduction(self) -> None:
        res = ml_auto(complex(4.0, 3.0), 1.8, 0.9)
        assert res.method is Method.REDUCTION

    def test_tol_controls_node_count(self) -> None:
        res = ml_auto(complex(-3.0), 0.5, 1.0, tol=1e-2)
        assert res.method is Method.QUAD_HYPERBOLIC
        assert res.nodes_or_terms == 7  # N=3


class TestAgreement:
    def test_matches_asymptotic_table_reference(self) -> None:
        got = ml_auto(complex(-15.0), 0.7, 1.0, 1e-12).value
        ref = ml_quad(complex(-15.0), 0.7, 1.0, HYP14).value
        assert abs(got - ref) <= 1e-12

    def test_reduction_matches_two_pole_method(self) -> None:
        got = ml_auto(complex(-4.0), 1.5, 1.0, 1e-12).value
        ref = ml_quad_neg_axis_wide_alpha(4.0, 1.5, 1.0, HYP14).value
        assert abs(got - ref) <= 1e-11

    def test_reduction_frozen_value(self) -> None:
        # 60-digit series reference
        want = complex(3.8122934868870646712, 4.6382700690688549749)
        got = ml_auto(complex(4.0, 3.0), 1.8, 0.9).value
        assert abs(got - want) <= 1e-11 * abs(want)

    def test_small_alpha_frozen_value(self) -> None:
        # 60-digit series reference; exp part alone is ~79486/3.3
        want = 79485.907625183497177
        got = ml_auto(complex(2.0), 0.3, 1.0).value
        assert got.imag == 0.0
        assert got.real == pytest.approx(want, rel=1e-11)

    def test_methods_agree_where_they_claim_validity(self) -> None:
        # series claims |z| <= 1 (its routing region) and convergence;
        # the expansion claims its stopping test; quadrature claims z != 0
        tol = 1e-12
        for alpha in (0.25, 0.5, 0.75, 1.0):
            for i in range(21):
                z = complex(-5.0 + 6.0 * i / 20.0)
                vals = []
                if abs(z) <= 1.0:
                    sr = ml_series(z, alpha, 1.0, tol=tol)
                    if sr.converged:
                        vals.append(sr.value)
                if z != 0:
                    ar = ml_asymptotic(z, alpha, 1.0, tol)
                    if ar.converged:
                        vals.append(ar.value)
                    vals.append(ml_quad(z, alpha, 1.0, HYP14).value)
                for a, b in combinations(vals, 2):
                    assert abs(a - b) <= 10.0 * tol * max(1.0, abs(a))


class TestClosedForms:
    def test_alpha_one_is_exp(self) -> None:
        for re in (-5.0, -2.5, 0.0, 2.5, 5.0):
            for im in (-5.0, -1.0, 0.0, 1.0, 5.0):
                z = complex(re, im)
                want = cmath.exp(z)
                got = ml_auto(z, 1.0, 1.0).value
                assert abs(got - want) <= 1e-11 * max(1.0, abs(want))

    def test_alpha_two_is_cosh_sqrt(self) -> None:
        for i in range(30):
            x = -25.0 + 29.0 * i / 29.0
            want = cmath.cosh(cmath.sqrt(complex(x)))
            got = ml_auto(complex(x), 2.0, 1.0).value
            assert abs(got - want) <= 1e-10 * abs(want)

    def test_reduction_is_single_level(self) -> None:
        # ceil(alpha) rotations always land in the alpha <= 1 range
        for alpha in (1.2, 1.8, 2.0, 3.7, 6.5):
            m = math.ceil(alpha)
            assert alpha / m <= 1.0
        res = ml_auto(complex(8.0, 1.0), 3.7, 1.0)
        assert res.method is Method.REDUCTION
        assert cmath.isfinite(res.value)


class TestInterface:
    def test_wrapper_returns_value(self) -> None:
        assert mittag_leffler(complex(-1.0), 0.5) == ml_auto(complex(-1.0), 0.5, 1.0).value

    def test_node_count_for_tolerance(self) -> None:
        assert quadrature_n_for_tol(1e-14) == 14
        assert quadrature_n_for_tol(1e-2) == 3
        assert quadrature_n_for_tol(1e-6) == 7

    @pytest.mark.parametrize("alpha", [0.0, -1.0])
    def test_alpha_validation(self, alpha: float) -> None:
        with pytest.raises(DomainError):
            ml_auto(1.0, alpha, 1.0)

    @pytest.mark.parametrize("tol", [1e-16, 0.5, 0.0])
    def test_tol_validation(self, tol: float) -> None:
        with pytest.raises(DomainError):
            ml_auto(1.0, 0.5, 1.0, tol)

    def test_default_tol(self) -> None:
        assert DEFAULT_TOL == 1e-14
