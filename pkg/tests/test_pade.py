import math

import numpy as np
import pytest

from mittleff.dispatch import ml_auto
from mittleff.exceptions import (
    ClusteredRootsError,
    DomainError,
    PoleError,
    SingularSystemError,
)
from mittleff.pade import (
    PadeApproximant,
    PadeSolver,
    assemble_pade_matrix,
    build_pade,
    coefficients_csv,
    pade_eval,
    partial_fractions,
    partial_fractions_csv,
    series_coeff_a,
    series_coeff_b,
    solve_fixed_q0,
    solve_lu_homogeneous,
    solve_svd_null,
)


class TestSeriesCoefficients:
    def test_a_series(self) -> None:
        assert series_coeff_a(0, 0.5, 1.0) == pytest.approx(1.0, rel=1e-14)
        assert series_coeff_a(1, 0.5, 1.0) == pytest.approx(-1.0 / math.gamma(1.5), rel=1e-14)
        assert series_coeff_a(2, 0.5, 1.0) == pytest.approx(1.0 / math.gamma(2.0), rel=1e-14)

    def test_b_series_direct_region(self) -> None:
        # beta - k alpha > 1/2: plain reciprocal
        assert series_coeff_b(1, 0.3, 1.2) == pytest.approx(1.0 / math.gamma(0.9), rel=1e-13)

    def test_b_series_reflected_region(self) -> None:
        # beta - k alpha <= 1/2: reflection form, checked against Gamma directly
        assert series_coeff_b(3, 0.3, 1.2) == pytest.approx(1.0 / math.gamma(0.3), rel=1e-13)
        assert series_coeff_b(1, 0.5, 1.0) == pytest.approx(1.0 / math.gamma(0.5), rel=1e-13)

    def test_b_vanishes_at_gamma_poles(self) -> None:
        assert series_coeff_b(1, 1.0, 1.0) == 0.0

    def test_index_validation(self) -> None:
        with pytest.raises(DomainError):
            series_coeff_a(-1, 0.5, 1.0)
        with pytest.raises(DomainError):
            series_coeff_b(0, 0.5, 1.0)


class TestAssembly:
    def test_smallest_system(self) -> None:
        C = assemble_pade_matrix(0.5, 1.0, 1, 2)
        a0 = series_coeff_a(0, 0.5, 1.0)
        b1 = series_coeff_b(1, 0.5, 1.0)
        assert C.shape == (2, 3)
        assert C[0, 0] == 1.0 and C[0, 1] == -a0 and C[0, 2] == 0.0
        assert C[1, 0] == 1.0 and C[1, 1] == 0.0 and C[1, 2] == -b1

    def test_reference_shape_and_conditioning(self) -> None:
        C = assemble_pade_matrix(0.2, 1.0, 9, 8)
        assert C.shape == (16, 17)
        reduced = np.delete(C, 8, axis=1)
        assert 1e12 <= np.linalg.cond(reduced) <= 1e14

    def test_full_row_rank(self) -> None:
        C = assemble_pade_matrix(0.5, 1.0, 6, 5)
        assert np.linalg.matrix_rank(C) == C.shape[0]

    @pytest.mark.parametrize("m,n", [(2, 2), (1, 1), (3, 5), (0, 3), (4, 0)])
    def test_invalid_orders(self, m: int, n: int) -> None:
        with pytest.raises(DomainError):
            assemble_pade_matrix(0.5, 1.0, m, n)


class TestSolvers:
    def test_fixed_pins_leading_denominator(self) -> None:
        ap = build_pade(0.2, 1.0, 9, 8, "fixed")
        assert ap.q[0] == 1.0
        assert ap.p[-1] == 0.0
        assert ap.r == 8 and len(ap.p) == 9 and len(ap.q) == 9
        assert ap.solver is PadeSolver.FIXED_Q0

    def test_svd_raw_vector_has_unit_norm(self) -> None:
        C = assemble_pade_matrix(0.2, 1.0, 9, 8)
        ap = solve_svd_null(C, 0.2, 1.0, 9, 8, rescale=False)
        norm = math.sqrt(sum(v * v for v in ap.p[:-1]) + sum(v * v for v in ap.q))
        assert norm == pytest.approx(1.0, abs=1e-12)

    def test_lu_pins_trailing_coefficient(self) -> None:
        C = assemble_pade_matrix(0.2, 1.0, 9, 8)
        ap = solve_lu_homogeneous(C, 0.2, 1.0, 9, 8, rescale=False)
        assert ap.q[-1] == 1.0

    def test_rescaled_solvers_match_fixed_exactly_where_wellposed(self) -> None:
        ap_f = build_pade(0.5, 1.0, 4, 3, "fixed")
        ap_s = build_pade(0.5, 1.0, 4, 3, "svd")
        ap_l = build_pade(0.5, 1.0, 4, 3, "lu")
        for k in range(ap_f.r + 1):
            assert ap_s.q[k] == pytest.approx(ap_f.q[k], rel=1e-12, abs=1e-14)
            assert ap_l.q[k] == pytest.approx(ap_f.q[k], rel=1e-12, abs=1e-14)

    def test_values_agree_despite_ill_conditioning(self) -> None:
        # coefficient vectors drift apart near cond ~ 1e13, values do not
        aps = [build_pade(0.2, 1.0, 9, 8, s) for s in ("fixed", "svd", "lu")]
        for i in range(50):
            x = 10.0 ** (-3.0 + 6.0 * i / 49.0)
            vals = [pade_eval(ap, x) for ap in aps]
            assert abs(vals[0] - vals[1]) <= 5e-15
            assert abs(vals[0] - vals[2]) <= 5e-15

    def test_singular_inputs_are_reported(self) -> None:
        dead = np.zeros((2, 3))
        with pytest.raises(SingularSystemError):
            solve_fixed_q0(dead, 0.5, 1.0, 1, 2)
        with pytest.raises(SingularSystemError):
            solve_svd_null(dead, 0.5, 1.0, 1, 2)
        with pytest.raises(SingularSystemError):
            solve_lu_homogeneous(dead, 0.5, 1.0, 1, 2)

    def test_alpha_validation(self) -> None:
        with pytest.raises(DomainError):
            build_pade(1.5, 1.0, 4, 3)


class TestApproximationQuality:
    def test_matches_function_at_one(self) -> None:
        ap = build_pade(0.5, 1.0, 6, 5)
        want = ml_auto(complex(-1.0), 0.5, 1.0).value.real
        assert pade_eval(ap, 1.0) == pytest.approx(want, abs=1e-5)

    def test_origin_value(self) -> None:
        ap = build_pade(0.7, 1.3, 6, 5)
        assert pade_eval(ap, 0.0) == pytest.approx(1.0 / math.gamma(1.3), rel=1e-12)

    def test_far_field_decay_coefficient(self) -> None:
        # two-point matching forces x*p(x)/q(x) -> b_1 at infinity
        ap = build_pade(0.5, 1.0, 6, 5)
        b1 = series_coeff_b(1, 0.5, 1.0)
        assert 1e8 * pade_eval(ap, 1e8) == pytest.approx(b1, rel=1e-3)

    def test_maclaurin_match_by_series_division(self) -> None:
        # recover the rational function's Taylor coefficients by long
        # division and compare with the target series
        alpha, beta, m, n = 0.2, 1.0, 9, 8
        ap = build_pade(alpha, beta, m, n)
        r = ap.r
        c: list[float] = []
        for k in range(m):
            pk = ap.p[k] if k <= r else 0.0
            acc = pk - sum(ap.q[j] * c[k - j] for j in range(1, min(k, r) + 1))
            c.append(acc / ap.q[0])
        for k in range(m):
            want = series_coeff_a(k, alpha, beta)
            assert c[k] == pytest.approx(want, rel=2e-4, abs=1e-10)

    def test_linear_case_closed_form(self) -> None:
        ap = build_pade(0.5, 1.0, 1, 2)
        a0 = series_coeff_a(0, 0.5, 1.0)
        b1 = series_coeff_b(1, 0.5, 1.0)
        assert ap.p[0] == pytest.approx(a0, rel=1e-14)
        assert ap.q[1] == pytest.approx(a0 / b1, rel=1e-14)


class TestEvaluation:
    def test_negative_x_rejected(self) -> None:
        ap = build_pade(0.5, 1.0, 4, 3)
        with pytest.raises(DomainError):
            pade_eval(ap, -0.1)

    def test_denominator_zero_reported(self) -> None:
        bad = PadeApproximant(0.5, 1.0, 1, 2, 1, (1.0, 0.0), (-1.0, 1.0), PadeSolver.FIXED_Q0)
        with pytest.raises(PoleError):
            pade_eval(bad, 1.0)


class TestPartialFractions:
    def test_reconstruction(self) -> None:
        ap = build_pade(0.5, 1.0, 8, 7)
        pf = partial_fractions(ap)
        for i in range(60):
            x = 50.0 * i / 59.0
            direct = pade_eval(ap, x)
            recon = pf.evaluate_at(x)
            assert abs(recon - direct) <= 1e-10 * abs(direct)

    def test_poles_avoid_evaluation_ray(self) -> None:
        ap = build_pade(0.5, 1.0, 12, 11)
        pf = partial_fractions(ap)
        assert len(pf.poles) == 11
        for pole in pf.poles:
            assert not (pole.imag == 0.0 and pole.real >= 0.0)

    def test_conjugate_pairing_is_exact(self) -> None:
        pf = partial_fractions(build_pade(0.5, 1.0, 8, 7))
        complex_poles = [p for p in pf.poles if p.imag != 0.0]
        for pole in complex_poles:
            assert pole.conjugate() in pf.poles

    def test_clustered_roots_reported(self) -> None:
        # double-root-like denominator: (1 + x)(1 + (1+1e-10) x)
        squeezed = PadeApproximant(
            0.5, 1.0, 3, 2, 2, (1.0, 0.5, 0.0), (1.0 + 1e-10, 2.0 + 1e-10, 1.0), PadeSolver.FIXED_Q0
        )
        with pytest.raises(ClusteredRootsError):
            partial_fractions(squeezed)

    def test_degenerate_leading_coefficient_rejected(self) -> None:
        flat = PadeApproximant(
            0.5, 1.0, 3, 2, 2, (1.0, 0.5, 0.0), (1.0, 1.0, 1e-16), PadeSolver.FIXED_Q0
        )
        with pytest.raises(DomainError):
            partial_fractions(flat)


class TestCsv:
    def test_coefficients_layout(self) -> None:
        ap = build_pade(0.5, 1.0, 2, 1)
        text = coefficients_csv(ap)
        lines = text.splitlines()
        assert lines[0] == "index,p,q"
        assert len(lines) == ap.r + 2
        assert text.endswith("\n") and "\r" not in text
        idx, p0, q0 = lines[1].split(",")
        assert idx == "0" and float(p0) == ap.p[0] and float(q0) == ap.q[0]

    def test_partial_fraction_layout(self) -> None:
        pf = partial_fractions(build_pade(0.5, 1.0, 4, 3))
        text = partial_fractions_csv(pf)
        lines = text.splitlines()
        assert lines[0] == "re_pole,im_pole,re_residue,im_residue"
        assert len(lines) == len(pf.poles) + 1
        first = lines[1].split(",")
        assert complex(float(first[0]), float(first[1])) == pf.poles[0]
