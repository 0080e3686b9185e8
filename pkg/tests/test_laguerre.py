import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from landaudelta.laguerre import (
    LaguerreSpec,
    gauss_laguerre_rule,
    laguerre_derivative,
    laguerre_eval,
    laguerre_zeros,
    magnitude_envelope,
    orthogonality_defect,
    positive_zeros,
)
from landaudelta.verify import reflection_defect


def explicit_degree1(alpha, t):
    return -t + alpha + 1.0


def explicit_degree2(alpha, t):
    return 0.5 * (t * t - 2.0 * (alpha + 2.0) * t + (alpha + 2.0) * (alpha + 1.0))


class TestEval:
    def test_degree_zero_is_one(self):
        assert laguerre_eval(LaguerreSpec(0, 3.7), 11.0) == 1.0

    def test_degree_one_zero_at_alpha_plus_one(self):
        assert laguerre_eval(LaguerreSpec(1, 2.0), 3.0) == 0.0

    def test_degree_two_frozen_value(self):
        # 0.5 * (4 - 8 + 2) = -1
        assert laguerre_eval(LaguerreSpec(2, 0.0), 2.0) == pytest.approx(-1.0, abs=1e-15)

    @given(
        alpha=st.floats(-3.0, 8.0),
        t=st.floats(0.0, 40.0),
    )
    @settings(max_examples=200, deadline=None)
    def test_matches_closed_forms(self, alpha, t):
        assert laguerre_eval(LaguerreSpec(1, alpha), t) == pytest.approx(
            explicit_degree1(alpha, t), rel=1e-12, abs=1e-12
        )
        assert laguerre_eval(LaguerreSpec(2, alpha), t) == pytest.approx(
            explicit_degree2(alpha, t), rel=1e-12, abs=1e-11
        )

    def test_vectorized_matches_scalar(self):
        spec = LaguerreSpec(5, 0.3)
        t = np.linspace(0.0, 25.0, 11)
        vec = laguerre_eval(spec, t)
        assert vec.shape == t.shape
        for ti, vi in zip(t, vec):
            assert laguerre_eval(spec, float(ti)) == vi

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            LaguerreSpec(-1, 0.0)


class TestDerivative:
    def test_frozen_values(self):
        assert laguerre_derivative(LaguerreSpec(1, 0.0), 5.0) == -1.0
        # -L_1^(1)(0) = -(0 + 1 + 1)
        assert laguerre_derivative(LaguerreSpec(2, 0.0), 0.0) == -2.0

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            laguerre_derivative(LaguerreSpec(0, 1.0), 1.0)

    def test_finite_difference_oracle(self):
        rng = np.random.default_rng(42)
        h = 1e-5
        for _ in range(100):
            q = int(rng.integers(1, 11))
            alpha = float(rng.uniform(-0.9, 5.0))
            t = float(rng.uniform(0.0, 40.0))
            spec = LaguerreSpec(q, alpha)
            fd = (laguerre_eval(spec, t + h) - laguerre_eval(spec, t - h)) / (2 * h)
            scale = max(1.0, abs(fd))
            assert abs(laguerre_derivative(spec, t) - fd) <= 1e-8 * scale


class TestZeros:
    def test_degree_zero_empty(self):
        assert laguerre_zeros(LaguerreSpec(0, 0.3)) == []
        assert laguerre_zeros(LaguerreSpec(0, -17.0)) == []

    @pytest.mark.parametrize("k", range(1, 9))
    def test_degree_one_negative_parameter(self, k):
        zeros = laguerre_zeros(LaguerreSpec(1, float(k - 1)))
        assert len(zeros) == 1
        z, m = zeros[0]
        assert m == 1
        assert z == pytest.approx(float(k), rel=1e-14)

    @pytest.mark.parametrize("k", range(1, 9))
    def test_degree_two_zeros_k_pm_sqrt_k(self, k):
        zeros = laguerre_zeros(LaguerreSpec(2, float(k - 2)))
        expected = sorted(z for z in (k - math.sqrt(k), k + math.sqrt(k)) if z > 0)
        got = [z for z, _ in zeros if z > 0]
        assert got == pytest.approx(expected, rel=1e-12)

    def test_null_root_multiplicities(self):
        assert laguerre_zeros(LaguerreSpec(3, -3.0)) == [(0.0, 3)]
        zs = laguerre_zeros(LaguerreSpec(4, -2.0))
        assert zs[0] == (0.0, 2)
        assert len(zs) == 3  # null root plus the two positive zeros of L_2^(2)

    def test_positive_parameter_counts(self):
        for q in range(1, 9):
            for alpha in (-0.5, 0.0, 2.3):
                zeros = laguerre_zeros(LaguerreSpec(q, alpha))
                assert len(zeros) == q
                assert all(m == 1 for _, m in zeros)
                vals = [z for z, _ in zeros]
                assert all(z > 0 for z in vals)
                assert vals == sorted(vals)

    def test_inadmissible_parameter_rejected(self):
        with pytest.raises(ValueError):
            laguerre_zeros(LaguerreSpec(2, -1.5))
        with pytest.raises(ValueError):
            laguerre_zeros(LaguerreSpec(2, -3.0))

    def test_residual_and_sign_alternation(self):
        for q in range(1, 9):
            for alpha in (-0.5, 0.0, 1.5, 6.0):
                spec = LaguerreSpec(q, alpha)
                zeros = positive_zeros(q, alpha)
                resid = np.abs(laguerre_eval(spec, zeros))
                scale = np.abs(laguerre_derivative(spec, zeros)) * np.maximum(zeros, 1.0)
                assert np.all(resid <= 1e-10 * scale)
                if q > 1:
                    mids = 0.5 * (zeros[1:] + zeros[:-1])
                    signs = np.sign(laguerre_eval(spec, mids))
                    assert np.all(signs[1:] != signs[:-1])

    def test_membership_tolerance_roundtrip(self):
        # A zero perturbed within relative 1e-9 must still match itself.
        z = positive_zeros(5, 1.2)
        assert np.all(np.abs(laguerre_eval(LaguerreSpec(5, 1.2), z)) < 1e-9)


class TestInterlacing:
    def test_zero_ladder_interlaces(self):
        for q in range(2, 9):
            for k in range(2, q + 1):

                def zdesc(kk):
                    zs = [z for z, _ in laguerre_zeros(LaguerreSpec(q, float(kk - q))) if z > 0]
                    return sorted(zs, reverse=True)

                upper = zdesc(k)
                lower = zdesc(k - 1)
                for m in range(len(lower)):
                    assert upper[m + 1] < lower[m] < upper[m]

    def test_zeros_increase_with_parameter(self):
        grid = np.arange(-0.5, 20.5, 0.5)
        for q in range(1, 9):
            table = np.array([positive_zeros(q, float(a)) for a in grid])
            assert np.all(np.diff(table, axis=0) > 0)


class TestReflection:
    @given(
        q=st.integers(2, 8),
        k_offset=st.integers(1, 7),
        t=st.floats(1e-3, 30.0),
    )
    @settings(max_examples=300, deadline=None)
    def test_identity_within_envelope_scale(self, q, k_offset, t):
        k = min(k_offset, q - 1)
        assert float(reflection_defect(q, k, np.asarray([t]))[0]) < 1e-10

    def test_envelope_dominates_value(self):
        spec = LaguerreSpec(7, -3.0)
        t = np.linspace(0.01, 30.0, 100)
        assert np.all(magnitude_envelope(spec, t) >= np.abs(laguerre_eval(spec, t)))


class TestOrthogonality:
    def test_frozen_examples(self):
        assert orthogonality_defect(1, 1, 0.0) < 1e-10
        assert orthogonality_defect(3, 5, 0.5) < 1e-10
        assert orthogonality_defect(0, 0, 0.0) < 1e-12

    def test_rejects_bad_alpha(self):
        with pytest.raises(ValueError):
            orthogonality_defect(1, 1, -1.0)

    def test_rejects_underresolved_rule(self):
        with pytest.raises(ValueError):
            orthogonality_defect(6, 6, 0.0, nodes=3)

    def test_rule_integrates_monomials(self):
        t, w = gauss_laguerre_rule(8, 0.0)
        # int_0^inf e^-t t^m dt = m!
        for m in range(0, 16):
            assert np.sum(w * t**m) == pytest.approx(math.factorial(m), rel=1e-12)

    def test_rule_with_weight_parameter(self):
        alpha = 0.5
        t, w = gauss_laguerre_rule(6, alpha)
        for m in range(0, 12):
            assert np.sum(w * t**m) == pytest.approx(math.gamma(m + alpha + 1), rel=1e-12)
