import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from landaudelta.basis import MagneticField
from landaudelta.census import (
    CensusEntry,
    census,
    census_to_csv,
    coupling_lower_bounds,
    eta_curve,
    eta_table_to_csv,
    explicit_D12,
    gap_constants,
    multiplicity,
)

F2 = MagneticField(2.0)


class TestMultiplicity:
    def test_simple_resonance(self):
        m, w = multiplicity(F2, 1, 1.0)
        assert m == 1
        assert [k for k, _ in w] == [1]

    def test_double_resonance(self):
        m, w = multiplicity(F2, 2, math.sqrt(2.0))
        assert m == 2
        assert sorted(k for k, _ in w) == [1, 4]
        assert all(z == pytest.approx(2.0, rel=1e-12) for _, z in w)

    def test_nonresonant(self):
        m, w = multiplicity(F2, 1, math.sqrt(0.5))
        assert m == 0 and w == []

    def test_level_zero_rejected(self):
        with pytest.raises(ValueError):
            multiplicity(F2, 0, 1.0)

    def test_bad_radius_rejected(self):
        with pytest.raises(ValueError):
            multiplicity(F2, 1, 0.0)

    @given(r=st.floats(0.01, 4.0), q=st.integers(1, 6))
    @settings(max_examples=300, deadline=None)
    def test_bounded_by_level(self, r, q):
        m, w = multiplicity(F2, q, r)
        assert 0 <= m <= q
        assert len(w) == m


class TestCensus:
    def test_level_one_integers(self):
        entries = census(F2, 1, 3.0)
        assert [e.t for e in entries] == pytest.approx(list(range(1, 10)), rel=1e-14)
        assert [e.r for e in entries] == pytest.approx([math.sqrt(n) for n in range(1, 10)], rel=1e-14)
        assert all(e.multiplicity == 1 for e in entries)

    def test_level_two_short_sweep(self):
        entries = census(F2, 2, 1.5)
        expected = [
            (2.0 - math.sqrt(2.0), 1, (2,)),
            (3.0 - math.sqrt(3.0), 1, (3,)),
            (2.0, 2, (1, 4)),
        ]
        assert len(entries) == 3
        for e, (t, m, ks) in zip(entries, expected):
            assert e.t == pytest.approx(t, rel=1e-12)
            assert e.multiplicity == m
            assert tuple(k for k, _ in e.witnesses) == ks

    def test_strictly_increasing(self):
        for q in (1, 2, 3, 4):
            rs = [e.r for e in census(F2, q, 3.5)]
            assert all(a < b for a, b in zip(rs, rs[1:]))

    def test_grows_without_bound(self):
        assert len(census(F2, 1, math.sqrt(20.0))) == 20

    def test_entry_invariant(self):
        with pytest.raises(ValueError):
            CensusEntry(1.0, 1.0, 2, ((1, 1.0),))

    def test_csv_format(self):
        text = census_to_csv(census(F2, 2, 1.5))
        lines = text.strip().splitlines()
        assert lines[0] == "r,t,multiplicity,witness_ks"
        assert lines[3].endswith(",2,1;4")


class TestExplicitSets:
    def test_level_one_first_three(self):
        sets = explicit_D12(F2, 3)
        assert sets["D1"] == pytest.approx([1.0, math.sqrt(2), math.sqrt(3)], rel=1e-15)

    def test_first_double_radius(self):
        assert explicit_D12(F2, 3)["D22"][0] == pytest.approx(math.sqrt(2.0), rel=1e-15)

    def test_strong_field_scaling(self):
        assert explicit_D12(MagneticField(8.0), 1)["D1"][0] == pytest.approx(0.5, rel=1e-15)

    def test_d21_excludes_doubles(self):
        sets = explicit_D12(F2, 30)
        for r in sets["D21"]:
            assert all(abs(r - d) > 1e-9 * max(r, d) for d in sets["D22"])

    @pytest.mark.parametrize("b,q,key", [(0.5, 1, "D1"), (2.0, 1, "D1"), (0.5, 2, "D2"), (2.0, 2, "D2")])
    def test_census_cross_validation(self, b, q, key):
        field = MagneticField(b)
        r_max = 4.0
        swept = np.array([e.r for e in census(field, q, r_max)])
        closed = np.array([r for r in explicit_D12(field, 60)[key] if r <= r_max * (1 + 1e-12)])
        assert swept.size == closed.size
        assert np.max(np.abs(swept - closed) / closed) < 1e-10

    def test_multiplicities_match_closed_form(self):
        sets = explicit_D12(F2, 10)
        for e in census(F2, 2, 4.0):
            is_double = any(abs(e.r - d) <= 1e-9 * max(e.r, d) for d in sets["D22"])
            assert e.multiplicity == (2 if is_double else 1)


class TestEtaCurves:
    def test_level_one_integer_points(self):
        for b in (0.5, 2.0):
            field = MagneticField(b)
            for k in range(1, 8):
                assert eta_curve(field, 1, 1, float(k - 1)) == pytest.approx(math.sqrt(2 * k / b), rel=1e-13)

    def test_level_two_top_curve_at_zero(self):
        assert eta_curve(F2, 2, 1, 0.0) == pytest.approx(math.sqrt(2 + math.sqrt(2)), rel=1e-13)

    def test_negative_integer_reduction(self):
        # zeta_1(-1) for the quadratic level is the zero of L_1^(1), i.e. 2.
        assert eta_curve(F2, 2, 1, -1.0) == pytest.approx(math.sqrt(2.0), rel=1e-13)

    def test_linear_interpolation_midpoint(self):
        lo = eta_curve(F2, 2, 1, -1.0) ** 2
        hi = eta_curve(F2, 2, 1, 0.0) ** 2
        mid = eta_curve(F2, 2, 1, -0.5) ** 2
        assert mid == pytest.approx(0.5 * (lo + hi), rel=1e-12)

    def test_domain_edges(self):
        assert eta_curve(F2, 3, 1, -2.0) > 0
        with pytest.raises(ValueError):
            eta_curve(F2, 2, 2, -1.0)
        with pytest.raises(ValueError):
            eta_curve(F2, 2, 3, 0.0)

    def test_ordering_and_monotonicity(self):
        for q in (2, 3, 4):
            for ell in range(1, q + 1):
                grid = np.arange(float(ell - q), 10.0, 0.5)
                vals = [eta_curve(F2, q, ell, float(a)) for a in grid]
                assert all(a < b for a, b in zip(vals, vals[1:]))
            for ell in range(1, q):
                grid = np.arange(float(ell + 1 - q), 10.0, 0.5)
                hi = [eta_curve(F2, q, ell, float(a)) for a in grid]
                lo = [eta_curve(F2, q, ell + 1, float(a)) for a in grid]
                assert all(x < y for x, y in zip(lo, hi))

    def test_table_export(self):
        text = eta_table_to_csv(F2, 2, [-1.0, 0.0, 1.0])
        lines = text.strip().splitlines()
        assert lines[0] == "alpha,eta_1,eta_2"
        assert lines[1].split(",")[2] == "nan"  # eta_2 undefined at alpha = -1


class TestScalarConstants:
    def test_gap_hand_values(self):
        f1 = MagneticField(1.0)
        plus, minus = gap_constants(f1, 1, 0.0)
        assert plus == 2.0 / ((3.0) * (1.0))
        assert minus == 2.0 / ((3.0) * (5.0))

    def test_gap_limits_and_domain(self):
        f1 = MagneticField(1.0)
        plus, minus = gap_constants(f1, 1, 1e8)
        assert plus < 1e-12 and minus < 1e-12
        with pytest.raises(ValueError):
            gap_constants(f1, 1, -1.0)
        with pytest.raises(ValueError):
            gap_constants(f1, 0, 0.0)

    def test_coupling_hand_values(self):
        f1 = MagneticField(1.0)
        plus, minus = coupling_lower_bounds(f1, 1, 1.0)
        assert plus == 0.25
        assert minus == 2.0 / 26.0

    def test_coupling_monotone_decreasing(self):
        f1 = MagneticField(1.0)
        rows = [coupling_lower_bounds(f1, q, 1.0) for q in range(1, 11)]
        assert all(a[0] > b[0] and a[1] > b[1] for a, b in zip(rows, rows[1:]))

    def test_coupling_level_zero_unbounded_plus(self):
        plus, minus = coupling_lower_bounds(MagneticField(1.0), 0, 1.0)
        assert plus == math.inf and minus > 0

    def test_coupling_rejects_bad_constant(self):
        with pytest.raises(ValueError):
            coupling_lower_bounds(MagneticField(1.0), 1, 0.0)
