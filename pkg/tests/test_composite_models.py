"""Planar and three-body models, energies, the radial oracle, reductions."""

import itertools
import math
import warnings

import numpy as np
import pytest

from trigwell.angular_spectrum import PotentialForm, angular_potential, exact_b
from trigwell.composite_models import (
    CMS_MATRIX,
    PlanarForm,
    RadialDomainWarning,
    ReductionKind,
    ThreeBodyForm,
    adjudicate_planar_energy,
    cms_inverse,
    cms_transform,
    planar_energy,
    planar_potential,
    radial_oracle,
    reduction_report,
    threebody_energy,
    threebody_potential,
)
from trigwell.model_core import (
    Couplings,
    FormMismatchError,
    ModelParams,
    ParameterError,
    SingularityError,
)

SQ2 = math.sqrt(2.0)


def mk(n, g1, g2, omega=1.0):
    return ModelParams(n, Couplings(g1, g2), omega)


def harmonic3(params, x):
    return 0.5 * params.omega**2 * sum(v**2 for v in x)


class TestCmsTransform:
    def test_symmetric_point(self):
        np.testing.assert_allclose(
            cms_transform(np.array([1.0, 1.0, 1.0])), [0, 0, math.sqrt(3)], atol=1e-15
        )

    def test_unit_vector(self):
        got = cms_transform(np.array([1.0, 0.0, 0.0]))
        expected = [-SQ2 / 2, math.sqrt(6) / 6, math.sqrt(3) / 3]
        np.testing.assert_allclose(got, expected, atol=1e-15)

    def test_rows_orthonormal(self):
        gram = CMS_MATRIX @ CMS_MATRIX.T
        np.testing.assert_allclose(gram, np.eye(3), atol=1e-14)

    def test_round_trip(self):
        rng = np.random.default_rng(1)
        x = rng.normal(size=(3, 100_000))
        back = cms_inverse(cms_transform(x))
        assert np.max(np.abs(back - x)) <= 1e-13

    def test_preserves_norm(self):
        rng = np.random.default_rng(2)
        x = rng.normal(size=(3, 1000))
        y = cms_transform(x)
        np.testing.assert_allclose(
            np.sum(y**2, axis=0), np.sum(x**2, axis=0), rtol=1e-13
        )


class TestPlanarPotential:
    def test_pinned_order_one(self):
        assert planar_potential(mk(1, 2, 2), (1.0, 1.0)) == pytest.approx(5.0)

    def test_general_vs_bc2_differ_off_axis(self):
        """The four-well order-2 layout is not the order-2 lattice model."""
        p = mk(2, 2, 2)
        point = (1.0, 2.0)
        harmonic = 0.5 * (1.0 + 4.0)
        general = planar_potential(p, point, PlanarForm.GENERAL) - harmonic
        bc2 = planar_potential(p, point, PlanarForm.BC2) - harmonic
        assert general == pytest.approx(5.0, rel=1e-13)
        assert bc2 == pytest.approx(2 / 1 + 2 / 4 + 2 / 1 + 2 / 9, rel=1e-13)

    def test_polar_equivalence(self):
        """General model = angular lattice sum / r^2 + confinement."""
        rng = np.random.default_rng(3)
        for n in (1, 2, 5, 8):
            p = mk(n, 1.5, 2.5)
            checked = 0
            while checked < 250:
                r = rng.uniform(0.5, 2.0)
                phi = rng.uniform(0, 2 * math.pi)
                try:
                    ang = angular_potential(p, phi, PotentialForm.DIRECT_SUM)
                    full = planar_potential(
                        p, (r * math.cos(phi), r * math.sin(phi))
                    )
                except SingularityError:
                    continue
                expected = ang / r**2 + 0.5 * r**2
                assert abs(full - expected) <= 1e-12 * max(abs(expected), 1.0)
                checked += 1

    def test_sw_gate(self):
        with pytest.raises(FormMismatchError):
            planar_potential(mk(3, 2, 2), (1.0, 1.0), PlanarForm.SW)

    def test_bc2_gate(self):
        with pytest.raises(FormMismatchError):
            planar_potential(mk(3, 2, 2), (1.0, 1.0), PlanarForm.BC2)

    def test_singular_point_raises(self):
        with pytest.raises(SingularityError):
            planar_potential(mk(1, 2, 2), (0.0, 1.0))

    def test_vectorized(self):
        p = mk(2, 1.5, 2.5)
        y1 = np.array([0.7, 1.1])
        y2 = np.array([0.4, -0.9])
        vec = planar_potential(p, (y1, y2))
        for i in range(2):
            assert vec[i] == pytest.approx(
                planar_potential(p, (float(y1[i]), float(y2[i])))
            )


class TestThreeBodyPotential:
    def test_printed_matches_pullback_all_orders(self):
        """Both coordinate systems give the same wells at generic points.

        Draws hugging a singular plane are skipped (value cap 1e4): there
        the rounding of the plane form itself dominates the comparison.
        """
        rng = np.random.default_rng(4)
        for n in (1, 2, 3, 5, 8, 12):
            p = mk(n, 1.8, 2.4)
            checked = 0
            while checked < 200:
                x = tuple(rng.uniform(-2, 2, size=3))
                try:
                    a = threebody_potential(p, x, ThreeBodyForm.PULLBACK)
                    b = threebody_potential(p, x, ThreeBodyForm.PRINTED)
                except SingularityError:
                    continue
                if abs(a) > 1e4:
                    continue
                assert abs(a - b) <= 1e-12 * max(abs(a), 1.0)
                checked += 1

    def test_calogero_pinned_value(self):
        """Pairwise wells only: coefficient 2 g2(g2-1) on each pair plane."""
        p = mk(3, 1.0, 2.0)
        x = (0.3, 0.9, 1.5)
        got = threebody_potential(p, x, ThreeBodyForm.CALOGERO) - harmonic3(p, x)
        expected = 4 / 0.36 + 4 / 1.44 + 4 / 0.36  # 25.0
        assert got == pytest.approx(expected, rel=1e-13)

    def test_calogero_equals_pullback(self):
        p = mk(3, 1.0, 2.5)
        rng = np.random.default_rng(5)
        for _ in range(50):
            x = tuple(rng.uniform(-2, 2, size=3))
            try:
                a = threebody_potential(p, x, ThreeBodyForm.PULLBACK)
                b = threebody_potential(p, x, ThreeBodyForm.CALOGERO)
            except SingularityError:
                continue
            assert abs(a - b) <= 1e-12 * max(abs(a), 1.0)

    def test_calogero_gate_requires_pairwise_only(self):
        with pytest.raises(FormMismatchError):
            threebody_potential(mk(3, 2.0, 2.0), (0.3, 0.9, 1.5), ThreeBodyForm.CALOGERO)
        with pytest.raises(FormMismatchError):
            threebody_potential(mk(5, 1.0, 2.0), (0.3, 0.9, 1.5), ThreeBodyForm.CALOGERO)

    def test_wolfes_equals_pullback(self):
        p = mk(3, 2.2, 1.7)
        rng = np.random.default_rng(6)
        for _ in range(50):
            x = tuple(rng.uniform(-2, 2, size=3))
            try:
                a = threebody_potential(p, x, ThreeBodyForm.PULLBACK)
                b = threebody_potential(p, x, ThreeBodyForm.WOLFES)
            except SingularityError:
                continue
            assert abs(a - b) <= 1e-12 * max(abs(a), 1.0)

    @pytest.mark.parametrize(
        "form, order", [(ThreeBodyForm.N5, 5), (ThreeBodyForm.N8, 8)]
    )
    def test_explicit_orders_equal_pullback(self, form, order):
        p = mk(order, 1.8, 2.4)
        rng = np.random.default_rng(order)
        for _ in range(50):
            x = tuple(rng.uniform(-2, 2, size=3))
            try:
                a = threebody_potential(p, x, ThreeBodyForm.PULLBACK)
                b = threebody_potential(p, x, form)
            except SingularityError:
                continue
            assert abs(a - b) <= 1e-12 * max(abs(a), 1.0)

    def test_n8_depends_on_coupling_sum_only(self):
        x = (0.31, 0.92, 1.57)
        a = threebody_potential(mk(8, 2.0, 3.0), x, ThreeBodyForm.N8)
        b = threebody_potential(mk(8, 3.0, 2.0), x, ThreeBodyForm.N8)
        assert abs(a - b) <= 1e-13 * abs(a)

    def test_permutation_symmetry(self):
        """Calogero and Wolfes wells treat the three particles identically."""
        cases = [
            (mk(3, 1.0, 2.0), ThreeBodyForm.CALOGERO),
            (mk(3, 2.2, 1.7), ThreeBodyForm.WOLFES),
        ]
        # note (0.3, 0.9, 1.5) would sit exactly on a centroid plane
        x = (0.3, 0.9, 1.7)
        for p, form in cases:
            base = threebody_potential(p, x, form)
            for perm in itertools.permutations(x):
                got = threebody_potential(p, perm, form)
                assert abs(got - base) <= 1e-12 * abs(base)

    def test_translation_invariant_singular_part(self):
        for p, form in [
            (mk(3, 1.0, 2.0), ThreeBodyForm.CALOGERO),
            (mk(3, 2.2, 1.7), ThreeBodyForm.WOLFES),
        ]:
            x = np.array([0.3, 0.9, 1.7])
            shifted = tuple(x + 0.7)
            base = threebody_potential(p, tuple(x), form) - harmonic3(p, tuple(x))
            moved = threebody_potential(p, shifted, form) - harmonic3(p, shifted)
            assert abs(moved - base) <= 1e-12 * abs(base)

    def test_pair_plane_raises(self):
        with pytest.raises(SingularityError):
            threebody_potential(mk(3, 2, 2), (0.5, 0.5, 1.0), ThreeBodyForm.PULLBACK)


class TestEnergies:
    def test_pinned_planar_candidates(self):
        pair = planar_energy(mk(1, 2, 3), 0, 0)
        assert pair.printed == pytest.approx(5 + SQ2, rel=1e-14)
        assert pair.separated == pytest.approx(6 * SQ2, rel=1e-14)

    def test_pinned_threebody_printed(self):
        trip = threebody_energy(mk(1, 2, 3), 0, 0, 0)
        assert trip.printed == pytest.approx(5 + 3 * SQ2 / 2, rel=1e-14)

    def test_linear_in_omega(self):
        lo = planar_energy(mk(1, 2, 3, omega=1e-6), 1, 2)
        hi = planar_energy(mk(1, 2, 3, omega=2e-6), 1, 2)
        assert hi.printed == pytest.approx(2 * lo.printed, rel=1e-12)
        assert hi.separated == pytest.approx(2 * lo.separated, rel=1e-12)

    def test_t_ladder_spacing_exact(self):
        p = mk(3, 1.5, 2.5, omega=1.3)
        for t in range(4):
            a = threebody_energy(p, 1, 2, t)
            b = threebody_energy(p, 1, 2, t + 1)
            assert b.printed - a.printed == pytest.approx(SQ2 * 1.3, abs=1e-13)
            assert b.separated - a.separated == pytest.approx(SQ2 * 1.3, abs=1e-13)

    def test_additivity_exact(self):
        p = mk(2, 2.0, 2.5, omega=0.9)
        for t in (0, 1, 3):
            pl = planar_energy(p, 1, 1)
            tb = threebody_energy(p, 1, 1, t)
            shift = SQ2 * 0.9 * (t + 0.5)
            assert tb.printed - pl.printed == pytest.approx(shift, abs=1e-13)
            assert tb.separated - pl.separated == pytest.approx(shift, abs=1e-13)

    def test_rejects_negative_quantum_numbers(self):
        with pytest.raises(ParameterError):
            planar_energy(mk(1, 2, 3), -1, 0)
        with pytest.raises(ParameterError):
            threebody_energy(mk(1, 2, 3), 0, 0, -2)


class TestRadialOracle:
    def test_free_angular_ladder(self):
        vals = radial_oracle(omega=SQ2, b=1.0, count=3)
        np.testing.assert_allclose(vals, [4.0, 8.0, 12.0], rtol=2e-3)

    def test_b5_matches_separated_candidate(self):
        vals = radial_oracle(omega=1.0, b=5.0, count=1)
        assert vals[0] == pytest.approx(6 * SQ2, rel=2e-3)
        assert abs(vals[0] - (5 + SQ2)) / (5 + SQ2) > 0.2

    def test_half_line_oscillator(self):
        """b = 1/2 removes the barrier; odd oscillator states remain."""
        vals = radial_oracle(omega=1.0, b=0.5, count=3)
        expected = [SQ2 * (2 * n + 1.5) for n in range(3)]
        np.testing.assert_allclose(vals, expected, rtol=2e-3)

    def test_narrow_domain_warns(self):
        with pytest.warns(RadialDomainWarning):
            radial_oracle(omega=1.0, b=2.0, count=3, grid_size=800, r_max=2.5)

    def test_rejects_bad_inputs(self):
        with pytest.raises(ParameterError):
            radial_oracle(omega=-1.0, b=2.0, count=2)
        with pytest.raises(ParameterError):
            radial_oracle(omega=1.0, b=2.0, count=0)


class TestAdjudication:
    def test_separated_form_wins(self):
        report = adjudicate_planar_energy(mk(1, 2, 3), n_max=1, m_max=1)
        assert report.winner == "separated"
        sep_rows = [r for r in report.rows if r.label.startswith("separated")]
        assert sep_rows and all(r.rel_deviation <= 2e-3 for r in sep_rows)

    def test_printed_form_loses_badly(self):
        report = adjudicate_planar_energy(mk(1, 2, 3), n_max=1, m_max=1)
        printed_rows = [r for r in report.rows if r.label.startswith("printed")]
        assert printed_rows and all(r.rel_deviation > 0.05 for r in printed_rows)


class TestReductionReports:
    def test_sw(self):
        report = reduction_report(ReductionKind.SW, samples=200, seed=7)
        assert report.max_rel_deviation <= 1e-12
        assert report.fitted_factor == pytest.approx(1.0, abs=1e-12)

    def test_polar(self):
        report = reduction_report(ReductionKind.POLAR, samples=200, seed=7)
        assert report.max_rel_deviation <= 1e-12

    def test_calogero_notes_convention(self):
        report = reduction_report(ReductionKind.CALOGERO, samples=200, seed=7)
        assert report.max_rel_deviation <= 1e-12
        assert any("kinetic" in n for n in report.notes)

    @pytest.mark.parametrize(
        "kind", [ReductionKind.WOLFES, ReductionKind.N5, ReductionKind.N8]
    )
    def test_threebody_kinds(self, kind):
        report = reduction_report(kind, samples=200, seed=7)
        assert report.max_rel_deviation <= 1e-12
        assert report.fitted_factor == pytest.approx(1.0, abs=1e-12)

    def test_bc2_mismatch_reported(self):
        """The four-well layout cannot reproduce the order-2 lattice model."""
        report = reduction_report(ReductionKind.BC2, samples=200, seed=7)
        assert report.max_rel_deviation > 1e-2
        assert any("cannot agree" in n for n in report.notes)

    def test_deterministic(self):
        a = reduction_report(ReductionKind.SW, samples=100, seed=3)
        b = reduction_report(ReductionKind.SW, samples=100, seed=3)
        assert a.max_rel_deviation == b.max_rel_deviation
        assert [r.label for r in a.rows] == [r.label for r in b.rows]
