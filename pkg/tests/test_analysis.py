"""Boundary traces, jump estimation, certificates, growth, sectors.

Oracles:
  * identity (uniform measure): trace equals t, margin exactly 1, E -> 0
  * koebe: M(r) = r/(1-r)^2, E -> 2, boundary jump 2*pi at t = 0, image
    sector is the full plane minus a ray (opening 2*pi, center 0)
  * two-atom + uniform-density measure: beta_at supplies the exact trace
    and jump values through the measure's canonical offset
  * max_modulus is cross-checked against a 2^16-point dense scan
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spirallike import (
    STARLIKE,
    BetaTrace,
    BoundaryMeasure,
    DomainError,
    G0Function,
    InconsistencyError,
    JumpEstimate,
    MeasureFunction,
    SpiralAngle,
    beta_trace,
    default_r_schedule,
    detect_maximal_sector,
    estimate_max_jump,
    golden_section_max,
    goodman_check,
    growth_exponent,
    hansen_ratio,
    max_modulus,
    refine_jump,
    spirallikeness_margin,
)

PI = math.pi
TWO_PI = 2.0 * math.pi


def koebe(angle=STARLIKE):
    return MeasureFunction(BoundaryMeasure.single_atom(), angle)


def identity():
    return MeasureFunction(BoundaryMeasure.uniform(), STARLIKE)


def crit4_measure():
    return BoundaryMeasure.from_atoms(
        [(0.0, 1.0), (PI / 2, 0.5)], uniform_density_mass=PI / 2
    )


# -- scalar helpers -----------------------------------------------------------


def test_default_r_schedule():
    assert default_r_schedule() == (0.99, 0.999, 0.9999, 0.99999, 0.999999)
    assert default_r_schedule(1, 3) == (0.9, 0.99, 0.999)


def test_golden_section_max_oracle():
    # x is only sqrt(eps)-accurate at a smooth peak (f is numerically flat
    # there); the value itself is full precision
    x, fx = golden_section_max(math.sin, 0.0, PI)
    assert x == pytest.approx(PI / 2, abs=1e-7)
    assert fx == pytest.approx(1.0, abs=1e-12)
    # quartic with interior max at 1/sqrt(2) on [0, 1]
    x, fx = golden_section_max(lambda u: u * u - u**4, 0.0, 1.0)
    assert x == pytest.approx(1 / math.sqrt(2), abs=1e-7)
    assert fx == pytest.approx(0.25, abs=1e-12)


# -- beta traces ----------------------------------------------------------------


def test_beta_trace_identity_is_t():
    tr = beta_trace(identity(), t_grid=64)
    assert np.max(np.abs(tr.beta_values - tr.t_samples)) < 1e-10
    assert tr.radius_used == 0.999999
    assert math.isnan(tr.refinement_record[0][1])
    assert all(d < 1e-10 for _, d in tr.refinement_record[1:])


def test_beta_trace_koebe_staircase():
    tr = beta_trace(koebe())
    # jump centered at t = 0: value 0 there, flat pi elsewhere
    assert tr.beta_values[0] == pytest.approx(0.0, abs=1e-6)
    interior = tr.beta_values[5:-5]
    assert np.max(np.abs(interior - PI)) < 2e-3


def test_beta_trace_schedule_validation():
    with pytest.raises(DomainError):
        beta_trace(identity(), r_schedule=(0.9, 0.5))
    with pytest.raises(DomainError):
        beta_trace(identity(), r_schedule=(0.9, 1.5))


def test_beta_trace_matches_beta_at_with_offset():
    m = crit4_measure()
    for lam in (0.0, 0.7):
        f = MeasureFunction(m, SpiralAngle(lam))
        tr = beta_trace(f)
        want = m.beta_at(tr.t_samples) - m.canonical_offset()
        err = np.abs(tr.beta_values - want)
        # compare away from the two atoms, where the finite-radius trace
        # smooths the step over a few samples
        t = tr.t_samples
        away = np.ones_like(t, dtype=bool)
        for pos in (0.0, PI / 2):
            away &= np.minimum(np.abs(t - pos), TWO_PI - np.abs(t - pos)) > 0.15
        assert np.max(err[away]) < 2e-3


# -- jump estimation --------------------------------------------------------------


def test_estimate_max_jump_identity_is_zero():
    est = estimate_max_jump(beta_trace(identity()))
    assert est.jump == 0.0
    assert math.isnan(est.location) and math.isnan(est.center)


def test_estimate_max_jump_koebe_merges_grid_aligned_atom():
    # the atom sits exactly on a grid sample, so its mass splits between
    # the two adjacent gaps; the estimator must merge them back
    est = estimate_max_jump(beta_trace(koebe()))
    assert est.jump == pytest.approx(TWO_PI, abs=0.01)
    assert est.location == pytest.approx(0.0, abs=1e-12)
    assert est.center == pytest.approx(0.0, abs=1e-6)


def test_estimate_max_jump_crit4():
    m = crit4_measure()
    f = MeasureFunction(m, SpiralAngle(0.7))
    est = estimate_max_jump(beta_trace(f))
    assert est.jump == pytest.approx(PI, abs=0.02)
    assert est.location == pytest.approx(0.0, abs=1e-12)
    # center = beta_at(0) - canonical offset = pi/2 - 5*pi/8
    assert est.center == pytest.approx(-PI / 8, abs=1e-3)


def test_estimate_max_jump_synthetic_staircase():
    # hand-built trace: unit slope with a 1.0 jump across one gap
    t = np.arange(64) * (TWO_PI / 64)
    v = t * (TWO_PI - 1.0) / TWO_PI + np.where(t > 3.0, 1.0, 0.0)
    tr = BetaTrace(t, v, 0.999, ())
    est = estimate_max_jump(tr)
    assert est.jump == pytest.approx(1.0 + (TWO_PI - 1.0) / 64, rel=1e-6)
    lo = t[t <= 3.0][-1]
    assert est.location == pytest.approx(lo + PI / 64, abs=1e-12)


def test_estimate_max_jump_rejects_decreasing_trace():
    t = np.arange(32) * (TWO_PI / 32)
    v = t.copy()
    v[10] -= 0.5
    with pytest.raises(InconsistencyError) as exc:
        estimate_max_jump(BetaTrace(t, v, 0.999, ()))
    assert "decreases" in str(exc.value)


def test_refine_jump_measure_oracle():
    m = crit4_measure()
    f = MeasureFunction(m, SpiralAngle(0.7))
    spacing = TWO_PI / 256
    jump, t0 = refine_jump(f, (-spacing, spacing))
    assert jump == pytest.approx(PI, abs=0.005)
    assert t0 == pytest.approx(0.0, abs=1e-4)


def test_refine_jump_koebe_full_turn():
    spacing = TWO_PI / 256
    jump, t0 = refine_jump(koebe(), (-spacing, spacing))
    assert jump == pytest.approx(TWO_PI, abs=0.002)
    assert t0 == pytest.approx(0.0, abs=1e-6)


# -- certificates -------------------------------------------------------------------


def test_margin_identity_is_one():
    assert spirallikeness_margin(identity()) == pytest.approx(1.0, abs=1e-12)


def test_margin_koebe_positive_but_small():
    margin = spirallikeness_margin(koebe())
    assert 0.0 < margin < 0.01  # boundary point z = -r nearly kills Re


def test_margin_detects_wrong_inclination():
    # koebe is starlike, not 1.2-spirallike: assessed against the wrong
    # angle the margin goes strongly negative near the boundary
    assert spirallikeness_margin(koebe(), angle=SpiralAngle(1.2)) < -1.0


@settings(max_examples=15, deadline=None)
@given(
    st.floats(min_value=-1.2, max_value=1.2),
    st.lists(
        st.tuples(
            st.floats(min_value=0.0, max_value=6.2),
            st.floats(min_value=0.1, max_value=3.0),
        ),
        min_size=1,
        max_size=4,
        unique_by=lambda kv: round(kv[0], 3),
    ),
)
def test_margin_positive_for_measure_functions(lam, pairs):
    # every function built from a measure is genuinely lam-spirallike
    f = MeasureFunction(BoundaryMeasure.from_atoms(pairs), SpiralAngle(lam))
    assert spirallikeness_margin(f, grid=(16, 128), r_max=0.99) > 0.0


def test_goodman_identity_and_koebe():
    assert goodman_check(identity()) < -0.1
    excess = goodman_check(koebe())
    assert excess <= 1e-9
    assert excess > -1e-6  # koebe attains the bound along the unit circle


def test_goodman_rejects_uncertified():
    f = koebe(SpiralAngle(0.4))
    with pytest.raises(DomainError):
        goodman_check(f)


# -- max modulus and growth -----------------------------------------------------------


def test_max_modulus_koebe_closed_form():
    assert max_modulus(koebe(), 0.9) == pytest.approx(90.0, rel=1e-12)
    assert max_modulus(koebe(), 0.5) == pytest.approx(2.0, rel=1e-12)


def test_max_modulus_against_dense_scan():
    f = MeasureFunction(crit4_measure(), SpiralAngle(0.3))
    th = np.arange(1 << 16) * (TWO_PI / (1 << 16))
    scan = float(np.max(np.abs(f.evaluate(0.95 * np.exp(1j * th)))))
    got = max_modulus(f, 0.95)
    assert got >= scan - 1e-12
    assert got <= scan * (1.0 + 1e-5)


def test_max_modulus_validation():
    with pytest.raises(DomainError):
        max_modulus(koebe(), 1.0)


def test_growth_exponent_koebe():
    rep = growth_exponent(koebe())
    r, M, E = rep.rows[-1]
    assert r == 1.0 - 1e-8
    assert M == pytest.approx(r / (1 - r) ** 2, rel=1e-9)
    assert E == pytest.approx(2.0, abs=1e-6)
    assert rep.a_estimate == pytest.approx(TWO_PI)
    assert rep.predicted_q0 == pytest.approx(2.0)


def test_growth_exponent_identity_is_flat():
    rep = growth_exponent(identity())
    assert abs(rep.rows[-1][2]) < 1e-6
    assert rep.a_estimate == 0.0
    assert rep.predicted_q0 == 0.0


def test_growth_exponent_spirallike_scaling():
    # E -> 2*cos(lam)^2 for the single-atom measure at inclination lam; the
    # bounded spiral prefactor leaves an O(1/log(1/(1-r))) correction, about
    # 0.024 at r = 1-1e-8
    lam = PI / 4
    rep = growth_exponent(koebe(SpiralAngle(lam)))
    assert rep.rows[-1][2] == pytest.approx(2 * math.cos(lam) ** 2, abs=0.05)
    assert rep.predicted_q0 == pytest.approx(2 * math.cos(lam) ** 2, abs=1e-9)


def test_growth_exponent_validation():
    with pytest.raises(DomainError):
        growth_exponent(koebe(), r_schedule=(0.9, 0.99))


def test_hansen_ratio_koebe_is_r():
    rows = hansen_ratio(koebe(), 2.0)
    vals = [v for _, v in rows]
    assert vals == pytest.approx([r for r, _ in rows], rel=1e-9)
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert vals[-1] <= 1.0 + 1e-9


def test_hansen_ratio_validation():
    with pytest.raises(DomainError):
        hansen_ratio(koebe(), -0.5)


# -- sector detection ------------------------------------------------------------------


def test_sector_koebe_full_plane_cut():
    sec = detect_maximal_sector(koebe())
    assert abs(sec.center_angle) <= 1e-6
    assert sec.opening == pytest.approx(TWO_PI)
    assert sec.angle.lam == 0.0


def test_sector_two_atoms():
    m = BoundaryMeasure.from_atoms([(0.0, 1.0), (PI, 1.0)])
    sec = detect_maximal_sector(MeasureFunction(m, STARLIKE))
    assert sec.opening == pytest.approx(PI, abs=0.02)
    assert sec.center_angle == pytest.approx(0.0, abs=1e-6)


def test_sector_spirallike_koebe():
    sec = detect_maximal_sector(koebe(SpiralAngle(PI / 4)))
    assert sec.opening == pytest.approx(TWO_PI, abs=0.02)
    assert sec.angle.lam == pytest.approx(PI / 4)


def test_sector_atomless_is_none():
    assert detect_maximal_sector(identity()) is None


def test_sector_requires_measure():
    with pytest.raises(DomainError):
        detect_maximal_sector(G0Function())


def test_sector_inconsistent_function_is_caught():
    # identity disk image with a koebe measure attached: the sector samples
    # leave the image, so certification must fail loudly
    class Lying(MeasureFunction):
        def log_f_over_z(self, z):
            out = np.zeros(np.asarray(z, dtype=complex).shape, dtype=complex)
            return out if out.ndim else complex(out)

        def log_derivative(self, z):
            out = np.ones(np.asarray(z, dtype=complex).shape, dtype=complex)
            return out if out.ndim else complex(out)

    with pytest.raises(InconsistencyError):
        detect_maximal_sector(Lying(BoundaryMeasure.single_atom(), STARLIKE))
