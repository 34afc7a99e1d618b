"""Key-rate formulas: quantum-coin inflation and the dual-source rate."""

import math

import pytest

from voaleak import (
    PROTOCOL_ANGLES,
    CalibrationError,
    ChannelParams,
    DomainError,
    DualSourceParams,
    KeyRatePoint,
    SinglePhotonBounds,
    ThaParams,
    binary_entropy,
    calibrated_intensity,
    coin_imbalance,
    dual_source_key_rate,
    gllp_key_rate,
    observables_for_intensity,
    phase_error_with_tha,
    single_photon_bounds,
)
from helpers import decoy_observations


def table_run(distance=0.0, mu_el=0.0):
    ch = ChannelParams(distance=distance)
    obs = decoy_observations(ch, 0.48, 0.02, 0.001, mu_el)
    return obs, single_photon_bounds(obs)


class TestBinaryEntropy:
    def test_symmetric_peak(self):
        assert binary_entropy(0.5) == 1.0

    def test_endpoints(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0

    def test_value_near_half(self):
        assert binary_entropy(0.11) == pytest.approx(
            0.499915958164528, rel=1e-12)

    def test_symmetry(self):
        assert binary_entropy(0.3) == pytest.approx(
            binary_entropy(0.7), rel=1e-14)

    def test_domain_errors(self):
        for bad in (-0.1, 1.1, math.nan):
            with pytest.raises(DomainError):
                binary_entropy(bad)


class TestCoinImbalance:
    def test_zero_leak(self):
        assert coin_imbalance(0.0) == 0.0

    def test_frozen_values(self):
        assert coin_imbalance(0.0048) == pytest.approx(
            0.001546916409914556, rel=1e-12)
        assert coin_imbalance(0.0977) == pytest.approx(
            0.029781027720690745, rel=1e-12)

    def test_strictly_increasing(self):
        mus = [0.0, 0.0048, 0.0388, 0.0977, 0.5, 2.0, 10.0]
        vals = [coin_imbalance(m) for m in mus]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_stays_below_half(self):
        assert coin_imbalance(50.0) < 0.5

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            coin_imbalance(-0.01)


class TestPhaseErrorInflation:
    def test_no_imbalance_is_identity(self):
        for e_x in (0.0, 0.0061, 0.11, 0.5):
            assert phase_error_with_tha(e_x, 0.0) == e_x

    def test_pure_imbalance(self):
        d = 0.01
        assert phase_error_with_tha(0.0, d) == pytest.approx(
            4.0 * d * (1.0 - d), rel=1e-12)

    def test_frozen_point(self):
        assert phase_error_with_tha(0.02, 0.01) == pytest.approx(
            0.11262091054841131, rel=1e-12)

    def test_saturates_at_half_imbalance(self):
        assert phase_error_with_tha(0.01, 0.5) == 0.5
        assert phase_error_with_tha(0.01, 0.7) == 0.5

    def test_never_below_input(self):
        for e_x in (0.0, 0.02, 0.2, 0.45):
            for d in (0.0, 1e-4, 0.01, 0.2, 0.49):
                assert phase_error_with_tha(e_x, d) >= e_x

    def test_capped_at_half(self):
        assert phase_error_with_tha(0.45, 0.3) == 0.5

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            phase_error_with_tha(0.6, 0.01)
        with pytest.raises(DomainError):
            phase_error_with_tha(0.02, -0.01)


class TestParams:
    def test_protocol_angles_default(self):
        assert ThaParams(0.0).protocol_angles == PROTOCOL_ANGLES
        assert len(PROTOCOL_ANGLES) == 4

    def test_tha_validation(self):
        with pytest.raises(DomainError):
            ThaParams(-0.1)
        with pytest.raises(DomainError):
            ThaParams(0.1, p_z=0.0)
        with pytest.raises(DomainError):
            ThaParams(0.1, f_ec=0.9)
        with pytest.raises(DomainError):
            ThaParams(0.1, protocol_angles=(0.0, 1.0))

    def test_dual_validation(self):
        with pytest.raises(DomainError):
            DualSourceParams(q_proto=0.0)
        with pytest.raises(DomainError):
            DualSourceParams(f_ec=0.5)

    def test_key_rate_point_validation(self):
        KeyRatePoint(10.0, 0.0)
        with pytest.raises(DomainError):
            KeyRatePoint(-1.0, 0.1)
        with pytest.raises(DomainError):
            KeyRatePoint(1.0, -0.1)


class TestGllpKeyRate:
    def test_clean_rate_matches_standard_formula(self):
        obs, bounds = table_run()
        got = gllp_key_rate(obs, bounds, ThaParams(0.0))
        p1 = obs.s * math.exp(-obs.s)
        want = max(0.0, p1 * bounds.y1_lower
                   * (1.0 - binary_entropy(bounds.e1_upper))
                   - obs.q_s * 1.2 * binary_entropy(obs.e_s))
        assert got == want

    def test_frozen_values_at_zero_distance(self):
        obs, bounds = table_run()
        assert gllp_key_rate(obs, bounds, ThaParams(0.0)) == pytest.approx(
            0.19844441919682251, rel=1e-12)
        assert gllp_key_rate(obs, bounds, ThaParams(0.0977)) == pytest.approx(
            0.04088125638333813, rel=1e-12)

    def test_monotone_in_leak_intensity(self):
        obs, bounds = table_run(distance=5.0)
        rates = [gllp_key_rate(obs, bounds, ThaParams(m))
                 for m in (0.0, 0.0048, 0.0388, 0.0977)]
        assert all(b < a for a, b in zip(rates, rates[1:]))

    def test_zero_yield_bound_gives_zero(self):
        obs, _ = table_run()
        dead = SinglePhotonBounds(y1_lower=0.0, e1_upper=0.5,
                                  q1_lower=0.0, y0_lower=0.0, clamp_events=1)
        assert gllp_key_rate(obs, dead, ThaParams(0.0977)) == 0.0

    def test_strong_leak_kills_rate_at_range(self):
        obs, bounds = table_run(distance=13.0)
        assert gllp_key_rate(obs, bounds, ThaParams(0.0)) == pytest.approx(
            0.1079511235360605, rel=1e-12)
        assert gllp_key_rate(obs, bounds, ThaParams(0.0977)) == 0.0


class TestDualSourceKeyRate:
    def test_clean_rate_is_half_the_unsifted_rate(self):
        obs, bounds = table_run(distance=13.0)
        dual = dual_source_key_rate(obs, bounds)
        full = gllp_key_rate(obs, bounds, ThaParams(0.0))
        assert dual == 0.5 * full
        assert dual == pytest.approx(0.05397556176803025, rel=1e-12)

    def test_contamination_lowers_rate(self):
        rates = []
        for mu_el in (0.0, 0.0048, 0.0388, 0.0977):
            obs, bounds = table_run(distance=13.0, mu_el=mu_el)
            rates.append(dual_source_key_rate(obs, bounds))
        assert all(b < a for a, b in zip(rates, rates[1:]))

    def test_leak_free_baseline_ignores_parasitic_band(self):
        lossy = ChannelParams(distance=13.0, alpha_par=5.0)
        clear = ChannelParams(distance=13.0, alpha_par=0.8)
        rates = []
        for ch in (lossy, clear):
            obs = decoy_observations(ch, 0.48, 0.02, 0.001, 0.0)
            rates.append(dual_source_key_rate(obs, single_photon_bounds(obs)))
        assert rates[0] == rates[1]


class TestCalibratedIntensity:
    def test_inverts_single_source_gain(self):
        ch = ChannelParams(distance=20.0)
        obs = observables_for_intensity(0.48, 0.0, ch)
        s_cal = calibrated_intensity(obs.gain, ch.eta_signal(), ch.y0)
        assert s_cal == pytest.approx(0.48, rel=1e-12)

    def test_contamination_inflates_calibration(self):
        ch = ChannelParams(distance=0.0)
        obs = observables_for_intensity(0.48, 0.0977, ch)
        s_cal = calibrated_intensity(obs.gain, ch.eta_signal(), ch.y0)
        want = 0.48 + 0.0977 * (ch.eta_parasitic() / ch.eta_signal())
        assert s_cal == pytest.approx(want, rel=1e-12)
        assert s_cal == pytest.approx(0.5113141025641026, rel=1e-12)
        assert s_cal > 0.48

    def test_gain_below_background_rejected(self):
        with pytest.raises(CalibrationError):
            calibrated_intensity(1e-9, 0.5, 2e-8)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            calibrated_intensity(0.0, 0.5, 0.0)
        with pytest.raises(DomainError):
            calibrated_intensity(0.3, 0.0, 0.0)
        with pytest.raises(DomainError):
            calibrated_intensity(0.3, 0.5, 1.0)
