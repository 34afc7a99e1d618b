"""Asymptotic key-rate bounds under parasitic-emission side channels.

Two attack geometries are modeled:

* Pre-encoder leakage (passive Trojan-horse): the leaked light is
  modulated by the encoder, making the effective source basis-dependent.
  The GLLP/Koashi quantum-coin argument converts the leaked intensity
  mu_eve into a coin imbalance Delta; after conditioning on detection
  (Delta' = Delta / Y1) the single-photon phase error rate is inflated
  by the Lo-Preskill bound before entering the decoy-state GLLP rate.

* Post-encoder leakage (dual-source flaw): the leaked light is not
  modulated but co-propagates with the signal, biasing the decoy
  estimates and the error correction cost. The rate formula keeps the
  standard decoy-BB84 shape evaluated on the contaminated observables.

Conventions: basis probability p_z defaults to 1 (asymptotic efficient
BB84), sifting factor q_proto defaults to 1/2, error-correction
inefficiency f_ec defaults to 1.2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .decoy import DecoyObservations, SinglePhotonBounds
from .errors import CalibrationError, DomainError

__all__ = [
    "PROTOCOL_ANGLES",
    "ThaParams",
    "DualSourceParams",
    "KeyRatePoint",
    "binary_entropy",
    "coin_imbalance",
    "phase_error_with_tha",
    "gllp_key_rate",
    "dual_source_key_rate",
    "calibrated_intensity",
]

# Polarization/phase encoding angles of the four BB84 states. The coin
# imbalance below is derived for leaked coherent states carrying these
# angles in two quadratures.
PROTOCOL_ANGLES: tuple[float, float, float, float] = (
    0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4)


@dataclass(frozen=True)
class ThaParams:
    """Parameters of the pre-encoder (Trojan-horse) analysis.

    Attributes:
        mu_eve: Mean leaked photon number available to Eve, >= 0.
        p_z: Key-basis selection probability, in (0, 1].
        f_ec: Error-correction inefficiency, >= 1.
        protocol_angles: Encoding angles of the four protocol states.
    """

    mu_eve: float
    p_z: float = 1.0
    f_ec: float = 1.2
    protocol_angles: tuple[float, ...] = PROTOCOL_ANGLES

    def __post_init__(self):
        if not math.isfinite(self.mu_eve) or self.mu_eve < 0.0:
            raise DomainError(f"mu_eve must be finite and >= 0, got {self.mu_eve!r}")
        if not math.isfinite(self.p_z) or not 0.0 < self.p_z <= 1.0:
            raise DomainError(f"p_z must lie in (0, 1], got {self.p_z!r}")
        if not math.isfinite(self.f_ec) or self.f_ec < 1.0:
            raise DomainError(f"f_ec must be >= 1, got {self.f_ec!r}")
        if len(self.protocol_angles) != 4:
            raise DomainError("protocol_angles must contain four angles")


@dataclass(frozen=True)
class DualSourceParams:
    """Parameters of the post-encoder (dual-source) analysis.

    Attributes:
        q_proto: Sifting factor of the protocol, in (0, 1].
        f_ec: Error-correction inefficiency, >= 1.
    """

    q_proto: float = 0.5
    f_ec: float = 1.2

    def __post_init__(self):
        if not math.isfinite(self.q_proto) or not 0.0 < self.q_proto <= 1.0:
            raise DomainError(f"q_proto must lie in (0, 1], got {self.q_proto!r}")
        if not math.isfinite(self.f_ec) or self.f_ec < 1.0:
            raise DomainError(f"f_ec must be >= 1, got {self.f_ec!r}")


@dataclass(frozen=True)
class KeyRatePoint:
    """One point of a key-rate vs distance curve.

    Attributes:
        distance: Fiber length [km], >= 0.
        rate: Secret key rate per pulse, >= 0.
    """

    distance: float
    rate: float

    def __post_init__(self):
        if not math.isfinite(self.distance) or self.distance < 0.0:
            raise DomainError(f"distance must be >= 0, got {self.distance!r}")
        if not math.isfinite(self.rate) or self.rate < 0.0:
            raise DomainError(f"rate must be >= 0, got {self.rate!r}")


def binary_entropy(x: float) -> float:
    """Binary Shannon entropy h2(x) in bits.

    Args:
        x: Probability, in [0, 1].

    Returns:
        -x log2 x - (1-x) log2(1-x), with h2(0) = h2(1) = 0.

    Raises:
        DomainError: if x lies outside [0, 1].
    """
    if not math.isfinite(x) or not 0.0 <= x <= 1.0:
        raise DomainError(f"binary_entropy argument must lie in [0, 1], got {x!r}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -(x * math.log2(x) + (1.0 - x) * math.log2(1.0 - x))


def coin_imbalance(mu: float) -> float:
    """Quantum-coin imbalance of the four-state leaked source.

    For leaked coherent states of total mean photon number mu carrying
    the four BB84 angles, the basis overlap gives

        Delta = 1/2 [1 - e^-mu (cosh(mu/sqrt2) + 1/2 sinh(mu/sqrt2))]

    Args:
        mu: Mean leaked photon number, >= 0.

    Returns:
        Delta in [0, 1/2); exactly 0 at mu = 0 and strictly increasing.

    Raises:
        DomainError: if mu is negative or non-finite.
    """
    if not math.isfinite(mu) or mu < 0.0:
        raise DomainError(f"mu must be finite and >= 0, got {mu!r}")
    x = mu / math.sqrt(2.0)
    return 0.5 * (1.0 - math.exp(-mu) * (math.cosh(x) + 0.5 * math.sinh(x)))


def phase_error_with_tha(e_x: float, delta_prime: float) -> float:
    """Phase error rate inflated by source basis dependence.

    Lo-Preskill bound for a detection-conditioned coin imbalance
    delta_prime:

        e_X' = e_X + 4 d'(1-d')(1-2 e_X)
                   + 4 (1-2 d') sqrt(d'(1-d') e_X (1-e_X))

    Args:
        e_x: Single-photon phase error rate without the side channel,
            in [0, 0.5].
        delta_prime: Detection-conditioned coin imbalance, >= 0.

    Returns:
        Inflated phase error in [e_x, 0.5]; returns e_x exactly when
        delta_prime == 0 and saturates at 0.5 once delta_prime >= 0.5.

    Raises:
        DomainError: if arguments are outside their domains.
    """
    if not math.isfinite(e_x) or not 0.0 <= e_x <= 0.5:
        raise DomainError(f"e_x must lie in [0, 0.5], got {e_x!r}")
    if not math.isfinite(delta_prime) or delta_prime < 0.0:
        raise DomainError(f"delta_prime must be >= 0, got {delta_prime!r}")
    if delta_prime >= 0.5:
        return 0.5
    inflated = (e_x
                + 4.0 * delta_prime * (1.0 - delta_prime) * (1.0 - 2.0 * e_x)
                + 4.0 * (1.0 - 2.0 * delta_prime)
                * math.sqrt(delta_prime * (1.0 - delta_prime) * e_x * (1.0 - e_x)))
    return min(inflated, 0.5)


def gllp_key_rate(
    obs: DecoyObservations, bounds: SinglePhotonBounds, tha: ThaParams
) -> float:
    """Asymptotic GLLP key rate under pre-encoder leakage.

    R = max(0, p_z^2 p1 Y1^L [1 - h2(e_X')] - p_z^2 Q_s f_ec h2(E_s))

    with p1 = s e^-s, Delta' = coin_imbalance(mu_eve) / Y1^L, and
    e_X' the Lo-Preskill inflation of the decoy bound e1_upper. With
    mu_eve = 0 this is bit-for-bit the standard decoy-state rate.

    Args:
        obs: Measured observables (only q_s, e_s and s are used here;
            the decoy bounds were estimated from the full set).
        bounds: Single-photon bounds from the same observations.
        tha: Leakage intensity and protocol conventions.

    Returns:
        Secret key rate per pulse, >= 0.
    """
    y1 = bounds.y1_lower
    if y1 <= 0.0:
        return 0.0
    delta = coin_imbalance(tha.mu_eve)
    delta_prime = delta / y1
    ex_prime = phase_error_with_tha(bounds.e1_upper, delta_prime)
    p1 = obs.s * math.exp(-obs.s)
    priv = tha.p_z ** 2 * p1 * y1 * (1.0 - binary_entropy(ex_prime))
    ec = tha.p_z ** 2 * obs.q_s * tha.f_ec * binary_entropy(obs.e_s)
    return max(0.0, priv - ec)


def dual_source_key_rate(
    obs: DecoyObservations,
    bounds: SinglePhotonBounds,
    params: DualSourceParams = DualSourceParams(),
) -> float:
    """Asymptotic decoy-BB84 key rate on (possibly contaminated) data.

    R = max(0, q { Q1^L [1 - h2(e1^U)] - Q_s f_ec h2(E_s) })

    When obs comes from a channel carrying unmodulated post-encoder
    leakage, the decoy bounds and the error-correction term silently
    absorb the parasitic clicks; comparing against the clean-channel
    rate quantifies the dual-source penalty. With zero leakage the
    result is bit-for-bit the baseline rate.

    Args:
        obs: Observables measured at the receiver.
        bounds: Single-photon bounds estimated from obs.
        params: Sifting and error-correction conventions.

    Returns:
        Secret key rate per pulse, >= 0.
    """
    priv = bounds.q1_lower * (1.0 - binary_entropy(bounds.e1_upper))
    ec = obs.q_s * params.f_ec * binary_entropy(obs.e_s)
    return max(0.0, params.q_proto * (priv - ec))


def calibrated_intensity(q_observed: float, eta: float, y0: float) -> float:
    """Signal intensity an operator would infer from a measured gain.

    Inverts Q = 1 - (1 - Y0) e^(-s eta) for s using the signal path
    transmittance only. If the gain contains parasitic clicks the
    inferred intensity overestimates the true one, which is the
    calibration bias introduced by a post-encoder emitter.

    Args:
        q_observed: Measured per-pulse gain, in (0, 1).
        eta: End-to-end signal transmittance, in (0, 1].
        y0: Background yield assumed by the calibration, in [0, 1).

    Returns:
        Inferred intensity s_cal = -(1/eta) ln((1 - Q)/(1 - Y0)).

    Raises:
        DomainError: if an argument is outside its domain.
        CalibrationError: if q_observed <= y0 (below the background).
    """
    if not math.isfinite(q_observed) or not 0.0 < q_observed < 1.0:
        raise DomainError(f"q_observed must lie in (0, 1), got {q_observed!r}")
    if not math.isfinite(eta) or not 0.0 < eta <= 1.0:
        raise DomainError(f"eta must lie in (0, 1], got {eta!r}")
    if not math.isfinite(y0) or not 0.0 <= y0 < 1.0:
        raise DomainError(f"y0 must lie in [0, 1), got {y0!r}")
    if q_observed <= y0:
        raise CalibrationError(
            f"gain {q_observed:g} does not exceed the background yield {y0:g}")
    # log1p keeps precision when the gain is close to the background.
    return -(math.log1p(-q_observed) - math.log1p(-y0)) / eta
