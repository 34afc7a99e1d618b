"""Two-source threshold-detector channel model.

The legitimate weak coherent signal (intensity gamma) and an unmodulated
parasitic weak coherent source (intensity mu_el) travel to a threshold
detector with independent transmittances. Clicks from the signal, the
parasitic light, and dark counts combine as independent event sources,
which gives closed-form per-pulse gain and error gain after Poisson
averaging over both photon numbers.

All gains use expm1/log1p so that values near the dark-count floor keep
full relative precision.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

from .errors import DomainError, UndefinedConditionalError, UndefinedQberError

__all__ = [
    "ChannelParams",
    "SourcePair",
    "Observables",
    "transmittance",
    "yield_ij",
    "error_ij",
    "dual_source_gain",
    "dual_source_error_gain",
    "observables_for_intensity",
]


@dataclass(frozen=True)
class ChannelParams:
    """Channel and receiver parameters for both sources.

    Parameters
    ----------
    distance : float
        Fiber length [km], >= 0.
    alpha_sig : float
        Fiber attenuation seen by the signal [dB/km], >= 0.
    alpha_par : float
        Fiber attenuation seen by the parasitic light [dB/km], >= 0.
        It is spectrally far from the signal band, so the loss differs.
    eta_bob_sig : float
        Receiver efficiency for the signal, in (0, 1].
    eta_bob_par : float
        Receiver efficiency for the parasitic light, in (0, 1].
    y0 : float
        Dark/background count probability per pulse, in [0, 1).
    e_d : float
        Misalignment error probability of a signal click, in [0, 0.5].
    e0 : float
        Error probability of background and parasitic clicks; 1/2 for
        basis-uncorrelated light.
    """

    distance: float = 0.0
    alpha_sig: float = 0.2
    alpha_par: float = 0.8
    eta_bob_sig: float = 0.78
    eta_bob_par: float = 0.25
    y0: float = 2e-8
    e_d: float = 0.0061
    e0: float = 0.5

    def __post_init__(self):
        if not math.isfinite(self.distance) or self.distance < 0.0:
            raise DomainError(f"distance must be >= 0, got {self.distance!r}")
        for name in ("alpha_sig", "alpha_par"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0.0:
                raise DomainError(f"{name} must be >= 0, got {v!r}")
        for name in ("eta_bob_sig", "eta_bob_par"):
            v = getattr(self, name)
            if not math.isfinite(v) or not 0.0 < v <= 1.0:
                raise DomainError(f"{name} must lie in (0, 1], got {v!r}")
        if not math.isfinite(self.y0) or not 0.0 <= self.y0 < 1.0:
            raise DomainError(f"y0 must lie in [0, 1), got {self.y0!r}")
        if not math.isfinite(self.e_d) or not 0.0 <= self.e_d <= 0.5:
            raise DomainError(f"e_d must lie in [0, 0.5], got {self.e_d!r}")
        if not math.isfinite(self.e0) or not 0.0 <= self.e0 <= 1.0:
            raise DomainError(f"e0 must lie in [0, 1], got {self.e0!r}")

    def eta_signal(self) -> float:
        """End-to-end signal transmittance including the receiver."""
        return transmittance(self.alpha_sig, self.distance) * self.eta_bob_sig

    def eta_parasitic(self) -> float:
        """End-to-end parasitic transmittance including the receiver."""
        return transmittance(self.alpha_par, self.distance) * self.eta_bob_par


@dataclass(frozen=True)
class SourcePair:
    """Mean photon numbers of the two co-propagating sources.

    Parameters
    ----------
    gamma : float
        Signal intensity (photons/pulse), >= 0.
    mu_el : float
        Parasitic intensity (photons/pulse), >= 0.
    """

    gamma: float
    mu_el: float = 0.0

    def __post_init__(self):
        for name in ("gamma", "mu_el"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0.0:
                raise DomainError(f"{name} must be finite and >= 0, got {v!r}")


@dataclass(frozen=True)
class Observables:
    """Per-pulse measured quantities for one signal intensity.

    Parameters
    ----------
    gain : float
        Detection probability per pulse, in [0, 1].
    qber : float
        Error fraction among detections, in [0, 1]; bounded by 0.5
        under the e0 = 1/2 convention.
    """

    gain: float
    qber: float

    def __post_init__(self):
        if not math.isfinite(self.gain) or not 0.0 <= self.gain <= 1.0:
            raise DomainError(f"gain must lie in [0, 1], got {self.gain!r}")
        if not math.isfinite(self.qber) or not 0.0 <= self.qber <= 1.0:
            raise DomainError(f"qber must lie in [0, 1], got {self.qber!r}")


def transmittance(alpha_db_per_km: float, distance_km: float) -> float:
    """Fiber power transmittance 10^(-alpha L / 10).

    Parameters
    ----------
    alpha_db_per_km : float
        Attenuation coefficient [dB/km], >= 0.
    distance_km : float
        Fiber length [km], >= 0.

    Returns
    -------
    float
        Transmittance in (0, 1].
    """
    if not math.isfinite(alpha_db_per_km) or alpha_db_per_km < 0.0:
        raise DomainError(f"alpha must be >= 0, got {alpha_db_per_km!r}")
    if not math.isfinite(distance_km) or distance_km < 0.0:
        raise DomainError(f"distance must be >= 0, got {distance_km!r}")
    return 10.0 ** (-alpha_db_per_km * distance_km / 10.0)


def _arrival(i: int, eta: float) -> float:
    # P(at least one of i photons arrives) = 1 - (1 - eta)^i, computed
    # stably; i == 0 is an empty product even when eta == 1.
    if i == 0:
        return 0.0
    return -math.expm1(i * math.log1p(-eta)) if eta < 1.0 else 1.0


def yield_ij(i: int, j: int, eta: float, eta_par: float, y0: float) -> float:
    """Click probability given i signal and j parasitic photons sent.

    Y_ij = 1 - (1 - eta_i)(1 - eta'_j)(1 - Y0) with
    eta_i = 1 - (1 - eta)^i, for a threshold detector with independent
    arrivals and dark counts.

    Parameters
    ----------
    i, j : int
        Photon numbers at the channel input, >= 0.
    eta, eta_par : float
        Per-photon end-to-end transmittances, in [0, 1].
    y0 : float
        Dark count probability, in [0, 1).

    Returns
    -------
    float
        Y_ij in [0, 1].
    """
    i, j = _check_yield_args(i, j, eta, eta_par, y0)
    terms = 0.0
    if i:
        if eta == 1.0:
            return 1.0
        terms += i * math.log1p(-eta)
    if j:
        if eta_par == 1.0:
            return 1.0
        terms += j * math.log1p(-eta_par)
    terms += math.log1p(-y0)
    return -math.expm1(terms)


def error_ij(
    i: int,
    j: int,
    eta: float,
    eta_par: float,
    y0: float,
    e_d: float,
    e0: float,
) -> float:
    """Conditional error rate given i signal and j parasitic photons.

    An erroneous detection occurs when at least one of the three
    independent sources (signal arrival with misalignment e_d,
    parasitic arrival with error e0, dark count with error e0) produces
    an erroneous click; inclusion-exclusion gives

    e_ij Y_ij = eta_i e_d + eta'_j e0 + Y0 e0
                - eta_i eta'_j e_d e0 - eta_i Y0 e_d e0
                - eta'_j Y0 e0^2 + eta_i eta'_j Y0 e_d e0^2

    Parameters
    ----------
    i, j : int
        Photon numbers at the channel input, >= 0.
    eta, eta_par : float
        Per-photon transmittances, in [0, 1].
    y0 : float
        Dark count probability, in [0, 1).
    e_d : float
        Signal misalignment error, in [0, 0.5].
    e0 : float
        Background error fraction, in [0, 1].

    Returns
    -------
    float
        e_ij in [0, 1].

    Raises
    ------
    UndefinedConditionalError
        If Y_ij = 0 (no detections to condition on).
    """
    i, j = _check_yield_args(i, j, eta, eta_par, y0)
    for name, v, hi in (("e_d", e_d, 0.5), ("e0", e0, 1.0)):
        if not math.isfinite(v) or not 0.0 <= v <= hi:
            raise DomainError(f"{name} must lie in [0, {hi}], got {v!r}")

    y = yield_ij(i, j, eta, eta_par, y0)
    if y == 0.0:
        raise UndefinedConditionalError(
            f"Y_{i}{j} = 0; conditional error rate undefined")
    hi_ = _arrival(i, eta)
    hj = _arrival(j, eta_par)
    num = (hi_ * e_d + hj * e0 + y0 * e0
           - hi_ * hj * e_d * e0 - hi_ * y0 * e_d * e0
           - hj * y0 * e0 ** 2 + hi_ * hj * y0 * e_d * e0 ** 2)
    return num / y


def dual_source_gain(src: SourcePair, ch: ChannelParams) -> float:
    """Per-pulse gain with both Poissonian sources present.

    Poisson averaging of Y_ij gives the closed form

    Q = 1 - (1 - Y0) exp(-gamma eta) exp(-mu_el eta')

    Parameters
    ----------
    src : SourcePair
        Signal and parasitic intensities.
    ch : ChannelParams
        Channel, receiver and background parameters.

    Returns
    -------
    float
        Gain in [0, 1]. Exactly independent of the parasitic path when
        src.mu_el == 0.
    """
    x = src.gamma * ch.eta_signal() + src.mu_el * ch.eta_parasitic()
    return -math.expm1(math.log1p(-ch.y0) - x)


def dual_source_error_gain(src: SourcePair, ch: ChannelParams) -> float:
    """Per-pulse error gain E Q with both sources present.

    Poisson averaging of e_ij Y_ij replaces eta_i by 1 - exp(-gamma eta)
    and eta'_j by 1 - exp(-mu_el eta') in the inclusion-exclusion
    expression of `error_ij`.

    Returns
    -------
    float
        E Q in [0, 1].
    """
    a = -math.expm1(-src.gamma * ch.eta_signal())
    b = -math.expm1(-src.mu_el * ch.eta_parasitic())
    y0, e_d, e0 = ch.y0, ch.e_d, ch.e0
    return (e_d * a + e0 * b + y0 * e0
            - e_d * e0 * a * b - y0 * e0 * e_d * a
            - y0 * e0 ** 2 * b + y0 * e0 ** 2 * e_d * a * b)


def observables_for_intensity(
    gamma: float, mu_el: float, ch: ChannelParams
) -> Observables:
    """Gain and QBER a receiver would record at one signal intensity.

    Parameters
    ----------
    gamma : float
        Signal intensity, >= 0.
    mu_el : float
        Parasitic intensity, >= 0.
    ch : ChannelParams
        Channel parameters.

    Returns
    -------
    Observables
        Bundled (gain, qber).

    Raises
    ------
    UndefinedQberError
        If the gain is exactly zero (no clicks to form a QBER).
    """
    src = SourcePair(gamma=gamma, mu_el=mu_el)
    q = dual_source_gain(src, ch)
    if q == 0.0:
        raise UndefinedQberError("gain is zero; QBER undefined")
    e = dual_source_error_gain(src, ch) / q
    return Observables(gain=q, qber=min(e, 1.0))


def _check_yield_args(i: int, j: int, eta: float, eta_par: float, y0: float):
    try:
        i = operator.index(i)
        j = operator.index(j)
    except TypeError:
        raise DomainError(f"photon numbers must be integers, got {i!r}, {j!r}") from None
    if i < 0 or j < 0:
        raise DomainError(f"photon numbers must be >= 0, got {i}, {j}")
    for name, v in (("eta", eta), ("eta_par", eta_par)):
        if not math.isfinite(v) or not 0.0 <= v <= 1.0:
            raise DomainError(f"{name} must lie in [0, 1], got {v!r}")
    if not math.isfinite(y0) or not 0.0 <= y0 < 1.0:
        raise DomainError(f"y0 must lie in [0, 1), got {y0!r}")
    return i, j
