"""Two-weak-decoy bounds on the single-photon contribution.

Given measured gain and QBER at a signal intensity s and two weak decoy
intensities nu > omega, standard decoy-state algebra (Ma-Lo-Qi style
vacuum+weak bounds generalized to two nonzero decoys) yields a lower
bound on the single-photon yield Y1, an upper bound on the
single-photon error rate e1, and from them a lower bound on the
single-photon gain Q1. With omega = 0 the expressions reduce to the
familiar vacuum+weak-decoy forms.

The bounds are information-theoretically valid for any photon-number
yield/error structure consistent with the observations; clamping to
physical ranges is counted and reported so callers can see when the
estimator ran out of information.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigurationError, DomainError, UndefinedBoundError

__all__ = [
    "DecoyObservations",
    "SinglePhotonBounds",
    "y0_lower",
    "y1_lower",
    "e1_upper",
    "q1_lower",
    "single_photon_bounds",
]


@dataclass(frozen=True)
class DecoyObservations:
    """Measured per-intensity observables of one protocol run.

    Parameters
    ----------
    s, nu, omega : float
        Signal and decoy intensities with s > nu > omega >= 0.
    q_s, q_nu, q_omega : float
        Gains at each intensity, in (0, 1].
    e_s, e_nu, e_omega : float
        QBERs at each intensity, in [0, 0.5].
    """

    s: float
    nu: float
    omega: float
    q_s: float
    q_nu: float
    q_omega: float
    e_s: float
    e_nu: float
    e_omega: float

    def __post_init__(self):
        for name in ("s", "nu", "omega"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0.0:
                raise ConfigurationError(f"{name} must be finite and >= 0, got {v!r}")
        if not self.s > self.nu > self.omega:
            raise ConfigurationError(
                "intensity ordering violated: require s > nu > omega, got "
                f"s={self.s!r}, nu={self.nu!r}, omega={self.omega!r}")
        for name in ("q_s", "q_nu", "q_omega"):
            v = getattr(self, name)
            if not math.isfinite(v) or not 0.0 < v <= 1.0:
                raise DomainError(f"{name} must lie in (0, 1], got {v!r}")
        for name in ("e_s", "e_nu", "e_omega"):
            v = getattr(self, name)
            if not math.isfinite(v) or not 0.0 <= v <= 0.5:
                raise DomainError(f"{name} must lie in [0, 0.5], got {v!r}")


@dataclass(frozen=True)
class SinglePhotonBounds:
    """Decoy-estimated bounds entering the key-rate formulas.

    Parameters
    ----------
    y1_lower : float
        Lower bound on the single-photon yield, in [0, 1].
    e1_upper : float
        Upper bound on the single-photon error rate, in [0, 0.5].
    q1_lower : float
        Lower bound on the single-photon gain, y1_lower * s e^-s.
    y0_lower : float
        Lower bound on the background yield, in [0, 1].
    clamp_events : int
        How many of the raw bound values had to be clamped into their
        physical range (0 means the estimator was fully informative).
    """

    y1_lower: float
    e1_upper: float
    q1_lower: float
    y0_lower: float
    clamp_events: int = 0

    def __post_init__(self):
        for name, hi in (("y1_lower", 1.0), ("e1_upper", 0.5),
                         ("q1_lower", 1.0), ("y0_lower", 1.0)):
            v = getattr(self, name)
            if not math.isfinite(v) or not 0.0 <= v <= hi:
                raise DomainError(f"{name} must lie in [0, {hi}], got {v!r}")
        if self.clamp_events < 0:
            raise DomainError("clamp_events must be >= 0")


def _check_decoy_usable(obs: DecoyObservations):
    if not obs.nu + obs.omega < obs.s:
        raise ConfigurationError(
            "two-decoy bound requires nu + omega < s, got "
            f"nu={obs.nu!r}, omega={obs.omega!r}, s={obs.s!r}")


def _y0_raw(obs: DecoyObservations) -> float:
    nu, om = obs.nu, obs.omega
    return (nu * obs.q_omega * math.exp(om) - om * obs.q_nu * math.exp(nu)) / (nu - om)


def y0_lower(obs: DecoyObservations) -> float:
    """Lower bound on the background yield Y0 from the two decoys.

    Y0 >= (nu Q_omega e^omega - omega Q_nu e^nu) / (nu - omega),
    clamped to [0, 1].
    """
    _check_decoy_usable(obs)
    return min(max(_y0_raw(obs), 0.0), 1.0)


def _y1_raw(obs: DecoyObservations, y0_l: float) -> float:
    s, nu, om = obs.s, obs.nu, obs.omega
    front = s / (s * (nu - om) - nu ** 2 + om ** 2)
    inner = (obs.q_nu * math.exp(nu) - obs.q_omega * math.exp(om)
             - ((nu ** 2 - om ** 2) / s ** 2) * (obs.q_s * math.exp(s) - y0_l))
    return front * inner


def y1_lower(obs: DecoyObservations) -> float:
    """Lower bound on the single-photon yield Y1.

    Uses the two-decoy difference bound with the background estimate
    from `y0_lower`; the result is clamped to [0, 1].

    Raises
    ------
    ConfigurationError
        If nu + omega >= s (bound prefactor loses its sign guarantee).
    """
    _check_decoy_usable(obs)
    y0_l = min(max(_y0_raw(obs), 0.0), 1.0)
    return min(max(_y1_raw(obs, y0_l), 0.0), 1.0)


def e1_upper(obs: DecoyObservations, y1_l: float) -> float:
    """Upper bound on the single-photon error rate e1.

    e1 <= (E_nu Q_nu e^nu - E_omega Q_omega e^omega)
          / ((nu - omega) y1_l), clamped to [0, 0.5].

    Raises
    ------
    UndefinedBoundError
        If y1_l == 0; the caller must force the key rate to zero.
    """
    _check_decoy_usable(obs)
    if not math.isfinite(y1_l) or not 0.0 <= y1_l <= 1.0:
        raise DomainError(f"y1_l must lie in [0, 1], got {y1_l!r}")
    if y1_l == 0.0:
        raise UndefinedBoundError(
            "y1_lower is zero; single-photon error bound undefined")
    num = (obs.e_nu * obs.q_nu * math.exp(obs.nu)
           - obs.e_omega * obs.q_omega * math.exp(obs.omega))
    return min(max(num / ((obs.nu - obs.omega) * y1_l), 0.0), 0.5)


def q1_lower(obs: DecoyObservations, y1_l: float) -> float:
    """Lower bound on the single-photon gain, Q1 >= y1_l s e^-s."""
    if not math.isfinite(y1_l) or not 0.0 <= y1_l <= 1.0:
        raise DomainError(f"y1_l must lie in [0, 1], got {y1_l!r}")
    return y1_l * obs.s * math.exp(-obs.s)


def single_photon_bounds(obs: DecoyObservations) -> SinglePhotonBounds:
    """Bundle all decoy bounds for one set of observations.

    When y1_lower comes out zero the error bound is undefined and is
    reported as the uninformative 0.5, which zeroes the single-photon
    key-rate term downstream.

    Returns
    -------
    SinglePhotonBounds
        Bounds plus the number of clamping events that occurred.
    """
    _check_decoy_usable(obs)
    clamps = 0

    y0_raw = _y0_raw(obs)
    y0_l = min(max(y0_raw, 0.0), 1.0)
    if y0_l != y0_raw:
        clamps += 1

    y1_raw = _y1_raw(obs, y0_l)
    y1_l = min(max(y1_raw, 0.0), 1.0)
    if y1_l != y1_raw:
        clamps += 1

    if y1_l > 0.0:
        num = (obs.e_nu * obs.q_nu * math.exp(obs.nu)
               - obs.e_omega * obs.q_omega * math.exp(obs.omega))
        e1_raw = num / ((obs.nu - obs.omega) * y1_l)
        e1_u = min(max(e1_raw, 0.0), 0.5)
        if e1_u != e1_raw:
            clamps += 1
    else:
        e1_u = 0.5
        clamps += 1

    return SinglePhotonBounds(
        y1_lower=y1_l,
        e1_upper=e1_u,
        q1_lower=q1_lower(obs, y1_l),
        y0_lower=y0_l,
        clamp_events=clamps,
    )
