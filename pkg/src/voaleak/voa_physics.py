"""Carrier-injection VOA device physics.

Covers the electro-optic behaviour of a forward-biased silicon p-n
junction used as a variable optical attenuator: free-carrier plasma
dispersion (general Drude form and the Soref-Bennett empirical fit at
1550 nm), attenuation bookkeeping, the band-to-band emission wavelength,
and ideality-factor extraction from I-V traces.

Unit conventions at the API boundary follow common silicon-photonics
practice: carrier densities in cm^-3, absorption in cm^-1, lengths in
cm, wavelengths in nm, mobilities in cm^2/(V s). Conversions to SI
happen internally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.constants import (
    Boltzmann,
    elementary_charge,
    epsilon_0,
    m_e,
    Planck,
    speed_of_light,
)

from .errors import DomainError, InsufficientDataError

__all__ = [
    "CarrierState",
    "SiliconConstants",
    "VoaGeometry",
    "IvCurve",
    "IdealityFit",
    "DEFAULT_FIT_WINDOWS",
    "plasma_dispersion_general",
    "soref_1550",
    "attenuation_db",
    "attenuation_from_counts",
    "bandgap_wavelength",
    "fit_ideality",
]

# Soref & Bennett (1987) empirical coefficients at 1550 nm, cm^3 units.
_SOREF_DN_E = 8.8e-22
_SOREF_DN_H = 8.5e-18
_SOREF_DA_E = 8.5e-18
_SOREF_DA_H = 6.0e-18

# I-V windows (volts) where the junction shows distinct transport regimes:
# recombination-dominated, diffusion/high-injection, series-resistance onset.
DEFAULT_FIT_WINDOWS: tuple[tuple[float, float], ...] = (
    (0.00, 0.45),
    (0.50, 0.80),
    (0.85, 0.90),
)


# ============================================================
# Data types
# ============================================================

@dataclass(frozen=True)
class CarrierState:
    """Injected excess carrier densities.

    Attributes:
        delta_n_e: Excess electron density [cm^-3], >= 0.
        delta_n_h: Excess hole density [cm^-3], >= 0.
    """

    delta_n_e: float
    delta_n_h: float

    def __post_init__(self):
        for name in ("delta_n_e", "delta_n_h"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0.0:
                raise DomainError(f"{name} must be finite and >= 0, got {v!r}")


@dataclass(frozen=True)
class SiliconConstants:
    """Material and fundamental constants for crystalline silicon.

    Defaults are widely used textbook values (conductivity effective
    masses 0.26/0.39 m0, low-doping mobilities 1450/450 cm^2/(V s),
    refractive index 3.4757 near 1550 nm). They are assumptions, not
    measured device parameters; override per device as needed.

    Attributes:
        q: Elementary charge [C].
        eps0: Vacuum permittivity [F/m].
        n0: Unperturbed refractive index at the operating wavelength.
        m_ce: Electron conductivity effective mass [kg].
        m_ch: Hole conductivity effective mass [kg].
        mu_n: Electron mobility [cm^2/(V s)].
        mu_p: Hole mobility [cm^2/(V s)].
        c: Speed of light [m/s].
        h_planck: Planck constant [J s].
        k_boltzmann: Boltzmann constant [J/K].
    """

    q: float = elementary_charge
    eps0: float = epsilon_0
    n0: float = 3.4757
    m_ce: float = 0.26 * m_e
    m_ch: float = 0.39 * m_e
    mu_n: float = 1450.0
    mu_p: float = 450.0
    c: float = speed_of_light
    h_planck: float = Planck
    k_boltzmann: float = Boltzmann

    def __post_init__(self):
        for name in ("q", "eps0", "n0", "m_ce", "m_ch", "mu_n", "mu_p",
                     "c", "h_planck", "k_boltzmann"):
            v = getattr(self, name)
            if not math.isfinite(v) or v <= 0.0:
                raise DomainError(f"{name} must be finite and > 0, got {v!r}")


@dataclass(frozen=True)
class VoaGeometry:
    """Attenuator interaction geometry.

    Attributes:
        length: Active-region optical path length [cm], > 0.
        wavelength: Operating wavelength [nm], > 0.
    """

    length: float
    wavelength: float = 1550.0

    def __post_init__(self):
        if not math.isfinite(self.length) or self.length <= 0.0:
            raise DomainError(f"length must be finite and > 0, got {self.length!r}")
        if not math.isfinite(self.wavelength) or self.wavelength <= 0.0:
            raise DomainError(
                f"wavelength must be finite and > 0, got {self.wavelength!r}")


@dataclass(frozen=True)
class IvCurve:
    """Measured I-V trace of the junction.

    Voltages must be strictly increasing. Currents may touch zero
    outside fitted windows; fitting rejects non-positive currents.

    Attributes:
        voltages: Bias voltages [V].
        currents: Terminal currents [A].
    """

    voltages: np.ndarray
    currents: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.voltages, dtype=float)
        i = np.asarray(self.currents, dtype=float)
        object.__setattr__(self, "voltages", v)
        object.__setattr__(self, "currents", i)
        if v.ndim != 1 or i.ndim != 1 or v.size != i.size:
            raise DomainError("voltages and currents must be 1-D arrays of equal length")
        if v.size == 0:
            raise DomainError("I-V trace is empty")
        if not np.all(np.isfinite(v)) or not np.all(np.isfinite(i)):
            raise DomainError("I-V trace contains non-finite samples")
        if np.any(np.diff(v) <= 0.0):
            raise DomainError("voltages must be strictly increasing")

    def __len__(self) -> int:
        return int(self.voltages.size)


@dataclass(frozen=True)
class IdealityFit:
    """Result of an exponential-law fit over one voltage window.

    Attributes:
        v_lo: Lower window edge [V].
        v_hi: Upper window edge [V].
        slope: OLS slope of log10(I) vs V [decades/V].
        beta: Ideality factor extracted from the slope.
        temperature: Junction temperature assumed in the fit [K].
    """

    v_lo: float
    v_hi: float
    slope: float
    beta: float
    temperature: float


# ============================================================
# Plasma dispersion
# ============================================================

def plasma_dispersion_general(
    carriers: CarrierState,
    constants: SiliconConstants = SiliconConstants(),
    wavelength: float = 1550.0,
) -> tuple[float, float]:
    """Drude-model free-carrier index and absorption change.

    Evaluates the classical plasma-dispersion expressions

        dn = -q^2 lam^2 / (8 pi^2 c^2 eps0 n0) (dNe/m_ce + dNh/m_ch)
        da =  q^3 lam^2 / (4 pi^2 c^3 eps0 n0) (dNe/(m_ce^2 mu_n)
                                                + dNh/(m_ch^2 mu_p))

    Args:
        carriers: Injected carrier densities [cm^-3].
        constants: Material constants; see SiliconConstants.
        wavelength: Probe wavelength [nm].

    Returns:
        (delta_n, delta_alpha): index change (dimensionless, <= 0) and
        added absorption [cm^-1, >= 0].

    Raises:
        DomainError: if wavelength is not positive and finite.
    """
    if not math.isfinite(wavelength) or wavelength <= 0.0:
        raise DomainError(f"wavelength must be finite and > 0, got {wavelength!r}")

    lam = wavelength * 1e-9               # nm -> m
    ne = carriers.delta_n_e * 1e6         # cm^-3 -> m^-3
    nh = carriers.delta_n_h * 1e6
    mu_n = constants.mu_n * 1e-4          # cm^2/(V s) -> m^2/(V s)
    mu_p = constants.mu_p * 1e-4

    c2 = constants.c ** 2
    pref_n = constants.q ** 2 * lam ** 2 / (
        8.0 * math.pi ** 2 * c2 * constants.eps0 * constants.n0)
    pref_a = constants.q ** 3 * lam ** 2 / (
        4.0 * math.pi ** 2 * c2 * constants.c * constants.eps0 * constants.n0)

    delta_n = -pref_n * (ne / constants.m_ce + nh / constants.m_ch)
    delta_alpha_m = pref_a * (ne / (constants.m_ce ** 2 * mu_n)
                              + nh / (constants.m_ch ** 2 * mu_p))
    return delta_n, delta_alpha_m * 1e-2  # m^-1 -> cm^-1


def soref_1550(carriers: CarrierState) -> tuple[float, float]:
    """Soref-Bennett empirical plasma dispersion at 1550 nm.

        dn = -(8.8e-22 dNe + 8.5e-18 dNh^0.8)
        da =   8.5e-18 dNe + 6.0e-18 dNh     [cm^-1]

    Args:
        carriers: Injected carrier densities [cm^-3].

    Returns:
        (delta_n, delta_alpha) with delta_alpha in cm^-1.
    """
    ne = carriers.delta_n_e
    nh = carriers.delta_n_h
    delta_n = -(_SOREF_DN_E * ne + _SOREF_DN_H * nh ** 0.8)
    delta_alpha = _SOREF_DA_E * ne + _SOREF_DA_H * nh
    return delta_n, delta_alpha


# ============================================================
# Attenuation
# ============================================================

def attenuation_db(delta_alpha: float, geometry: VoaGeometry) -> float:
    """Decibel attenuation added by free-carrier absorption.

    Args:
        delta_alpha: Added absorption coefficient [cm^-1], >= 0.
        geometry: Interaction geometry (length in cm).

    Returns:
        Attenuation in dB: 10 log10(e) * delta_alpha * length.

    Raises:
        DomainError: if delta_alpha is negative or non-finite.
    """
    if not math.isfinite(delta_alpha) or delta_alpha < 0.0:
        raise DomainError(f"delta_alpha must be finite and >= 0, got {delta_alpha!r}")
    return 10.0 * math.log10(math.e) * delta_alpha * geometry.length


def attenuation_from_counts(counts_on: float, counts_off: float) -> float:
    """Attenuation inferred from detector count rates.

    Args:
        counts_on: Count rate with the VOA driven [s^-1], > 0.
        counts_off: Count rate with the VOA undriven [s^-1], > 0.

    Returns:
        -10 log10(counts_on / counts_off) in dB. Positive when the
        driven device attenuates.

    Raises:
        DomainError: if either count rate is not positive and finite.
    """
    for name, v in (("counts_on", counts_on), ("counts_off", counts_off)):
        if not math.isfinite(v) or v <= 0.0:
            raise DomainError(f"{name} must be finite and > 0, got {v!r}")
    return -10.0 * math.log10(counts_on / counts_off)


# ============================================================
# Emission wavelength
# ============================================================

def bandgap_wavelength(
    e_g: float, constants: SiliconConstants = SiliconConstants()
) -> float:
    """Photon wavelength of band-to-band recombination.

    Args:
        e_g: Bandgap or transition energy [eV], > 0.
        constants: Provides h, c and the charge used for eV conversion.

    Returns:
        Wavelength lambda = h c / E_g in nm.

    Raises:
        DomainError: if e_g is not positive and finite.
    """
    if not math.isfinite(e_g) or e_g <= 0.0:
        raise DomainError(f"e_g must be finite and > 0, got {e_g!r}")
    return constants.h_planck * constants.c / (e_g * constants.q) * 1e9


# ============================================================
# Ideality factor
# ============================================================

def fit_ideality(
    iv: IvCurve, v_lo: float, v_hi: float, temperature: float = 300.0
) -> IdealityFit:
    """Extract the diode ideality factor over a voltage window.

    Fits log10(I) = S V + const by ordinary least squares over samples
    with v_lo <= V <= v_hi, then inverts the exponential-law slope:

        beta = q log10(e) / (S k T)

    Args:
        iv: Measured I-V trace.
        v_lo: Lower window edge [V].
        v_hi: Upper window edge [V].
        temperature: Junction temperature [K], > 0.

    Returns:
        IdealityFit with the decades/V slope and beta.

    Raises:
        DomainError: for a bad window/temperature, non-positive current
            inside the window, or a non-positive fitted slope.
        InsufficientDataError: fewer than 3 samples in the window.
    """
    if not (math.isfinite(v_lo) and math.isfinite(v_hi)) or v_hi <= v_lo:
        raise DomainError(f"require v_lo < v_hi, got [{v_lo!r}, {v_hi!r}]")
    if not math.isfinite(temperature) or temperature <= 0.0:
        raise DomainError(f"temperature must be finite and > 0, got {temperature!r}")

    mask = (iv.voltages >= v_lo) & (iv.voltages <= v_hi)
    v = iv.voltages[mask]
    i = iv.currents[mask]
    if np.any(i <= 0.0):
        raise DomainError(
            f"non-positive current inside window [{v_lo}, {v_hi}]; "
            "the exponential law cannot be fitted")
    if v.size < 3:
        raise InsufficientDataError(
            f"need at least 3 samples in [{v_lo}, {v_hi}], found {v.size}")

    slope, _ = np.polyfit(v, np.log10(i), 1)
    slope = float(slope)
    if slope <= 0.0:
        raise DomainError(f"fitted slope {slope:g} dec/V is not positive; "
                          "window does not show diode-like conduction")

    k_b = Boltzmann
    q = elementary_charge
    beta = q * math.log10(math.e) / (slope * k_b * temperature)
    return IdealityFit(v_lo=float(v_lo), v_hi=float(v_hi), slope=slope,
                       beta=beta, temperature=float(temperature))
