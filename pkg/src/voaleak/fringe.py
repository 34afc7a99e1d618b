"""Interference-fringe analysis for emission wavelength estimation.

A thermo-optic Mach-Zehnder scan drives one arm's heater with voltage U;
the accumulated phase is quadratic in U (heater power goes as U^2/R), so
adjacent transmission extrema are separated by pi in phase and the
squared-voltage span between them scales linearly with wavelength. The
unknown center wavelength follows from the ratio of those spans against
a reference laser scan on the same interferometer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import find_peaks

from .errors import (
    BoundaryAmbiguityError,
    DegenerateReferenceError,
    DomainError,
    InsufficientDataError,
    NoFringeError,
)

__all__ = ["FringeTrace", "ExtremaPair", "find_extrema_pair", "center_wavelength"]

MIN_SAMPLES = 5


@dataclass(frozen=True)
class FringeTrace:
    """A heater-voltage scan of detector count rate.

    Attributes:
        voltages: Heater voltages [V], strictly increasing.
        counts: Count rates [s^-1], >= 0.
    """

    voltages: np.ndarray
    counts: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.voltages, dtype=float)
        c = np.asarray(self.counts, dtype=float)
        object.__setattr__(self, "voltages", v)
        object.__setattr__(self, "counts", c)
        if v.ndim != 1 or c.ndim != 1 or v.size != c.size:
            raise DomainError("voltages and counts must be 1-D arrays of equal length")
        if v.size == 0:
            raise DomainError("fringe trace is empty")
        if not np.all(np.isfinite(v)) or not np.all(np.isfinite(c)):
            raise DomainError("fringe trace contains non-finite samples")
        if np.any(np.diff(v) <= 0.0):
            raise DomainError("voltages must be strictly increasing")
        if np.any(c < 0.0):
            raise DomainError("count rates must be >= 0")

    def __len__(self) -> int:
        return int(self.voltages.size)


@dataclass(frozen=True)
class ExtremaPair:
    """Voltages of one interference maximum and an adjacent minimum.

    Attributes:
        u_max: Heater voltage at the transmission maximum [V].
        u_min: Heater voltage at the adjacent minimum [V].
    """

    u_max: float
    u_min: float

    def __post_init__(self):
        if not (math.isfinite(self.u_max) and math.isfinite(self.u_min)):
            raise DomainError("extrema voltages must be finite")
        if self.u_max == self.u_min:
            raise DomainError("u_max and u_min must differ")


def _moving_average(y: np.ndarray, window: int) -> np.ndarray:
    # Centered average with a window that shrinks at the scan edges,
    # so no padding artifacts are introduced.
    if window == 1:
        return y.copy()
    h = window // 2
    out = np.empty_like(y)
    n = y.size
    for k in range(n):
        lo = max(0, k - h)
        hi = min(n, k + h + 1)
        out[k] = y[lo:hi].mean()
    return out


def _parabolic_vertex(u: np.ndarray, s: np.ndarray, idx: int) -> float:
    # Vertex of the parabola through three samples around idx; the grid
    # may be non-uniform so solve the generic quadratic fit.
    x = u[idx - 1:idx + 2]
    y = s[idx - 1:idx + 2]
    a, b, _ = np.polyfit(x, y, 2)
    if a == 0.0:
        return float(u[idx])
    return float(-b / (2.0 * a))


def find_extrema_pair(
    trace: FringeTrace,
    smooth_window: int = 5,
    refine: bool = False,
) -> ExtremaPair:
    """Locate the dominant fringe maximum and an adjacent minimum.

    The counts are smoothed with a centered moving average, the global
    interior maximum of the smoothed trace is taken, and the nearest
    interior local minimum is paired with it, preferring the
    higher-voltage side (the adjacent pi-shifted fringe) and falling
    back to the lower side. Returned voltages are snapped to the scan
    grid unless refine is set.

    Args:
        trace: Scanned fringe, at least 5 samples.
        smooth_window: Odd moving-average width in samples, >= 1.
        refine: If True, refine each extremum by a local parabolic fit
            instead of snapping to the grid.

    Returns:
        ExtremaPair with the chosen (u_max, u_min).

    Raises:
        InsufficientDataError: fewer than 5 samples.
        DomainError: invalid smoothing window.
        NoFringeError: the smoothed trace is monotone.
        BoundaryAmbiguityError: the required maximum or adjacent minimum
            lies at the scan boundary.
    """
    if len(trace) < MIN_SAMPLES:
        raise InsufficientDataError(
            f"need at least {MIN_SAMPLES} samples, got {len(trace)}")
    if smooth_window < 1 or smooth_window % 2 == 0:
        raise DomainError(f"smooth_window must be odd and >= 1, got {smooth_window}")

    u = trace.voltages
    s = _moving_average(trace.counts, smooth_window)

    maxima, _ = find_peaks(s)
    minima, _ = find_peaks(-s)

    if maxima.size == 0:
        d = np.diff(s)
        if np.all(d >= 0.0) or np.all(d <= 0.0):
            raise NoFringeError("trace is monotone; no interference fringe found")
        raise BoundaryAmbiguityError(
            "interference maximum lies at the scan boundary")

    i_max = int(maxima[np.argmax(s[maxima])])

    above = minima[minima > i_max]
    below = minima[minima < i_max]
    if above.size:
        i_min = int(above[0])
    elif below.size:
        i_min = int(below[-1])
    else:
        raise BoundaryAmbiguityError(
            "no interior minimum adjacent to the maximum; fringe minimum "
            "lies at or beyond the scan boundary")

    if refine:
        return ExtremaPair(u_max=_parabolic_vertex(u, s, i_max),
                           u_min=_parabolic_vertex(u, s, i_min))
    return ExtremaPair(u_max=float(u[i_max]), u_min=float(u[i_min]))


def center_wavelength(
    lambda_ref: float, reference: ExtremaPair, unknown: ExtremaPair
) -> float:
    """Unknown center wavelength from squared-voltage fringe spans.

    lambda_unknown = lambda_ref * |u_max^2 - u_min^2|_unknown
                                / |u_max^2 - u_min^2|_reference

    Args:
        lambda_ref: Reference laser wavelength [nm], > 0.
        reference: Extrema pair scanned with the reference laser.
        unknown: Extrema pair scanned with the unknown source.

    Returns:
        Estimated center wavelength [nm].

    Raises:
        DomainError: non-positive reference wavelength.
        DegenerateReferenceError: reference span is zero.
    """
    if not math.isfinite(lambda_ref) or lambda_ref <= 0.0:
        raise DomainError(f"lambda_ref must be finite and > 0, got {lambda_ref!r}")
    den = abs(reference.u_max ** 2 - reference.u_min ** 2)
    if den == 0.0:
        raise DegenerateReferenceError(
            "reference extrema have equal squared voltages")
    num = abs(unknown.u_max ** 2 - unknown.u_min ** 2)
    # ratio first: identical pairs then give exactly lambda_ref
    return lambda_ref * (num / den)
