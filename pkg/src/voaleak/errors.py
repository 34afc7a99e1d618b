"""Exception types shared across the package.

Everything derives from ValueError so callers that only care about
"bad input" can catch a single familiar type, while the CLI maps each
subclass to a stable error category string.
"""


class VoaleakError(ValueError):
    """Base class for all errors raised by this package."""

    category = "internal"


class DomainError(VoaleakError):
    """An argument lies outside the physically meaningful domain."""

    category = "domain"


class InsufficientDataError(VoaleakError):
    """Too few samples to perform the requested analysis."""

    category = "data"


class SaturationError(DomainError):
    """Click probability per gate reached 1; the log map is undefined."""

    category = "saturation"


class NoFringeError(VoaleakError):
    """Trace is monotone; no interference extrema exist."""

    category = "data"


class BoundaryAmbiguityError(VoaleakError):
    """A needed extremum sits at the scan boundary and cannot be confirmed."""

    category = "data"


class DegenerateReferenceError(VoaleakError):
    """Reference extrema give a zero squared-voltage difference."""

    category = "data"


class UndefinedConditionalError(VoaleakError):
    """Conditional error rate requested where the yield is zero."""

    category = "domain"


class UndefinedQberError(UndefinedConditionalError):
    """QBER requested where the gain is zero."""

    category = "domain"


class UndefinedBoundError(VoaleakError):
    """Single-photon error bound undefined because the yield bound is zero."""

    category = "domain"


class CalibrationError(VoaleakError):
    """Observed gain is incompatible with the assumed background."""

    category = "domain"


class ConfigurationError(VoaleakError):
    """Scenario configuration is missing, inconsistent, or malformed."""

    category = "config"


class TraceParseError(VoaleakError):
    """A trace file row could not be parsed."""

    category = "parse"

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


class TraceSchemaError(VoaleakError):
    """A trace file violates the expected column schema or ordering."""

    category = "schema"
