"""Exception types raised by geoent."""


class GeoentError(Exception):
    """Base class for all library errors."""


class InvalidInputError(GeoentError, ValueError):
    """Non-finite entries, non-Hermitian input and similar malformed data."""


class ShapeError(GeoentError, ValueError):
    """Dimension or party-index mismatch."""


class ZeroStateError(GeoentError, ValueError):
    """Attempt to normalize a vector of (numerically) zero norm."""


class AnnihilationError(ZeroStateError):
    """A local operator sent the state to zero."""


class DomainError(GeoentError, ValueError):
    """Scalar argument outside its admissible range."""


class InvalidInstrumentError(GeoentError, ValueError):
    """Measurement operators violate the completeness relation."""
