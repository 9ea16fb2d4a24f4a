"""Shared exception types, mapped onto CLI exit codes by the front end."""


class ArgumentError(ValueError):
    """Caller violated an operation precondition."""


class FormatError(ValueError):
    """Malformed input file; carries a human-readable location."""


class CapacityError(RuntimeError):
    """Input exceeds a documented size cap of an exponential routine."""


class DegeneracyError(RuntimeError):
    """Geometry is not in general position."""

    def __init__(self, events):
        super().__init__("degenerate geometry: " + "; ".join(str(e) for e in events[:8]))
        self.events = list(events)


class GeometryError(RuntimeError):
    """A drawing step could not satisfy its clearance after retries."""


class InvariantError(AssertionError):
    """A statement guaranteed by the underlying theory failed at runtime.

    Either the implementation is wrong or a precondition was violated; the
    payload carries diagnostic state where available.
    """

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state


class PropertyError(RuntimeError):
    """A structural property required of an input object does not hold."""
