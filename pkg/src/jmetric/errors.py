"""Exception types shared across the library."""


class JmetricError(Exception):
    """Base class for every error raised by this package."""


class PointOutsideDomain(JmetricError):
    """A point lies on or outside the boundary of the open domain it was used with."""


class PoleEncountered(JmetricError):
    """A map was evaluated at, or numerically too close to, one of its poles."""


class UnsupportedImage(JmetricError):
    """A Moebius image domain is numerically ambiguous or not a generalized disk."""


class DomainError(JmetricError):
    """A scalar argument violates its documented range."""


class CoincidentPoints(JmetricError):
    """An operation requiring two distinct points received equal ones."""


class SelfMapViolation(JmetricError):
    """A map required to be a self-map of its domain failed certification sampling."""


class ParseError(JmetricError):
    """Malformed text input; carries the offending position and the expected tokens."""

    def __init__(self, message: str, position: int, expected: tuple = ()):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.expected = tuple(expected)
