"""Exception hierarchy shared across the toolkit."""


class QuadwienerError(Exception):
    """Base class for every error raised by this package."""


class NonSymmetricError(QuadwienerError):
    """A rotation lists u as a neighbour of v but not conversely."""


class DisconnectedError(QuadwienerError):
    """The graph described by the rotation system is not connected."""


class LoopOrMultiEdgeError(QuadwienerError):
    """A rotation contains a loop or repeats a neighbour."""


class EulerViolationError(QuadwienerError):
    """Rotation system does not embed in the sphere (n - e + f != 2)."""


class FaceLengthViolationError(QuadwienerError):
    """Some face walk does not have length 4; carries the offending walk."""

    def __init__(self, message: str, walk=None):
        super().__init__(message)
        self.walk = tuple(walk) if walk is not None else None


class TooSmallError(QuadwienerError):
    """Operation needs more vertices than the input provides."""


class EmptySourceError(QuadwienerError):
    """Level structures and statuses need a nonempty source set."""


class UnknownFixtureError(QuadwienerError):
    """No fixture registered under the requested name."""


class NotSeparatingError(QuadwienerError):
    """The given 4-cycle bounds a face, so it cannot be split at."""


class WrongDegreeError(QuadwienerError):
    """A surgery was asked for at a vertex of the wrong degree."""


class WrongConfigurationError(QuadwienerError):
    """The local face environment required by a surgery is absent."""


class EdgePresentError(QuadwienerError):
    """The edge a surgery wants to add already exists."""


class SizeMismatchError(QuadwienerError):
    """The two graphs handed to a distance-decrease computation do not match."""


class NotGoodError(QuadwienerError):
    """The degree-3 profile is not good (some candidate edge is present)."""


class StructureViolationError(QuadwienerError):
    """A degree-3 neighbourhood violates the quadrangulation structure facts."""


class LimitExceededError(QuadwienerError):
    """Requested size is beyond the configured feasibility limit."""


class BadHeaderError(QuadwienerError):
    """A planar_code stream does not start with the expected header."""


class TruncatedRecordError(QuadwienerError):
    """A planar_code record ends before all neighbour lists are closed."""


class IndexOutOfRangeError(QuadwienerError):
    """A planar_code record references a vertex outside 1..n."""
