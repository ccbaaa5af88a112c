"""Exception types shared across the package."""


class XcutError(Exception):
    """Base class for every error raised by this package."""


# -- graph construction and vertex-set handling --

class VertexOutOfRangeError(XcutError):
    pass


class NegativeWeightError(XcutError):
    pass


class NonPositiveScaleError(XcutError):
    pass


class EmptySetError(XcutError):
    pass


# -- st-cuts --

class SameVertexError(XcutError):
    pass


# -- cut functionals --

class DegeneratePartitionError(XcutError):
    pass


class ZeroBalanceError(XcutError):
    """The balancing term evaluated to zero; the cut value is +inf by convention."""


class NotAPartitionError(XcutError):
    pass


# -- sweep algorithms --

class SubsetTooSmallError(XcutError):
    pass


class DegenerateVlocError(XcutError):
    """Only one locally degree-maximal vertex exists, so there is no pair to sweep."""


class TooManyClustersError(XcutError):
    pass


class UnreachableKError(XcutError):
    """The greedy splitter ran out of splittable clusters before reaching k.

    Carries the clusters found so far in ``clusters``.
    """

    def __init__(self, message, clusters):
        super().__init__(message)
        self.clusters = list(clusters)


# -- oracles --

class TooLargeError(XcutError):
    pass


class PreconditionViolatedError(XcutError):
    pass


# -- ingestion --

class ParseError(XcutError):
    """Malformed input; carries the offending 1-based line number when known."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class BadGridError(XcutError):
    pass


class LengthMismatchError(XcutError):
    pass
