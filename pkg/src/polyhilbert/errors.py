"""Exception hierarchy.

Every error carries a short machine-readable name (the class name) which the
CLI prints verbatim, so scripts can match on it.
"""


class HilbertError(ValueError):
    """Base class for all input and geometry errors raised by this package."""


# polygon validation
class TooFewVertices(HilbertError):
    pass


class Degenerate(HilbertError):
    pass


class NotConvex(HilbertError):
    pass


# queries
class PointNotInterior(HilbertError):
    pass


class ZeroVector(HilbertError):
    pass


class CoincidentPoints(HilbertError):
    pass


class ToleranceNotReached(HilbertError):
    pass


# square model
class OutOfDomain(HilbertError):
    pass


class DegenerateBasis(HilbertError):
    pass


# fan / flattening map
class OriginNotInterior(HilbertError):
    def __init__(self, message, centroid=None):
        super().__init__(message)
        self.centroid = centroid


class NearDegenerateTriangle(HilbertError):
    pass


class OnFanRay(HilbertError):
    pass


class SaturationOverflow(HilbertError):
    def __init__(self, message, magnitude=None):
        super().__init__(message)
        self.magnitude = magnitude


# constants
class BadConfig(HilbertError):
    pass


class BadAlpha(HilbertError):
    pass


class ParallelLines(HilbertError):
    pass


class HypothesisViolated(HilbertError):
    def __init__(self, message, which=None):
        super().__init__(message)
        self.which = which


class Collinear(HilbertError):
    pass


class ParallelConfig(HilbertError):
    pass


class PreconditionUnmet(HilbertError):
    pass
