"""Exception hierarchy.

Every domain error derives from FrameError so the CLI can map the whole
family onto a single validation exit code.
"""


class FrameError(Exception):
    """Base class for all domain errors raised by this package."""


class EmptyInput(FrameError):
    """No columns were supplied, or columns are empty."""


class NonUnitColumn(FrameError):
    """A column norm deviates from 1 beyond the unit-norm tolerance."""


class ZeroColumn(FrameError):
    """A column is identically zero and cannot be normalized."""


class TooFewVectors(FrameError):
    """The operation needs at least two frame vectors."""


class AmbiguousClustering(FrameError):
    """The cluster tolerance cannot separate the observed frame angles."""


class FieldUnsupported(FrameError):
    """The operation is defined only over the complex field."""


class DimensionTooSmall(FrameError):
    """The spherical embedding needs ambient dimension M >= 2."""


class ShapeMismatch(FrameError):
    """An embedded configuration does not match the frame it is checked against."""


class NotApplicable(FrameError):
    """A bound's applicability condition fails for these parameters."""


class Diverged(FrameError):
    """The solver produced a non-finite iterate."""


class ConfigInvalid(FrameError):
    """A search configuration violates its invariants."""


class NotBiangular(FrameError):
    """The frame does not have exactly two distinct angles."""


class NotTight(FrameError):
    """The frame is not tight at the requested tolerance."""


class NotEquidistributed(FrameError):
    """A biangular tight frame failed the equidistribution check.

    Mathematically this cannot happen; raising it signals a numerical or
    tolerance problem in the input, never a routine condition.
    """


class NNotOdd(FrameError):
    """The parity check applies only to frames with an odd number of vectors."""


class SizeExceeded(FrameError):
    """The brute-force search is restricted to desk scale (d <= 3, N <= 8)."""
