"""Exception hierarchy shared by every acylbounds module.

Every domain failure is an ``AcylBoundsError``; the CLI turns these into exit code 1
and prints the class name on stderr.
"""


class AcylBoundsError(Exception):
    """Base class for all domain errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


class ParseError(AcylBoundsError):
    """Input text could not be turned into a valid value."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class ValidationError(AcylBoundsError):
    """A value violates a structural invariant."""


class RangeError(AcylBoundsError):
    """An argument lies outside its admissible range."""


# Triangulation parsing
class MalformedLine(ParseError):
    pass


class UnpairedFace(ParseError):
    pass


class NonInvolutiveGluing(ParseError):
    pass


class SelfGluedFace(ParseError):
    pass


class CensusMismatch(ValidationError):
    """V - E + F - T is not zero."""


class ReversedEdge(ValidationError):
    """An edge is identified with itself with its ends swapped."""


# Normal surfaces
class LengthMismatch(ValidationError):
    pass


class TooLarge(RangeError):
    """Input exceeds the desk-scale caps."""


class NotAdmissible(ValidationError):
    pass


class NonOrientableDouble(ValidationError):
    """Doubling was requested for a one-sided surface."""


class OneSided(ValidationError):
    pass


# Bound calculators
class NonPositive(RangeError):
    pass


class ReducibleDisc(RangeError):
    """A meridian disc meets the other system at most once."""


class ArityMismatch(RangeError):
    pass


# Knot diagrams and tangles
class BadArity(ParseError):
    pass


class LabelNotTwice(ParseError):
    pass


class Disconnected(ParseError):
    pass


class NonPlanar(ParseError):
    """Face count differs from n + 2."""


class BadBoundary(ValidationError):
    """A tangle does not have exactly four boundary ends."""


class NotAPartition(ValidationError):
    pass


class TypeClaimFailed(ValidationError):
    pass


# Branched surfaces
class DanglingCircle(ParseError):
    pass


class SlotReuse(ParseError):
    pass


class InconsistentWeights(ValidationError):
    pass


class BelowRange(RangeError):
    pass


class NonPositiveBridge(RangeError):
    pass
