"""Exception hierarchy.

Input errors derive from ``ValueError``; resource guards derive from
:class:`GuardExceeded` so callers (notably the CLI) can tell "bad input"
from "too big to compute".
"""


class LexIdealError(Exception):
    """Base class for every error raised by this package."""


class InputError(LexIdealError, ValueError):
    pass


class AmbientMismatch(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class DegreeOutOfRange(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class NoSuccessor(InputError):
    pass


class NoPredecessor(InputError):
    pass


class EmptySegment(InputError):
    pass


class MixedDegrees(InputError):
    pass


class ZeroOrUnitIdeal(InputError):
    pass


class UnitIdeal(ZeroOrUnitIdeal):
    pass


class NotAPermutation(InputError):
    pass


class NoFacesOfThatDimension(InputError):
    pass


class NormalizationViolated(InputError):
    pass


class NotCompletelyLexsegment(InputError):
    pass


class HypothesisNotMet(InputError):
    pass


class RecipeConstraintViolated(InputError):
    pass


class ParseError(InputError):
    """Malformed ideal expression; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class GuardExceeded(LexIdealError):
    pass


class TooLarge(GuardExceeded):
    pass


class TooManyVariables(GuardExceeded):
    pass


class TooManyGenerators(GuardExceeded):
    pass
