"""Exception types shared by all modules."""


class PlaneChromaError(Exception):
    """Base class. Subclasses carry a CLI exit code."""
    exit_code = 2


class InvalidInput(PlaneChromaError, ValueError):
    exit_code = 2


class CoincidentCircles(InvalidInput):
    pass


class DegenerateSegment(InvalidInput):
    pass


class SizeMismatch(InvalidInput):
    pass


class NonpositiveD(InvalidInput):
    pass


class InputTooLarge(InvalidInput):
    pass


class PreconditionViolated(InvalidInput):
    pass


class MissingUpperBound(InvalidInput):
    pass


class UnknownName(PlaneChromaError, KeyError):
    exit_code = 3

    def __str__(self):
        return Exception.__str__(self)


class SearchExhausted(PlaneChromaError):
    exit_code = 3


class InvariantBreach(PlaneChromaError, AssertionError):
    exit_code = 4


class DomainError(InvalidInput):
    pass
