"""Typed domain errors.

Every error carries a stable ``code`` used by the command line front end
when it serializes failures.
"""


class DomainError(Exception):
    code = "DomainError"


class ZeroPolynomial(DomainError):
    code = "ZeroPolynomial"


class DegreeTooLarge(DomainError):
    code = "DegreeTooLarge"


class NotMonic(DomainError):
    code = "NotMonic"


class Inseparable(DomainError):
    code = "Inseparable"


class Reducible(DomainError):
    code = "Reducible"


class NonIntegralGenus(DomainError):
    code = "NonIntegralGenus"


class GroupTooLarge(DomainError):
    code = "GroupTooLarge"


class BranchPoint(DomainError):
    code = "BranchPoint"


class CyclotomicObstruction(DomainError):
    code = "CyclotomicObstruction"


class InadmissibleGroup(DomainError):
    """The group has no one-parameter generic polynomial over any field."""

    code = "InadmissibleGroup"


class Unsupported(DomainError):
    code = "Unsupported"


class Degenerate(DomainError):
    code = "Degenerate"


class WrongDegree(DomainError):
    code = "WrongDegree"


class Singular(DomainError):
    code = "Singular"


class NotSquarefree(DomainError):
    code = "NotSquarefree"


class UnsupportedM(DomainError):
    code = "UnsupportedM"


class PrecisionExhausted(DomainError):
    """Newton polygon recursion did not separate the roots within the cap."""

    code = "PrecisionExhausted"


class ParseError(DomainError):
    code = "SyntaxError"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariable(ParseError):
    code = "UnknownVariable"


class InputError(ParseError):
    """Unreadable input file; reported with the parse-error exit code."""

    code = "InputError"

    def __init__(self, message: str):
        DomainError.__init__(self, message)
        self.position = None
