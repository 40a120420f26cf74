from typing import Iterable, Optional

from representer.constants import ExitCodes


class RepresenterError(Exception):
    """
    Base error for the package.
    Carries a human-readable detail and the CLI exit code it maps to.
    """
    exit_code: int = ExitCodes.USAGE

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidExponentError(RepresenterError):
    pass


class DimensionMismatchError(RepresenterError):
    pass


class InfeasibleError(RepresenterError):
    exit_code = ExitCodes.INFEASIBLE


class NonConvergenceError(RepresenterError):
    exit_code = ExitCodes.NON_CONVERGENCE


class NullSpaceTooLargeError(RepresenterError):
    pass


class PreconditionError(RepresenterError):
    pass


class SchemaError(RepresenterError):
    pass


class BracketNotFoundError(RepresenterError):
    pass


class ImagTooLargeError(RepresenterError):
    pass


class ParseError(RepresenterError):
    """
    Raised by the regulariser parser.
    `position` is the 0-based character offset, `expected` the tokens accepted there.
    """

    def __init__(self, detail: str, position: int, expected: Iterable[str]):
        self.position = position
        self.expected = frozenset(expected)
        listed = ", ".join(sorted(repr(e) for e in self.expected))
        super().__init__(f"{detail} at position {position}; expected one of {{{listed}}}")


class RegulariserEvaluationError(RepresenterError):
    def __init__(self, detail: str, offending_input: Optional[object] = None):
        super().__init__(detail)
        self.offending_input = offending_input
