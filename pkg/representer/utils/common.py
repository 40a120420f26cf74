from typing import Type

from representer.constants import ErrorMessages
from representer.errors import DimensionMismatchError, PreconditionError, RepresenterError


def require_same_space(a, b):
    """
    Checks that two space-bound vectors share a space, otherwise raises.
    Returns the common space.
    """
    if a.space.dim != b.space.dim:
        raise DimensionMismatchError(
            f"{ErrorMessages.DIMENSION_MISMATCH}: {a.space.dim} != {b.space.dim}"
        )
    if not a.space.same_as(b.space):
        raise DimensionMismatchError(ErrorMessages.SPACE_MISMATCH)
    return a.space


def require(condition: bool, msg: str, error: Type[RepresenterError] = PreconditionError):
    """
    Raises `error(msg)` unless the condition holds.
    """
    if not condition:
        raise error(msg)


def require_in_space(space, vec):
    """
    Checks that a vector belongs to `space`.
    """
    if vec.space is space:
        return space
    if vec.space.dim != space.dim:
        raise DimensionMismatchError(
            f"{ErrorMessages.DIMENSION_MISMATCH}: {vec.space.dim} != {space.dim}"
        )
    if not vec.space.same_as(space):
        raise DimensionMismatchError(ErrorMessages.SPACE_MISMATCH)
    return space
