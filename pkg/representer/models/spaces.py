from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

import numpy as np

from representer.constants import ErrorMessages, Tolerances
from representer.enums import ScalarField
from representer.errors import DimensionMismatchError, InvalidExponentError, PreconditionError


@dataclass(frozen=True, eq=False)
class PNormSpace:
    """
    Finite-dimensional weighted l^p space.

    The norm is (sum_j w_j |f_j|^p)^(1/p); the dual space carries the
    conjugate exponent q = p/(p-1) with the same weights.
    """
    dim: int
    p: float
    weights: np.ndarray = None
    field: ScalarField = ScalarField.real
    q: float = dc_field(init=False)

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < 1:
            raise PreconditionError(f"{ErrorMessages.INVALID_DIMENSION}: dim={self.dim}")
        p = float(self.p)
        if not np.isfinite(p) or p <= 1.0:
            raise InvalidExponentError(f"{ErrorMessages.INVALID_EXPONENT}: p={self.p}")

        weights = np.ones(self.dim) if self.weights is None else np.asarray(self.weights, dtype=float).copy()
        if weights.shape != (self.dim,) or not np.all(weights > 0) or not np.all(np.isfinite(weights)):
            raise PreconditionError(ErrorMessages.INVALID_WEIGHTS)
        weights.setflags(write=False)

        q = p / (p - 1.0)
        if abs(1.0 / p + 1.0 / q - 1.0) > Tolerances.CONJUGATE:
            raise InvalidExponentError(f"{ErrorMessages.CONJUGATE_MISMATCH}: p={p}")

        object.__setattr__(self, "dim", int(self.dim))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "field", ScalarField(self.field))
        object.__setattr__(self, "q", q)

    @property
    def dtype(self):
        return complex if self.field == ScalarField.complex else float

    @property
    def is_complex(self) -> bool:
        return self.field == ScalarField.complex

    def conjugate(self) -> "PNormSpace":
        """The space with exponent q and the same weights."""
        return PNormSpace(self.dim, self.q, self.weights, self.field)

    def same_as(self, other: "PNormSpace") -> bool:
        if self is other:
            return True
        return (
            self.dim == other.dim
            and self.field == other.field
            and np.array_equal(self.weights, other.weights)
            and self.p == other.p
        )

    def __repr__(self):
        return f"PNormSpace(dim={self.dim}, p={self.p}, field={self.field.value})"


def _coerce(space: PNormSpace, coords: Sequence) -> np.ndarray:
    arr = np.array(coords, dtype=space.dtype).reshape(-1)
    if arr.shape != (space.dim,):
        raise DimensionMismatchError(
            f"{ErrorMessages.DIMENSION_MISMATCH}: expected {space.dim}, got {arr.size}"
        )
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Element:
    """f in B: a coordinate vector of the primal space."""
    space: PNormSpace
    coords: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coords", _coerce(self.space, self.coords))

    @classmethod
    def zeros(cls, space: PNormSpace) -> "Element":
        return cls(space, np.zeros(space.dim, dtype=space.dtype))

    def is_zero(self) -> bool:
        return not np.any(self.coords)

    def scaled(self, factor) -> "Element":
        return Element(self.space, factor * self.coords)

    def __add__(self, other: "Element") -> "Element":
        return Element(self.space, self.coords + other.coords)

    def __sub__(self, other: "Element") -> "Element":
        return Element(self.space, self.coords - other.coords)


@dataclass(frozen=True, eq=False)
class Functional:
    """L in B*: a coordinate vector measured with the conjugate exponent q."""
    space: PNormSpace
    coords: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coords", _coerce(self.space, self.coords))

    @classmethod
    def zeros(cls, space: PNormSpace) -> "Functional":
        return cls(space, np.zeros(space.dim, dtype=space.dtype))

    def is_zero(self) -> bool:
        return not np.any(self.coords)

    def scaled(self, factor) -> "Functional":
        return Functional(self.space, factor * self.coords)

    def __add__(self, other: "Functional") -> "Functional":
        return Functional(self.space, self.coords + other.coords)


def element(space: PNormSpace, coords: Optional[Sequence] = None) -> Element:
    if coords is None:
        return Element.zeros(space)
    return Element(space, coords)


def functional(space: PNormSpace, coords: Optional[Sequence] = None) -> Functional:
    if coords is None:
        return Functional.zeros(space)
    return Functional(space, coords)
