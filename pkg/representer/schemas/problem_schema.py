import math
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from representer.constants import ErrorMessages
from representer.models.problem import InterpolationProblem
from representer.models.spaces import PNormSpace


class SpaceDescriptor(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dim: int
    p: float
    weights: Optional[List[float]] = None

    @field_validator("dim")
    @classmethod
    def check_dim(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"space.dim: {ErrorMessages.INVALID_DIMENSION}, got {v}")
        return v

    @field_validator("p")
    @classmethod
    def check_p(cls, v: float) -> float:
        if not math.isfinite(v) or v <= 1.0:
            raise ValueError(f"space.p: {ErrorMessages.INVALID_EXPONENT}, got {v}")
        return v

    @field_validator("weights")
    @classmethod
    def check_weights(cls, v: Optional[List[float]]) -> Optional[List[float]]:
        if v is not None and not all(math.isfinite(w) and w > 0 for w in v):
            raise ValueError(f"space.weights: {ErrorMessages.INVALID_WEIGHTS}")
        return v

    @model_validator(mode="after")
    def check_weight_length(self) -> "SpaceDescriptor":
        if self.weights is not None and len(self.weights) != self.dim:
            raise ValueError(f"space.weights: expected {self.dim} entries, got {len(self.weights)}")
        return self

    def to_space(self) -> PNormSpace:
        return PNormSpace(self.dim, self.p, self.weights)


class ProblemFile(BaseModel):
    """
    {"space": {"dim", "p", "weights"?}, "functionals": [[...]], "targets": [...]}
    """
    model_config = ConfigDict(extra="forbid")

    space: SpaceDescriptor
    functionals: List[List[float]]
    targets: List[float]

    @field_validator("functionals")
    @classmethod
    def check_functionals(cls, v: List[List[float]]) -> List[List[float]]:
        if not v:
            raise ValueError(f"functionals: {ErrorMessages.EMPTY_PROBLEM}")
        for i, row in enumerate(v):
            if not any(row):
                raise ValueError(f"functionals[{i}]: {ErrorMessages.ZERO_FUNCTIONAL}")
            if not all(math.isfinite(x) for x in row):
                raise ValueError(f"functionals[{i}]: entries must be finite")
        return v

    @field_validator("targets")
    @classmethod
    def check_targets(cls, v: List[float]) -> List[float]:
        if not all(math.isfinite(y) for y in v):
            raise ValueError("targets: entries must be finite")
        return v

    @model_validator(mode="after")
    def check_shapes(self) -> "ProblemFile":
        for i, row in enumerate(self.functionals):
            if len(row) != self.space.dim:
                raise ValueError(
                    f"functionals[{i}]: {ErrorMessages.DIMENSION_MISMATCH}, expected {self.space.dim}, got {len(row)}"
                )
        if len(self.targets) != len(self.functionals):
            raise ValueError(
                f"targets: {ErrorMessages.TARGET_LENGTH}, {len(self.functionals)} functionals, {len(self.targets)} targets"
            )
        return self

    def to_problem(self) -> InterpolationProblem:
        return InterpolationProblem.from_matrix(self.space.to_space(), self.functionals, self.targets)
