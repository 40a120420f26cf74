from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from representer.constants import ErrorMessages
from representer.enums import LossKind
from representer.errors import PreconditionError
from representer.models.spaces import Element, Functional, PNormSpace
from representer.utils.common import require_in_space


@dataclass(frozen=True, eq=False)
class InterpolationProblem:
    """
    Constraint data {(L_i, y_i)}: find f with L_i(f) = y_i for all i.
    """
    space: PNormSpace
    functionals: Tuple[Functional, ...]
    targets: np.ndarray

    def __post_init__(self):
        functionals = tuple(self.functionals)
        if not functionals:
            raise PreconditionError(ErrorMessages.EMPTY_PROBLEM)
        for L in functionals:
            require_in_space(self.space, L)
            if L.is_zero():
                raise PreconditionError(ErrorMessages.ZERO_FUNCTIONAL)
        targets = np.array(self.targets, dtype=self.space.dtype).reshape(-1)
        if targets.shape != (len(functionals),):
            raise PreconditionError(
                f"{ErrorMessages.TARGET_LENGTH}: {len(functionals)} functionals, {targets.size} targets"
            )
        targets.setflags(write=False)
        object.__setattr__(self, "functionals", functionals)
        object.__setattr__(self, "targets", targets)

    @classmethod
    def from_matrix(cls, space: PNormSpace, matrix, targets) -> "InterpolationProblem":
        rows = np.atleast_2d(np.asarray(matrix, dtype=space.dtype))
        return cls(space, tuple(Functional(space, row) for row in rows), targets)

    @property
    def m(self) -> int:
        return len(self.functionals)

    @property
    def matrix(self) -> np.ndarray:
        """Rows are the coordinates of the L_i."""
        return np.vstack([L.coords for L in self.functionals])

    @property
    def operator(self) -> np.ndarray:
        """Matrix acting on coordinates: operator @ f.coords == (L_i(f))_i."""
        return self.matrix * self.space.weights

    def apply(self, f: Element) -> np.ndarray:
        return self.operator @ f.coords

    def with_targets(self, targets) -> "InterpolationProblem":
        return InterpolationProblem(self.space, self.functionals, targets)


@dataclass(frozen=True, eq=False)
class RepresenterSolution:
    """
    f0 with dual coefficients c such that sum_i c_i L_i lies in J(f0).
    """
    f0: Element
    c: np.ndarray
    feasibility_residual: float
    peaking_residual: float
    norm_match_residual: float
    iterations: int = 0
    tolerance: float = 0.0
    meta: Dict[str, object] = field(default_factory=dict)

    @property
    def residuals(self) -> Dict[str, float]:
        return {
            "feasibility": self.feasibility_residual,
            "peaking": self.peaking_residual,
            "norm_match": self.norm_match_residual,
        }


@dataclass(frozen=True)
class VerificationReport:
    feasibility_residual: float
    peaking_residual: float
    norm_match_residual: float
    tolerance: float

    @property
    def feasibility_ok(self) -> bool:
        return self.feasibility_residual <= self.tolerance

    @property
    def peaking_ok(self) -> bool:
        return self.peaking_residual <= self.tolerance

    @property
    def norm_match_ok(self) -> bool:
        return self.norm_match_residual <= self.tolerance

    @property
    def passed(self) -> bool:
        return self.feasibility_ok and self.peaking_ok and self.norm_match_ok

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class LossSpec:
    """
    Error functional E(v, y) of the regularisation problem.
    """
    kind: LossKind = LossKind.square

    @property
    def differentiable(self) -> bool:
        return self.kind == LossKind.square

    def value(self, v: np.ndarray, y: np.ndarray) -> float:
        r = np.asarray(v) - np.asarray(y)
        if self.kind == LossKind.square:
            return float(np.sum(np.abs(r) ** 2))
        return float(np.sum(np.abs(r)))

    def gradient(self, v: np.ndarray, y: np.ndarray) -> Optional[np.ndarray]:
        """dE/dv for the square loss; None for the absolute loss (numeric)."""
        if self.kind == LossKind.square:
            return 2.0 * (np.asarray(v) - np.asarray(y))
        return None


@dataclass(frozen=True)
class OracleOptions:
    grid_points: int = 7
    refinements: int = 6
    shrink: float = 0.5
    xatol: float = 1e-11
    fatol: float = 1e-15
    max_null_dim: int = 3


@dataclass(frozen=True, eq=False)
class RegularisedSolution:
    f: Element
    objective: float
    restarts: int
    agreeing_restarts: int


@dataclass(frozen=True, eq=False)
class PathPoint:
    lam: float
    f: Element
    distance: float
    objective: float


@dataclass(frozen=True, eq=False)
class PSweepEntry:
    p: float
    solution: RepresenterSolution
    l1_norm: float
    concentration: float


@dataclass(frozen=True, eq=False)
class FeasibilityInfo:
    """Independent row subset and rank found by the orthogonal decomposition."""
    rank: int
    independent_rows: List[int]
    particular: np.ndarray
    null_basis: np.ndarray = None

    @property
    def null_dim(self) -> int:
        return 0 if self.null_basis is None else self.null_basis.shape[1]

