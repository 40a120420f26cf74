from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from representer.models.problem import RepresenterSolution
from representer.models.spaces import Element, Functional, PNormSpace


@dataclass(frozen=True, eq=False)
class Rkbs1D:
    """
    L^p([-1/2, 1/2]) sampled on a symmetric quadrature grid.

    Functions are f_u(x) = <u, Phi*(x)> and ||f_u|| := ||u||_{p,w}.
    """
    nodes: np.ndarray
    weights: np.ndarray
    p: float
    space: PNormSpace

    @property
    def n(self) -> int:
        return self.nodes.size

    @property
    def measure(self) -> float:
        return float(np.sum(self.weights))

    @property
    def prefactor(self) -> float:
        """1 / mu(I)^((p-2)/p); one for a probability measure on I."""
        return float(self.measure ** (-(self.p - 2.0) / self.p))

    def mirror(self, coords: np.ndarray) -> np.ndarray:
        """Coefficients at -t_j (the grid is symmetric, so this reverses)."""
        return np.asarray(coords)[::-1]


@dataclass(frozen=True, eq=False)
class FeaturePair:
    primal: Element
    dual: Functional


@dataclass(frozen=True, eq=False)
class RkbsFunction:
    rkbs: Rkbs1D
    u: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "u", Element(self.rkbs.space, self.u).coords)

    @property
    def element(self) -> Element:
        return Element(self.rkbs.space, self.u)


@dataclass(frozen=True, eq=False)
class RkbsDualFunction:
    rkbs: Rkbs1D
    v: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "v", Functional(self.rkbs.space, self.v).coords)

    @property
    def functional(self) -> Functional:
        return Functional(self.rkbs.space, self.v)


@dataclass(frozen=True, eq=False)
class InterpolationResult:
    """
    Minimal-norm interpolant with its certificate; `c` are the coefficients
    over Phi*(x_i).
    """
    function: RkbsFunction
    solution: RepresenterSolution
    points: np.ndarray
    values: np.ndarray
    max_imag: float
    meta: Dict[str, object] = field(default_factory=dict)

    @property
    def c(self) -> np.ndarray:
        return self.solution.c
