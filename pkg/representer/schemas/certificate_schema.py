from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from representer.models.problem import RepresenterSolution
from representer.models.spaces import Element


class Residuals(BaseModel):
    feasibility: float
    peaking: float
    norm_match: float


class CertificateMeta(BaseModel):
    model_config = ConfigDict(extra="allow")

    iterations: int
    tolerance: float
    seed: int
    p: float
    dim: int
    rank: Optional[int] = None


class CertificateFile(BaseModel):
    """
    Serialized solution with the dual coefficients certifying
    sum_i c_i L_i in J(f0).
    """
    f0: List[float]
    c: List[float]
    residuals: Residuals
    meta: CertificateMeta

    @classmethod
    def from_solution(cls, solution: RepresenterSolution, seed: int) -> "CertificateFile":
        space = solution.f0.space
        return cls(
            f0=[float(x) for x in np.real(solution.f0.coords)],
            c=[float(x) for x in np.real(solution.c)],
            residuals=Residuals(**solution.residuals),
            meta=CertificateMeta(
                iterations=solution.iterations,
                tolerance=solution.tolerance,
                seed=seed,
                p=space.p,
                dim=space.dim,
                rank=solution.meta.get("rank"),
            ),
        )

    def to_solution(self, element_space) -> RepresenterSolution:
        return RepresenterSolution(
            f0=Element(element_space, self.f0),
            c=np.asarray(self.c, dtype=float),
            feasibility_residual=self.residuals.feasibility,
            peaking_residual=self.residuals.peaking,
            norm_match_residual=self.residuals.norm_match,
            iterations=self.meta.iterations,
            tolerance=self.meta.tolerance,
        )

    def stored_residuals(self) -> Dict[str, float]:
        return self.residuals.model_dump()


class RkbsCertificateFile(BaseModel):
    """
    Interpolant in the Fourier RKBS; complex vectors are stored as [re, im] pairs.
    """
    p: float
    nodes: int
    points: List[float]
    values: List[float]
    u: List[List[float]]
    c: List[List[float]]
    residuals: Residuals
    max_imag: float
    iterations: int
    tolerance: float

    @staticmethod
    def pairs(z) -> List[List[float]]:
        return [[float(v.real), float(v.imag)] for v in np.asarray(z, dtype=complex)]
