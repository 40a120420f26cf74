from typing import List

import numpy as np
from pydantic import BaseModel

from representer.enums import Evidence, Verdict
from representer.models.regulariser import AdmissibilityReport, IndependenceReport, RadialSymmetryReport
from representer.models.spaces import PNormSpace


def _real(coords) -> List[float]:
    return [float(x) for x in np.real(coords)]


class CounterexampleEntry(BaseModel):
    f: List[float]
    f_T: List[float]
    omega_f: float
    omega_shifted: float


class RadialWitnessEntry(BaseModel):
    f: List[float]
    g: List[float]
    omega_f: float
    omega_g: float


class TangentialSection(BaseModel):
    verdict: Verdict
    evidence: Evidence
    samples_tested: int
    counterexamples: List[CounterexampleEntry] = []


class RadialSection(BaseModel):
    verdict: Verdict
    samples_tested: int
    witnesses: List[RadialWitnessEntry] = []


class AdmissibilityReportFile(BaseModel):
    regulariser: str
    claims_admissible: bool
    dim: int
    p: float
    seed: int
    tolerance: float
    tangential: TangentialSection
    radial: RadialSection

    @classmethod
    def from_reports(
        cls,
        regulariser: str,
        claims: bool,
        space: PNormSpace,
        tangential: AdmissibilityReport,
        radial: RadialSymmetryReport,
    ) -> "AdmissibilityReportFile":
        return cls(
            regulariser=regulariser,
            claims_admissible=claims,
            dim=space.dim,
            p=space.p,
            seed=tangential.seed,
            tolerance=tangential.tolerance,
            tangential=TangentialSection(
                verdict=tangential.verdict,
                evidence=tangential.evidence,
                samples_tested=tangential.samples_tested,
                counterexamples=[
                    CounterexampleEntry(
                        f=_real(ce.f.coords), f_T=_real(ce.f_T.coords), omega_f=ce.omega_f, omega_shifted=ce.omega_shifted
                    )
                    for ce in tangential.counterexamples
                ],
            ),
            radial=RadialSection(
                verdict=radial.verdict,
                samples_tested=radial.samples_tested,
                witnesses=[
                    RadialWitnessEntry(f=_real(w.f.coords), g=_real(w.g.coords), omega_f=w.omega_f, omega_g=w.omega_g)
                    for w in radial.witnesses
                ],
            ),
        )


class DeviationEntry(BaseModel):
    a: str
    b: str
    deviation: float


class SolutionEntry(BaseModel):
    regulariser: str
    f: List[float]


class IndependenceReportFile(BaseModel):
    passed: bool
    max_deviation: float
    tolerance: float
    solutions: List[SolutionEntry]
    deviations: List[DeviationEntry]

    @classmethod
    def from_report(cls, report: IndependenceReport) -> "IndependenceReportFile":
        return cls(
            passed=report.passed,
            max_deviation=report.max_deviation,
            tolerance=report.tolerance,
            solutions=[SolutionEntry(regulariser=label, f=_real(f.coords)) for label, f in report.solutions],
            deviations=[DeviationEntry(a=a, b=b, deviation=d) for a, b, d in report.deviations],
        )
