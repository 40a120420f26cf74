from representer.schemas.problem_schema import SpaceDescriptor, ProblemFile
from representer.schemas.certificate_schema import Residuals, CertificateMeta, CertificateFile, RkbsCertificateFile
from representer.schemas.report_schema import (
    CounterexampleEntry,
    RadialWitnessEntry,
    TangentialSection,
    RadialSection,
    AdmissibilityReportFile,
    DeviationEntry,
    SolutionEntry,
    IndependenceReportFile,
)

__all__ = [
    "SpaceDescriptor",
    "ProblemFile",
    "Residuals",
    "CertificateMeta",
    "CertificateFile",
    "RkbsCertificateFile",
    "CounterexampleEntry",
    "RadialWitnessEntry",
    "TangentialSection",
    "RadialSection",
    "AdmissibilityReportFile",
    "DeviationEntry",
    "SolutionEntry",
    "IndependenceReportFile",
]
