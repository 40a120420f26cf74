from representer.models.spaces import PNormSpace, Element, Functional, element, functional
from representer.models.problem import (
    InterpolationProblem,
    RepresenterSolution,
    VerificationReport,
    LossSpec,
    OracleOptions,
    RegularisedSolution,
    PathPoint,
    PSweepEntry,
    FeasibilityInfo,
)
from representer.models.regulariser import (
    MonotoneFn,
    RegulariserSpec,
    Counterexample,
    AdmissibilityReport,
    RadialWitness,
    RadialSymmetryReport,
    TangentWalkCertificate,
    TangentWalkResult,
    BlwWitness,
    SpanWitness,
    IndependenceReport,
)
from representer.models.rkbs import Rkbs1D, FeaturePair, RkbsFunction, RkbsDualFunction, InterpolationResult
from representer.models.nonreflexive import L1Truncation, NormingAnalysis, SpanScanRow, SpanScanReport

# Export everything for easy access
__all__ = [
    "PNormSpace",
    "Element",
    "Functional",
    "element",
    "functional",
    "InterpolationProblem",
    "RepresenterSolution",
    "VerificationReport",
    "LossSpec",
    "OracleOptions",
    "RegularisedSolution",
    "PathPoint",
    "PSweepEntry",
    "FeasibilityInfo",
    "MonotoneFn",
    "RegulariserSpec",
    "Counterexample",
    "AdmissibilityReport",
    "RadialWitness",
    "RadialSymmetryReport",
    "TangentWalkCertificate",
    "TangentWalkResult",
    "BlwWitness",
    "SpanWitness",
    "IndependenceReport",
    "Rkbs1D",
    "FeaturePair",
    "RkbsFunction",
    "RkbsDualFunction",
    "InterpolationResult",
    "L1Truncation",
    "NormingAnalysis",
    "SpanScanRow",
    "SpanScanReport",
]
