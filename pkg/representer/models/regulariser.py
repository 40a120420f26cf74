from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np

from representer.constants import ErrorMessages
from representer.enums import Evidence, MonotoneKind, TableMode, Verdict
from representer.errors import PreconditionError, RegulariserEvaluationError
from representer.models.spaces import Element, Functional


@dataclass(frozen=True)
class MonotoneFn:
    """
    Nondecreasing h: [0, inf) -> R used as Omega = h(||.||).

    Custom tables hold knots 0 = t_0 < ... < t_k with nondecreasing values,
    interpolated linearly or held constant (step) between knots and constant
    beyond the last knot.
    """
    kind: MonotoneKind
    knots: Tuple[float, ...] = ()
    values: Tuple[float, ...] = ()
    mode: TableMode = TableMode.linear

    def __post_init__(self):
        object.__setattr__(self, "kind", MonotoneKind(self.kind))
        object.__setattr__(self, "mode", TableMode(self.mode))
        if self.kind != MonotoneKind.table:
            return
        knots = np.asarray(self.knots, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if knots.size < 2 or knots.shape != values.shape or knots[0] != 0.0 or np.any(np.diff(knots) <= 0):
            raise PreconditionError(ErrorMessages.INVALID_TABLE)
        grid = np.linspace(0.0, 2.0 * knots[-1], 1001)
        if np.any(np.diff(values) < 0) or np.any(np.diff(self(grid)) < 0):
            raise PreconditionError(ErrorMessages.NON_MONOTONE_TABLE)
        object.__setattr__(self, "knots", tuple(float(t) for t in knots))
        object.__setattr__(self, "values", tuple(float(v) for v in values))

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == MonotoneKind.identity:
            return t
        if self.kind == MonotoneKind.square:
            return t * t
        if self.kind == MonotoneKind.exp_minus_one:
            return np.expm1(t)
        knots, values = np.asarray(self.knots), np.asarray(self.values)
        if self.mode == TableMode.linear:
            return np.interp(t, knots, values)
        idx = np.clip(np.searchsorted(knots, t, side="right") - 1, 0, knots.size - 1)
        return values[idx]

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == MonotoneKind.identity:
            return np.ones_like(t)
        if self.kind == MonotoneKind.square:
            return 2.0 * t
        if self.kind == MonotoneKind.exp_minus_one:
            return np.exp(t)
        if self.mode == TableMode.step:
            return np.zeros_like(t)
        knots, values = np.asarray(self.knots), np.asarray(self.values)
        slopes = np.append(np.diff(values) / np.diff(knots), 0.0)
        idx = np.clip(np.searchsorted(knots, t, side="right") - 1, 0, knots.size - 1)
        return slopes[idx]

    @property
    def strictly_increasing(self) -> bool:
        if self.kind != MonotoneKind.table:
            return True
        # constant beyond the last knot
        return False


@dataclass(frozen=True, eq=False)
class RegulariserSpec:
    """
    Omega: B -> R, either parsed from an expression or built as h(||.||).
    """
    source: str
    compiled: Callable[[Element], float]
    claims_admissible: bool = False
    strictly_increasing: bool = False
    h: Optional[MonotoneFn] = None
    gradient: Optional[Callable[[Element], np.ndarray]] = None
    tree: Optional[object] = None

    def evaluate(self, f: Element) -> float:
        try:
            value = float(self.compiled(f))
        except RegulariserEvaluationError:
            raise
        except (ArithmeticError, ValueError, IndexError) as exc:
            raise RegulariserEvaluationError(f"{ErrorMessages.EVALUATION_FAILED}: {exc}", f) from exc
        if np.isnan(value):
            raise RegulariserEvaluationError(f"{ErrorMessages.EVALUATION_FAILED}: NaN for {self.source!r}", f)
        return value

    def __call__(self, f: Element) -> float:
        return self.evaluate(f)


@dataclass(frozen=True, eq=False)
class Counterexample:
    """f_T annihilated by J(f) with Omega(f + f_T) < Omega(f)."""
    f: Element
    f_T: Element
    omega_f: float
    omega_shifted: float


@dataclass(frozen=True, eq=False)
class AdmissibilityReport:
    verdict: Verdict
    samples_tested: int
    counterexamples: List[Counterexample]
    seed: int
    tolerance: float

    @property
    def evidence(self) -> Evidence:
        return Evidence.proof if self.verdict == Verdict.counterexample else Evidence.statistical


@dataclass(frozen=True, eq=False)
class RadialWitness:
    f: Element
    g: Element
    omega_f: float
    omega_g: float


@dataclass(frozen=True, eq=False)
class RadialSymmetryReport:
    verdict: Verdict
    samples_tested: int
    witnesses: List[RadialWitness]
    seed: int
    tolerance: float


@dataclass(frozen=True, eq=False)
class TangentWalkCertificate:
    phi_at_zero: float
    bracket: Tuple[float, float]
    phi_at_bracket: Tuple[float, float]
    residual: float
    # <J(f_t0), lam f_hat - f_t0>: the closing segment is tangent at f_t0
    tangency: float


@dataclass(frozen=True, eq=False)
class TangentWalkResult:
    t0: float
    f_t0: Element
    direction: Element
    certificate: TangentWalkCertificate


@dataclass(frozen=True, eq=False)
class BlwWitness:
    """
    z in W and L in J(x0 + z) with L + u0 in the annihilator of W.
    """
    z: Element
    L: Functional
    membership_residual: float
    annihilator_residual: float
    coefficients: np.ndarray = None
    iterations: int = 0


@dataclass(frozen=True, eq=False)
class SpanWitness:
    f_hat: Element
    c: np.ndarray
    witness: BlwWitness


@dataclass(frozen=True, eq=False)
class IndependenceReport:
    passed: bool
    max_deviation: float
    tolerance: float
    min_norm: Element
    solutions: List[Tuple[str, Element]] = field(default_factory=list)
    # (source_a, source_b, deviation) for every pair, min-norm solution included as "min-norm"
    deviations: List[Tuple[str, str, float]] = field(default_factory=list)
