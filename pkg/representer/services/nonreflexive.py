"""
The l^1 demonstrator.

In l^1 the functionals L1 = (i/(i+1))_{i odd} and L2 = (i/(i+1))_{i even}
have sup norm 1 but attain it at no unit vector, so no nonzero combination
c1 L1 + c2 L2 lies in the image of the duality map. Finite truncations show
the norming coordinate escaping to the end of the window.
"""
import logging
from fractions import Fraction
from typing import Iterable, List, Sequence, Union

import numpy as np

from representer.constants import ErrorMessages
from representer.errors import PreconditionError
from representer.models.nonreflexive import L1Truncation, NormingAnalysis, SpanScanReport, SpanScanRow
from representer.models.problem import InterpolationProblem, PSweepEntry
from representer.models.spaces import PNormSpace
from representer.services.minnorm import solve_min_norm
from representer.utils.common import require

logger = logging.getLogger(__name__)

Number = Union[int, float, Fraction]


def build_l1_counterexample(n: int) -> L1Truncation:
    if int(n) != n or n < 2:
        raise PreconditionError(f"{ErrorMessages.TRUNCATION_TOO_SHORT}: n={n}")
    n = int(n)
    L1, L2 = [], []
    for i in range(1, n + 1):
        value = Fraction(i, i + 1)
        L1.append(value if i % 2 == 1 else Fraction(0))
        L2.append(value if i % 2 == 0 else Fraction(0))
    return L1Truncation(n=n, L1=tuple(L1), L2=tuple(L2))


def norming_analysis(L: Sequence[Number], n: int = None) -> NormingAnalysis:
    """
    l^inf norm of a truncated functional, the 1-based index of its norming
    basis vector and the gap 1 - sup_norm.
    """
    entries = [Fraction(x) for x in L]
    if n is not None:
        require(len(entries) == n, f"{ErrorMessages.DIMENSION_MISMATCH}: expected {n}, got {len(entries)}")
    mags = [abs(x) for x in entries]
    sup = max(mags)
    index = mags.index(sup) + 1
    return NormingAnalysis(sup_norm=sup, attaining_index=index, gap_to_limit=1 - sup)


def combination(truncation: L1Truncation, c1: Number, c2: Number) -> List[Fraction]:
    c1, c2 = Fraction(c1), Fraction(c2)
    return [c1 * a + c2 * b for a, b in zip(truncation.L1, truncation.L2)]


def span_peaking_scan(c1: Number, c2: Number, n_list: Iterable[int]) -> SpanScanReport:
    """
    Attaining index of c1 L1 + c2 L2 for each truncation length; the mass
    escapes when every index is >= n - 1.
    """
    c1, c2 = Fraction(c1), Fraction(c2)
    if c1 == 0 and c2 == 0:
        raise PreconditionError(ErrorMessages.ZERO_COEFFICIENTS)
    rows = []
    for n in n_list:
        truncation = build_l1_counterexample(n)
        analysis = norming_analysis(combination(truncation, c1, c2), truncation.n)
        rows.append(SpanScanRow(n=truncation.n, c1=c1, c2=c2, analysis=analysis))
    escaping = all(row.analysis.attaining_index >= row.n - 1 for row in rows)
    if not escaping:
        logger.warning("Norming index stayed inside the window for (c1, c2) = (%s, %s)", c1, c2)
    return SpanScanReport(c1=c1, c2=c2, rows=rows, escaping=escaping)


def near_l1_sweep(
    matrix: Sequence[Sequence[float]],
    targets: Sequence[float],
    p_values: Sequence[float] = (2.0, 1.5, 1.2, 1.1, 1.05),
    tol: float = None,
) -> List[PSweepEntry]:
    """
    Ordinary minimal-norm solves as p decreases towards 1. Reports the l^1
    norm of each solution and its concentration max|f_j| / sum|f_j|.
    """
    matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
    entries = []
    for p in p_values:
        space = PNormSpace(matrix.shape[1], p)
        solution = solve_min_norm(InterpolationProblem.from_matrix(space, matrix, targets), tol=tol)
        mags = np.abs(solution.f0.coords)
        l1 = float(np.sum(mags))
        concentration = float(mags.max() / l1) if l1 > 0 else 0.0
        entries.append(PSweepEntry(p=space.p, solution=solution, l1_norm=l1, concentration=concentration))
        logger.info("p=%s: l1 norm %.12g, concentration %.6f", p, l1, concentration)
    return entries
