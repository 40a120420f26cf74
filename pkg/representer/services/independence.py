import itertools
import logging
from typing import Sequence

from representer.constants import ErrorMessages
from representer.errors import PreconditionError
from representer.models.problem import InterpolationProblem, OracleOptions
from representer.models.regulariser import IndependenceReport, RegulariserSpec
from representer.services.duality import norm
from representer.services.minnorm import oracle_minimize, solve_min_norm
from representer.services.regularisers import require_strictly_admissible

logger = logging.getLogger(__name__)

MIN_NORM_LABEL = "min-norm"


def independence_check(
    problem: InterpolationProblem,
    regs: Sequence[RegulariserSpec],
    tol: float = 1e-5,
    options: OracleOptions = None,
) -> IndependenceReport:
    """
    Minimises every regulariser over the constraint set with the null-space
    oracle and compares the minimisers with the minimal-norm interpolant.

    Args:
        problem: feasible interpolation data
        regs: regularisers h(||.||) with strictly increasing h
        tol: bound on the largest pairwise p-norm deviation

    Returns:
        IndependenceReport; passed iff every pairwise deviation <= tol

    Raises:
        PreconditionError: empty list or a regulariser without a strictly increasing profile
    """
    regs = list(regs)
    if not regs:
        raise PreconditionError(ErrorMessages.NO_REGULARISERS)
    for reg in regs:
        require_strictly_admissible(reg)

    space = problem.space
    reference = solve_min_norm(problem)
    solutions = [(MIN_NORM_LABEL, reference.f0)]
    for reg in regs:
        f = oracle_minimize(problem, reg.evaluate, options)
        solutions.append((reg.source, f))
        logger.debug("Oracle minimiser for %r has norm %.12g", reg.source, norm(space, f))

    deviations = [
        (label_a, label_b, norm(space, f_a - f_b))
        for (label_a, f_a), (label_b, f_b) in itertools.combinations(solutions, 2)
    ]
    worst = max(d for _, _, d in deviations)
    passed = worst <= tol
    if passed:
        logger.info("Regulariser independence holds: max deviation %.3e", worst)
    else:
        logger.warning("%s: max deviation %.3e > %.3e", ErrorMessages.REGULARISER_DEPENDENT, worst, tol)
    return IndependenceReport(
        passed=passed,
        max_deviation=worst,
        tolerance=tol,
        min_norm=reference.f0,
        solutions=solutions,
        deviations=deviations,
    )
