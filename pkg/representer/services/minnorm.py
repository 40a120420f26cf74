"""
Minimal-norm interpolation through the concave dual

    D(c) = Re<c, y> - 1/2 ||sum_i c_i L_i||_q^2,

whose gradient y - A J_q(sum_i c_i L_i) is the constraint residual. The
maximiser c recovers f0 = J_q(sum_i c_i L_i), and sum_i c_i L_i = J(f0)
certifies optimality.
"""
import logging
from typing import Callable, List, Optional, Sequence

import numpy as np
import scipy.optimize

from representer.config.settings import settings
from representer.constants import ErrorMessages
from representer.errors import (
    NonConvergenceError,
    NullSpaceTooLargeError,
    RepresenterError,
)
from representer.models.problem import (
    FeasibilityInfo,
    InterpolationProblem,
    LossSpec,
    OracleOptions,
    PathPoint,
    RegularisedSolution,
    RepresenterSolution,
    VerificationReport,
)
from representer.models.spaces import Element
from representer.services.duality import (
    combine,
    dual_norm,
    duality_map,
    inverse_duality_map,
    norm,
    peaking_gap,
    weighted_norm,
)
from representer.utils.common import require
from representer.utils.linalg import orthogonal_decomposition
from representer.utils.numerics import central_gradient, damped_newton_maximize

logger = logging.getLogger(__name__)


# ---------------- DUAL PROBLEM ---------------- #

def _pack(c: np.ndarray, is_complex: bool) -> np.ndarray:
    if is_complex:
        return np.concatenate([c.real, c.imag])
    return np.asarray(c, dtype=float)


def _unpack(x: np.ndarray, is_complex: bool) -> np.ndarray:
    if is_complex:
        m = x.size // 2
        return x[:m] + 1j * x[m:]
    return x


def dual_objective(problem: InterpolationProblem, c) -> float:
    c = np.asarray(c)
    L = combine(problem.functionals, c)
    return float(np.real(np.sum(c * problem.targets))) - 0.5 * dual_norm(problem.space, L) ** 2


def dual_gradient(problem: InterpolationProblem, c) -> np.ndarray:
    """
    Residual y - A J_q(sum_i c_i L_i). For real spaces this is the gradient of D;
    for complex spaces the gradient in (Re c, Im c) is (Re r, -Im r).
    """
    L = combine(problem.functionals, np.asarray(c))
    u = inverse_duality_map(problem.space, L)
    return problem.targets - problem.apply(u)


def _warm_start(problem: InterpolationProblem) -> np.ndarray:
    # exact dual solution of the p = 2 problem, rescaled along its ray for D
    matrix = problem.matrix
    gram = problem.operator @ matrix.conj().T
    c0 = np.conj(np.linalg.solve(gram, problem.targets))
    L = combine(problem.functionals, c0)
    size = dual_norm(problem.space, L)
    if size > 0:
        ray = float(np.real(np.sum(c0 * problem.targets))) / size ** 2
        if ray > 0:
            c0 = ray * c0
    return c0


# ---------------- SOLVER ---------------- #

def check_feasibility(problem: InterpolationProblem) -> FeasibilityInfo:
    """
    Rank, independent rows and null space of the constraints.

    Raises:
        InfeasibleError: targets inconsistent on dependent rows
    """
    return orthogonal_decomposition(problem.operator, problem.targets)


def verify_representer(solution: RepresenterSolution, problem: InterpolationProblem, tol: float = None) -> VerificationReport:
    """
    Recomputes the three certificate residuals from scratch.
    """
    tol = settings.TOL if tol is None else tol
    f0 = solution.f0
    feasibility = float(np.max(np.abs(problem.apply(f0) - problem.targets), initial=0.0))
    L = combine(problem.functionals, solution.c)
    return VerificationReport(
        feasibility_residual=feasibility,
        peaking_residual=peaking_gap(L, f0),
        norm_match_residual=abs(dual_norm(problem.space, L) - norm(problem.space, f0)),
        tolerance=tol,
    )


def solve_min_norm(problem: InterpolationProblem, tol: float = None, max_iter: int = None) -> RepresenterSolution:
    """
    Solves inf{||f|| : L_i(f) = y_i} and returns f0 with its dual certificate.

    Raises:
        InfeasibleError: inconsistent constraints
        NonConvergenceError: residuals above tol after max_iter
    """
    tol = settings.TOL if tol is None else tol
    max_iter = settings.MAX_ITER if max_iter is None else max_iter
    space = problem.space

    info = check_feasibility(problem)
    c_full = np.zeros(problem.m, dtype=space.dtype)

    if not np.any(problem.targets):
        f0 = Element.zeros(space)
        solution = RepresenterSolution(f0, c_full, 0.0, 0.0, 0.0, iterations=0, tolerance=tol)
        logger.info("Zero targets, returning f0 = 0")
        return solution

    rows = info.independent_rows
    # unit-norm rows keep the gradient tolerance meaningful at any constraint scale
    scales = np.array([dual_norm(space, problem.functionals[i]) for i in rows])
    reduced = InterpolationProblem(
        space,
        tuple(problem.functionals[i].scaled(1.0 / s) for i, s in zip(rows, scales)),
        problem.targets[rows] / scales,
    )
    if len(rows) < problem.m:
        logger.info("Dropped %d dependent constraint(s)", problem.m - len(rows))

    is_complex = space.is_complex

    def fun(x):
        return dual_objective(reduced, _unpack(x, is_complex))

    def grad(x):
        r = dual_gradient(reduced, _unpack(x, is_complex))
        if is_complex:
            return np.concatenate([r.real, -r.imag])
        return r

    result = damped_newton_maximize(fun, grad, _pack(_warm_start(reduced), is_complex), 0.1 * tol, max_iter)
    if result.fallbacks:
        logger.warning("Dual ascent used %d gradient fallback step(s)", result.fallbacks)

    c = _unpack(result.x, is_complex)
    L = combine(reduced.functionals, c)
    f0 = inverse_duality_map(space, L)

    # scale so ||sum c_i L_i|| = ||f0||, i.e. sum c_i L_i in J(f0)
    size_L, size_f = dual_norm(space, L), norm(space, f0)
    if size_L > 0:
        c = c * (size_f / size_L)
    c_full[rows] = c / scales

    report = verify_representer(RepresenterSolution(f0, c_full, 0, 0, 0), problem, tol)
    solution = RepresenterSolution(
        f0=f0,
        c=c_full,
        feasibility_residual=report.feasibility_residual,
        peaking_residual=report.peaking_residual,
        norm_match_residual=report.norm_match_residual,
        iterations=result.iterations,
        tolerance=tol,
        meta={"rank": info.rank, "converged": result.converged},
    )
    if not report.passed:
        raise NonConvergenceError(
            f"{ErrorMessages.NON_CONVERGENCE}: residuals {solution.residuals} after {result.iterations} iterations"
        )
    logger.info("Solved min-norm problem in %d iterations, ||f0|| = %.12g", result.iterations, size_f)
    return solution


# ---------------- ORACLE ---------------- #

def _radius(problem: InterpolationProblem, particular: np.ndarray) -> float:
    # 2-norm bound on any feasible point with p-norm below that of the particular solution
    space = problem.space
    equiv = space.dim ** max(0.0, 0.5 - 1.0 / space.p) * np.min(space.weights) ** (-1.0 / space.p)
    size2 = float(np.linalg.norm(particular))
    sizep = weighted_norm(particular, space.weights, space.p)
    return max(size2 + equiv * sizep, 1e-12)


def oracle_minimize(
    problem: InterpolationProblem,
    objective: Callable[[Element], float],
    options: OracleOptions = None,
) -> Element:
    """
    Brute-force minimiser of `objective` over the feasible set f_part + N z.

    Coarse grid refinement over z followed by Nelder-Mead. Independent of
    the dual solver; meant for null spaces of dimension <= 3.
    """
    options = options or OracleOptions()
    space = problem.space
    info = orthogonal_decomposition(problem.operator, problem.targets)
    k = info.null_dim * (2 if space.is_complex else 1)
    if k > options.max_null_dim * (2 if space.is_complex else 1):
        raise NullSpaceTooLargeError(f"{ErrorMessages.NULL_SPACE_TOO_LARGE}: {info.null_dim}")

    particular = info.particular
    if k == 0:
        return Element(space, particular)

    basis = info.null_basis

    def point(z):
        if space.is_complex:
            half = z.size // 2
            return Element(space, particular + basis @ (z[:half] + 1j * z[half:]))
        return Element(space, particular + basis @ z)

    def value(z):
        return objective(point(np.asarray(z)))

    center = np.zeros(k)
    half_width = _radius(problem, particular)
    ticks = np.linspace(-1.0, 1.0, options.grid_points)
    for _ in range(options.refinements):
        mesh = np.meshgrid(*([ticks] * k), indexing="ij")
        candidates = center + half_width * np.stack([g.ravel() for g in mesh], axis=1)
        values = [value(z) for z in candidates]
        center = candidates[int(np.argmin(values))]
        half_width *= options.shrink

    simplex = np.vstack([center] + [center + half_width * e for e in np.eye(k)])
    result = scipy.optimize.minimize(
        value,
        center,
        method="Nelder-Mead",
        options={
            "xatol": options.xatol,
            "fatol": options.fatol,
            "maxiter": 20000,
            "maxfev": 40000,
            "initial_simplex": simplex,
        },
    )
    return point(result.x)


def oracle_min_norm(problem: InterpolationProblem, options: OracleOptions = None) -> Element:
    return oracle_minimize(problem, lambda f: norm(problem.space, f), options)


# ---------------- REGULARISED PROBLEM ---------------- #

def representer_span_residual(problem: InterpolationProblem, f: Element):
    """
    Least-squares distance of J(f) from span{L_i}, relative to ||J(f)||.
    Returns (coefficients, residual).
    """
    L = duality_map(problem.space, f)
    matrix = problem.matrix
    c, *_ = np.linalg.lstsq(matrix.T, L.coords, rcond=None)
    gap = matrix.T @ c - L.coords
    return c, float(np.max(np.abs(gap), initial=0.0) / (1.0 + np.max(np.abs(L.coords), initial=0.0)))


def solve_regularised(
    problem: InterpolationProblem,
    regulariser,
    lam: float,
    loss: LossSpec = None,
    seed: int = None,
    starts: int = None,
    warm_starts: Sequence[Element] = (),
    max_iter: int = None,
) -> RegularisedSolution:
    """
    Minimises E(A f, y) + lam * Omega(f) over all f by multi-start L-BFGS.

    Starts: `starts` random points, the minimal-norm solution (when the
    constraints are consistent) and any supplied warm starts.
    """
    loss = loss or LossSpec()
    seed = settings.SEED if seed is None else seed
    starts = settings.MULTISTART if starts is None else starts
    max_iter = settings.MAX_ITER if max_iter is None else max_iter
    space = problem.space
    require(not space.is_complex, ErrorMessages.COMPLEX_UNSUPPORTED)
    require(lam > 0, f"{ErrorMessages.INVALID_LAMBDA}: {lam}")

    op, y = problem.operator, problem.targets

    def objective(x):
        return loss.value(op @ x, y) + lam * regulariser.evaluate(Element(space, x))

    analytic = loss.differentiable and regulariser.gradient is not None

    def gradient(x):
        if analytic:
            return op.T @ loss.gradient(op @ x, y) + lam * regulariser.gradient(Element(space, x))
        return central_gradient(objective, x)

    rng = np.random.default_rng(seed)
    scale = max(float(np.linalg.norm(np.linalg.pinv(op) @ y)), 1.0)
    initial = [rng.normal(size=space.dim) * scale for _ in range(starts)]
    try:
        initial.append(np.array(solve_min_norm(problem).f0.coords))
    except RepresenterError as exc:
        logger.info("No min-norm warm start: %s", exc.detail)
    initial.extend(np.array(f.coords) for f in warm_starts)
    if not initial:
        initial.append(np.zeros(space.dim))

    runs = []
    for x0 in initial:
        res = scipy.optimize.minimize(
            objective,
            x0,
            jac=gradient,
            method="L-BFGS-B",
            options={"maxiter": 50 * max_iter, "ftol": 1e-15, "gtol": 1e-12, "maxcor": 30},
        )
        runs.append(res)

    best = min(runs, key=lambda r: r.fun)
    agreeing = sum(1 for r in runs if abs(r.fun - best.fun) <= 1e-8 * (1.0 + abs(best.fun)))
    # line-search exits at the optimum count as converged when the gradient vanishes
    stationary = best.success or float(np.max(np.abs(best.jac), initial=0.0)) <= 1e-6 * (1.0 + abs(best.fun))
    if not stationary and agreeing < 2:
        raise NonConvergenceError(
            f"{ErrorMessages.NON_CONVERGENCE}: best objective {best.fun:.6e} not confirmed by restarts ({best.message})"
        )
    if agreeing < len(runs):
        logger.warning("%d of %d restarts stalled above the best objective", len(runs) - agreeing, len(runs))
    return RegularisedSolution(Element(space, best.x), float(best.fun), len(runs), agreeing)


def regularisation_path(
    problem: InterpolationProblem,
    regulariser,
    loss: LossSpec = None,
    lambdas: Sequence[float] = (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6),
    seed: int = None,
    starts: int = 0,
) -> List[PathPoint]:
    """
    Solves the regularised problem along a decreasing lambda list and reports
    the distance of each solution to the minimal-norm interpolant.

    Each solve is warm-started from the interpolant and the previous point;
    random restarts are added only when `starts` is given.
    """
    lambdas = [float(v) for v in lambdas]
    require(
        len(lambdas) > 0 and all(v > 0 for v in lambdas) and all(a > b for a, b in zip(lambdas, lambdas[1:])),
        ErrorMessages.LAMBDAS_NOT_DECREASING,
    )
    target = solve_min_norm(problem).f0
    path: List[PathPoint] = []
    previous: Optional[Element] = None
    for lam in lambdas:
        warm = (previous,) if previous is not None else ()
        sol = solve_regularised(problem, regulariser, lam, loss, seed=seed, starts=starts, warm_starts=warm)
        distance = norm(problem.space, sol.f - target)
        path.append(PathPoint(lam=lam, f=sol.f, distance=distance, objective=sol.objective))
        logger.info("lambda=%.3e distance=%.6e", lam, distance)
        previous = sol.f
    return path
