"""
Fourier-feature RKBS on I = [-1/2, 1/2].

    Phi(x)(t)  = exp(-2 pi i x t)      (in L^p)
    Phi*(x)(t) = exp(+2 pi i x t)      (in L^q)
    K(x, y)    = <Phi(x), Phi*(y)> = sinc(x - y)

Integrals over I are replaced by a symmetric quadrature rule whose weights
sum to 1.
"""
import logging
from typing import Sequence, Union

import numpy as np

from representer.config.settings import settings
from representer.constants import ErrorMessages, Tolerances
from representer.enums import ScalarField
from representer.errors import ImagTooLargeError, InvalidExponentError, PreconditionError
from representer.models.problem import InterpolationProblem
from representer.models.rkbs import FeaturePair, InterpolationResult, Rkbs1D, RkbsDualFunction, RkbsFunction
from representer.models.spaces import Element, Functional, PNormSpace
from representer.services.duality import duality_map, inverse_duality_map, norm
from representer.services.minnorm import solve_min_norm
from representer.utils.common import require
from representer.utils.quadrature import gauss_legendre

logger = logging.getLogger(__name__)

TWO_PI_I = 2j * np.pi


def _assemble(nodes: np.ndarray, weights: np.ndarray, p: float) -> Rkbs1D:
    if not np.isfinite(p) or p <= 1.0:
        raise InvalidExponentError(f"{ErrorMessages.INVALID_EXPONENT}: p={p}")
    space = PNormSpace(nodes.size, p, weights, ScalarField.complex)
    nodes = nodes.copy()
    nodes.setflags(write=False)
    return Rkbs1D(nodes=nodes, weights=space.weights, p=space.p, space=space)


def build_rkbs(p: float, n: int = None) -> Rkbs1D:
    """
    Gauss-Legendre grid of n nodes on [-1/2, 1/2], symmetrised exactly.
    """
    n = settings.RKBS_NODES if n is None else n
    require(int(n) == n and n >= 2, f"{ErrorMessages.INVALID_NODE_COUNT}: {n}")
    nodes, weights = gauss_legendre(int(n), -0.5, 0.5)
    nodes = 0.5 * (nodes - nodes[::-1])
    weights = 0.5 * (weights + weights[::-1])
    weights = weights / np.sum(weights)
    logger.debug("Built RKBS grid with %d nodes, p=%s", n, p)
    return _assemble(nodes, weights, float(p))


def from_grid(nodes: Sequence[float], weights: Sequence[float], p: float) -> Rkbs1D:
    """
    User-supplied rule on I. The rule must be a probability measure so the
    construction's prefactor 1 / mu(I)^((p-2)/p) equals 1.
    """
    nodes = np.asarray(nodes, dtype=float).reshape(-1)
    weights = np.asarray(weights, dtype=float).reshape(-1)
    order = np.argsort(nodes)
    nodes, weights = nodes[order], weights[order]
    valid = (
        nodes.size >= 2
        and weights.shape == nodes.shape
        and np.all(np.abs(nodes) <= 0.5)
        and np.allclose(nodes[::-1], -nodes, rtol=0.0, atol=Tolerances.WEIGHT_SUM)
        and np.all(weights > 0)
        and abs(np.sum(weights) - 1.0) <= Tolerances.WEIGHT_SUM
    )
    if not valid:
        raise PreconditionError(ErrorMessages.INVALID_GRID)
    return _assemble(nodes, weights, float(p))


def feature(rkbs: Rkbs1D, x: float) -> FeaturePair:
    phase = TWO_PI_I * x * rkbs.nodes
    return FeaturePair(
        primal=Element(rkbs.space, np.exp(-phase)),
        dual=Functional(rkbs.space, np.exp(phase)),
    )


def _real_or_raise(values: np.ndarray) -> np.ndarray:
    imag = float(np.max(np.abs(np.imag(values)), initial=0.0))
    if imag > Tolerances.KERNEL_IMAG:
        raise ImagTooLargeError(f"{ErrorMessages.IMAG_TOO_LARGE}: {imag:.3e}")
    return np.real(values)


def kernel_matrix(rkbs: Rkbs1D, xs: Sequence[float], ys: Sequence[float]) -> np.ndarray:
    """
    K[a, b] = sum_j w_j exp(-2 pi i x_a t_j) exp(2 pi i y_b t_j).
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    primal = np.exp(-TWO_PI_I * np.outer(xs, rkbs.nodes)) * rkbs.weights
    dual = np.exp(TWO_PI_I * np.outer(rkbs.nodes, ys))
    return _real_or_raise(primal @ dual)


def kernel(rkbs: Rkbs1D, x: float, y: float) -> float:
    return float(kernel_matrix(rkbs, [x], [y])[0, 0])


def evaluate(fn: RkbsFunction, x: Union[float, Sequence[float]]):
    """
    f_u(x) = sum_j w_j u_j exp(2 pi i x t_j); complex, scalar in scalar out.
    """
    rkbs = fn.rkbs
    xs = np.asarray(x, dtype=float)
    values = np.exp(TWO_PI_I * np.multiply.outer(xs, rkbs.nodes)) @ (rkbs.weights * fn.u)
    return complex(values) if values.ndim == 0 else values


def evaluate_dual(dual_fn: RkbsDualFunction, x: Union[float, Sequence[float]]):
    """
    <Phi(x), v> = sum_j w_j v_j exp(-2 pi i x t_j).
    """
    rkbs = dual_fn.rkbs
    xs = np.asarray(x, dtype=float)
    values = np.exp(-TWO_PI_I * np.multiply.outer(xs, rkbs.nodes)) @ (rkbs.weights * dual_fn.v)
    return complex(values) if values.ndim == 0 else values


def interpolate(
    rkbs: Rkbs1D,
    points: Sequence[float],
    values: Sequence[float],
    tol: float = None,
    max_iter: int = None,
    check_grid: Sequence[float] = None,
) -> InterpolationResult:
    """
    Minimal-norm u with f_u(x_i) = y_i, solved on the complex weighted space
    with constraint functionals Phi*(x_i).

    The largest imaginary part of f_u on `check_grid` (default: 201 points
    spanning the data with unit margin) is recorded, not enforced.
    """
    points = np.asarray(points, dtype=float).reshape(-1)
    values = np.asarray(values, dtype=float).reshape(-1)
    require(np.unique(points).size == points.size, ErrorMessages.DUPLICATE_POINTS)

    functionals = tuple(feature(rkbs, x).dual for x in points)
    problem = InterpolationProblem(rkbs.space, functionals, values)
    solution = solve_min_norm(problem, tol=tol, max_iter=max_iter)
    fn = RkbsFunction(rkbs, solution.f0.coords)

    if check_grid is None:
        check_grid = np.linspace(points.min() - 1.0, points.max() + 1.0, 201)
    max_imag = float(np.max(np.abs(np.imag(evaluate(fn, np.asarray(check_grid, dtype=float))))))
    if max_imag > Tolerances.KERNEL_IMAG:
        logger.warning("Interpolant has imaginary part %.3e on the real check grid", max_imag)
    logger.info("Interpolated %d points at p=%s, ||u||=%.12g", points.size, rkbs.p, norm(rkbs.space, solution.f0))
    return InterpolationResult(function=fn, solution=solution, points=points, values=values, max_imag=max_imag)


def dual_function(fn: Union[RkbsFunction, RkbsDualFunction]):
    """
    u |u|^(p-2) / ||u||_p^(p-2), the conjugate of J(u); zero maps to zero.

    Applied to a dual function it uses the exponent q and returns the primal
    function, so dual_function(dual_function(f)) recovers f.
    """
    if isinstance(fn, RkbsDualFunction):
        return primal_function(fn)
    rkbs = fn.rkbs
    return RkbsDualFunction(rkbs, np.conj(duality_map(rkbs.space, fn.element).coords))


def primal_function(dual_fn: RkbsDualFunction) -> RkbsFunction:
    """
    v |v|^(q-2) / ||v||_q^(q-2).
    """
    rkbs = dual_fn.rkbs
    return RkbsFunction(rkbs, np.conj(inverse_duality_map(rkbs.space, dual_fn.functional).coords))
