"""
Witnesses for J(x0 + z) meeting W° - u0 with z in a subspace W.

The witness minimises G(z) = 1/2 ||x0 + z||^2 + <u0, z> over z in W. The
derivative of 1/2 ||.||^2 is J, so at the minimiser L = J(x0 + z) satisfies
<L + u0, w> = 0 for all w in W.
"""
import logging
from typing import Sequence

import numpy as np
import scipy.linalg

from representer.config.settings import settings
from representer.constants import ErrorMessages, Tolerances
from representer.errors import NonConvergenceError, PreconditionError
from representer.models.problem import InterpolationProblem
from representer.models.regulariser import BlwWitness, SpanWitness
from representer.models.spaces import Element, Functional, PNormSpace
from representer.services.duality import dual_norm, duality_map, norm, pairing, peaking_gap
from representer.utils.common import require_in_space
from representer.utils.linalg import orthogonal_decomposition
from representer.utils.numerics import damped_newton_maximize

logger = logging.getLogger(__name__)


def _basis_matrix(space: PNormSpace, W_basis: Sequence[Element]) -> np.ndarray:
    for w in W_basis:
        require_in_space(space, w)
    if not W_basis:
        return np.zeros((space.dim, 0), dtype=space.dtype)
    basis = np.column_stack([w.coords for w in W_basis])
    s = scipy.linalg.svdvals(basis)
    if s[-1] <= Tolerances.RANK * s[0]:
        raise PreconditionError(ErrorMessages.DEPENDENT_BASIS)
    return basis


def beurling_livingston_witness(
    space: PNormSpace,
    W_basis: Sequence[Element],
    x0: Element,
    u0: Functional,
    tol: float = 1e-6,
    max_iter: int = None,
) -> BlwWitness:
    """
    Returns z in span(W_basis) and L = J(x0 + z) with L + u0 annihilating W.

    Descent runs on the basis coefficients a with gradient components
    <J(x0 + z) + u0, w_k>; complex coefficients are split into real and
    imaginary parts. The annihilator residual is measured against the basis
    rescaled to unit norm; coefficients refer to the basis as given.

    Raises:
        PreconditionError: dependent basis
        NonConvergenceError: a residual above tol
    """
    max_iter = settings.MAX_ITER if max_iter is None else max_iter
    require_in_space(space, x0)
    require_in_space(space, u0)
    given = _basis_matrix(space, list(W_basis))
    # unit-norm columns keep the gradient tolerance meaningful at any basis scale
    col_norms = np.array([norm(space, Element(space, given[:, j])) for j in range(given.shape[1])])
    basis = given / col_norms if col_norms.size else given
    k = basis.shape[1]
    is_complex = space.is_complex

    def coefficients(x: np.ndarray) -> np.ndarray:
        return x[:k] + 1j * x[k:] if is_complex else x

    def point(x: np.ndarray) -> Element:
        return Element(space, x0.coords + basis @ coefficients(x))

    def neg_G(x: np.ndarray) -> float:
        z = Element(space, basis @ coefficients(x))
        return -(0.5 * norm(space, x0 + z) ** 2 + float(np.real(pairing(u0, z))))

    def neg_grad(x: np.ndarray) -> np.ndarray:
        shifted = duality_map(space, point(x)) + u0
        g = np.array([pairing(shifted, Element(space, basis[:, j])) for j in range(k)])
        if is_complex:
            # d/d(Im a_k) of Re<., i w_k> is -Im<., w_k>
            return -np.concatenate([g.real, -g.imag])
        return -np.real(g)

    x_start = np.zeros(2 * k if is_complex else k)
    if k:
        result = damped_newton_maximize(neg_G, neg_grad, x_start, 0.1 * tol, max_iter)
        x_opt, iterations = result.x, result.iterations
    else:
        x_opt, iterations = x_start, 0

    a = coefficients(x_opt)
    z = Element(space, basis @ a)
    x = x0 + z
    L = duality_map(space, x)

    membership = peaking_gap(L, x) + abs(dual_norm(space, L) - norm(space, x))
    shifted = L + u0
    annihilator = max(
        (abs(pairing(shifted, Element(space, basis[:, j]))) for j in range(k)),
        default=0.0,
    )
    if membership > tol or annihilator > tol:
        raise NonConvergenceError(
            f"{ErrorMessages.NON_CONVERGENCE}: membership {membership:.3e}, annihilator {annihilator:.3e}"
        )
    logger.info("Witness found in %d iterations (annihilator residual %.3e)", iterations, annihilator)
    return BlwWitness(
        z=z,
        L=L,
        membership_residual=float(membership),
        annihilator_residual=float(annihilator),
        coefficients=a / col_norms,
        iterations=iterations,
    )


def span_witness(problem: InterpolationProblem, f: Element, tol: float = 1e-6) -> SpanWitness:
    """
    Moves a feasible f inside the constraint set to f_hat with J(f_hat) in
    span{L_i}: the witness with W = intersection of ker L_i and u0 = 0.
    f_hat is the minimal-norm interpolant.
    """
    space = problem.space
    info = orthogonal_decomposition(problem.operator, problem.targets)
    W_basis = [Element(space, info.null_basis[:, j]) for j in range(info.null_dim)]
    witness = beurling_livingston_witness(space, W_basis, f, Functional.zeros(space), tol)
    f_hat = f + witness.z
    c, *_ = np.linalg.lstsq(problem.matrix.T, witness.L.coords, rcond=None)
    return SpanWitness(f_hat=f_hat, c=c, witness=witness)
