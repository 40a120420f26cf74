import logging

import numpy as np
import scipy.optimize

from representer.config.settings import settings
from representer.constants import ErrorMessages, Tolerances
from representer.errors import BracketNotFoundError, NonConvergenceError, PreconditionError
from representer.models.regulariser import TangentWalkCertificate, TangentWalkResult
from representer.models.spaces import Element, PNormSpace
from representer.services.admissibility import tangent_at
from representer.services.duality import duality_map, norm, pairing
from representer.utils.common import require, require_in_space

logger = logging.getLogger(__name__)


def random_unit_tangent(space: PNormSpace, f_hat: Element, seed: int = None) -> Element:
    """
    Unit vector of ker J(f_hat), drawn from a seeded Gaussian.
    """
    rng = np.random.default_rng(settings.SEED if seed is None else seed)
    while True:
        v = rng.standard_normal(space.dim)
        if space.is_complex:
            v = v + 1j * rng.standard_normal(space.dim)
        direction = tangent_at(space, f_hat, Element(space, v))
        size = norm(space, direction)
        if size > 0.0:
            return direction.scaled(1.0 / size)


def tangent_walk(
    space: PNormSpace,
    f_hat: Element,
    lam: float,
    tol: float = 1e-8,
    direction: Element = None,
    seed: int = None,
) -> TangentWalkResult:
    """
    Walks from f_hat along a tangent direction until the closing segment to
    lam * f_hat becomes tangent to the sphere through f_t.

    Finds t0 with phi(t0) = 0 where
        phi(t) = lam <J(f_t), f_hat> - ||f_t||^2,  f_t = f_hat + t f_T1.
    phi(0) = (lam - 1)||f_hat||^2 > 0, and phi(t) < 0 once ||f_t|| > lam ||f_hat||,
    which holds for t > (lam + 1)||f_hat|| / ||f_T1||.

    Args:
        space: the smooth space
        f_hat: nonzero starting point
        lam: walk factor, > 1
        tol: bound on |phi(t0)|
        direction: tangent f_T1 in ker J(f_hat); a random unit tangent when omitted
        seed: seed for the random tangent

    Raises:
        BracketNotFoundError: phi stayed positive up to the guaranteed bound
    """
    require_in_space(space, f_hat)
    require(not f_hat.is_zero(), ErrorMessages.ZERO_ELEMENT)
    require(lam > 1.0, f"{ErrorMessages.LAMBDA_NOT_ABOVE_ONE}: {lam}")

    size_hat = norm(space, f_hat)
    J_hat = duality_map(space, f_hat)
    if direction is None:
        direction = random_unit_tangent(space, f_hat, seed)
    else:
        require_in_space(space, direction)
        size_dir = norm(space, direction)
        require(size_dir > 0.0, ErrorMessages.ZERO_ELEMENT)
        if abs(pairing(J_hat, direction)) > Tolerances.TANGENCY * size_hat * size_dir:
            raise PreconditionError("Direction is not annihilated by J(f_hat)")
    size_dir = norm(space, direction)

    def walk(t: float) -> Element:
        return f_hat + direction.scaled(t)

    def phi(t: float) -> float:
        f_t = walk(t)
        return lam * float(np.real(pairing(duality_map(space, f_t), f_hat))) - norm(space, f_t) ** 2

    phi0 = phi(0.0)
    bound = 2.0 * (lam + 1.0) * size_hat / size_dir
    lo, hi = 0.0, bound / 1024.0
    phi_hi = phi(hi)
    while phi_hi > 0.0 and hi < bound:
        lo, hi = hi, min(2.0 * hi, bound)
        phi_hi = phi(hi)
    if phi_hi > 0.0:
        raise BracketNotFoundError(f"{ErrorMessages.BRACKET_NOT_FOUND}: phi({bound:.6g}) = {phi_hi:.3e}")
    phi_lo = phi(lo)

    if phi_hi == 0.0:
        t0 = hi
    else:
        t0 = scipy.optimize.bisect(phi, lo, hi, xtol=1e-15, maxiter=400)

    f_t0 = walk(t0)
    residual = abs(phi(t0))
    target = f_hat.scaled(lam) - f_t0
    tangency = float(np.real(pairing(duality_map(space, f_t0), target)))
    if residual > tol * max(1.0, size_hat ** 2):
        raise NonConvergenceError(f"{ErrorMessages.NON_CONVERGENCE}: |phi(t0)| = {residual:.3e}")

    logger.info("Tangent walk: t0=%.12g, ||f_t0||=%.12g, lam||f_hat||=%.12g", t0, norm(space, f_t0), lam * size_hat)
    certificate = TangentWalkCertificate(
        phi_at_zero=phi0,
        bracket=(lo, hi),
        phi_at_bracket=(phi_lo, phi_hi),
        residual=residual,
        tangency=tangency,
    )
    return TangentWalkResult(t0=float(t0), f_t0=f_t0, direction=direction, certificate=certificate)
