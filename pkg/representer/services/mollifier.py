"""
Radial mollification of regularisers.

    Omega~(s f0) = integral over [-1, 0] of rho(t) Omega((s - t) f0) dt

with the bump rho(t) = C exp(-1 / (1 - (2t + 1)^2)) supported on [-1, 0].
For admissible Omega the result is nondecreasing in s along every ray.
"""
import logging
from functools import lru_cache
from typing import Tuple

import numpy as np

from representer.config.settings import settings
from representer.constants import ErrorMessages, Tolerances
from representer.models.regulariser import RegulariserSpec
from representer.models.spaces import Element
from representer.services.duality import norm
from representer.utils.common import require
from representer.utils.quadrature import gauss_legendre

logger = logging.getLogger(__name__)


def _bump(t: np.ndarray) -> np.ndarray:
    u = 2.0 * t + 1.0
    inside = np.abs(u) < 1.0
    out = np.zeros_like(t)
    out[inside] = np.exp(-1.0 / (1.0 - u[inside] ** 2))
    return out


@lru_cache(maxsize=16)
def mollifier_rule(order: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Nodes t_k in (-1, 0) and combined weights w_k rho(t_k), normalised to sum 1.
    """
    nodes, weights = gauss_legendre(order, -1.0, 0.0)
    raw = weights * _bump(nodes)
    combined = raw / np.sum(raw)
    nodes.setflags(write=False)
    combined.setflags(write=False)
    return nodes, combined


def mollify_radial(omega: RegulariserSpec, f0: Element, s: float, order: int = None) -> float:
    """
    Mollified value of omega at s * f0 for a unit direction f0 and s >= 0.
    """
    order = settings.QUADRATURE_ORDER if order is None else order
    require(int(order) == order and order >= 2, f"{ErrorMessages.QUADRATURE_ORDER}: {order}")
    require(s >= 0.0, f"{ErrorMessages.NEGATIVE_RADIUS}: {s}")
    size = norm(f0.space, f0)
    require(abs(size - 1.0) <= Tolerances.UNIT_NORM, f"{ErrorMessages.NOT_UNIT_DIRECTION}: ||f0|| = {size!r}")

    nodes, weights = mollifier_rule(int(order))
    values = np.array([omega.evaluate(f0.scaled(s - t)) for t in nodes])
    return float(weights @ values)


def mollification_shift(order: int = None) -> float:
    """
    kappa = -integral of t rho(t) dt, the shift of a mollified norm (1/2 by symmetry).
    """
    order = settings.QUADRATURE_ORDER if order is None else order
    nodes, weights = mollifier_rule(int(order))
    return float(-(weights @ nodes))


def mollified_regulariser(omega: RegulariserSpec, order: int = None) -> RegulariserSpec:
    """
    Omega~(f) = mollify_radial(omega, f / ||f||, ||f||); the origin uses the e_1 ray.
    """
    order = settings.QUADRATURE_ORDER if order is None else order

    def compiled(f: Element) -> float:
        size = norm(f.space, f)
        if size == 0.0:
            e1 = np.zeros(f.space.dim, dtype=f.space.dtype)
            e1[0] = 1.0
            direction = Element(f.space, e1)
            return mollify_radial(omega, direction.scaled(1.0 / norm(f.space, direction)), 0.0, order)
        return mollify_radial(omega, f.scaled(1.0 / size), size, order)

    logger.debug("Mollifying %r with order %d", omega.source, order)
    return RegulariserSpec(
        source=f"mollified({omega.source})",
        compiled=compiled,
        claims_admissible=omega.claims_admissible,
        strictly_increasing=omega.strictly_increasing,
        h=None,
    )
