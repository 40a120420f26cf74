from functools import lru_cache
from typing import Tuple

import numpy as np

from representer.constants import ErrorMessages
from representer.errors import PreconditionError


@lru_cache(maxsize=32)
def _leggauss(n: int) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(n)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_legendre(n: int, a: float = -1.0, b: float = 1.0) -> Tuple[np.ndarray, np.ndarray]:
    """
    n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree 2n - 1.

    Returns:
        (nodes, weights), nodes ascending
    """
    if int(n) != n or n < 2:
        raise PreconditionError(f"{ErrorMessages.QUADRATURE_ORDER}: {n}")
    x, w = _leggauss(int(n))
    half = 0.5 * (b - a)
    return half * x + 0.5 * (b + a), half * w
