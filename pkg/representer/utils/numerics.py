import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.linalg

logger = logging.getLogger(__name__)

_CBRT_EPS = np.finfo(float).eps ** (1.0 / 3.0)


def central_gradient(fun: Callable[[np.ndarray], float], x: np.ndarray) -> np.ndarray:
    """
    Central-difference gradient with per-coordinate steps eps^(1/3) * max(1, |x_j|).
    """
    x = np.asarray(x, dtype=float)
    grad = np.empty_like(x)
    for j in range(x.size):
        h = _CBRT_EPS * max(1.0, abs(x[j]))
        step = np.zeros_like(x)
        step[j] = h
        grad[j] = (fun(x + step) - fun(x - step)) / (2.0 * h)
    return grad


def fd_hessian(grad: Callable[[np.ndarray], np.ndarray], x: np.ndarray) -> np.ndarray:
    """
    Symmetrised central-difference Jacobian of an analytic gradient.
    """
    x = np.asarray(x, dtype=float)
    top = np.max(np.abs(x), initial=0.0)
    h = 1e-6 * (top if top > 0.0 else 1.0)
    H = np.empty((x.size, x.size))
    for j in range(x.size):
        step = np.zeros_like(x)
        step[j] = h
        H[:, j] = (grad(x + step) - grad(x - step)) / (2.0 * h)
    return 0.5 * (H + H.T)


@dataclass
class AscentResult:
    x: np.ndarray
    iterations: int
    gradient_norm: float
    converged: bool
    fallbacks: int


def _newton_direction(H: np.ndarray, g: np.ndarray):
    # solve (-H + mu I) d = g, raising mu until the shifted matrix factors
    A = -H
    scale = max(np.max(np.abs(np.diag(A)), initial=0.0), 1e-300)
    for mu in (0.0, 1e-12, 1e-10, 1e-8, 1e-6, 1e-4, 1e-2):
        try:
            factor = scipy.linalg.cho_factor(A + mu * scale * np.eye(A.shape[0]))
        except (np.linalg.LinAlgError, ValueError):
            continue
        d = scipy.linalg.cho_solve(factor, g)
        if np.all(np.isfinite(d)) and d @ g > 0:
            return d
    return None


def damped_newton_maximize(
    fun: Callable[[np.ndarray], float],
    grad: Callable[[np.ndarray], np.ndarray],
    x0: np.ndarray,
    tol: float,
    max_iter: int,
) -> AscentResult:
    """
    Maximises a smooth concave function.

    Newton steps use a finite-difference Hessian, shifted until it factors;
    steps are damped by Armijo backtracking. When the Hessian is unusable the
    iteration falls back to gradient ascent. Stops once max|grad| <= tol.
    """
    x = np.asarray(x0, dtype=float).copy()
    g = grad(x)
    fallbacks = 0
    it = 0
    while it < max_iter:
        gnorm = float(np.max(np.abs(g), initial=0.0))
        if gnorm <= tol:
            return AscentResult(x, it, gnorm, True, fallbacks)

        d = _newton_direction(fd_hessian(grad, x), g)
        if d is None:
            fallbacks += 1
            logger.debug("Hessian unusable at iteration %d, using gradient step", it)
            d = g / max(gnorm, 1.0)

        f0 = fun(x)
        slope = float(d @ g)
        t = 1.0
        accepted = False
        while t > 1e-14:
            trial = x + t * d
            f1 = fun(trial)
            if np.isfinite(f1) and f1 >= f0 + 1e-4 * t * slope:
                accepted = True
                break
            g_trial = grad(trial)
            # near the optimum f differences drown in rounding; accept on gradient decrease
            if np.isfinite(f1) and np.max(np.abs(g_trial)) < 0.5 * gnorm:
                accepted = True
                break
            t *= 0.5
        if not accepted:
            logger.debug("Line search stalled at iteration %d (|g|=%.3e)", it, gnorm)
            break
        x = trial
        g = grad(x)
        it += 1
        logger.debug("iteration %d: step %.3e, |g| %.3e", it, t, float(np.max(np.abs(g))))

    gnorm = float(np.max(np.abs(g), initial=0.0))
    return AscentResult(x, it, gnorm, gnorm <= tol, fallbacks)
