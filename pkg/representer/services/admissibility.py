"""
Refutation-only testers for admissibility.

A regulariser is admissible exactly when it does not decrease along tangent
directions of the norm ball; for strictly convex norms this forces it to be
constant on spheres. Both consequences are sampled here. A pass is evidence,
a recorded counterexample is a proof.
"""
import logging

import numpy as np

from representer.config.settings import settings
from representer.constants import Tolerances
from representer.enums import Verdict
from representer.models.regulariser import (
    AdmissibilityReport,
    Counterexample,
    RadialSymmetryReport,
    RadialWitness,
    RegulariserSpec,
)
from representer.models.spaces import Element, PNormSpace
from representer.services.duality import duality_map, norm, pairing

logger = logging.getLogger(__name__)

TANGENT_MAGNITUDES = (0.01, 0.1, 1.0, 10.0)


def _random_coords(rng: np.random.Generator, space: PNormSpace) -> np.ndarray:
    x = rng.standard_normal(space.dim)
    if space.is_complex:
        x = x + 1j * rng.standard_normal(space.dim)
    return x


def _random_nonzero(rng: np.random.Generator, space: PNormSpace) -> Element:
    while True:
        x = _random_coords(rng, space) * rng.uniform(0.1, 3.0)
        if np.any(x):
            return Element(space, x)


def tangent_at(space: PNormSpace, f: Element, v: Element) -> Element:
    """
    Projects v onto ker J(f) along f: v - (<L, v> / <L, f>) f with L = J(f).
    """
    L = duality_map(space, f)
    return v - f.scaled(pairing(L, v) / pairing(L, f))


def test_tangential_monotonicity(
    omega: RegulariserSpec,
    space: PNormSpace,
    n_samples: int,
    seed: int = None,
    tol: float = None,
    max_counterexamples: int = 1,
) -> AdmissibilityReport:
    """
    Samples f != 0 and tangents f_T in ker J(f) at several magnitudes and
    records every f with Omega(f + f_T) < Omega(f) - tol.

    Stops after `max_counterexamples` violations.
    """
    seed = settings.SEED if seed is None else seed
    tol = settings.ADMISSIBILITY_TOL if tol is None else tol
    rng = np.random.default_rng(seed)
    found = []
    tested = 0

    for _ in range(n_samples):
        f = _random_nonzero(rng, space)
        tested += 1
        direction = tangent_at(space, f, Element(space, _random_coords(rng, space)))
        size = norm(space, direction)
        if size == 0.0:
            continue
        unit = direction.scaled(1.0 / size)
        base = omega.evaluate(f)
        for magnitude in TANGENT_MAGNITUDES:
            f_T = unit.scaled(magnitude * norm(space, f))
            shifted = omega.evaluate(f + f_T)
            if shifted < base - tol:
                found.append(Counterexample(f=f, f_T=f_T, omega_f=base, omega_shifted=shifted))
                logger.info("Tangential decrease %.3e at sample %d", base - shifted, tested)
                break
        if len(found) >= max_counterexamples:
            break

    verdict = Verdict.counterexample if found else Verdict.passed
    logger.info("Tangential test of %r: %s after %d samples", omega.source, verdict.value, tested)
    return AdmissibilityReport(verdict=verdict, samples_tested=tested, counterexamples=found, seed=seed, tolerance=tol)


def test_radial_symmetry(
    omega: RegulariserSpec,
    space: PNormSpace,
    n_samples: int,
    seed: int = None,
    tol: float = None,
    max_witnesses: int = 1,
) -> RadialSymmetryReport:
    """
    Samples pairs (f, g) with ||g|| = ||f|| and flags |Omega(f) - Omega(g)| > tol.
    """
    seed = settings.SEED if seed is None else seed
    tol = settings.ADMISSIBILITY_TOL if tol is None else tol
    rng = np.random.default_rng(seed)
    witnesses = []
    tested = 0

    for _ in range(n_samples):
        f = _random_nonzero(rng, space)
        g = _random_nonzero(rng, space)
        g = g.scaled(norm(space, f) / norm(space, g))
        tested += 1
        omega_f, omega_g = omega.evaluate(f), omega.evaluate(g)
        if abs(omega_f - omega_g) > tol:
            witnesses.append(RadialWitness(f=f, g=g, omega_f=omega_f, omega_g=omega_g))
            if len(witnesses) >= max_witnesses:
                break

    verdict = Verdict.counterexample if witnesses else Verdict.passed
    logger.info("Radial test of %r: %s after %d samples", omega.source, verdict.value, tested)
    return RadialSymmetryReport(verdict=verdict, samples_tested=tested, witnesses=witnesses, seed=seed, tolerance=tol)


def recheck_counterexample(omega: RegulariserSpec, example: Counterexample, tol: float = None) -> bool:
    """
    Re-verifies a recorded counterexample: tangency to 1e-10 and strict decrease.
    """
    tol = settings.ADMISSIBILITY_TOL if tol is None else tol
    space = example.f.space
    L = duality_map(space, example.f)
    tangency = abs(pairing(L, example.f_T)) / max(norm(space, example.f) * norm(space, example.f_T), 1.0)
    decrease = omega.evaluate(example.f) - omega.evaluate(example.f + example.f_T)
    return tangency <= Tolerances.TANGENCY and decrease > tol


# not pytest tests
test_tangential_monotonicity.__test__ = False
test_radial_symmetry.__test__ = False
