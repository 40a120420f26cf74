"""
Norms, pairing and the duality map of weighted l^p spaces.

The gauge of the duality map is the identity, so J(f) is the unique
functional with <J(f), f> = ||f||^2 and ||J(f)||_q = ||f||_p.
"""
from typing import Sequence, Union

import numpy as np

from representer.models.spaces import Element, Functional, PNormSpace
from representer.utils.common import require_in_space, require_same_space

Scalar = Union[float, complex]


def weighted_norm(coords: np.ndarray, weights: np.ndarray, exponent: float) -> float:
    """
    (sum_j w_j |x_j|^r)^(1/r), computed on the max-rescaled vector so large
    exponents neither overflow nor underflow.
    """
    mags = np.abs(coords)
    top = mags.max(initial=0.0)
    if top == 0.0:
        return 0.0
    return float(top * np.sum(weights * (mags / top) ** exponent) ** (1.0 / exponent))


def _dual_coords(coords: np.ndarray, weights: np.ndarray, exponent: float) -> np.ndarray:
    # ||x||^(2-r) |x_j|^(r-1) conj(phase(x_j)), written as ||x|| (|x_j|/||x||)^(r-1)
    size = weighted_norm(coords, weights, exponent)
    out = np.zeros_like(coords)
    if size == 0.0:
        return out
    mags = np.abs(coords)
    nz = mags > 0
    phase = coords[nz] / mags[nz]
    if np.iscomplexobj(coords):
        phase = np.conj(phase)
    out[nz] = size * (mags[nz] / size) ** (exponent - 1.0) * phase
    return out


def norm(space: PNormSpace, f: Element) -> float:
    require_in_space(space, f)
    return weighted_norm(f.coords, space.weights, space.p)


def dual_norm(space: PNormSpace, L: Functional) -> float:
    require_in_space(space, L)
    return weighted_norm(L.coords, space.weights, space.q)


def pairing(L: Functional, f: Element) -> Scalar:
    """
    Bilinear pairing <L, f> = sum_j w_j L_j f_j (no conjugation).
    """
    space = require_same_space(L, f)
    value = np.sum(space.weights * L.coords * f.coords)
    return complex(value) if space.is_complex else float(value)


def duality_map(space: PNormSpace, f: Element) -> Functional:
    require_in_space(space, f)
    return Functional(space, _dual_coords(f.coords, space.weights, space.p))


def inverse_duality_map(space: PNormSpace, L: Functional) -> Element:
    """The duality map of the conjugate space, mapping B* back onto B."""
    require_in_space(space, L)
    return Element(space, _dual_coords(L.coords, space.weights, space.q))


def peaking_gap(L: Functional, f: Element) -> float:
    """
    ||L||_q ||f||_p - Re<L, f>; zero exactly when L peaks at f.
    """
    space = require_same_space(L, f)
    value = pairing(L, f)
    gap = dual_norm(space, L) * norm(space, f) - float(np.real(value))
    return max(gap, 0.0)


def combine(functionals: Sequence[Functional], c: Sequence[Scalar]) -> Functional:
    """
    sum_i c_i L_i.
    """
    space = functionals[0].space
    coeffs = np.asarray(c)
    rows = np.vstack([L.coords for L in functionals])
    return Functional(space, coeffs @ rows)


def conjugate_space(space: PNormSpace) -> PNormSpace:
    """B* as a space of its own: exponent q, same weights and field."""
    return space.conjugate()
