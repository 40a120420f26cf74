import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from representer.enums import ScalarField
from representer.errors import DimensionMismatchError, InvalidExponentError
from representer.models import Element, Functional, PNormSpace
from representer.models.spaces import element, functional
from representer.services.duality import (
    combine,
    conjugate_space,
    dual_norm,
    duality_map,
    inverse_duality_map,
    norm,
    pairing,
    peaking_gap,
)

EXPONENTS = (1.2, 1.5, 2.0, 3.0, 4.0, 8.0)

coordinates = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_subnormal=False)


@st.composite
def space_and_vector(draw):
    dim = draw(st.integers(min_value=1, max_value=16))
    p = draw(st.sampled_from(EXPONENTS))
    weights = draw(st.lists(st.floats(min_value=0.1, max_value=10.0), min_size=dim, max_size=dim))
    coords = draw(st.lists(coordinates, min_size=dim, max_size=dim))
    space = PNormSpace(dim, p, weights)
    return space, Element(space, coords)


def test_norm_examples():
    assert norm(PNormSpace(2, 2.0), Element(PNormSpace(2, 2.0), [3.0, 4.0])) == pytest.approx(5.0, rel=1e-15)
    space = PNormSpace(2, 4.0)
    assert norm(space, Element(space, [1.0, 1.0])) == pytest.approx(2.0 ** 0.25, rel=1e-14)
    assert norm(space, Element.zeros(space)) == 0.0


def test_dual_norm_examples():
    space = PNormSpace(2, 2.0)
    assert dual_norm(space, Functional(space, [3.0, 4.0])) == pytest.approx(5.0, rel=1e-15)
    space = PNormSpace(2, 4.0)
    assert space.q == pytest.approx(4.0 / 3.0)
    assert dual_norm(space, Functional(space, [1.0, 1.0])) == pytest.approx(2.0 ** 0.75, rel=1e-14)
    assert dual_norm(space, Functional.zeros(space)) == 0.0


def test_pairing_examples():
    space = PNormSpace(2, 3.0)
    assert pairing(Functional(space, [1.0, 0.0]), Element(space, [0.0, 1.0])) == 0.0
    assert pairing(Functional(space, [1.0, 2.0]), Element(space, [3.0, 4.0])) == pytest.approx(11.0)
    weighted = PNormSpace(2, 3.0, [0.5, 0.5])
    assert pairing(Functional(weighted, [1.0, 1.0]), Element(weighted, [1.0, 1.0])) == pytest.approx(1.0)


def test_pairing_rejects_other_space():
    a, b = PNormSpace(2, 3.0), PNormSpace(3, 3.0)
    with pytest.raises(DimensionMismatchError):
        pairing(Functional(a, [1.0, 0.0]), Element(b, [0.0, 1.0, 0.0]))
    with pytest.raises(DimensionMismatchError):
        Element(a, [1.0, 2.0, 3.0])


def test_duality_map_examples():
    space = PNormSpace(2, 2.0)
    np.testing.assert_allclose(duality_map(space, Element(space, [3.0, 4.0])).coords, [3.0, 4.0])
    space = PNormSpace(2, 4.0)
    J = duality_map(space, Element(space, [1.0, 1.0]))
    np.testing.assert_allclose(J.coords, [2.0 ** -0.5, 2.0 ** -0.5], rtol=1e-14)
    assert not np.any(duality_map(space, Element.zeros(space)).coords)
    assert not np.any(inverse_duality_map(space, Functional.zeros(space)).coords)


def test_peaking_gap_examples():
    space = PNormSpace(2, 2.0)
    assert peaking_gap(Functional(space, [1.0, 0.0]), Element(space, [0.0, 1.0])) == pytest.approx(1.0)
    assert peaking_gap(Functional.zeros(space), Element(space, [1.0, 2.0])) == 0.0
    f = Element(PNormSpace(3, 1.5), [0.3, -2.0, 1.0])
    assert peaking_gap(duality_map(f.space, f), f) <= 1e-12


@pytest.mark.parametrize("p", [1.1, 1.5, 3.0])
def test_invalid_exponents_rejected(p):
    PNormSpace(2, p)
    for bad in (1.0, 0.5, float("inf"), float("nan")):
        with pytest.raises(InvalidExponentError):
            PNormSpace(2, bad)


def test_conjugate_space_swaps_exponents():
    space = PNormSpace(3, 4.0, [1.0, 2.0, 3.0])
    dual = conjugate_space(space)
    assert dual.p == pytest.approx(4.0 / 3.0)
    assert dual.q == pytest.approx(4.0)
    np.testing.assert_array_equal(dual.weights, space.weights)


def test_combine():
    space = PNormSpace(2, 3.0)
    L = combine([Functional(space, [1.0, 0.0]), Functional(space, [1.0, 2.0])], [2.0, -1.0])
    np.testing.assert_allclose(L.coords, [1.0, -2.0])


@settings(max_examples=1000, deadline=None)
@given(space_and_vector())
def test_duality_map_identities(case):
    space, f = case
    size = norm(space, f)
    J = duality_map(space, f)
    assert abs(pairing(J, f) - size ** 2) <= 1e-10 * (1.0 + size ** 2)
    assert abs(dual_norm(space, J) - size) <= 1e-10 * (1.0 + size)


@settings(max_examples=1000, deadline=None)
@given(space_and_vector())
def test_duality_round_trip(case):
    space, f = case
    back = inverse_duality_map(space, duality_map(space, f))
    assert norm(space, back - f) <= 1e-8 * (1.0 + norm(space, f))


@settings(max_examples=200, deadline=None)
@given(space_and_vector(), st.floats(min_value=-50.0, max_value=50.0, allow_nan=False))
def test_duality_map_homogeneous(case, factor):
    space, f = case
    scaled = duality_map(space, f.scaled(factor)).coords
    expected = factor * duality_map(space, f).coords
    scale = float(np.max(np.abs(expected), initial=0.0))
    np.testing.assert_allclose(scaled, expected, rtol=1e-12, atol=1e-12 * scale + 1e-300)


@settings(max_examples=300, deadline=None)
@given(space_and_vector(), st.lists(coordinates, min_size=16, max_size=16))
def test_holder_inequality(case, other):
    space, f = case
    L = Functional(space, other[: space.dim])
    assert dual_norm(space, L) * norm(space, f) - pairing(L, f) >= -1e-12 * (1.0 + dual_norm(space, L) * norm(space, f))
    assert peaking_gap(L, f) >= 0.0


def test_norms_match_summation_oracle(rng):
    for _ in range(200):
        dim = int(rng.integers(1, 17))
        p = float(rng.choice(EXPONENTS))
        weights = rng.uniform(0.1, 5.0, dim)
        coords = rng.standard_normal(dim) * 10.0
        space = PNormSpace(dim, p, weights)
        naive = float(np.sum(weights * np.abs(coords) ** p) ** (1.0 / p))
        naive_dual = float(np.sum(weights * np.abs(coords) ** space.q) ** (1.0 / space.q))
        assert norm(space, Element(space, coords)) == pytest.approx(naive, rel=1e-12)
        assert dual_norm(space, Functional(space, coords)) == pytest.approx(naive_dual, rel=1e-12)


@pytest.mark.parametrize("p", EXPONENTS)
def test_duality_map_sweep(rng, p):
    for _ in range(1000):
        dim = int(rng.integers(1, 17))
        space = PNormSpace(dim, p, rng.uniform(0.1, 10.0, dim))
        f = Element(space, rng.standard_normal(dim) * 10.0 ** rng.uniform(-3.0, 3.0))
        size = norm(space, f)
        J = duality_map(space, f)
        assert abs(pairing(J, f) - size ** 2) <= 1e-10 * size ** 2
        assert dual_norm(space, J) == pytest.approx(size, rel=1e-10)
        assert peaking_gap(J, f) <= 1e-10 * size ** 2
        back = inverse_duality_map(space, J)
        assert norm(space, back - f) <= 1e-8 * size


def test_complex_duality_map_pairs_to_real_norm(rng):
    for p in EXPONENTS:
        space = PNormSpace(5, p, field="complex")
        f = Element(space, rng.standard_normal(5) + 1j * rng.standard_normal(5))
        J = duality_map(space, f)
        value = pairing(J, f)
        assert abs(value.imag) <= 1e-12
        assert value.real == pytest.approx(norm(space, f) ** 2, rel=1e-12)
        assert dual_norm(space, J) == pytest.approx(norm(space, f), rel=1e-12)
        back = inverse_duality_map(space, J)
        np.testing.assert_allclose(back.coords, f.coords, rtol=1e-9, atol=1e-12)


def test_constructors_validate_and_cast():
    space = PNormSpace(3, 3.0, field=ScalarField.complex)
    f = element(space, [1, 2, 3])
    assert f.coords.dtype == complex
    assert element(space).is_zero()
    assert functional(space).is_zero()
    assert functional(space, [0.5, 0.0, 1j]).coords[2] == 1j
    with pytest.raises(DimensionMismatchError):
        element(space, [1.0, 2.0])
    with pytest.raises(DimensionMismatchError):
        functional(space, [1.0, 2.0, 3.0, 4.0])
