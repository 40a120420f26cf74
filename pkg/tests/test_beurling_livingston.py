import numpy as np
import pytest

from representer.enums import ScalarField
from representer.errors import PreconditionError
from representer.models import Element, Functional, InterpolationProblem, PNormSpace
from representer.services.beurling_livingston import beurling_livingston_witness, span_witness
from representer.services.duality import duality_map, norm, pairing
from representer.services.minnorm import solve_min_norm


def e(space, j):
    coords = np.zeros(space.dim)
    coords[j] = 1.0
    return Element(space, coords)


def G(space, basis, x0, u0, a):
    z = Element(space, sum(ak * w.coords for ak, w in zip(a, basis)))
    return 0.5 * norm(space, x0 + z) ** 2 + float(np.real(pairing(u0, z)))


def test_orthogonal_start_needs_no_move():
    space = PNormSpace(2, 2.0)
    witness = beurling_livingston_witness(space, [e(space, 0)], e(space, 1), Functional.zeros(space), tol=1e-11)
    np.testing.assert_allclose(witness.z.coords, [0.0, 0.0], atol=1e-12)
    np.testing.assert_allclose(witness.L.coords, [0.0, 1.0], atol=1e-12)


def test_shift_moves_along_subspace():
    space = PNormSpace(2, 2.0)
    u0 = Functional(space, [1.0, 0.0])
    witness = beurling_livingston_witness(space, [e(space, 0)], e(space, 1), u0, tol=1e-11)
    np.testing.assert_allclose(witness.z.coords, [-1.0, 0.0], atol=1e-10)
    np.testing.assert_allclose(witness.L.coords, [-1.0, 1.0], atol=1e-10)
    assert witness.annihilator_residual <= 1e-11


def test_tiny_basis_vector_is_independent():
    space = PNormSpace(2, 2.0)
    u0 = Functional(space, [1.0, 0.0])
    witness = beurling_livingston_witness(space, [e(space, 0).scaled(1e-11)], e(space, 1), u0, tol=1e-9)
    np.testing.assert_allclose(witness.z.coords, [-1.0, 0.0], atol=1e-8)
    np.testing.assert_allclose(witness.L.coords, [-1.0, 1.0], atol=1e-8)
    np.testing.assert_allclose(np.real(witness.coefficients), [-1e11], rtol=1e-8)


def test_empty_subspace_returns_duality_map():
    space = PNormSpace(3, 3.0)
    x0 = Element(space, [1.0, -2.0, 0.5])
    witness = beurling_livingston_witness(space, [], x0, Functional.zeros(space))
    assert witness.z.is_zero()
    np.testing.assert_allclose(witness.L.coords, duality_map(space, x0).coords)
    assert witness.iterations == 0


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
def test_random_instances(rng, p):
    for _ in range(34):
        n = int(rng.integers(2, 9))
        k = int(rng.integers(1, min(4, n - 1) + 1))
        space = PNormSpace(n, p)
        basis = [Element(space, rng.standard_normal(n)) for _ in range(k)]
        x0 = Element(space, rng.standard_normal(n))
        u0 = Functional(space, rng.standard_normal(n))
        witness = beurling_livingston_witness(space, basis, x0, u0)
        assert witness.membership_residual <= 1e-6
        assert witness.annihilator_residual <= 1e-6
        shifted = witness.L + u0
        for w in basis:
            assert abs(pairing(shifted, w)) <= 1e-6 * norm(space, w)
        np.testing.assert_allclose(witness.L.coords, duality_map(space, x0 + witness.z).coords, atol=1e-12)


def test_witness_is_stationary(rng):
    space = PNormSpace(5, 3.0)
    basis = [Element(space, rng.standard_normal(5)) for _ in range(2)]
    x0 = Element(space, rng.standard_normal(5))
    u0 = Functional(space, rng.standard_normal(5))
    witness = beurling_livingston_witness(space, basis, x0, u0, tol=1e-9)
    a = np.real(witness.coefficients)
    h = 1e-6
    for j in range(2):
        step = np.zeros(2)
        step[j] = h
        slope = (G(space, basis, x0, u0, a + step) - G(space, basis, x0, u0, a - step)) / (2 * h)
        assert abs(slope) <= 1e-5


def test_complex_space(rng):
    space = PNormSpace(4, 3.0, field=ScalarField.complex)
    basis = [Element(space, rng.standard_normal(4) + 1j * rng.standard_normal(4)) for _ in range(2)]
    x0 = Element(space, rng.standard_normal(4) + 1j * rng.standard_normal(4))
    u0 = Functional(space, rng.standard_normal(4) + 1j * rng.standard_normal(4))
    witness = beurling_livingston_witness(space, basis, x0, u0)
    assert witness.coefficients.dtype.kind == "c"
    assert witness.annihilator_residual <= 1e-6
    assert witness.membership_residual <= 1e-6


def test_dependent_basis_is_rejected():
    space = PNormSpace(3, 3.0)
    w = Element(space, [1.0, 2.0, 0.0])
    with pytest.raises(PreconditionError):
        beurling_livingston_witness(space, [w, w.scaled(2.0)], e(space, 2), Functional.zeros(space))


def test_span_witness_recovers_min_norm(p3_problem):
    f, *_ = np.linalg.lstsq(p3_problem.matrix, p3_problem.targets, rcond=None)
    result = span_witness(p3_problem, Element(p3_problem.space, f))
    expected = solve_min_norm(p3_problem).f0
    assert norm(p3_problem.space, result.f_hat - expected) <= 1e-5
    np.testing.assert_allclose(p3_problem.matrix @ result.f_hat.coords, p3_problem.targets, atol=1e-9)
    np.testing.assert_allclose(p3_problem.matrix.T @ result.c, result.witness.L.coords, atol=1e-6)


def test_span_witness_from_vertex_start():
    space = PNormSpace(3, 4.0)
    problem = InterpolationProblem.from_matrix(space, [[1.0, 1.0, 1.0]], [3.0])
    result = span_witness(problem, Element(space, [3.0, 0.0, 0.0]))
    np.testing.assert_allclose(result.f_hat.coords, [1.0, 1.0, 1.0], atol=1e-5)
