import numpy as np
import pytest

from representer.enums import MonotoneKind
from representer.errors import InfeasibleError, NullSpaceTooLargeError, PreconditionError
from representer.models import Element, InterpolationProblem, LossSpec, MonotoneFn, PNormSpace, RepresenterSolution
from representer.services import minnorm
from representer.services.duality import norm
from representer.services.regularisers import make_admissible
from representer.utils.numerics import central_gradient

SQUARE = make_admissible(MonotoneFn(MonotoneKind.square))


def problem(p, matrix, targets, dim=None):
    matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
    return InterpolationProblem.from_matrix(PNormSpace(dim or matrix.shape[1], p), matrix, targets)


def random_problem(rng, p, n, m):
    return problem(p, rng.standard_normal((m, n)), rng.uniform(-1.0, 1.0, m))


@pytest.mark.parametrize("p", [1.3, 2.0, 3.0, 5.0])
def test_symmetric_single_constraint(p):
    solution = minnorm.solve_min_norm(problem(p, [[1.0, 1.0]], [2.0]))
    np.testing.assert_allclose(solution.f0.coords, [1.0, 1.0], atol=1e-8)


def test_p2_matches_normal_equations():
    solution = minnorm.solve_min_norm(problem(2.0, [[1.0, 2.0]], [1.0]))
    np.testing.assert_allclose(solution.f0.coords, [0.2, 0.4], atol=1e-10)
    np.testing.assert_allclose(solution.c, [0.2], atol=1e-10)


def test_p4_closed_form(p4_problem, p4_closed_form):
    solution = minnorm.solve_min_norm(p4_problem)
    np.testing.assert_allclose(solution.f0.coords, p4_closed_form, atol=1e-8)
    np.testing.assert_allclose(solution.f0.coords, [0.28414, 0.35800], atol=1e-5)
    assert max(solution.residuals.values()) <= 1e-9
    assert minnorm.verify_representer(solution, p4_problem).passed


def test_zero_targets_give_zero():
    solution = minnorm.solve_min_norm(problem(3.0, [[1.0, 2.0, 3.0]], [0.0]))
    assert solution.f0.is_zero()
    assert not np.any(solution.c)
    assert minnorm.verify_representer(solution, problem(3.0, [[1.0, 2.0, 3.0]], [0.0])).passed


def test_inconsistent_constraints_are_infeasible():
    with pytest.raises(InfeasibleError) as exc:
        minnorm.solve_min_norm(problem(2.0, [[1.0, 1.0], [1.0, 1.0]], [1.0, 2.0]))
    assert exc.value.exit_code == 2


def test_consistent_dependent_rows_are_dropped():
    prob = problem(3.0, [[1.0, 1.0], [2.0, 2.0]], [1.0, 2.0])
    info = minnorm.check_feasibility(prob)
    assert info.rank == 1
    assert len(info.independent_rows) == 1
    solution = minnorm.solve_min_norm(prob)
    np.testing.assert_allclose(solution.f0.coords, [0.5, 0.5], atol=1e-9)
    assert np.count_nonzero(solution.c) == 1


def test_problem_validation():
    space = PNormSpace(2, 2.0)
    with pytest.raises(PreconditionError):
        InterpolationProblem(space, (), [])
    with pytest.raises(PreconditionError):
        InterpolationProblem.from_matrix(space, [[0.0, 0.0]], [1.0])
    with pytest.raises(PreconditionError):
        InterpolationProblem.from_matrix(space, [[1.0, 0.0]], [1.0, 2.0])


def test_verify_rejects_null_space_perturbation():
    prob = problem(2.0, [[1.0, 2.0]], [1.0])
    solution = minnorm.solve_min_norm(prob)
    moved = RepresenterSolution(
        f0=solution.f0 + Element(prob.space, [0.2, -0.1]),
        c=solution.c,
        feasibility_residual=0.0,
        peaking_residual=0.0,
        norm_match_residual=0.0,
    )
    report = minnorm.verify_representer(moved, prob, tol=1e-9)
    assert report.feasibility_ok
    assert report.peaking_residual > 1e-3
    assert not report.passed


def test_verify_zero_solution():
    prob = problem(3.0, [[1.0, -1.0]], [0.0])
    zero = RepresenterSolution(Element.zeros(prob.space), np.zeros(1), 0.0, 0.0, 0.0)
    assert minnorm.verify_representer(zero, prob).passed


def test_solver_agrees_with_oracle(rng):
    for _ in range(200):
        n = int(rng.integers(2, 7))
        m = int(rng.integers(max(1, n - 3), min(3, n - 1) + 1))
        p = float(rng.choice([1.3, 2.0, 3.0, 5.0]))
        prob = random_problem(rng, p, n, m)
        solution = minnorm.solve_min_norm(prob)
        assert max(solution.residuals.values()) <= 1e-9
        oracle = minnorm.oracle_min_norm(prob)
        assert norm(prob.space, solution.f0 - oracle) <= 1e-4


def test_oracle_matches_pseudo_inverse_at_p2(rng):
    for _ in range(10):
        prob = random_problem(rng, 2.0, 4, 2)
        expected = np.linalg.pinv(prob.matrix) @ prob.targets
        np.testing.assert_allclose(minnorm.oracle_min_norm(prob).coords, expected, atol=1e-6)


def test_oracle_zero_targets():
    prob = problem(3.0, [[1.0, 2.0, -1.0]], [0.0])
    assert norm(prob.space, minnorm.oracle_min_norm(prob)) <= 1e-8


def test_oracle_rejects_large_null_space():
    with pytest.raises(NullSpaceTooLargeError):
        minnorm.oracle_min_norm(problem(3.0, [[1.0] * 6], [1.0]))


def test_dual_objective_is_concave(rng):
    prob = random_problem(rng, 3.0, 5, 3)
    for _ in range(100):
        c1, c2 = rng.standard_normal(3), rng.standard_normal(3)
        t = float(rng.uniform(0.0, 1.0))
        mixed = minnorm.dual_objective(prob, t * c1 + (1 - t) * c2)
        assert mixed >= t * minnorm.dual_objective(prob, c1) + (1 - t) * minnorm.dual_objective(prob, c2) - 1e-10


@pytest.mark.parametrize("p", [1.5, 2.0, 4.0])
def test_dual_gradient_matches_finite_differences(rng, p):
    prob = random_problem(rng, p, 5, 2)
    for _ in range(20):
        c = rng.standard_normal(2)
        numeric = central_gradient(lambda x: minnorm.dual_objective(prob, x), c)
        analytic = minnorm.dual_gradient(prob, c)
        np.testing.assert_allclose(numeric, analytic, rtol=1e-5, atol=1e-7)


def test_solution_scales_with_targets(rng):
    prob = random_problem(rng, 3.0, 5, 2)
    base = minnorm.solve_min_norm(prob).f0.coords
    for s in (0.01, 3.0, 250.0):
        scaled = minnorm.solve_min_norm(prob.with_targets(s * prob.targets)).f0.coords
        np.testing.assert_allclose(scaled, s * base, rtol=1e-8, atol=1e-12 * s)


def test_complex_problem_certificate(rng):
    space = PNormSpace(6, 3.0, field="complex")
    matrix = rng.standard_normal((2, 6)) + 1j * rng.standard_normal((2, 6))
    prob = InterpolationProblem.from_matrix(space, matrix, [1.0 + 0.5j, -0.3j])
    solution = minnorm.solve_min_norm(prob)
    assert minnorm.verify_representer(solution, prob).passed


def test_regularised_matches_ridge_closed_form():
    prob = problem(2.0, [[1.0, 0.5, -1.0], [0.0, 2.0, 1.0]], [1.0, 2.0])
    lam = 0.1
    A, y = prob.matrix, prob.targets
    expected = A.T @ np.linalg.solve(A @ A.T + lam * np.eye(2), y)
    solution = minnorm.solve_regularised(prob, SQUARE, lam, LossSpec(), seed=0)
    np.testing.assert_allclose(solution.f.coords, expected, atol=1e-6)


def test_regularised_large_lambda_shrinks_to_zero():
    prob = problem(3.0, [[1.0, 2.0]], [1.0])
    solution = minnorm.solve_regularised(prob, SQUARE, 1e6, seed=0)
    assert norm(prob.space, solution.f) <= 1e-5
    assert solution.objective == pytest.approx(1.0, rel=1e-4)


def test_regularised_zero_targets():
    prob = problem(3.0, [[1.0, 2.0], [0.5, -1.0]], [0.0, 0.0])
    solution = minnorm.solve_regularised(prob, SQUARE, 0.5, seed=0)
    assert norm(prob.space, solution.f) <= 1e-6


def test_regularised_solution_is_in_representer_form():
    prob = problem(3.0, [[1.0, 2.0, 0.0, 1.0], [0.0, 1.0, -1.0, 2.0]], [1.0, -0.5])
    solution = minnorm.solve_regularised(prob, SQUARE, 0.1, seed=0)
    _, residual = minnorm.representer_span_residual(prob, solution.f)
    assert residual <= 1e-5


def test_regularised_rejects_nonpositive_lambda():
    with pytest.raises(PreconditionError):
        minnorm.solve_regularised(problem(2.0, [[1.0, 1.0]], [1.0]), SQUARE, 0.0)


def test_regularisation_path_approaches_interpolant():
    prob = problem(2.0, [[1.0, 0.5, -1.0], [0.0, 2.0, 1.0]], [1.0, 2.0])
    path = minnorm.regularisation_path(prob, SQUARE, LossSpec(), seed=0)
    distances = [point.distance for point in path]
    assert [point.lam for point in path] == [1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6]
    assert distances[-1] <= 1e-3
    assert all(b <= a + 1e-9 for a, b in zip(distances, distances[1:]))


def test_regularisation_path_on_symmetric_ray():
    prob = problem(3.0, [[1.0, 1.0]], [2.0])
    for point in minnorm.regularisation_path(prob, SQUARE, lambdas=(1e-1, 1e-3), seed=0):
        assert point.f.coords[0] == pytest.approx(point.f.coords[1], abs=1e-6)


def test_regularisation_path_requires_decreasing_lambdas():
    prob = problem(2.0, [[1.0, 1.0]], [1.0])
    with pytest.raises(PreconditionError):
        minnorm.regularisation_path(prob, SQUARE, lambdas=(1e-3, 1e-2))


@pytest.mark.parametrize("p", [2.0, 3.0])
def test_tiny_functionals_keep_full_rank(p):
    solution = minnorm.solve_min_norm(problem(p, [[1e-11, 1e-11]], [2e-11]))
    np.testing.assert_allclose(solution.f0.coords, [1.0, 1.0], atol=1e-8)
    assert solution.meta["rank"] == 1
    assert minnorm.check_feasibility(problem(p, [[1e-11, 1e-11]], [1.0])).rank == 1


def test_solution_is_invariant_under_row_scaling(p3_problem):
    scaled = InterpolationProblem.from_matrix(p3_problem.space, p3_problem.matrix * 1e-11, p3_problem.targets * 1e-11)
    expected = minnorm.solve_min_norm(p3_problem)
    solution = minnorm.solve_min_norm(scaled)
    np.testing.assert_allclose(solution.f0.coords, expected.f0.coords, atol=1e-7)
    np.testing.assert_allclose(solution.c * 1e-11, expected.c, rtol=1e-6, atol=1e-9)
