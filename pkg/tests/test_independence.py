import numpy as np
import pytest

from representer.enums import MonotoneKind
from representer.errors import PreconditionError
from representer.models import InterpolationProblem, MonotoneFn, PNormSpace
from representer.services.duality import norm
from representer.services.independence import MIN_NORM_LABEL, independence_check
from representer.services.regularisers import make_admissible, parse_regulariser

PROFILES = [MonotoneKind.identity, MonotoneKind.square, MonotoneKind.exp_minus_one]


@pytest.fixture
def default_regs():
    return [make_admissible(MonotoneFn(kind)) for kind in PROFILES]


def test_fixture_solutions_coincide(p3_problem, default_regs):
    report = independence_check(p3_problem, default_regs)
    assert report.passed
    assert report.tolerance == 1e-5
    assert len(report.solutions) == 4
    assert report.solutions[0][0] == MIN_NORM_LABEL
    assert len(report.deviations) == 6
    assert all(d <= 1e-5 for _, _, d in report.deviations)
    assert report.max_deviation == max(d for _, _, d in report.deviations)


def test_symmetric_problem(symmetric_problem, default_regs):
    report = independence_check(symmetric_problem, default_regs)
    assert report.passed
    np.testing.assert_allclose(report.min_norm.coords, [1.0, 1.0], atol=1e-8)
    for _, f in report.solutions:
        np.testing.assert_allclose(f.coords, [1.0, 1.0], atol=1e-6)


def test_random_problems(rng, default_regs):
    space = PNormSpace(4, 3.0)
    for _ in range(50):
        problem = InterpolationProblem.from_matrix(space, rng.standard_normal((2, 4)), rng.uniform(-1.0, 1.0, 2))
        report = independence_check(problem, default_regs)
        assert report.max_deviation <= 1e-5
        assert norm(space, report.min_norm) <= min(norm(space, f) for _, f in report.solutions) + 1e-9


def test_tight_tolerance_fails(p3_problem, default_regs):
    report = independence_check(p3_problem, default_regs, tol=0.0)
    assert not report.passed


def test_preconditions(p3_problem):
    with pytest.raises(PreconditionError):
        independence_check(p3_problem, [])
    with pytest.raises(PreconditionError):
        independence_check(p3_problem, [parse_regulariser("coord(0)")])
    table = MonotoneFn(MonotoneKind.table, knots=(0.0, 1.0), values=(0.0, 1.0))
    with pytest.raises(PreconditionError):
        independence_check(p3_problem, [make_admissible(table)])
    with pytest.raises(PreconditionError):
        independence_check(p3_problem, [parse_regulariser("sqrt(norm - 1)")])
