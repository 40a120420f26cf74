from pathlib import Path

import numpy as np
import pytest

from representer.models import InterpolationProblem, PNormSpace
from representer.schemas import ProblemFile
from representer.utils.io import read_model

FIXTURES = Path(__file__).parent / "fixtures"

# f0 = t (1, 2^(1/3)) with t = 1 / (1 + 2^(4/3)) for p = 4, A = [(1, 2)], y = 1
P4_T = 1.0 / (1.0 + 2.0 ** (4.0 / 3.0))
P4_F0 = np.array([P4_T, P4_T * 2.0 ** (1.0 / 3.0)])


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def p4_problem() -> InterpolationProblem:
    return read_model(FIXTURES / "p4_single.json", ProblemFile).to_problem()


@pytest.fixture
def p3_problem() -> InterpolationProblem:
    return read_model(FIXTURES / "p3_two_constraints.json", ProblemFile).to_problem()


@pytest.fixture
def symmetric_problem() -> InterpolationProblem:
    return InterpolationProblem.from_matrix(PNormSpace(2, 3.0), [[1.0, 1.0]], [2.0])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def p4_closed_form() -> np.ndarray:
    return P4_F0.copy()
