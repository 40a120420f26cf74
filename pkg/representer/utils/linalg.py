import numpy as np
import scipy.linalg

from representer.constants import ErrorMessages, Tolerances
from representer.errors import InfeasibleError
from representer.models.problem import FeasibilityInfo


def orthogonal_decomposition(operator: np.ndarray, targets: np.ndarray, rank_tol: float = Tolerances.RANK) -> FeasibilityInfo:
    """
    Rank-revealing decomposition of the constraint operator.

    Returns the numerical rank, a maximal set of independent rows (pivoted QR
    of the transpose), the minimum 2-norm particular solution and an
    orthonormal null-space basis. Raises InfeasibleError when the targets are
    inconsistent on dependent rows.
    """
    operator = np.atleast_2d(operator)
    targets = np.asarray(targets)
    U, s, Vh = scipy.linalg.svd(operator, full_matrices=True)
    scale = s[0] if s.size else 0.0
    rank = int(np.sum(s > rank_tol * scale)) if scale > 0 else 0

    coeffs = (U[:, :rank].conj().T @ targets) / s[:rank]
    particular = Vh[:rank].conj().T @ coeffs

    mismatch = np.max(np.abs(operator @ particular - targets), initial=0.0)
    if mismatch > 1e-8 * (1.0 + np.max(np.abs(targets), initial=0.0)):
        raise InfeasibleError(f"{ErrorMessages.INFEASIBLE}: residual {mismatch:.3e} after projection")

    _, _, pivots = scipy.linalg.qr(operator.T, mode="economic", pivoting=True)
    independent = sorted(int(i) for i in pivots[:rank])
    null_basis = Vh[rank:].conj().T
    return FeasibilityInfo(rank=rank, independent_rows=independent, particular=particular, null_basis=null_basis)
