import logging
from pathlib import Path

from representer.constants import ErrorMessages, ExitCodes, SuccessMessages, Tolerances
from representer.errors import SchemaError
from representer.schemas import CertificateFile, ProblemFile
from representer.services.duality import norm
from representer.services.minnorm import solve_min_norm, verify_representer
from representer.utils.io import read_model, write_model

logger = logging.getLogger(__name__)

NAME = "solve"


def register(subparsers, parents):
    parser = subparsers.add_parser(
        NAME,
        parents=parents,
        help="Minimal-norm interpolation with a dual certificate",
        description=(
            "Solves inf ||f|| subject to L_i(f) = y_i and writes <problem>.certificate.json "
            "with f0, c and the feasibility/peaking/norm_match residuals."
        ),
    )
    parser.add_argument("problem", help="problem JSON file")
    parser.add_argument(
        "--verify-only",
        metavar="CERT",
        default=None,
        help="recompute the residuals of an existing certificate instead of solving (exit 3 on failure)",
    )
    parser.set_defaults(handler=run)
    return parser


def _verify(args, problem) -> int:
    cert = read_model(args.verify_only, CertificateFile)
    if len(cert.f0) != problem.space.dim:
        raise SchemaError(f"f0: {ErrorMessages.DIMENSION_MISMATCH}, expected {problem.space.dim}, got {len(cert.f0)}")
    if len(cert.c) != problem.m:
        raise SchemaError(f"c: {ErrorMessages.DIMENSION_MISMATCH}, expected {problem.m}, got {len(cert.c)}")

    report = verify_representer(cert.to_solution(problem.space), problem, args.tol)
    recomputed = {
        "feasibility": report.feasibility_residual,
        "peaking": report.peaking_residual,
        "norm_match": report.norm_match_residual,
    }
    stored = cert.stored_residuals()
    mismatch = max(abs(stored[key] - recomputed[key]) for key in recomputed)
    for key, value in recomputed.items():
        print(f"{key:12s} stored {stored[key]:.3e}  recomputed {value:.3e}")

    if mismatch > Tolerances.CERTIFICATE_MATCH:
        print(f"{ErrorMessages.CERTIFICATE_MISMATCH} (max difference {mismatch:.3e})")
        return ExitCodes.NON_CONVERGENCE
    if not report.passed:
        print(f"{ErrorMessages.CERTIFICATE_FAILED} at tol {args.tol:g}")
        return ExitCodes.NON_CONVERGENCE
    print(SuccessMessages.CERTIFICATE_VERIFIED)
    return ExitCodes.OK


def run(args) -> int:
    problem = read_model(args.problem, ProblemFile).to_problem()
    if args.verify_only:
        return _verify(args, problem)

    solution = solve_min_norm(problem, tol=args.tol, max_iter=args.max_iter)
    out = Path(args.out) / f"{Path(args.problem).stem}.certificate.json"
    write_model(out, CertificateFile.from_solution(solution, args.seed))

    print(f"||f0||      = {norm(problem.space, solution.f0):.12g}")
    print(f"iterations  = {solution.iterations}")
    for key, value in solution.residuals.items():
        print(f"{key:11s} = {value:.3e}")
    print(f"{SuccessMessages.CERTIFICATE_WRITTEN}: {out}")
    return ExitCodes.OK
