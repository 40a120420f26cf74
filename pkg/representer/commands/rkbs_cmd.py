from pathlib import Path

import numpy as np

from representer.constants import ErrorMessages, ExitCodes, SuccessMessages
from representer.errors import PreconditionError
from representer.schemas import Residuals, RkbsCertificateFile
from representer.services.rkbs import build_rkbs, evaluate, interpolate
from representer.utils.io import write_csv, write_model

NAME = "rkbs-interp"


def register(subparsers, parents):
    parser = subparsers.add_parser(
        NAME,
        parents=parents,
        help="Minimal-norm interpolation in the Fourier RKBS",
        description=(
            "Writes interpolant.csv with columns x, f(x) (real part) on the export grid and "
            "interpolant.certificate.json with u, the coefficients c over Phi*(x_i) and the residuals."
        ),
    )
    parser.add_argument("--x", dest="points", type=float, nargs="+", required=True)
    parser.add_argument("--y", dest="values", type=float, nargs="+", required=True)
    parser.add_argument("--p", type=float, default=2.0)
    parser.add_argument("--nodes", type=int, default=None)
    parser.add_argument("--grid", type=float, nargs=3, metavar=("START", "STOP", "COUNT"), default=(-3.0, 3.0, 121))
    parser.set_defaults(handler=run)
    return parser


def run(args) -> int:
    if len(args.points) != len(args.values):
        raise PreconditionError(f"{ErrorMessages.TARGET_LENGTH}: {len(args.points)} points, {len(args.values)} values")
    rkbs = build_rkbs(args.p, args.nodes)
    result = interpolate(rkbs, args.points, args.values, tol=args.tol, max_iter=args.max_iter)

    start, stop, count = args.grid
    xs = np.linspace(start, stop, int(count))
    fx = np.real(evaluate(result.function, xs))
    out_dir = Path(args.out)
    write_csv(out_dir / "interpolant.csv", ("x", "f(x)"), zip(xs.tolist(), fx.tolist()))

    solution = result.solution
    write_model(
        out_dir / "interpolant.certificate.json",
        RkbsCertificateFile(
            p=rkbs.p,
            nodes=rkbs.n,
            points=result.points.tolist(),
            values=result.values.tolist(),
            u=RkbsCertificateFile.pairs(result.function.u),
            c=RkbsCertificateFile.pairs(solution.c),
            residuals=Residuals(**solution.residuals),
            max_imag=result.max_imag,
            iterations=solution.iterations,
            tolerance=solution.tolerance,
        ),
    )
    for key, value in solution.residuals.items():
        print(f"{key:11s} = {value:.3e}")
    print(f"max |Im f| on check grid = {result.max_imag:.3e}")
    print(f"{SuccessMessages.TABLE_WRITTEN}: {out_dir / 'interpolant.csv'}")
    return ExitCodes.OK
