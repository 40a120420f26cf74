from pathlib import Path

from representer.constants import ExitCodes, SuccessMessages
from representer.enums import LossKind
from representer.models.problem import LossSpec
from representer.schemas import ProblemFile
from representer.services.minnorm import regularisation_path
from representer.utils.io import read_model, write_csv
from representer.commands.independence_cmd import build_regulariser

NAME = "path"
COLUMNS = ("lambda", "distance", "objective")


def register(subparsers, parents):
    parser = subparsers.add_parser(
        NAME,
        parents=parents,
        help="Regularisation path towards the minimal-norm interpolant",
        description=(
            "Solves E(Af, y) + lambda Omega(f) for each lambda (strictly decreasing) and writes "
            "path.csv with columns " + ", ".join(COLUMNS) + "; distance is ||f_lambda - f*||_p."
        ),
    )
    parser.add_argument("problem", help="problem JSON file")
    parser.add_argument("--lambdas", type=float, nargs="+", default=[1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6])
    parser.add_argument("--reg", default="square", help="profile name or expression (default: square)")
    parser.add_argument("--loss", choices=[k.value for k in LossKind], default=LossKind.square.value)
    parser.add_argument("--starts", type=int, default=0, help="random restarts per lambda (default: continuation only)")
    parser.set_defaults(handler=run)
    return parser


def run(args) -> int:
    problem = read_model(args.problem, ProblemFile).to_problem()
    reg = build_regulariser(args.reg)
    path = regularisation_path(
        problem, reg, LossSpec(LossKind(args.loss)), args.lambdas, seed=args.seed, starts=args.starts
    )
    rows = [(point.lam, point.distance, point.objective) for point in path]
    out = Path(args.out) / "path.csv"
    write_csv(out, COLUMNS, rows)
    for lam, distance, _ in rows:
        print(f"lambda={lam:.1e}  distance={distance:.3e}")
    print(f"{SuccessMessages.TABLE_WRITTEN}: {out}")
    return ExitCodes.OK
