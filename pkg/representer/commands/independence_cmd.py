from pathlib import Path

from representer.constants import ExitCodes, SuccessMessages
from representer.enums import MonotoneKind
from representer.models.regulariser import MonotoneFn
from representer.schemas import IndependenceReportFile, ProblemFile
from representer.services.independence import independence_check
from representer.services.regularisers import make_admissible, parse_regulariser
from representer.utils.io import read_model, write_csv, write_model

NAME = "independence"

DEFAULT_REGS = ("identity", "square", "exp-minus-one")
_NAMED = {kind.value for kind in MonotoneKind if kind != MonotoneKind.table}


def register(subparsers, parents):
    parser = subparsers.add_parser(
        NAME,
        parents=parents,
        help="Check that minimisers agree across admissible regularisers",
        description=(
            "Each --reg is a profile name (identity, square, exp-minus-one) or an expression. "
            "Without --reg the three named profiles are used; blank values are dropped. "
            "Writes independence.json and independence.csv (a, b, deviation). Exit 3 when the "
            "maximum deviation exceeds --deviation-tol."
        ),
    )
    parser.add_argument("problem", help="problem JSON file")
    parser.add_argument("--reg", action="append", default=None, help="regulariser (repeatable)")
    parser.add_argument("--deviation-tol", type=float, default=1e-5)
    parser.set_defaults(handler=run)
    return parser


def build_regulariser(text: str):
    if text in _NAMED:
        return make_admissible(MonotoneFn(MonotoneKind(text)))
    return parse_regulariser(text)


def run(args) -> int:
    problem = read_model(args.problem, ProblemFile).to_problem()
    texts = DEFAULT_REGS if args.reg is None else [t for t in args.reg if t.strip()]
    regs = [build_regulariser(t) for t in texts]
    report = independence_check(problem, regs, tol=args.deviation_tol)

    out_dir = Path(args.out)
    write_model(out_dir / "independence.json", IndependenceReportFile.from_report(report))
    write_csv(out_dir / "independence.csv", ("a", "b", "deviation"), report.deviations)

    for a, b, d in report.deviations:
        print(f"{a:>16s} vs {b:<16s} {d:.3e}")
    print(f"max deviation {report.max_deviation:.3e} (tol {report.tolerance:g}): {'pass' if report.passed else 'fail'}")
    print(f"{SuccessMessages.REPORT_WRITTEN}: {out_dir / 'independence.json'}")
    return ExitCodes.OK if report.passed else ExitCodes.NON_CONVERGENCE
