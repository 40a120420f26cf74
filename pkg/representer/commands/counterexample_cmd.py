from fractions import Fraction
from pathlib import Path

from representer.constants import ExitCodes, SuccessMessages
from representer.services.nonreflexive import span_peaking_scan
from representer.utils.io import write_csv

NAME = "counterexample"
COLUMNS = ("n", "c1", "c2", "sup_norm", "attaining_index", "gap")


def register(subparsers, parents):
    parser = subparsers.add_parser(
        NAME,
        parents=parents,
        help="Norming-index scan of the l^1 counterexample",
        description=(
            "Writes counterexample.csv with columns " + ", ".join(COLUMNS) + "; indices are 1-based. "
            "Exit 3 if the norming index ever stays below n - 1."
        ),
    )
    parser.add_argument("--n", dest="n_list", type=int, nargs="+", default=[4, 10, 100])
    parser.add_argument("--c1", type=Fraction, default=Fraction(1))
    parser.add_argument("--c2", type=Fraction, default=Fraction(0))
    parser.set_defaults(handler=run)
    return parser


def run(args) -> int:
    report = span_peaking_scan(args.c1, args.c2, args.n_list)
    rows = [
        (
            row.n,
            float(row.c1),
            float(row.c2),
            float(row.analysis.sup_norm),
            row.analysis.attaining_index,
            float(row.analysis.gap_to_limit),
        )
        for row in report.rows
    ]
    out = Path(args.out) / "counterexample.csv"
    write_csv(out, COLUMNS, rows)
    for row in report.rows:
        print(f"n={row.n:6d}  sup={row.analysis.sup_norm}  index={row.analysis.attaining_index}")
    print(f"{SuccessMessages.TABLE_WRITTEN}: {out}")
    return ExitCodes.OK if report.escaping else ExitCodes.NON_CONVERGENCE
