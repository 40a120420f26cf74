from pathlib import Path

from representer.config.settings import settings
from representer.constants import ExitCodes, SuccessMessages
from representer.enums import Verdict
from representer.models.spaces import PNormSpace
from representer.schemas import AdmissibilityReportFile
from representer.services import admissibility
from representer.services.mollifier import mollified_regulariser
from representer.services.regularisers import parse_regulariser
from representer.utils.io import write_model

NAME = "admissibility"


def register(subparsers, parents):
    parser = subparsers.add_parser(
        NAME,
        parents=parents,
        help="Property-test a regulariser expression for admissibility",
        description=(
            "Samples tangent directions and equal-norm pairs; writes admissibility.json. "
            "Exit 0 when no counterexample is found, exit 4 otherwise."
        ),
    )
    parser.add_argument("regulariser", help='expression over norm and coord(i), e.g. "norm^2"')
    parser.add_argument("--dim", type=int, default=2)
    parser.add_argument("--p", type=float, default=2.0)
    parser.add_argument("--samples", type=int, default=10000)
    parser.add_argument("--admissibility-tol", type=float, default=settings.ADMISSIBILITY_TOL)
    parser.add_argument(
        "--mollify", action="store_true", help="test the radially mollified regulariser instead"
    )
    parser.set_defaults(handler=run)
    return parser


def run(args) -> int:
    spec = parse_regulariser(args.regulariser)
    if args.mollify:
        spec = mollified_regulariser(spec)
    space = PNormSpace(args.dim, args.p)
    tangential = admissibility.test_tangential_monotonicity(
        spec, space, args.samples, seed=args.seed, tol=args.admissibility_tol
    )
    radial = admissibility.test_radial_symmetry(spec, space, args.samples, seed=args.seed, tol=args.admissibility_tol)

    out = Path(args.out) / "admissibility.json"
    write_model(out, AdmissibilityReportFile.from_reports(spec.source, spec.claims_admissible, space, tangential, radial))

    print(f"regulariser  {spec.source}  (claims admissible: {spec.claims_admissible})")
    print(f"tangential   {tangential.verdict.value} [{tangential.evidence.value}] after {tangential.samples_tested} samples")
    print(f"radial       {radial.verdict.value} after {radial.samples_tested} samples")
    print(f"{SuccessMessages.REPORT_WRITTEN}: {out}")
    if Verdict.counterexample in (tangential.verdict, radial.verdict):
        return ExitCodes.COUNTEREXAMPLE
    return ExitCodes.OK
