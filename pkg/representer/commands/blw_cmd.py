from pathlib import Path

import numpy as np

from representer.constants import ExitCodes, SuccessMessages
from representer.models.spaces import Element, Functional, PNormSpace
from representer.services.beurling_livingston import beurling_livingston_witness
from representer.services.duality import norm
from representer.utils.io import write_csv

NAME = "blw"
COLUMNS = ("instance", "norm_x0_plus_z", "membership_residual", "annihilator_residual", "iterations")


def register(subparsers, parents):
    parser = subparsers.add_parser(
        NAME,
        parents=parents,
        help="Duality-map witnesses J(x0 + z) in W° - u0 on random instances",
        description="Writes blw.csv with columns " + ", ".join(COLUMNS) + ".",
    )
    parser.add_argument("--dim", type=int, default=6)
    parser.add_argument("--w-dim", type=int, default=3)
    parser.add_argument("--p", type=float, default=3.0)
    parser.add_argument("--instances", type=int, default=10)
    parser.add_argument("--witness-tol", type=float, default=1e-6)
    parser.set_defaults(handler=run)
    return parser


def random_instance(rng: np.random.Generator, space: PNormSpace, w_dim: int):
    basis = [Element(space, rng.standard_normal(space.dim)) for _ in range(w_dim)]
    x0 = Element(space, rng.standard_normal(space.dim))
    u0 = Functional(space, rng.standard_normal(space.dim))
    return basis, x0, u0


def run(args) -> int:
    space = PNormSpace(args.dim, args.p)
    rng = np.random.default_rng(args.seed)
    rows = []
    for k in range(args.instances):
        basis, x0, u0 = random_instance(rng, space, args.w_dim)
        witness = beurling_livingston_witness(space, basis, x0, u0, tol=args.witness_tol, max_iter=args.max_iter)
        rows.append(
            (
                k,
                norm(space, x0 + witness.z),
                witness.membership_residual,
                witness.annihilator_residual,
                witness.iterations,
            )
        )
    out = Path(args.out) / "blw.csv"
    write_csv(out, COLUMNS, rows)
    worst = max((max(r[2], r[3]) for r in rows), default=0.0)
    print(f"{len(rows)} witnesses, worst residual {worst:.3e}")
    print(f"{SuccessMessages.TABLE_WRITTEN}: {out}")
    return ExitCodes.OK
