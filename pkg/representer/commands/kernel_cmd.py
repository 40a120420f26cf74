from pathlib import Path

import numpy as np

from representer.constants import ExitCodes, SuccessMessages
from representer.services.rkbs import build_rkbs, kernel
from representer.utils.io import write_csv

NAME = "kernel"
COLUMNS = ("x", "y", "K", "sinc", "abs_error")


def register(subparsers, parents):
    parser = subparsers.add_parser(
        NAME,
        parents=parents,
        help="Tabulate the quadrature kernel against sinc",
        description="Writes kernel.csv with columns " + ", ".join(COLUMNS) + " for random pairs in [-R, R]^2.",
    )
    parser.add_argument("--nodes", type=int, default=512)
    parser.add_argument("--p", type=float, default=2.0)
    parser.add_argument("--pairs", type=int, default=100)
    parser.add_argument("--range", dest="radius", type=float, default=4.0)
    parser.set_defaults(handler=run)
    return parser


def kernel_table(nodes: int, p: float, pairs: int, radius: float, seed: int):
    rkbs = build_rkbs(p, nodes)
    rng = np.random.default_rng(seed)
    xs = rng.uniform(-radius, radius, pairs)
    ys = rng.uniform(-radius, radius, pairs)
    K = np.array([kernel(rkbs, x, y) for x, y in zip(xs, ys)])
    exact = np.sinc(xs - ys)
    return [(float(x), float(y), float(k), float(s), float(abs(k - s))) for x, y, k, s in zip(xs, ys, K, exact)]


def run(args) -> int:
    rows = kernel_table(args.nodes, args.p, args.pairs, args.radius, args.seed)
    out = Path(args.out) / "kernel.csv"
    write_csv(out, COLUMNS, rows)
    worst = max((row[-1] for row in rows), default=0.0)
    print(f"N = {args.nodes}, {len(rows)} pairs, max |K - sinc| = {worst:.3e}")
    print(f"{SuccessMessages.TABLE_WRITTEN}: {out}")
    return ExitCodes.OK
