import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from representer.commands.router import include_commands
from representer.config.settings import settings
from representer.constants import ExitCodes
from representer.errors import RepresenterError
from representer.utils.io import format_validation_error

logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(ExitCodes.USAGE)


def common_options() -> argparse.ArgumentParser:
    parent = ArgumentParser(add_help=False)
    parent.add_argument("--tol", type=float, default=settings.TOL, help="solver tolerance")
    parent.add_argument("--max-iter", type=int, default=settings.MAX_ITER)
    parent.add_argument("--seed", type=int, default=settings.SEED)
    parent.add_argument("--out", default=settings.OUT_DIR, help="output directory")
    parent.add_argument(
        "--log-level",
        default=settings.LOG_LEVEL,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
    )
    return parent


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="Minimal-norm interpolation and representer theorems in l^p spaces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.PROJECT_VERSION}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=ArgumentParser)
    subparsers.required = True
    include_commands(subparsers, [common_options()])
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args)
    except RepresenterError as exc:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code
    except ValidationError as exc:
        print(f"error: {format_validation_error(exc)}", file=sys.stderr)
        return ExitCodes.USAGE
