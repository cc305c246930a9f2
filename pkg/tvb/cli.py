"""
Command-line entry point.

Every subcommand prints one JSON document with sorted keys and every number
written as a string. The exit status is 0 on success, 1 when the request is
malformed or violates a precondition, and 2 when a check that must pass fails.
"""
import argparse
import logging
import sys
from typing import List, NoReturn, Optional

from tvb.adapter import Tvb
from tvb.exceptions import ConfigurationError, PreconditionError, VerificationError
from tvb.handlers.utils import parse_weights, render_document
from tvb.positivity import DEFAULT_BOX_RADIUS
from tvb.types import Request

logger = logging.getLogger("tvb")

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]
REQUEST_KEYS = Request.__annotations__.keys()


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise ConfigurationError(message)


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-level", choices=LOG_LEVELS, default="WARNING")
    common.add_argument("--box-radius", type=int, default=DEFAULT_BOX_RADIUS)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--output", default=None, help="Write to a file.")
    return common


def _bundle() -> argparse.ArgumentParser:
    bundle = argparse.ArgumentParser(add_help=False)
    bundle.add_argument(
        "--a", type=parse_weights, required=True, help="Weights, e.g. 1,2,3,4."
    )
    bundle.add_argument("--variant", choices=["primal", "dual"], default="primal")
    return bundle


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="tvb",
        description="Exact computations for irreducible toric vector bundles.",
    )
    subparsers = parser.add_subparsers(
        dest="subcommand", required=True, parser_class=ArgumentParser
    )
    parents = [_common(), _bundle()]

    pair = subparsers.add_parser("pair", parents=parents, help="Classifying pair.")
    pair.add_argument("--nonneg", action="store_true")

    subparsers.add_parser("cox", parents=parents, help="Cox ideal generators.")

    initial = subparsers.add_parser(
        "initial", parents=parents, help="Initial ideals at facets."
    )
    initial.add_argument("--facet", type=int, default=None)
    initial.add_argument("--nonneg", action="store_true")
    initial.add_argument(
        "--flats",
        choices=["all_flats", "maximal_flags", "nonloop_hyperplane_complements"],
        default=None,
    )

    subparsers.add_parser(
        "verify-flag", parents=parents, help="Flag bundle relations under Psi."
    )

    wellpoised = subparsers.add_parser(
        "wellpoised", parents=parents, help="Tree-by-tree toric oracle check."
    )
    wellpoised.add_argument("--degree", type=int, default=4)

    nok = subparsers.add_parser(
        "nok", parents=parents, help="Newton-Okounkov matrix and bodies."
    )
    nok.add_argument("--flag", required=True, help="e.g. 'z01;z01,z12' or '0;0,1'.")
    nok.add_argument("--alpha", type=int, default=None)
    nok.add_argument("--beta", type=int, default=None)
    nok.add_argument("--hrep", action="store_true")
    nok.add_argument("--validity", action="store_true")
    nok.add_argument("--v", default=None, help="Flat weights, e.g. 1,2.")
    nok.add_argument("--degree", type=int, default=2)

    subparsers.add_parser("bpf", parents=parents, help="Basepoint-free monoid.")
    subparsers.add_parser("fujita", parents=parents, help="Fujita certificate.")

    trees = subparsers.add_parser(
        "trees", parents=[_common()], help="Labelled trivalent trees."
    )
    trees.add_argument("--leaves", type=int, default=5)
    return parser


def request_from(args: argparse.Namespace) -> Request:
    values = {key: value for key, value in vars(args).items() if key in REQUEST_KEYS}
    return Request(**values)  # type: ignore[typeddict-item]


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=args.log_level, stream=sys.stderr)
        adapter = Tvb(box_radius=args.box_radius, workers=args.workers)
        document = adapter(request_from(args))
        text = render_document(document, args.format)
    except PreconditionError as exc:
        print(exc, file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(exc, file=sys.stderr)
        return 2

    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
        logger.info("Wrote %s", args.output)
    else:
        sys.stdout.write(text)
    if document.get("status") == "FAIL":
        logger.warning("The %s check failed", args.subcommand)
        return 2
    return 0
