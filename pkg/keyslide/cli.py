"""
Command-line interface for keyslide.

    python main.py expand 0,0,3,2 --format latex
    python main.py classify 1,1,3,3
    python main.py sweep --len-max 4 --entry-max 3 --workers 4

Exit codes: 0 success, 1 a verification came out false, 2 usage error,
3 an enumeration bound was exceeded. Results go to standard output, log
records and diagnostics to standard error.
"""

import argparse
import logging
import sys
from typing import Callable, Optional, Sequence

from .classify import classify
from .composition import WeakComposition
from .config import Bounds, load_bounds
from .exceptions import BoundExceededError, CompositionParseError, KeySlideError
from .expansion import expansion_identity, slide_expansion
from .formats import (
    OUTPUT_FORMATS,
    BaseFormatter,
    ExpansionFormatter,
    LimitFormatter,
    PolynomialFormatter,
    ReportFormatter,
    SweepFormatter,
    TableauFormatter,
    VerifyFormatter,
    get_default_format,
)
from .oracle import LimitVerdict, brute_force_mf_universe, slide_limit_check, stable_limit_check
from .polynomial import key_polynomial, slide_polynomial
from .tableau import enumerate_kohnert, enumerate_qkt

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BOUND = 3

CommandResult = tuple[BaseFormatter, int]


def _composition_arg(text: str) -> WeakComposition:
    try:
        return WeakComposition.parse(text)
    except CompositionParseError as e:
        raise argparse.ArgumentTypeError(str(e))


def _cmd_expand(args: argparse.Namespace, bounds: Bounds) -> CommandResult:
    return ExpansionFormatter(slide_expansion(args.index, bounds)), EXIT_OK


def _cmd_key(args: argparse.Namespace, bounds: Bounds) -> CommandResult:
    return PolynomialFormatter(args.index, key_polynomial(args.index, bounds), "key"), EXIT_OK


def _cmd_slide(args: argparse.Namespace, bounds: Bounds) -> CommandResult:
    return PolynomialFormatter(args.index, slide_polynomial(args.index, bounds), "slide"), EXIT_OK


def _cmd_tableaux(args: argparse.Namespace, bounds: Bounds) -> CommandResult:
    if args.kt:
        return TableauFormatter(args.index, enumerate_kohnert(args.index, bounds), "KT"), EXIT_OK
    return TableauFormatter(args.index, enumerate_qkt(args.index, bounds), "QKT"), EXIT_OK


def _cmd_classify(args: argparse.Namespace, bounds: Bounds) -> CommandResult:
    return ReportFormatter(classify(args.index, brute=args.brute, bounds=bounds)), EXIT_OK


def _cmd_verify(args: argparse.Namespace, bounds: Bounds) -> CommandResult:
    check = expansion_identity(args.index, bounds)
    if not check.holds:
        logger.error("slide expansion of %s does not sum to its key polynomial", args.index)
    return VerifyFormatter(check), EXIT_OK if check.holds else EXIT_FALSE


def _cmd_limit(args: argparse.Namespace, bounds: Bounds) -> CommandResult:
    runner = slide_limit_check if args.slide else stable_limit_check
    check = runner(args.index, args.vars, bounds.m_max, bounds)
    if check.verdict is LimitVerdict.INCONCLUSIVE:
        logger.warning("no stabilization by m = %d; raise --mmax to decide", bounds.m_max)
    status = EXIT_FALSE if check.verdict is LimitVerdict.STABLE_MISMATCH else EXIT_OK
    return LimitFormatter(check, "slide" if args.slide else "key"), status


def _cmd_sweep(args: argparse.Namespace, bounds: Bounds) -> CommandResult:
    records = list(brute_force_mf_universe(args.len_max, args.entry_max, bounds, bounds.workers))
    inconsistent = [r for r in records if not r.consistent]
    for record in inconsistent:
        logger.error(
            "classifier says %s for %s but the multiplicity is %d",
            record.classifier_verdict,
            record.index,
            record.max_multiplicity,
        )
    return SweepFormatter(records), EXIT_FALSE if inconsistent else EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace, Bounds], CommandResult]] = {
    "expand": _cmd_expand,
    "key": _cmd_key,
    "slide": _cmd_slide,
    "tableaux": _cmd_tableaux,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "limit": _cmd_limit,
    "sweep": _cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Output format")
    common.add_argument("--max-sum", type=int, default=None, help="Largest |a| to enumerate")
    common.add_argument("--max-length", type=int, default=None, help="Longest index to enumerate")
    common.add_argument("--unsafe-bounds", action="store_true", help="Remove the sum and length bounds")
    common.add_argument("-v", "--verbose", action="store_true", help="Log debug output to stderr")

    parser = argparse.ArgumentParser(
        prog="keyslide",
        description="Key polynomials, fundamental slides and multiplicity-free slide expansions.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def indexed(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("index", type=_composition_arg, help='Weak composition such as "0,0,3,2"')
        return sub

    indexed("expand", "Slide expansion of a key polynomial")
    indexed("key", "Monomial expansion of a key polynomial")
    indexed("slide", "Monomial expansion of a fundamental slide polynomial")

    tableaux = indexed("tableaux", "List Kohnert tableaux of a given content")
    which = tableaux.add_mutually_exclusive_group()
    which.add_argument("--qkt", action="store_true", help="Quasi-Yamanouchi tableaux only (default)")
    which.add_argument("--kt", action="store_true", help="All Kohnert tableaux")

    classify_parser = indexed("classify", "Decide multiplicity freeness by the fast criteria")
    classify_parser.add_argument("--brute", action="store_true", help="Enumerate when no criterion applies")

    indexed("verify", "Check that the slide expansion sums to the key polynomial")

    limit = indexed("limit", "Check the stable limit at a finite truncation")
    limit.add_argument("--vars", type=int, required=True, help="Number of variables kept")
    limit.add_argument("--mmax", type=int, default=None, help="Largest number of prepended zeros")
    limit.add_argument("--slide", action="store_true", help="Check slides against F_flat(a) instead")

    sweep = subparsers.add_parser("sweep", parents=[common], help="Brute-force sweep of a universe")
    sweep.add_argument("--len-max", type=int, default=4, help="Length of the swept compositions")
    sweep.add_argument("--entry-max", type=int, default=3, help="Largest part")
    sweep.add_argument("--workers", type=int, default=None, help="Worker processes")
    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    _configure_logging(args.verbose)
    try:
        bounds = load_bounds(
            max_sum=args.max_sum,
            max_length=args.max_length,
            m_max=getattr(args, "mmax", None),
            workers=getattr(args, "workers", None),
            unsafe=args.unsafe_bounds,
        )
        formatter, status = COMMANDS[args.command](args, bounds)
        output = formatter.get_output(args.format or get_default_format(args.command))
    except BoundExceededError as e:
        print(f"keyslide: {e}", file=sys.stderr)
        return EXIT_BOUND
    except KeySlideError as e:
        print(f"keyslide: {e}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(output)
    return status
