"""``twyang`` command line: Drinfeld polynomials, patterns, diagrams and verification suites."""

import argparse
import logging
import sys
import time
from collections.abc import Sequence
from typing import Any

from twyang.cli.commands import (
    CommandOutput,
    cmd_diagram,
    cmd_drinfeld,
    cmd_error,
    cmd_patterns,
    cmd_verify,
    diagram_params,
    drinfeld_params,
    pattern_params,
    verify_params,
)
from twyang.cli.suites import SuiteParams
from twyang.enums.base import Case, DrinfeldMethod, HwMethod, PatternMode, Suite
from twyang.skew.config import SkewConfig
from twyang.utils.validation import from_partition, parse_weight

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
WEIGHT_FLAGS = frozenset({'--lambda', '--mu'})


def _weight(text: str) -> tuple[int, ...]:
    try:
        return parse_weight(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def attach_weight_values(argv: Sequence[str]) -> list[str]:
    """Rewrites ``--lambda -2,-8`` as ``--lambda=-2,-8``.

    argparse reads a value such as ``-2,-8`` as an unknown option otherwise.
    """
    result: list[str] = []
    pending = None
    for arg in argv:
        if pending is not None:
            result.append(f'{pending}={arg}')
            pending = None
        elif arg in WEIGHT_FLAGS:
            pending = arg
        else:
            result.append(arg)
    if pending is not None:
        result.append(pending)
    return result


def _add_weights(
    parser: argparse.ArgumentParser, *, mu: bool = True, required: bool = True
) -> None:
    parser.add_argument(
        '--lambda',
        dest='lam',
        type=_weight,
        required=required,
        help='comma-separated non-positive weight, e.g. "-2,-8,-10,-13"',
    )
    if mu:
        parser.add_argument('--mu', type=_weight, default=None, help='weight of g_M, may be ""')
    parser.add_argument(
        '--partition',
        action='store_true',
        help='read the weights as partitions p_1 >= ... >= p_n >= 0 instead',
    )


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--text', action='store_true', help='human-readable output')
    parser.add_argument('--timing', action='store_true', help='add elapsed_ms to the report')
    parser.add_argument('--verbose', action='store_true', help='debug logging on stderr')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='twyang', description=__doc__)
    commands = parser.add_subparsers(dest='command', required=True)

    drinfeld = commands.add_parser('drinfeld', help='Drinfeld polynomials of V(λ)^+_μ')
    _add_weights(drinfeld)
    drinfeld.add_argument(
        '--method',
        type=DrinfeldMethod,
        choices=list(DrinfeldMethod),
        default=DrinfeldMethod.DIAGRAM,
    )
    drinfeld.add_argument('--case', type=Case, choices=[Case.SYMPLECTIC], default=Case.SYMPLECTIC)
    _add_common(drinfeld)

    verify = commands.add_parser('verify', help='run an identity suite')
    verify.add_argument('--suite', type=Suite, choices=list(Suite), required=True)
    verify.add_argument('--case', type=Case, choices=list(Case), default=Case.SYMPLECTIC)
    verify.add_argument('--n', type=int, default=1, help='rank: N = 2n, or 2n + 1 for odd o_N')
    verify.add_argument('--m', type=int, default=None, help='Sylvester block size, default n - 1')
    verify.add_argument('--even', action='store_true', help='use o_2n instead of o_2n+1')
    verify.add_argument('--max-n', type=int, default=3, help='largest size in sweeps')
    verify.add_argument('--samples', type=int, default=3, help='minimum points per identity')
    verify.add_argument('--seed', type=int, default=0, help='offset of the sample points')
    verify.add_argument('--hw-method', type=HwMethod, choices=list(HwMethod), default=None)
    _add_weights(verify, required=False)
    _add_common(verify)

    patterns = commands.add_parser('patterns', help='trapezium patterns between λ and μ')
    _add_weights(patterns)
    patterns.add_argument(
        '--mode', type=PatternMode, choices=list(PatternMode), default=PatternMode.COUNT
    )
    _add_common(patterns)

    diagram = commands.add_parser('diagram', help='ASCII rendering of the diagram of λ')
    _add_weights(diagram, mu=False)
    diagram.add_argument('--shift', type=int, default=0, help='lift the diagram by this many rows')
    diagram.add_argument('--margin', type=int, default=3, help='columns shown past the corners')
    _add_common(diagram)
    return parser


def _resolve(args: argparse.Namespace, name: str) -> tuple[int, ...] | None:
    value = getattr(args, name, None)
    if value is None or not args.partition:
        return value
    return from_partition(value)


def _suite_params(
    args: argparse.Namespace, lam: tuple[int, ...] | None, mu: tuple[int, ...] | None
) -> SuiteParams:
    return SuiteParams(
        case=args.case,
        n=args.n,
        m=args.m,
        odd=not args.even,
        lam=lam,
        mu=mu,
        max_n=args.max_n,
        samples=args.samples,
        seed=args.seed,
        skew_config=SkewConfig(hw_method=args.hw_method),
    )


def _params(args: argparse.Namespace) -> dict[str, Any]:
    """The ``params`` echo a successful run of ``args.command`` reports."""
    try:
        lam, mu = _resolve(args, 'lam'), _resolve(args, 'mu')
    except ValueError:
        lam, mu = getattr(args, 'lam', None), getattr(args, 'mu', None)
    if args.command == 'verify':
        return verify_params(args.suite, _suite_params(args, lam, mu))
    if args.command == 'diagram':
        return diagram_params(lam or (), args.shift)
    if args.command == 'drinfeld':
        return drinfeld_params(lam or (), mu or (), args.method)
    return pattern_params(lam or (), mu or (), args.mode)


def dispatch(args: argparse.Namespace) -> CommandOutput:
    if args.command == 'verify':
        params = _suite_params(args, _resolve(args, 'lam'), _resolve(args, 'mu'))
        return cmd_verify(args.suite, params)
    lam = _resolve(args, 'lam') or ()
    if args.command == 'diagram':
        return cmd_diagram(lam, args.shift, args.margin)
    mu = _resolve(args, 'mu') or ()
    if args.command == 'drinfeld':
        return cmd_drinfeld(lam, mu, args.method)
    return cmd_patterns(lam, mu, args.mode)


def main(argv: Sequence[str] | None = None) -> int:
    raw = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(attach_weight_values(raw))
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )
    started = time.perf_counter()
    try:
        output = dispatch(args)
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        log.debug('%s failed', args.command, exc_info=True)
        output = cmd_error(args.command, _params(args), exc)
    if args.timing:
        output.report.elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
    print(output.render(text=args.text))
    return EXIT_OK if output.ok else EXIT_FAILED


if __name__ == '__main__':
    raise SystemExit(main())
