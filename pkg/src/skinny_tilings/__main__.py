#!/usr/bin/env python3
"""
Main entry point for the skinny-tilings package.
"""

import argparse
import json
import logging
import sys
from dataclasses import replace
from fractions import Fraction
from typing import IO, List, Optional, Sequence

from .analyzers import DEFAULT_TERMS, TilingAnalyzer
from .config import Settings, load_settings
from .exceptions import SkinnyTilingError, UsageError
from .processors import RegionFileProcessor
from .recurrences import CFinite, knuth_formula_cfinite
from .report_generator import TilingReportGenerator
from .types import AnalysisResult, GuessConfig, OutputFormat, Rational, TilingMode

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTATION = 2


class SkinnyArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def setup_logging(log_level: str = 'WARNING', log_file: Optional[str] = None) -> None:
    """
    Configure logging for the application.

    Records go to stderr (and optionally a file) so stdout carries only results.

    Args:
        log_level: Logging level ('DEBUG', 'INFO', 'WARNING', 'ERROR')
        log_file: Optional path of a log file
    """
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def _add_common(
    parser: argparse.ArgumentParser, terms_help: Optional[str] = None, oracle: bool = False
) -> None:
    if terms_help:
        parser.add_argument('--terms', type=int, default=None, help=terms_help)
    parser.add_argument(
        '--mode', choices=[m.value for m in TilingMode], default=TilingMode.DIMER.value,
        help='Allowed tiles: dominoes only, or monomers and dominoes (default: dimer)'
    )
    parser.add_argument(
        '--format', choices=[f.value for f in OutputFormat], default=OutputFormat.PLAIN.value,
        help='Output format (default: plain)'
    )
    parser.add_argument('--max-order', type=int, default=None, help='Largest recurrence order to accept')
    parser.add_argument('--margin', type=int, default=None, help='Extra terms a guess must explain')
    if oracle:
        parser.add_argument('--verify-oracle', action='store_true',
                            help='Re-check the first outputs by direct enumeration')
    parser.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], default=None,
                        help='Logging level (default: SKINNY_LOG_LEVEL or WARNING)')
    parser.add_argument('--env-file', default=None, help='Path to a .env file with SKINNY_* settings')


def build_parser() -> SkinnyArgumentParser:
    """Build the command-line grammar."""
    parser = SkinnyArgumentParser(
        prog='skinny-tilings',
        description=(
            'Exact enumeration of domino and monomer-dimer tilings of skinny regions '
            '(rectangles, frames and crosses) with transfer matrices, plus guessing and '
            'checking of C-finite recurrences and rational generating functions.'
        ),
    )
    sub = parser.add_subparsers(dest='command', metavar='COMMAND', parser_class=SkinnyArgumentParser)
    sub.required = True

    p = sub.add_parser('count', help='Count tilings of a region file')
    p.add_argument('--file', required=True, help='Region file')
    _add_common(p)

    p = sub.add_parser('count-weighted', help='Weight enumerator of a region file')
    p.add_argument('--file', required=True, help='Region file')
    _add_common(p)

    p = sub.add_parser('rect-seq', help='Counts of M x n rectangles for n = 0, 1, ...')
    p.add_argument('m', type=int, metavar='M')
    p.add_argument('--weighted', action='store_true', help='Weight enumerators instead of counts')
    _add_common(p, 'Number of terms (default: 20)', oracle=True)

    for name, help_text in (('frame-seq', 'Counts of square-hole frames'),
                            ('frame-gf', 'Generating function of square-hole frames'),
                            ('frame-gf-bivariate', 'Bivariate generating function of frame hole tables')):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('thicknesses', type=int, nargs=4, metavar='T',
                       help='Frame thicknesses A1 A2 B1 B2 (bottom, top, left, right)')
        if name == 'frame-seq':
            p.add_argument('--weighted', action='store_true', help='Weight enumerators instead of counts')
            _add_common(p, 'Number of terms (default: 20)', oracle=True)
        elif name == 'frame-gf':
            _add_common(p, 'Number of terms to guess from (default: 2 * max-order + margin)', oracle=True)
        else:
            p.add_argument('--csv', default=None, help='Also write the hole table as CSV')
            _add_common(p, 'Hole table size per axis (default: 15)', oracle=True)

    for name, help_text in (('cross-seq', 'Counts of crosses by arm length'),
                            ('cross-gf', 'Generating function of a cross family')):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('a', type=int, metavar='A')
        p.add_argument('b', type=int, metavar='B')
        if name == 'cross-seq':
            p.add_argument('--weighted', action='store_true', help='Weight enumerators instead of counts')
            _add_common(p, 'Number of terms (default: 20)', oracle=True)
        else:
            _add_common(p, 'Number of terms to guess from (default: 2 * max-order + margin)', oracle=True)

    p = sub.add_parser('guess-cfinite', help='Guess a recurrence for given terms')
    p.add_argument('values', nargs='*', metavar='VALUE', help='Terms (integers or p/q)')
    p.add_argument('--file', default=None, help='Read the terms from a file')
    p.add_argument('--gf', action='store_true', help='Report a rational generating function')
    _add_common(p)

    p = sub.add_parser('cfinite-equal', help='Decide whether two C-finite codings agree')
    p.add_argument('first', metavar='CODING', help="JSON coding [[initial], [coeffs]] or 'knuth'")
    p.add_argument('second', metavar='CODING', help="JSON coding [[initial], [coeffs]] or 'knuth'")
    _add_common(p)

    p = sub.add_parser('verify-bound', help='Check terms against a recurrence under an order bound')
    p.add_argument('coding', metavar='CODING', help="JSON coding [[initial], [coeffs]] or 'knuth'")
    p.add_argument('values', nargs='*', metavar='VALUE', help='Terms (integers or p/q)')
    p.add_argument('--file', default=None, help='Read the terms from a file')
    p.add_argument('--bound', type=int, required=True, help='Assumed order bound of the data')
    _add_common(p)

    p = sub.add_parser('moments', help='Exact tile-count moments of a region family')
    p.add_argument('family', choices=['region', 'rect', 'frame', 'cross'])
    p.add_argument('params', type=int, nargs='*', metavar='PARAM')
    p.add_argument('--file', default=None, help="Region file for the 'region' family")
    p.add_argument('--variable', default='h', help='Tile variable: h, v or m (default: h)')
    p.add_argument('--up-to', type=int, default=4, choices=[1, 2, 3, 4], help='Highest moment order')
    p.add_argument('--csv', default=None, help='Also write the moments as CSV')
    _add_common(p, 'Number of family members (default: 20)')

    p = sub.add_parser('growth', help='Growth ratio of a sequence')
    p.add_argument('values', nargs='*', metavar='VALUE',
                   help="Terms, or a single JSON coding / 'knuth'")
    p.add_argument('--file', default=None, help='Read the terms from a file')
    p.add_argument('--index', type=int, default=None, help='Ratio index K (default: SKINNY_GROWTH_INDEX)')
    p.add_argument('--precision', type=int, default=None,
                   help='Decimal digits (default: SKINNY_GROWTH_PRECISION)')
    _add_common(p)

    return parser


def parse_coding(text: str) -> CFinite:
    """
    Parse a C-finite coding argument.

    Accepts 'knuth', a JSON list [[initial], [coeffs]] or a JSON object
    {"initial": [...], "coeffs": [...]}; entries may be integers or "p/q".

    Raises:
        UsageError: If the argument is not a valid coding
    """
    if text.strip().lower() == 'knuth':
        return knuth_formula_cfinite()
    try:
        data = json.loads(text)
        if isinstance(data, dict):
            return CFinite.from_json_dict(data)
        initial, coeffs = data
        return CFinite(
            tuple(Fraction(str(x)) for x in initial),
            tuple(Fraction(str(c)) for c in coeffs),
        )
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise UsageError(f"Invalid C-finite coding {text!r}: {e}") from None


def _values(args: argparse.Namespace, processor: RegionFileProcessor) -> List[Rational]:
    values = processor.parse_terms(' '.join(args.values))
    if args.file:
        values += processor.load_terms_file(args.file)
    if not values:
        raise UsageError('No terms given: pass VALUE arguments or --file')
    return values


def _guess_config(args: argparse.Namespace, settings: Settings) -> GuessConfig:
    config = settings.guess_config()
    overrides = {
        name: value
        for name, value in (('max_order', args.max_order), ('margin', args.margin))
        if value is not None
    }
    try:
        return replace(config, **overrides)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _terms(args: argparse.Namespace) -> int:
    return DEFAULT_TERMS if args.terms is None else args.terms


def dispatch(args: argparse.Namespace, analyzer: TilingAnalyzer) -> AnalysisResult:
    """Run the analysis a parsed command line asks for."""
    mode = TilingMode(args.mode)
    config = _guess_config(args, analyzer.settings)
    terms = getattr(args, 'terms', None)
    verify = getattr(args, 'verify_oracle', False)
    command = args.command

    if command == 'count':
        return analyzer.count(args.file, mode)
    if command == 'count-weighted':
        return analyzer.count_weighted(args.file, mode)
    if command == 'rect-seq':
        return analyzer.rect_seq(args.m, _terms(args), mode, args.weighted, verify)
    if command == 'frame-seq':
        return analyzer.frame_seq(args.thicknesses, _terms(args), mode, args.weighted, verify)
    if command == 'frame-gf':
        return analyzer.frame_gf(args.thicknesses, terms, config, mode, verify)
    if command == 'frame-gf-bivariate':
        return analyzer.frame_gf_bivariate(args.thicknesses, terms, config, mode, verify)
    if command == 'cross-seq':
        return analyzer.cross_seq(args.a, args.b, _terms(args), mode, args.weighted, verify)
    if command == 'cross-gf':
        return analyzer.cross_gf(args.a, args.b, terms, config, mode, verify)
    if command == 'guess-cfinite':
        return analyzer.guess(_values(args, analyzer.processor), config, as_gf=args.gf)
    if command == 'cfinite-equal':
        return analyzer.equal(parse_coding(args.first), parse_coding(args.second))
    if command == 'verify-bound':
        return analyzer.verify_bound(
            parse_coding(args.coding), _values(args, analyzer.processor), args.bound
        )
    if command == 'moments':
        return analyzer.moments(
            args.family, args.params, _terms(args), mode, args.variable, args.up_to, args.file
        )
    if command == 'growth':
        if len(args.values) == 1 and not args.file and not _is_number(args.values[0]):
            return analyzer.growth(parse_coding(args.values[0]), [], config, args.index, args.precision)
        return analyzer.growth(
            None, _values(args, analyzer.processor), config, args.index, args.precision
        )
    raise UsageError(f"Unknown command {command!r}")


def _is_number(token: str) -> bool:
    try:
        Fraction(token)
    except (ValueError, ZeroDivisionError):
        return False
    return True


def run(argv: Sequence[str], stdout: Optional[IO[str]] = None) -> int:
    """
    Execute one command line.

    Args:
        argv: Arguments without the program name
        stdout: Stream for results (default: sys.stdout)

    Returns:
        0 on success, 1 on a usage error, 2 on a computation error
    """
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        settings = load_settings(args.env_file)
    except SkinnyTilingError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    setup_logging(args.log_level or settings.log_level, settings.log_file)
    logger = logging.getLogger(__name__)

    analyzer = TilingAnalyzer(settings)
    report_generator = TilingReportGenerator()
    try:
        result = dispatch(args, analyzer)
        print(report_generator.render(result, OutputFormat(args.format)), file=out)
        csv_path = getattr(args, 'csv', None)
        if csv_path:
            report_generator.write_csv(result, csv_path)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (SkinnyTilingError, ValueError, ArithmeticError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_COMPUTATION
    return EXIT_OK


def main() -> None:
    """Main application entry point."""
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
