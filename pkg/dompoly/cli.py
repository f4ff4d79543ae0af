"""
dompoly command line. Results go to stdout; log messages and errors go to stderr.

Exit codes: 0 success, 1 verification failure, 2 argument error, 3 family above the
size guard, 4 family construction failure.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import Optional

from dompoly import families, genfunc, identities, oracle, output
from dompoly.recurrence import CacheFormatError, build_table, get_table, load_table, polynomial, save_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_SIZE_GUARD = 3
EXIT_CONSTRUCTION = 4

# families are compared with the oracle as sets up to this order
FAMILY_SET_LIMIT = 15


class UsageError(Exception):
    pass


def _error(message):
    print('dompoly: error: {}'.format(message), file=sys.stderr)


def _require(condition, message):
    if not condition:
        raise UsageError(message)


def cmd_table(n_max, fmt='plain', cache_path=None):
    _require(n_max >= 1, 'n_max must be at least 1, got {}'.format(n_max))
    cached = None
    if cache_path and os.path.exists(cache_path):
        try:
            cached = load_table(cache_path)
        except CacheFormatError as e:
            raise UsageError('corrupt cache: {}'.format(e))
        except OSError as e:
            raise UsageError('cannot read cache {}: {}'.format(cache_path, e))

    table = build_table(n_max) if cached is None else cached.extended(n_max)
    if cache_path and table is not cached:
        try:
            save_table(table, cache_path)
        except OSError as e:
            raise UsageError('cannot write cache {}: {}'.format(cache_path, e))

    print(output.render_table(table, n_max, fmt))
    return EXIT_OK


def cmd_poly(n, fmt='plain'):
    _require(n >= 1, 'cycle order must be at least 1, got {}'.format(n))
    print(output.render_polynomial(polynomial(n), fmt))
    return EXIT_OK


def cmd_family(n, i, fmt='plain', force=False):
    _require(n >= 3, 'families are defined for n >= 3, got {}'.format(n))
    _require(i >= 0, 'cardinality must be nonnegative, got {}'.format(i))
    try:
        family = families.build_family(n, i, force=force)
    except families.FamilySizeError as e:
        _error(str(e))
        return EXIT_SIZE_GUARD
    except families.ConstructionError as e:
        _error(str(e))
        report = families.verify_family(n, i, force=True)
        print(json.dumps(report.to_dict()), file=sys.stderr)
        return EXIT_CONSTRUCTION
    print(output.render_family(family, fmt))
    return EXIT_OK


@dataclass(frozen=True)
class SuiteResult:
    name: str
    status: str
    range: str
    detail: Optional[str] = None

    def to_dict(self):
        return {'suite': self.name, 'status': self.status, 'range': self.range, 'detail': self.detail}

    def __str__(self):
        line = '{:<20} {:<8} {}'.format(self.name, self.status, self.range)
        return line + ('  ' + self.detail if self.detail else '')


def _oracle_counts_suite(n_max, limits, workers):
    table = get_table(n_max)
    span = 'n=3..{}'.format(n_max)
    try:
        for n in range(3, n_max + 1):
            row = oracle.count_row(n, limits=limits, workers=workers)
            if row != table.row(n):
                i = next(k for k in range(n + 1) if row[k] != table[n, k])
                return SuiteResult('oracle-counts', 'fail', span, 'n={} i={} recurrence={} oracle={}'.format(
                    n, i, table[n, i], row[i]))
    except oracle.OracleBudgetExceeded as e:
        return SuiteResult('oracle-counts', 'skipped', span, str(e))
    return SuiteResult('oracle-counts', 'pass', span)


def _oracle_families_suite(n_max, limits):
    high = min(n_max, FAMILY_SET_LIMIT)
    span = 'n=3..{}'.format(high)
    try:
        for n in range(3, high + 1):
            for i in range(0, n + 1):
                report = families.verify_family(n, i, force=True)
                if not report.passed:
                    return SuiteResult('oracle-families', 'fail', span, 'n={} i={} {}'.format(
                        n, i, report.error or 'report failed'))
                constructed = families.build_family(n, i, force=True).label_sets()
                enumerated = oracle.enumerate_dominating(n, i, limits=limits).label_sets()
                if constructed != enumerated:
                    return SuiteResult('oracle-families', 'fail', span, 'n={} i={} {} constructed, {} by oracle'.format(
                        n, i, len(constructed), len(enumerated)))
    except oracle.OracleBudgetExceeded as e:
        return SuiteResult('oracle-families', 'skipped', span, str(e))
    return SuiteResult('oracle-families', 'pass', span)


def _genfunc_suite(n_max):
    high = max(n_max, 4)
    series = genfunc.expand(high)
    discrepancies = genfunc.compare_with_table(series, get_table(high))
    span = 'n=4..{}'.format(high)
    if discrepancies:
        n, i, a, b = discrepancies[0]
        return SuiteResult('genfunc', 'fail', span, 'n={} i={} series={} table={}'.format(n, i, a, b))
    printed = ', '.join('u^{} v^{} (printed {}, derived {})'.format(*d) for d in genfunc.published_differences())
    return SuiteResult('genfunc', 'pass', span, 'printed numerator differs at ' + printed)


def _identities_suite(n_max):
    high = max(n_max, identities.MIN_N_MAX_ALL)
    failed = [c for c in identities.check_all(high) if not c.passed]
    span = 'n_max={}'.format(high)
    if failed:
        return SuiteResult('identities', 'fail', span, str(failed[0]))
    return SuiteResult('identities', 'pass', span)


def cmd_verify(n_max, strict=False, as_json=False, workers=1):
    _require(n_max >= 3, 'n_max must be at least 3, got {}'.format(n_max))
    try:
        limits = oracle.OracleLimits.from_env()
    except ValueError as e:
        raise UsageError(str(e))

    suites = [
        _oracle_counts_suite(n_max, limits, workers),
        _oracle_families_suite(n_max, limits),
        _genfunc_suite(n_max),
        _identities_suite(n_max),
    ]
    for s in suites:
        if s.status == 'skipped':
            logger.warning('Suite %s skipped: %s', s.name, s.detail)

    if as_json:
        print(json.dumps([s.to_dict() for s in suites]))
    else:
        print('\n'.join(str(s) for s in suites))

    if any(s.status == 'fail' for s in suites):
        return EXIT_FAILED
    if strict and any(s.status == 'skipped' for s in suites):
        return EXIT_FAILED
    return EXIT_OK


def cmd_gf(n_max, fmt='plain', published=False):
    _require(n_max >= 4, 'the generating function starts at u^4; n_max must be at least 4, got {}'.format(n_max))
    numerator = genfunc.PUBLISHED_NUMERATOR if published else genfunc.NUMERATOR
    series = genfunc.expand(n_max, numerator=numerator)
    discrepancies = genfunc.compare_with_table(series, get_table(n_max))
    print(output.render_series(series, discrepancies, fmt))
    return EXIT_FAILED if discrepancies else EXIT_OK


def cmd_identities(n_max, as_json=False):
    _require(n_max >= identities.MIN_N_MAX_ALL, 'n_max must be at least {}, got {}'.format(
        identities.MIN_N_MAX_ALL, n_max))
    checks = identities.check_all(n_max)
    print(output.render_checks(checks, as_json=as_json))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAILED


def _parser():
    parser = argparse.ArgumentParser(prog='dompoly', description='Domination polynomials of cycles.')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress to stderr (-vv for debug output)')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    def with_format(p):
        p.add_argument('--format', choices=output.FORMATS, default='plain', help='output format (default: plain)')
        return p

    p = with_format(commands.add_parser('table', help='table of d(C_n, j) for n, j <= n_max'))
    p.add_argument('n_max', type=int)
    p.add_argument('--cache', default=os.environ.get('DOMPOLY_CACHE'),
                   help='table cache file to read, extend and write (default: $DOMPOLY_CACHE)')

    p = with_format(commands.add_parser('poly', help='domination polynomial D(C_n, x)'))
    p.add_argument('n', type=int)

    p = with_format(commands.add_parser('family', help='dominating sets of C_n with i vertices'))
    p.add_argument('n', type=int)
    p.add_argument('i', type=int)
    p.add_argument('--force', action='store_true', help='build families above the size guard')

    p = commands.add_parser('verify', help='check the recurrence, families, generating function and identities')
    p.add_argument('n_max', type=int)
    p.add_argument('--strict', action='store_true', help='treat skipped suites as failures')
    p.add_argument('--json', action='store_true', help='print suite results as JSON')
    p.add_argument('--workers', type=int, default=1, help='threads for the exhaustive counts')

    p = with_format(commands.add_parser('gf', help='coefficients of the bivariate generating function'))
    p.add_argument('n_max', type=int)
    p.add_argument('--published', action='store_true', help='expand the numerator as printed in the literature')

    p = commands.add_parser('identities', help='check the eleven coefficient identities')
    p.add_argument('n_max', type=int, nargs='?', default=200)
    p.add_argument('--json', action='store_true', help='print the verdicts as JSON')

    return parser


def _configure_logging(verbosity):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    _configure_logging(args.verbose)

    try:
        if args.command == 'table':
            return cmd_table(args.n_max, args.format, args.cache)
        if args.command == 'poly':
            return cmd_poly(args.n, args.format)
        if args.command == 'family':
            return cmd_family(args.n, args.i, args.format, args.force)
        if args.command == 'verify':
            return cmd_verify(args.n_max, args.strict, args.json, args.workers)
        if args.command == 'gf':
            return cmd_gf(args.n_max, args.format, args.published)
        return cmd_identities(args.n_max, args.json)
    except (UsageError, ValueError) as e:
        _error(str(e))
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
