"""
Renderers for the cli output formats. Every renderer returns a string without a trailing
newline and orders its output deterministically. Counts are written as decimal strings in
JSON so that they stay exact beyond 53 bits.
"""

import csv
import io
import json

FORMATS = ('plain', 'csv', 'json', 'latex')


def _check_format(fmt):
    if fmt not in FORMATS:
        raise ValueError('unknown format {!r}, expected one of {}'.format(fmt, ', '.join(FORMATS)))


def _csv(rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerows(rows)
    return buffer.getvalue().rstrip('\n')


def _json(value):
    return json.dumps(value)


def _latex_grid(rows, n_max, first_row):
    """
    :param rows: dict n -> sequence of counts for j = 1..n
    """
    columns = 'c|' + 'c' * n_max
    lines = ['\\begin{tabular}{' + columns + '}',
             '$n \\backslash j$ & ' + ' & '.join(str(j) for j in range(1, n_max + 1)) + ' \\\\',
             '\\hline']
    for n in range(first_row, n_max + 1):
        cells = [str(c) for c in rows[n]] + [''] * (n_max - len(rows[n]))
        lines.append('{} & '.format(n) + ' & '.join(cells) + ' \\\\')
    lines.append('\\end{tabular}')
    return '\n'.join(lines)


def render_table(table, n_max, fmt='plain'):
    """
    :param table: DominationTable with at least n_max rows
    :return: rows n = 1..n_max; plain and csv use columns j = 1..n_max with explicit zeros,
        json holds each row for i = 0..n
    """
    _check_format(fmt)
    if fmt == 'json':
        return _json({'n_max': n_max,
                      'rows': [[str(c) for c in table.row(n)] for n in range(1, n_max + 1)]})

    grid = [[table[n, j] for j in range(1, n_max + 1)] for n in range(1, n_max + 1)]
    if fmt == 'csv':
        return _csv(grid)
    if fmt == 'latex':
        return _latex_grid({n: table.row(n)[1:] for n in range(1, n_max + 1)}, n_max, 1)
    return '\n'.join(' '.join(str(c) for c in row) for row in grid)


def render_polynomial(p, fmt='plain'):
    """
    :param p: DominationPolynomial
    :return: descending polynomial text (plain, latex) or ascending coefficients (csv, json)
    """
    _check_format(fmt)
    if fmt == 'json':
        return _json({'n': p.n, 'coefficients': [str(c) for c in p.coeffs]})
    if fmt == 'csv':
        return _csv([p.coeffs])
    if fmt == 'latex':
        return '$D(C_{{{}}}, x) = {}$'.format(p.n, p.to_latex())
    return str(p)


def render_family(family, fmt='plain'):
    """
    :param family: Family
    :return: the sorted member sets as 1-based label lists
    """
    _check_format(fmt)
    sets = family.to_lists()
    if fmt == 'json':
        return _json({'n': family.n, 'i': family.i, 'sets': sets})
    if fmt == 'csv':
        return _csv(sets)
    if fmt == 'latex':
        return ', '.join('\\{' + ','.join(str(v) for v in s) + '\\}' for s in sets)
    return json.dumps(sets, separators=(',', ':'))


def render_series(series, discrepancies, fmt='plain'):
    """
    :param series: BivariateSeries
    :param discrepancies: output of genfunc.compare_with_table
    :return: coefficient rows n = 4..n_max over j = 1..n, then the agreement verdict
    """
    _check_format(fmt)
    rows = {n: [series.coefficient(n, j) for j in range(1, n + 1)] for n in range(4, series.n_max + 1)}
    verdict = 'agree' if not discrepancies else 'disagree'

    if fmt == 'json':
        return _json({
            'n_max': series.n_max,
            'rows': [[str(c) for c in rows[n]] for n in range(4, series.n_max + 1)],
            'verdict': verdict,
            'discrepancies': [{'n': n, 'i': i, 'series': str(a), 'table': str(b)}
                              for n, i, a, b in discrepancies],
        })

    lines = []
    if fmt == 'csv':
        lines.append(_csv(rows[n] for n in range(4, series.n_max + 1)))
    elif fmt == 'latex':
        lines.append(_latex_grid(rows, series.n_max, 4))
    else:
        lines.extend(' '.join(str(c) for c in rows[n]) for n in range(4, series.n_max + 1))

    for n, i, a, b in discrepancies:
        lines.append('{}mismatch n={} i={} series={} table={}'.format(
            '% ' if fmt == 'latex' else '', n, i, a, b))
    lines.append(('% ' if fmt == 'latex' else '') + verdict)
    return '\n'.join(lines)


def render_checks(checks, as_json=False):
    """
    :param checks: IdentityChecks
    """
    if as_json:
        return _json([c.to_dict() for c in checks])
    return '\n'.join(str(c) for c in checks)
