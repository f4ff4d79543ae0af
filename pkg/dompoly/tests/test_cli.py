import json

import pytest

from dompoly.cli import main
from dompoly.data import get_reference_table


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_poly(capsys):
    assert run(capsys, 'poly', '3')[:2] == (0, 'x^3 + 3x^2 + 3x\n')
    assert run(capsys, 'poly', '2')[:2] == (0, 'x^2 + 2x\n')

    status, out, _ = run(capsys, 'poly', '8', '--format', 'json')
    assert status == 0
    assert json.loads(out) == {'n': 8, 'coefficients': ['0', '0', '0', '8', '38', '48', '28', '8', '1']}

    assert run(capsys, 'poly', '4', '--format', 'csv')[1] == '0,0,6,4,1\n'
    assert run(capsys, 'poly', '4', '--format', 'latex')[1] == '$D(C_{4}, x) = x^{4}+4x^{3}+6x^{2}$\n'


def test_table(capsys):
    assert run(capsys, 'table', '1')[:2] == (0, '1\n')

    status, out, _ = run(capsys, 'table', '16', '--format', 'csv')
    assert status == 0
    reference = get_reference_table()
    lines = out.splitlines()
    assert len(lines) == 16
    for n, line in enumerate(lines, start=1):
        assert [int(x) for x in line.split(',')] == list(reference[n]) + [0] * (16 - n)


def test_table_json(capsys):
    status, out, _ = run(capsys, 'table', '100', '--format', 'json')
    assert status == 0
    doc = json.loads(out)
    assert doc['n_max'] == 100
    totals = [sum(int(c) for c in row) for row in doc['rows']]
    assert totals[:3] == [1, 3, 7]
    assert all(totals[k] == totals[k - 1] + totals[k - 2] + totals[k - 3] for k in range(3, 100))


def test_table_latex(capsys):
    out = run(capsys, 'table', '4', '--format', 'latex')[1]
    assert out.startswith('\\begin{tabular}')
    assert '4 & 0 & 6 & 4 & 1 \\\\' in out


def test_family(capsys):
    assert run(capsys, 'family', '6', '2')[:2] == (0, '[[1,4],[2,5],[3,6]]\n')
    assert run(capsys, 'family', '5', '2')[1] == '[[1,3],[1,4],[2,4],[2,5],[3,5]]\n'
    assert run(capsys, 'family', '4', '4')[1] == '[[1,2,3,4]]\n'
    assert run(capsys, 'family', '9', '2')[1] == '[]\n'

    doc = json.loads(run(capsys, 'family', '6', '2', '--format', 'json')[1])
    assert doc == {'n': 6, 'i': 2, 'sets': [[1, 4], [2, 5], [3, 6]]}


def test_family_size_guard(capsys):
    status, out, err = run(capsys, 'family', '26', '16')
    assert status == 3
    assert out == ''
    assert 'guard' in err


def test_family_bad_arguments(capsys):
    assert run(capsys, 'family', '2', '1')[0] == 2
    assert run(capsys, 'family', '6', '-1')[0] == 2


@pytest.mark.parametrize('argv', [
    ['table', '0'],
    ['poly', '0'],
    ['gf', '3'],
    ['identities', '8'],
    ['verify', '2'],
    ['table', 'ten'],
    ['poly', '3', '--format', 'xml'],
    [],
])
def test_argument_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_gf(capsys):
    assert run(capsys, 'gf', '4')[:2] == (0, '0 6 4 1\nagree\n')

    status, out, _ = run(capsys, 'gf', '16', '--format', 'csv')
    assert status == 0
    lines = out.splitlines()
    reference = get_reference_table()
    assert lines[-1] == 'agree'
    assert [tuple(int(x) for x in line.split(',')) for line in lines[:-1]] == [reference[n] for n in range(4, 17)]

    assert run(capsys, 'gf', '30')[1].splitlines()[-1] == 'agree'


def test_gf_published(capsys):
    status, out, _ = run(capsys, 'gf', '8', '--published')
    assert status == 1
    assert 'mismatch n=5 i=2 series=3 table=5' in out
    assert out.splitlines()[-1] == 'disagree'


def test_identities(capsys):
    status, out, _ = run(capsys, 'identities', '16')
    assert status == 0
    assert len(out.splitlines()) == 11

    status, out, _ = run(capsys, 'identities', '30', '--json')
    doc = json.loads(out)
    assert status == 0
    assert [d['id'] for d in doc] == ['I', 'II', 'III', 'IV', 'V', 'VI', 'VII', 'VIII', 'IX', 'X', 'XI']
    assert all(d['pass'] and d['counterexample'] is None for d in doc)


def test_verify(capsys):
    status, out, _ = run(capsys, 'verify', '12', '--json')
    assert status == 0
    assert [s['status'] for s in json.loads(out)] == ['pass'] * 4


def test_verify_over_budget(capsys, monkeypatch):
    monkeypatch.setenv('DOMPOLY_ORACLE_BUDGET', '4096')
    status, out, _ = run(capsys, 'verify', '30', '--json')
    suites = {s['suite']: s['status'] for s in json.loads(out)}
    assert status == 0
    assert suites['oracle-counts'] == 'skipped'
    assert suites['genfunc'] == 'pass'
    assert suites['identities'] == 'pass'

    assert run(capsys, 'verify', '30', '--strict')[0] == 1


def test_verify_bad_budget(capsys, monkeypatch):
    monkeypatch.setenv('DOMPOLY_ORACLE_BUDGET', 'plenty')
    assert run(capsys, 'verify', '5')[0] == 2


def test_cache_round_trip(capsys, tmp_path):
    cache = tmp_path / 'table.txt'
    assert run(capsys, 'table', '50', '--cache', str(cache))[0] == 0
    first = cache.read_bytes()
    first_out = run(capsys, 'table', '50', '--cache', str(cache))[1]
    assert cache.read_bytes() == first
    assert first_out == run(capsys, 'table', '50')[1]

    assert run(capsys, 'table', '100', '--cache', str(cache))[0] == 0
    extended = cache.read_bytes().splitlines()
    assert len(extended) == 101
    assert extended[1:51] == first.splitlines()[1:51]


def test_cache_from_environment(capsys, tmp_path, monkeypatch):
    cache = tmp_path / 'env-table.txt'
    monkeypatch.setenv('DOMPOLY_CACHE', str(cache))
    assert run(capsys, 'table', '10')[0] == 0
    assert cache.exists()


def test_cache_errors(capsys, tmp_path):
    assert run(capsys, 'table', '5', '--cache', str(tmp_path / 'missing' / 'table.txt'))[0] == 2

    corrupt = tmp_path / 'corrupt.txt'
    corrupt.write_text('not a table\n')
    status, _, err = run(capsys, 'table', '5', '--cache', str(corrupt))
    assert status == 2
    assert 'corrupt cache' in err


def test_verify_names_printed_numerator_terms(capsys):
    status, out, _ = run(capsys, 'verify', '6')
    assert status == 0
    line = next(row for row in out.splitlines() if row.startswith('genfunc'))
    assert 'u^5 v^2 (printed 3, derived 5)' in line
    assert 'u^6 v^2 (printed 1, derived 3)' in line
