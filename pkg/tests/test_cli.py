import csv
import io
import json

from vmilnor.cli import main

from conftest import DATA, KNOT_35


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_invariants_json(capsys):
    code, out = run(capsys, 'invariants', '--code', KNOT_35, '--max-order', '4')
    assert code == 0
    data = json.loads(out.out)
    assert data['first_order'] == 3
    assert [data['values'][J]['raw'] for J in ('211', '221')] == [4, -4]


def test_invariants_csv(capsys):
    code, out = run(capsys, 'invariants', '--code', KNOT_35, '--max-order', '4',
                    '--format', 'csv')
    rows = list(csv.DictReader(io.StringIO(out.out)))
    assert code == 0 and [r['J'] for r in rows] == ['211', '221']


def test_invariants_file_order_independent_of_jobs(capsys, tmp_path):
    table = tmp_path / 'k.tsv'
    table.write_text('a\t%s\nb\tO1-U1-\nc\tO1+O2+U1+U2+\nd\t\n' % KNOT_35)
    _, one = run(capsys, 'invariants', '--file', str(table), '--max-order', '3')
    _, two = run(capsys, 'invariants', '--file', str(table), '--max-order', '3',
                 '--jobs', '2')
    assert one.out == two.out
    assert [r['name'] for r in json.loads(one.out)] == ['a', 'b', 'c', 'd']


def test_spanning_set(capsys):
    code, out = run(capsys, 'spanning-set', '5')
    data = json.loads(out.out)
    assert code == 0 and data['rank'] == 6 and len(data['sequences']) == 6


def test_movie_verify(capsys, tmp_path):
    code, out = run(capsys, 'movie-verify', str(DATA / 'constructed_r3_saddle.movie'))
    assert code == 0 and json.loads(out.out)['concordance']
    bad = tmp_path / 'm.movie'
    bad.write_text('INIT O1-U1-\nR7 1\nFINAL EMPTY\n')
    code, out = run(capsys, 'movie-verify', str(bad))
    assert code == 2 and 'm.movie:2' in out.err


def test_input_errors(capsys):
    assert run(capsys, 'invariants', '--code', 'O1-U1+')[0] == 2
    assert run(capsys, 'invariants', '--file', '/nonexistent/x.tsv')[0] == 2
    assert run(capsys, 'invariants', '--code', KNOT_35, '--max-order', '8')[0] == 2
    assert run(capsys, 'artin-compare', KNOT_35, 'L:')[0] == 2
    assert main(['invariants', '--format', 'xml']) == 2
    capsys.readouterr()


def test_assert_slice_exit(capsys):
    code, out = run(capsys, 'invariants', '--code', KNOT_35, '--max-order', '4',
                    '--assert-slice')
    assert code == 1
    code, _ = run(capsys, 'invariants', '--code', '', '--max-order', '4',
                  '--assert-slice')
    assert code == 0


def test_artin_compare_and_slice_factor(capsys):
    code, out = run(capsys, 'artin-compare', 'L:O1-O2-U1-U2-', 'L:', '--max-q', '4')
    data = json.loads(out.out)
    assert code == 0 and data['first_failing_q'] == 4
    code, out = run(capsys, 'slice-factor', KNOT_35, '--cut', '0', '--max-q', '4',
                    '--assert-slice')
    assert code == 1 and json.loads(out.out)['first_failing_q'] == 4


def test_small_commands(capsys):
    _, out = run(capsys, 'vlk', '--code', 'O1+,U1+O2-U2-O3-U3-', '0', '1')
    assert json.loads(out.out)['vlk'] == 1
    _, out = run(capsys, 'collect', '--word', 'v^2 a^-1 v^-2 a^-1 v^-2 a^-1 v^2 a^3',
                 '--q', '4')
    assert json.loads(out.out)['normal_form'] == 'g4^4 g5^4'
    _, out = run(capsys, 'magnus', '--word', 'v^-1 a^-1 v a', '--degree', '2')
    assert json.loads(out.out)['coefficients'] == {'12': -1, '21': 1}
    _, out = run(capsys, 'present', '--code', 'O1-U1-', '--format', 'text')
    assert 'v' in out.out
