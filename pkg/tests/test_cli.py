import json

import pytest

from primexp.primexp import run

Q1 = 'd_gN:n=10,g=3,N=1'


@pytest.fixture
def cli(tmp_path, capsys):
    """Run the command line against a config path that does not exist, returning (code, stdout, stderr)."""
    def invoke(*argv, config=None):
        cfile = config if config is not None else str(tmp_path / 'missing.conf')
        code = run(['-c', cfile] + list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return invoke


class TestValues:
    def test_frobenius(self, cli):
        assert cli('frobenius', '3', '5')[:2] == (0, '8\n')

    def test_exp(self, cli):
        assert cli('exp', '--family', 'd1:n=5')[:2] == (0, '17\n')

    def test_exp_verbose_names_the_certificate(self, cli):
        code, out, _ = cli('-v', 'exp', '--family', Q1)
        assert code == 0
        assert out.startswith('34 no walk of length 33 from ')

    def test_girth_and_cycles(self, cli):
        assert cli('girth', '--family', Q1)[1] == '3\n'
        assert cli('cycles', '--family', Q1)[1] == '3,10\n'

    def test_cwalk(self, cli):
        assert cli('cwalk', '--family', Q1)[1] == '16\n'

    @pytest.mark.parametrize('argv,expected', [
        (['lemma23', '--n', '10', '--g', '3'], '34'),
        (['lemma25', '--n', '10'], '42'),
        (['lemma32', '--n', '10', '--g', '3'], '32'),
        (['lemma34', '--n', '10', '--g', '3'], '31'),
        (['formula-thm33', '--n', '10', '--g', '3', '--r', '2'], '33'),
        (['range-thm36', '--n', '10', '--g', '3'], '32 34'),
        (['z-thm36', '--n', '10', '--g', '3', '--w', '33'], '2'),
        (['threshold-thm36', '--n', '10'], '3 5'),
        (['lemma22', '--family', Q1], '34'),
    ])
    def test_bounds(self, cli, argv, expected):
        code, out, _ = cli('bound', *argv)
        assert code == 0
        assert out == expected + '\n'


class TestFamilies:
    def test_write_then_read(self, cli, tmp_path):
        path = str(tmp_path / 'd1.txt')
        assert cli('family', 'd1', '--n', '4', '-o', path)[0] == 0
        with open(path) as fh:
            assert fh.read().splitlines()[0] == '4'
        assert cli('exp', '-f', path)[1] == '10\n'

    def test_matrix_on_stdout(self, cli):
        out = cli('family', 'cycle', '--n', '3')[1]
        assert out.splitlines() == ['3', '001', '100', '010']

    def test_spec(self, cli):
        assert cli('family', 'd_gN', '--n', '10', '--g', '3', '--N', '2,1', '--spec')[1] == \
            'd_gN:n=10,g=3,N=1,2\n'

    def test_theta(self, cli):
        assert cli('cycles', '--family', 'theta:n=6,g=3,q=5')[1] == '3,5\n'
        out = cli('family', 'theta', '--n', '6', '--g', '3', '--q', '5', '--spec')[1]
        assert out == 'theta:n=6,g=3,q=5\n'

    def test_iso(self, cli, tmp_path):
        code, out, _ = cli('iso', '-a', Q1, '-b', 'd_gN:n=10,g=3,N=3')
        assert code == 0
        assert out.startswith('true (')
        path = str(tmp_path / 'd2.txt')
        cli('family', 'd2', '--n', '5', '-o', path)
        assert cli('iso', '-a', 'd1:n=5', '-b', path)[1] == 'false\n'


class TestExitCodes:
    def test_missing_verb(self, cli):
        assert cli()[0] == 2

    def test_missing_bound_parameter(self, cli):
        code, _, err = cli('bound', 'lemma23', '--n', '10')
        assert code == 2
        assert '--g' in err

    def test_invalid_bound_parameter(self, cli):
        assert cli('bound', 'lemma23', '--n', '10', '--g', '10')[0] == 3

    def test_not_primitive(self, cli):
        assert cli('exp', '--family', 'cycle:n=5')[0] == 3

    def test_bad_matrix_file(self, cli, tmp_path):
        path = tmp_path / 'bad.txt'
        path.write_text('3\n010\n012\n100\n')
        code, _, err = cli('exp', '-f', str(path))
        assert code == 3
        assert 'line 3' in err

    def test_undecodable_matrix_file(self, cli, tmp_path):
        path = tmp_path / 'binary.txt'
        path.write_bytes(b'2\n0\xff\n10\n')
        code, out, err = cli('exp', '-f', str(path))
        assert code == 3
        assert out == ''
        assert 'line 2' in err

    def test_crlf_matrix_file(self, cli, tmp_path):
        path = tmp_path / 'crlf.txt'
        path.write_bytes(b'2\r\n11\r\n10\r\n')
        assert cli('exp', '-f', str(path))[:2] == (0, '2\n')

    def test_missing_matrix_file(self, cli, tmp_path):
        assert cli('girth', '-f', str(tmp_path / 'nowhere.txt'))[0] == 3

    def test_bad_family_spec(self, cli):
        assert cli('exp', '--family', 'd1:x=3')[0] == 3

    @pytest.mark.parametrize('argv', [
        ['family', 'd_gN', '--n', '10', '--N', '1'],
        ['family', 'chord', '--n', '10', '--g', '3'],
        ['family', 'theta', '--n', '6', '--g', '3'],
        ['exp', '--family', 'q1:n=10'],
    ])
    def test_family_missing_parameter(self, cli, argv):
        code, out, err = cli(*argv)
        assert code == 3
        assert out == ''
        assert 'needs' in err

    def test_bounds_need_a_seed(self, cli):
        assert cli('verify', 'bounds', '--samples', '5')[0] == 2

    def test_append_needs_out(self, cli):
        assert cli('verify', 'census', '--n', '2', '--append')[0] == 2

    def test_bad_config_value(self, cli, tmp_path):
        config = tmp_path / 'primexp.conf'
        config.write_text('[verify]\njobs = many\n')
        assert cli('verify', 'lemma34', '--n-max', '5', config=str(config))[0] == 3


class TestVerify:
    def test_census_files(self, cli, tmp_path):
        stem = str(tmp_path / 'census2')
        code, out, _ = cli('verify', 'census', '--n', '2', '--out', stem)
        assert code == 0
        assert out == 'classes=2 labeled=3 max_exponent=2\n'
        assert (tmp_path / 'census2.jsonl').exists()
        assert (tmp_path / 'census2.csv').read_text().splitlines()[0] == 'exponent,classes,labeled'

    def test_census_append(self, cli, tmp_path):
        stem = str(tmp_path / 'census2')
        cli('verify', 'census', '--n', '2', '--stop', '8', '--out', stem)
        code, out, _ = cli('verify', 'census', '--n', '2', '--start', '8', '--out', stem, '--append')
        assert code == 0
        assert out == 'classes=2 labeled=3 max_exponent=2\n'

    def test_report_on_stdout(self, cli):
        code, out, err = cli('verify', 'lemma34', '--n-max', '5', '--jobs', '2')
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert set(row['claim'] for row in rows) == set(['L2.2', 'L3.4'])
        assert 'rows=24 asserted=24 failures=0' in err

    def test_report_files(self, cli, tmp_path):
        stem = str(tmp_path / 'thm33')
        code, out, _ = cli('verify', 'thm33', '--n-min', '5', '--n-max', '5', '--out', stem, '--dry-run')
        assert code == 0
        assert out.startswith('rows=')
        for suffix in ('.jsonl', '.csv', '.findings.txt'):
            assert (tmp_path / ('thm33' + suffix)).exists()
