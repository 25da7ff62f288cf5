"""
Tests for the command-line interface
"""

import json

import pytest

from gainmat.__main__ import EXIT_BUDGET, EXIT_INPUT, EXIT_OK, main, parse_ids
from gainmat.errors import GainMatError
from gainmat.gains import E_INF, GainSignedGraph, link, loop
from gainmat.instance import ERASED_NOTE, dump, loads

pytestmark = pytest.mark.cli


def write(tmp_path, u, name='instance.json'):
    path = tmp_path / name
    dump(u, path)
    return str(path)


def records(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


@pytest.fixture
def triangle(tmp_path):
    u = GainSignedGraph.from_specs(3, [link(0, 1, -1, 1), link(1, 2, -1, 1), link(0, 2, -1, 1)])
    return write(tmp_path, u)


@pytest.fixture
def digon(tmp_path):
    return write(tmp_path, GainSignedGraph.from_specs(2, [link(0, 1, 1, 0), link(0, 1, 1, 0)]), 'digon.json')


@pytest.fixture(autouse=True)
def no_config_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv('HOME', str(tmp_path / 'home'))
    monkeypatch.setenv('XDG_CONFIG_HOME', str(tmp_path / 'xdg'))


class TestParseIds:
    """Test cases for edge id lists"""

    def test_ids_and_inf(self):
        """Test integers and the extra point"""
        assert parse_ids('0, 2,inf') == frozenset({0, 2, E_INF})

    def test_empty(self):
        """Test an empty list"""
        assert parse_ids('') == frozenset()

    def test_bad_tokens(self):
        """Test negative numbers, words and inf where not allowed"""
        for text in ('-1', 'a', '1.5'):
            with pytest.raises(GainMatError):
                parse_ids(text)
        with pytest.raises(GainMatError):
            parse_ids('inf', allow_inf=False)


class TestMatroidCommands:
    """Test cases for rank, closure and enumeration commands"""

    def test_rank(self, triangle, capsys):
        """Test the rank record is canonical JSON"""
        assert main(['rank', triangle]) == EXIT_OK
        out, err = capsys.readouterr()
        assert out == '{"command":"rank","extended":false,"rank":3,"subset":[0,1,2]}\n'
        assert 'rank' in err

    def test_rank_with_extra_point(self, triangle, capsys):
        """Test --extended admits inf"""
        assert main(['rank', '--extended', '--subset', '0,inf', triangle]) == EXIT_OK
        (record,) = records(capsys.readouterr().out)
        assert record['subset'] == [0, 'inf']
        assert record['rank'] == 2

    def test_extra_point_needs_extended(self, triangle, capsys):
        """Test inf without --extended is an input error"""
        assert main(['rank', '--subset', 'inf', triangle]) == EXIT_INPUT
        assert capsys.readouterr().err.startswith('Error: ')

    def test_independent(self, triangle, capsys):
        """Test the certificate of the negative triangle"""
        assert main(['independent', '--subset', '0,1,2', triangle]) == EXIT_OK
        (record,) = records(capsys.readouterr().out)
        assert record['independent'] is True
        assert record['special'] is None

    def test_closure(self, digon, capsys):
        """Test a neutral parallel edge joins the closure"""
        assert main(['closure', '--subset', '0', digon]) == EXIT_OK
        (record,) = records(capsys.readouterr().out)
        assert record == {'command': 'closure', 'subset': [0], 'closure': [0, 1], 'rank': 1}

    def test_circuits(self, digon, capsys):
        """Test one circuit with its class"""
        assert main(['circuits', digon]) == EXIT_OK
        (record,) = records(capsys.readouterr().out)
        assert record == {'command': 'circuits', 'circuit': [0, 1], 'class': 'NeutralSignCircuit'}

    def test_bases_and_cocircuits(self, digon, capsys):
        """Test bases and cocircuits of a neutral digon"""
        main(['bases', digon])
        assert [r['basis'] for r in records(capsys.readouterr().out)] == [[0], [1]]
        main(['cocircuits', digon])
        assert [r['cocircuit'] for r in records(capsys.readouterr().out)] == [[0, 1]]

    def test_flats(self, triangle, capsys):
        """Test the top flat of the negative triangle carries a rational witness"""
        assert main(['flats', triangle]) == EXIT_OK
        top = records(capsys.readouterr().out)[-1]
        assert top['flat'] == [0, 1, 2]
        assert top['kind'] == 'hyperbalanced'
        assert top['theta'] == {'0': '-1/2', '1': '-1/2', '2': '-1/2'}

    def test_budget(self, triangle, capsys):
        """Test an enumeration over the budget exits with code 3"""
        assert main(['flats', '--max-subsets', '2', triangle]) == EXIT_BUDGET
        assert 'budget' in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        """Test an unreadable file is an input error"""
        assert main(['rank', str(tmp_path / 'nope.json')]) == EXIT_INPUT
        assert 'nope.json' in capsys.readouterr().err


class TestMinorCommand:
    """Test cases for the minor command"""

    def test_contraction(self, tmp_path, capsys):
        """Test the minor is printed as an instance file"""
        path = write(tmp_path, GainSignedGraph.from_specs(3, [link(0, 1, 1, 3), link(1, 2, 1, 4)]))
        assert main(['minor', '--contract', '0', path]) == EXIT_OK
        instance = loads(capsys.readouterr().out)
        assert instance.graph.n == 2
        assert instance.graph.gain(1) == 7
        assert instance.note is None

    def test_erased_gains_noted(self, tmp_path, capsys):
        """Test contracting a frustrated digon records the erasure"""
        path = write(tmp_path, GainSignedGraph.from_specs(2, [link(0, 1, 1, 0), link(0, 1, 1, 1),
                                                              loop(1, -1, 2)]))
        assert main(['minor', '--contract', '0,1', path]) == EXIT_OK
        assert loads(capsys.readouterr().out).note == ERASED_NOTE

    def test_overlap(self, digon, capsys):
        """Test deleting and contracting one edge is an input error"""
        assert main(['minor', '--delete', '0', '--contract', '0', digon]) == EXIT_INPUT


class TestArrangementCommands:
    """Test cases for family, arrangement and polytope"""

    def test_family(self, capsys):
        """Test the Shi family as an instance file"""
        assert main(['family', '--family', 'shi', '--n', '2']) == EXIT_OK
        assert len(loads(capsys.readouterr().out).graph.graph.edges) == 2

    def test_arrangement(self, capsys):
        """Test hyperplanes then one summary record"""
        assert main(['arrangement', '--family', 'shi', '--n', '2']) == EXIT_OK
        found = records(capsys.readouterr().out)
        assert [r['hyperplane'] for r in found[:2]] == ['-x0 + x1 = 0', '-x0 + x1 = -1']
        summary = found[-1]
        assert summary['chi'] == [1, -2, 1]
        assert summary['regions'] == 3
        assert summary['regions_infinity'] == 6

    def test_arrangement_by_flats(self, capsys):
        """Test the flat computation gives the same summary"""
        main(['arrangement', '--family', 'catalan', '--n', '2'])
        direct = records(capsys.readouterr().out)[-1]
        main(['arrangement', '--by-flats', '--family', 'catalan', '--n', '2'])
        assert records(capsys.readouterr().out)[-1] == direct

    def test_arrangement_needs_input(self, capsys):
        """Test arrangement without a family or file"""
        assert main(['arrangement']) == EXIT_INPUT

    def test_polytope(self, tmp_path, capsys):
        """Test the edge polytope of a 4-cycle"""
        u = GainSignedGraph.from_specs(4, [link(0, 1), link(1, 2), link(2, 3), link(0, 3)])
        assert main(['polytope', '--points', 'edge', write(tmp_path, u)]) == EXIT_OK
        (record,) = records(capsys.readouterr().out)
        assert record == {'command': 'polytope', 'points': 'edge', 'dimension': 2}

    def test_polytope_needs_points(self, triangle):
        """Test --points is required"""
        with pytest.raises(SystemExit):
            main(['polytope', triangle])


class TestVerifyCommand:
    """Test cases for the verify command"""

    def test_random(self, capsys):
        """Test a short random run passes"""
        assert main(['verify', '--random', '3', '2']) == EXIT_OK
        summary = records(capsys.readouterr().out)[-1]
        assert summary['instances'] == 2
        assert summary['passed'] is True

    def test_exhaustive_limit(self, capsys):
        """Test the exhaustive corpus honours --limit"""
        assert main(['verify', '--exhaustive', '--max-n', '1', '--limit', '5']) == EXIT_OK
        assert records(capsys.readouterr().out)[-1]['instances'] == 5

    def test_corpus(self, triangle, tmp_path, capsys):
        """Test a directory of instance files"""
        assert main(['verify', '--corpus', str(tmp_path)]) == EXIT_OK
        assert records(capsys.readouterr().out)[-1]['instances'] == 1

    def test_needs_source(self, capsys):
        """Test verify without a source"""
        assert main(['verify']) == EXIT_INPUT


class TestMisc:
    """Test cases for parser errors and init-config"""

    def test_no_command(self):
        """Test a command is required"""
        with pytest.raises(SystemExit):
            main([])

    def test_version(self, capsys):
        """Test --version"""
        with pytest.raises(SystemExit) as info:
            main(['--version'])
        assert info.value.code == 0
        assert 'gainmat' in capsys.readouterr().out

    def test_init_config(self, tmp_path, capsys):
        """Test writing the default configuration"""
        target = tmp_path / 'gainmat.toml'
        assert main(['init-config', str(target)]) == EXIT_OK
        assert '[budget]' in target.read_text()
