import io
import json
from itertools import combinations

import pandas as pd
import pytest
from click.testing import CliRunner

from hamcomp import __version__, create_cli
from hamcomp.config import Config
from hamcomp.models.graph import Graph
from hamcomp.utils.errors import ParameterError
from hamcomp.utils.graph_io import write_graph
from tests.conftest import prism_graph


@pytest.fixture(scope='module')
def cli():
    return create_cli()


@pytest.fixture
def runner():
    return CliRunner()


def frame(result):
    return pd.read_csv(io.StringIO(result.stdout))


def test_version(cli, runner):
    result = runner.invoke(cli, ['--version'])
    assert result.exit_code == 0
    assert __version__ in result.stdout


class TestEstimate:
    def test_empty_graphs_need_one_edge_per_vertex(self, cli, runner):
        result = runner.invoke(cli, ['estimate', '--n', '20', '--p', '0', '--trials', '2'])
        assert result.exit_code == 0, result.output
        df = frame(result)
        assert list(df['record']) == ['trial', 'trial', 'mean', 'std', 'sem']
        assert (df['mu_prime_over_n'][:3] == 1.0).all()
        assert (df['a_over_n'][:2] == 2.0).all()
        assert df['cfg_subcommand'].iloc[0] == 'estimate'

    def test_reruns_are_identical(self, cli, runner):
        args = ['estimate', '--n', '60', '--d', '3', '--k', '1', '--trials', '3', '--seed', '7']
        first, second = runner.invoke(cli, args), runner.invoke(cli, args)
        assert first.exit_code == second.exit_code == 0
        assert first.stdout == second.stdout

    def test_json_lines(self, cli, runner):
        result = runner.invoke(cli, ['estimate', '--n', '30', '--d', '2', '--format', 'json'])
        assert result.exit_code == 0, result.output
        records = [json.loads(line) for line in result.stdout.splitlines()]
        assert [r['record'] for r in records] == ['trial', 'mean', 'std', 'sem']
        assert records[0]['version'] == __version__

    def test_uncoverable_trials_keep_their_motif_columns(self, cli, runner, monkeypatch):
        monkeypatch.setattr('hamcomp.commands.estimate.sample_graph', lambda config, seed: prism_graph(20))
        result = runner.invoke(cli, ['estimate', '--n', '40', '--d', '3', '--trials', '2'])
        assert result.exit_code == 0, result.output
        df = frame(result)
        trials = df[df['record'] == 'trial']
        assert trials['mu_prime_over_n'].isna().all() and trials['a_over_n'].isna().all()
        assert [error.split(':')[0] for error in trials['error']] == ['trial 0', 'trial 1']
        assert (trials['prespider_sum_over_n'] == 0.0).all()
        assert trials['lb_over_n'].notna().all() and trials['mu_k_over_n'].notna().all()

    def test_two_density_flags(self, cli, runner):
        result = runner.invoke(cli, ['estimate', '--n', '20', '--d', '2', '--p', '0.1'])
        assert result.exit_code == 2

    def test_bad_radius(self, cli, runner):
        result = runner.invoke(cli, ['estimate', '--n', '20', '--d', '2', '--k', '0'])
        assert result.exit_code == 2


class TestProcess:
    def test_one_vertex_is_rejected(self, cli, runner):
        result = runner.invoke(cli, ['process', '--n', '1'])
        assert result.exit_code == 2

    def test_aggregate_row(self, cli, runner):
        result = runner.invoke(cli, ['process', '--n', '12', '--trials', '2', '--checkpoints', '5,10'])
        assert result.exit_code == 0, result.output
        df = frame(result)
        assert len(df) == 1 and df['record'].iloc[0] == 'aggregate'
        assert df['seeds'].iloc[0] == 2
        assert df['t1_star_count'].iloc[0] == 2

    def test_output_directory(self, cli, runner, tmp_path):
        out = tmp_path / 'run'
        result = runner.invoke(cli, ['process', '--n', '10', '--checkpoints', '5,10', '--out', str(out)])
        assert result.exit_code == 0, result.output
        trace = pd.read_csv(out / 'trace_0.csv')
        assert list(trace.columns) == ['t', 'n0', 'n1', 'stars3', 's3', 'mu_prime', 'lb', 'equal']
        assert list(trace['t']) == [5, 10]
        events = json.loads((out / 'events_0.json').read_text())
        assert events['n'] == 10 and 'equalities' in events
        assert (out / 'aggregate.csv').exists()

    def test_bad_checkpoints(self, cli, runner):
        result = runner.invoke(cli, ['process', '--n', '10', '--checkpoints', '5,x'])
        assert result.exit_code == 2


class TestComplete:
    def test_clique_from_file(self, cli, runner, tmp_path):
        path = tmp_path / 'k5.txt'
        write_graph(Graph.complete(5), path)
        result = runner.invoke(cli, ['complete', '--graph', str(path), '--engine', 'exact'])
        assert result.exit_code == 0, result.output
        document = json.loads(result.stdout)
        assert document['certificate']['status'] == 'success'
        assert document['certificate']['size_F'] == 0
        assert len(document['certificate']['hamilton_witness']) == 5

    def test_structural_failure(self, cli, runner, tmp_path):
        path = tmp_path / 'k9.txt'
        write_graph(Graph.from_edges(10, list(combinations(range(9), 2))), path)
        result = runner.invoke(cli, ['complete', '--graph', str(path)])
        assert result.exit_code == 5
        assert json.loads(result.stdout)['certificate']['status'] == 'structural-failure'

    def test_malformed_file(self, cli, runner, tmp_path):
        path = tmp_path / 'bad.txt'
        path.write_text("3 2\n0 1\n2 1\n")
        result = runner.invoke(cli, ['complete', '--graph', str(path)])
        assert result.exit_code == 2
        assert 'line 3' in result.stderr

    def test_certificate_file(self, cli, runner, tmp_path):
        out = tmp_path / 'cert.json'
        result = runner.invoke(cli, ['complete', '--n', '12', '--p', '1', '--out', str(out)])
        assert result.exit_code == 0, result.output
        assert json.loads(out.read_text())['certificate']['n'] == 12


class TestOracle:
    def test_small_run_passes(self, cli, runner):
        result = runner.invoke(cli, ['oracle', '--max-n', '5'])
        assert result.exit_code == 0, result.output
        df = frame(result)
        assert (df['passed']).all()
        assert set(df['suite']) >= {'formula-spot-values', 'path-cover-equivalence', 'closed-form-identity'}

    def test_mutant_is_caught(self, cli, runner):
        result = runner.invoke(cli, ['oracle', '--max-n', '4', '--mutant'])
        assert result.exit_code == 6
        df = frame(result)
        assert not df.set_index('suite').loc['formula-spot-values', 'passed']

    def test_cap(self, cli, runner):
        result = runner.invoke(cli, ['oracle', '--max-n', '20'])
        assert result.exit_code == 3


def test_core_stats(cli, runner):
    result = runner.invoke(cli, ['core-stats', '--n', '40', '--d', '6', '--trials', '2'])
    assert result.exit_code == 0, result.output
    df = frame(result)
    assert list(df['trial']) == [0, 1]
    assert (df['size_A'] + df['size_B'] + df['size_C'] == 40).all()


class TestConfig:
    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv('HAMCOMP_EXHAUSTIVE_CAP', '12')
        monkeypatch.setenv('HAMCOMP_PROCESS_G', '0.5')
        config = Config()
        assert config.EXHAUSTIVE_CAP == 12 and config.PROCESS_G == 0.5
        assert config.to_dict()['exhaustive_cap'] == 12

    def test_bad_value(self, monkeypatch):
        monkeypatch.setenv('HAMCOMP_THREADS', 'many')
        with pytest.raises(ParameterError):
            Config()
