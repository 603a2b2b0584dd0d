import pytest
from typer.testing import CliRunner

from primesmooth.cli import Command, parse_args, run, typer_app
from primesmooth.errors import UsageError

runner = CliRunner()


def _tokens(output: str) -> dict:
    return dict(token.split('=', 1) for line in output.splitlines() for token in line.split() if '=' in token)


def test_parse_count():
    cmd = parse_args(['count', '--kind', 'J4', '--p', '7', '--h', '1', '--n', '6'])
    assert isinstance(cmd, Command)
    assert cmd.subcommand == 'count'
    assert (cmd.options['kind'], cmd.options['p'], cmd.options['h'], cmd.options['N']) == ('J4', 7, 1, 6)


def test_parse_sweep():
    cmd = parse_args(['sweep', '--config', 'sweep.yaml', '--out', 'r.csv'])
    assert cmd.subcommand == 'sweep'
    assert (cmd.options['config'], cmd.options['out']) == ('sweep.yaml', 'r.csv')


def test_parse_sets():
    cmd = parse_args(['count', '--kind', 'J2', '--p', '5', '--u-set', '2,1', '--v-set', '1, 3', '--t', '2'])
    assert (cmd.options['U'], cmd.options['V']) == ([1, 2], [1, 3])


@pytest.mark.parametrize('argv', [
    ['count', '--kind', 'J4', '--p', '8', '--h', '1', '--n', '6'],
    ['count', '--kind', 'J9', '--p', '7'],
    ['count', '--p', '7'],
    ['sweep', '--config', 'x.yaml', '--bogus'],
    ['frobnicate'],
    [],
])
def test_parse_rejects(argv):
    with pytest.raises(UsageError) as info:
        parse_args(argv)
    assert info.value.exit_code == 2


def test_count_examples():
    result = runner.invoke(typer_app, ['count', '--kind', 'J4', '--p', '7', '--h', '1', '--n', '6'])
    assert result.exit_code == 0
    assert 'count=6' in result.stdout
    result = runner.invoke(typer_app, ['count', '--kind', 'J1', '--p', '7', '--h', '1', '--n', '6'])
    assert _tokens(result.stdout)['count'] == '5'
    result = runner.invoke(
        typer_app, ['count', '--kind', 'J2', '--p', '5', '--u-set', '1,2', '--v-set', '1,3', '--s', '0', '--t', '2'])
    assert _tokens(result.stdout)['count'] == '3'
    result = runner.invoke(typer_app, ['count', '--kind', 'J3', '--p', '7', '--x-set', '1,3,5', '--s', '2', '--t', '3'])
    assert _tokens(result.stdout)['count'] == '2'
    result = runner.invoke(typer_app, ['count', '--kind', 'J', '--p', '7', '--k', '6', '--n', '6'])
    tokens = _tokens(result.stdout)
    assert (tokens['count'], tokens['main_term']) == ('6', '36/7')


def test_count_named_set():
    result = runner.invoke(typer_app, ['count', '--kind', 'J3', '--p', '103', '--set-family', 'quadratic_residues', '--t', '50'])
    assert result.exit_code == 0
    assert float(_tokens(result.stdout)['ratio']) >= 0


def test_count_usage_errors():
    assert runner.invoke(typer_app, ['count', '--kind', 'J4', '--p', '8', '--h', '1', '--n', '6']).exit_code == 2
    assert runner.invoke(typer_app, ['count', '--kind', 'J4', '--p', '7', '--n', '6']).exit_code == 2
    assert runner.invoke(typer_app, ['count', '--kind', 'J', '--p', '7', '--k', '7', '--n', '3']).exit_code == 2
    assert runner.invoke(typer_app, ['count', '--kind', 'J', '--p', '7', '--g', '2', '--k', '3', '--n', '3']).exit_code == 2


def test_sandwich():
    result = runner.invoke(
        typer_app, ['sandwich', '--kind', 'J', '--p', '101', '--H', '3', '--k', '80', '--m', '-5', '--n', '70'])
    assert result.exit_code == 0
    tokens = _tokens(result.stdout)
    assert tokens['bracket'] == 'ok'
    assert tokens['complemented'] == 'true'
    assert int(tokens['j_prime']) <= int(tokens['count']) * int(tokens['divisor']) <= int(tokens['j_dprime'])


def test_sandwich_full_length_window():
    result = runner.invoke(typer_app, ['sandwich', '--kind', 'J', '--p', '101', '--k', '50', '--n', '100'])
    assert result.exit_code == 0
    tokens = _tokens(result.stdout)
    assert tokens['bracket'] == 'ok'
    assert tokens['complemented'] == 'false'


def test_audits(tmp_path):
    result = runner.invoke(typer_app, ['check-weil', '--p', '3', '--p', '5', '--p', '7'])
    assert result.exit_code == 0
    assert _tokens(result.stdout)['violations'] == '0'
    result = runner.invoke(typer_app, ['check-lemma', '--trials', '20', '--out', str(tmp_path / 'lemma.csv')])
    assert result.exit_code == 0
    assert (tmp_path / 'lemma.csv').exists()
    result = runner.invoke(typer_app, ['check-l1', '--p', '101'])
    assert result.exit_code == 0
    assert 'audit=l1' in result.stdout


def test_sweep_and_report(tmp_path):
    config = tmp_path / 'sweep.yaml'
    config.write_text("primes: [101, 211]\nseed: 1\ntheorems:\n  J: {}\n  J4: {}\n")
    out, frozen = tmp_path / 'r.csv', tmp_path / 'c.json'
    result = runner.invoke(
        typer_app, ['sweep', '--config', str(config), '--out', str(out), '--freeze', str(frozen)])
    assert result.exit_code == 0
    assert _tokens(result.stdout)['records'] == '16'
    result = runner.invoke(typer_app, ['report', str(out), '--constants', str(frozen)])
    assert result.exit_code == 0
    assert 'theorem=THM1' in result.stdout and 'theorem=THM5' in result.stdout
    assert 'crossover_violations=0' in result.stdout
    result = runner.invoke(
        typer_app, ['sweep', '--config', str(config), '--out', str(out), '--constants', str(frozen)])
    assert result.exit_code == 0


def test_sweep_io_errors(tmp_path):
    config = tmp_path / 'sweep.yaml'
    config.write_text("primes: [101]\ntheorems:\n  J4: {}\n")
    result = runner.invoke(typer_app, ['sweep', '--config', str(config), '--out', str(tmp_path / 'no' / 'r.csv')])
    assert result.exit_code == 3
    result = runner.invoke(typer_app, ['sweep', '--config', str(tmp_path / 'missing.yaml'), '--out', 'r.csv'])
    assert result.exit_code == 3
    config.write_text("primes: [101]\nbogus: 1\n")
    result = runner.invoke(typer_app, ['sweep', '--config', str(config), '--out', str(tmp_path / 'r.csv')])
    assert result.exit_code == 2


def test_run_returns_exit_codes():
    assert run(parse_args(['count', '--kind', 'J4', '--p', '7', '--h', '1', '--n', '6'])) == 0
    bad = parse_args(['count', '--kind', 'J4', '--p', '101', '--h', '1', '--n', '200'])
    assert run(bad) == 2
