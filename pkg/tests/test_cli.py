import json

import pytest

from heegaard_lift.app import app, run
from heegaard_lift.resources.diagram.model import Crossing
from heegaard_lift.resources.diagram.service import assemble, dump_diagram


@pytest.fixture
def torus_file(tmp_path):
    diagram = assemble(
        ['x'], {'x+': [0], 'x-': [0]}, {'c': [Crossing('x', 0, 1)]}
    )
    path = tmp_path / 'torus.json'
    path.write_text(dump_diagram(diagram), encoding='utf-8')
    return path


def test_words(runner):
    result = runner.invoke(app, ['words', '--pretzel', '3,3,3'])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0].startswith('heegaard-lift')
    assert 'D1 = x^-1 y x^-1 y x y^-1 x z^-1 x z^-1 x^-1 z' in lines


def test_words_json_carries_the_header(runner):
    result = runner.invoke(app, ['words', '--pretzel', '3,3,3', '--json'])
    report = json.loads(result.stdout)
    assert report['header']['report_version'] == '1'
    assert report['family']['case'] == 1
    assert set(report['words']) == {'D1', 'D2', 'lambda'}


def test_output_is_deterministic(runner):
    argv = ['words', '--pretzel', '-3,3,-3', '--json']
    assert runner.invoke(app, argv).stdout == runner.invoke(app, argv).stdout


def test_words_rejects_other_knots(runner):
    result = runner.invoke(app, ['words', '--pretzel', '2,3,3'])
    assert result.exit_code == 2


def test_separable_commutator(runner):
    result = runner.invoke(
        app, ['separable', '--rank', '2', '--word', 'x y x^-1 y^-1']
    )
    assert result.exit_code == 0
    assert 'DISKBUSTING' in result.stdout


def test_separable_primitive_exits_negative(runner):
    result = runner.invoke(app, ['separable', '--rank', '2', '--word', 'x'])
    assert result.exit_code == 1
    assert 'SEPARABLE' in result.stdout


def test_components(runner):
    result = runner.invoke(app, ['components', '4,3,3,3'])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == '1'


def test_homology_of_the_pretzel_relators(runner):
    result = runner.invoke(app, ['homology', '--pretzel', '3,3,3'])
    assert result.exit_code == 0
    assert 'H1 = Z' in result.stdout


def test_homology_with_torsion(runner):
    result = runner.invoke(app, ['homology', '--rank', '1', '--word', 'x^2'])
    assert 'H1 = Z/2' in result.stdout


def test_mha_pass_and_fail(runner):
    passed = runner.invoke(
        app, ['mha', '--rank', '2', '--word', 'x y x^-1 y^-1']
    )
    assert passed.exit_code == 0
    assert 'overall: Pass' in passed.stdout
    failed = runner.invoke(app, ['mha', '--rank', '2', '--word', 'x'])
    assert failed.exit_code == 1


def test_graph_writes_dot(runner, tmp_path):
    result = runner.invoke(
        app,
        ['graph', '--rank', '2', '--word', 'x y', '--dot', str(tmp_path)],
    )
    assert result.exit_code == 0
    assert (tmp_path / 'whitehead.gv').read_text().startswith('graph')


def test_cover_of_the_pretzel_words(runner):
    result = runner.invoke(app, ['cover', '--pretzel', '3,3,3'])
    assert result.exit_code == 0
    assert 'lifted basis: X1 X2 X3 Z1 Z2 Z3 Y3' in result.stdout
    assert 'D1_3 = X1^-2 X2^2 Z2^-1 X2 Z2^-1 X1^-1 Z1' in result.stdout


def test_cover_reports_open_paths(runner):
    result = runner.invoke(app, ['cover', '--rank', '3', '--word', 'x'])
    assert 'c1: open path from sheet 1 to sheet 2' in result.stdout


def test_cover_rejects_a_short_hom(runner):
    result = runner.invoke(
        app, ['cover', '--rank', '3', '--word', 'x', '--hom', '1,1']
    )
    assert result.exit_code == 2


def test_diagram_commands(runner, torus_file, tmp_path):
    valid = runner.invoke(app, ['validate', '--diagram', str(torus_file)])
    assert valid.exit_code == 0
    assert valid.stdout.splitlines()[-1] == 'valid'

    dual_path = tmp_path / 'dual.json'
    dual = runner.invoke(
        app,
        [
            'dual',
            '--diagram',
            str(torus_file),
            '--disk',
            'c',
            '--out',
            str(dual_path),
        ],
    )
    assert dual.exit_code == 0
    assert 'x = c^-1' in dual.stdout
    assert dual_path.exists()

    squeezed = runner.invoke(
        app, ['compress', '--diagram', str(torus_file), '--disk', 'x']
    )
    assert 'warning: curve c vanished' in squeezed.stdout

    report = runner.invoke(
        app, ['stabilization', '--diagram', str(torus_file)]
    )
    assert 'stabilizing pair: c / x' in report.stdout


def test_invalid_diagram_exits_negative(runner, tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text(
        json.dumps({'disks': ['x'], 'holes': {'x+': [0], 'x-': [0]}}),
        encoding='utf-8',
    )
    result = runner.invoke(app, ['validate', '--diagram', str(path)])
    assert result.exit_code == 1
    assert 'point x+:0 is the endpoint of 0 arcs' in result.stdout


def test_realize_then_validate(runner, tmp_path):
    path = tmp_path / 'realized.json'
    realized = runner.invoke(
        app,
        ['realize', '--rank', '2', '--word', 'x y', '--out', str(path)],
    )
    assert realized.exit_code == 0
    assert 'genus 2' in realized.stdout
    checked = runner.invoke(app, ['validate', '--diagram', str(path)])
    assert checked.exit_code == 0


def test_pipeline_precondition_exit(runner):
    result = runner.invoke(
        app, ['pipeline', '--pretzel', '3,3,3', '--slope', '2/2']
    )
    assert result.exit_code == 2


@pytest.mark.parametrize(
    'argv',
    [
        ['bogus'],
        ['separable', '--word', 'x'],
        ['separable'],
        ['separable', '--rank', '2', '--word', 'x q'],
        ['components', '3,,3'],
    ],
)
def test_input_errors(runner, argv):
    assert runner.invoke(app, argv).exit_code == 2


def test_run_reports_the_outcome():
    outcome = run(['components', '4,3,3,3'])
    assert outcome.exit_code == 0
    assert outcome.summary.splitlines()[-1] == '1'


def test_run_negative_and_input_errors():
    assert run(['separable', '--rank', '2', '--word', 'x']).exit_code == 1
    assert run(['bogus']).exit_code == 2


def test_run_records_dot_paths(tmp_path):
    outcome = run(
        ['separable', '--rank', '2', '--word', 'x y', '--dot', str(tmp_path)]
    )
    assert outcome.dot_paths == (
        str(tmp_path / 'initial.gv'),
        str(tmp_path / 'terminal.gv'),
    )


@pytest.mark.parametrize(
    'argv',
    [
        ['bogus'],
        ['separable', '--rank', '2'],
        ['components', '3,,3'],
        ['separable', '--rank', '2', '--word', 'x', '--no-such-flag'],
    ],
)
def test_run_maps_usage_errors_to_input_error(argv):
    assert run(argv).exit_code == 2


def test_run_does_not_raise_on_help():
    assert run(['--help']).exit_code == 0
