import typer

from heegaard_lift.resources.base.cli import (
    DiagramOption,
    DiskOption,
    JsonOption,
    OutOption,
    PretzelOption,
    RankOption,
    SystemOption,
    WordOption,
    emit,
    finish,
    guarded,
)
from heegaard_lift.resources.base.exceptions import ExitStatus
from heegaard_lift.resources.diagram.model import HeegaardDiagram
from heegaard_lift.resources.diagram.realize import realize_diagram
from heegaard_lift.resources.diagram.service import (
    compress,
    curve_words,
    dualize,
    dump_diagram,
    load_diagram,
    stabilization_report,
    validate_diagram,
)
from heegaard_lift.resources.freegroup.controller import curves_from_options
from heegaard_lift.resources.freegroup.service import format_word

router = typer.Typer()


def _word_lines(d: HeegaardDiagram) -> list[str]:
    return [
        f'{name} = {format_word(word)}'
        for name, word in curve_words(d, validate=False).items()
    ]


def _emit_diagram(d: HeegaardDiagram, lines, as_json, out) -> None:
    if out is not None:
        out.write_text(dump_diagram(d), encoding='utf-8')
    emit(
        d.model_dump(mode='json', exclude={'genus'}),
        [f'genus {d.genus}', *lines],
        as_json,
    )


@router.command('dual')
def dual_command(
    diagram: DiagramOption,
    disk: DiskOption,
    out: OutOption = None,
    as_json: JsonOption = False,
):
    """Cuts along the named curves; the old disks become curves."""
    with guarded():
        dual = dualize(load_diagram(diagram), disk)
        _emit_diagram(dual, _word_lines(dual), as_json, out)


@router.command('compress')
def compress_command(
    diagram: DiagramOption,
    disk: DiskOption,
    out: OutOption = None,
    as_json: JsonOption = False,
):
    """Removes the named disks and splices the arcs through them."""
    with guarded():
        result = compress(load_diagram(diagram), disk)
        lines = _word_lines(result.diagram)
        lines += [f'warning: {text}' for text in result.warnings]
        _emit_diagram(result.diagram, lines, as_json, out)


@router.command('stabilization')
def stabilization_command(
    diagram: DiagramOption,
    as_json: JsonOption = False,
):
    """Curve/disk pairs meeting once after bigon removal."""
    with guarded():
        report = stabilization_report(load_diagram(diagram))
        lines = [f'bigons removed: {report.bigons_removed}']
        lines += [f'stabilizing pair: {c} / {d}' for c, d in report.flagged]
        lines.append(f'caveat: {report.caveat}')
        emit(report, lines, as_json)


@router.command('realize')
def realize_command(
    rank: RankOption = None,
    word: WordOption = None,
    system: SystemOption = None,
    pretzel: PretzelOption = None,
    out: OutOption = None,
    as_json: JsonOption = False,
):
    """Embedded diagram whose curves read the given words."""
    with guarded():
        curves = curves_from_options(rank, word, system, pretzel)
        realized = realize_diagram(curves)
        _emit_diagram(realized, _word_lines(realized), as_json, out)


@router.command('validate')
def validate_command(
    diagram: DiagramOption,
    as_json: JsonOption = False,
):
    """Checks diagram invariants; violations exit 1."""
    with guarded():
        violations = validate_diagram(load_diagram(diagram))
        emit(
            {'valid': not violations, 'violations': violations},
            violations or ['valid'],
            as_json,
        )
    if violations:
        finish(ExitStatus.NEGATIVE)
