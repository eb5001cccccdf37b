from pathlib import Path
from typing import Annotated, Optional

import typer

from heegaard_lift.resources.base.cli import (
    JsonOption,
    PretzelOption,
    RankOption,
    SystemOption,
    WordOption,
    emit,
    finish,
    guarded,
    note_dot,
)
from heegaard_lift.resources.base.exceptions import ExitStatus
from heegaard_lift.resources.freegroup.controller import curves_from_options
from heegaard_lift.resources.whitehead.dot import write_dot
from heegaard_lift.resources.whitehead.enums import Verdict
from heegaard_lift.resources.whitehead.service import (
    analyze,
    build_graph,
    get_whitehead_service,
)

router = typer.Typer()

DotOption = Annotated[
    Optional[Path],
    typer.Option('--dot', file_okay=False, help='Write DOT files here.'),
]


@router.command('graph')
def graph_command(
    rank: RankOption = None,
    word: WordOption = None,
    system: SystemOption = None,
    pretzel: PretzelOption = None,
    dot: DotOption = None,
    as_json: JsonOption = False,
):
    """Whitehead graph of a curve system, with its cut structure."""
    with guarded():
        curves = curves_from_options(rank, word, system, pretzel)
        graph = build_graph(curves)
        analysis = analyze(graph)
        names = graph.basis.vertex_name
        report = {
            'vertices': [names(v) for v in graph.vertices],
            'edges': [
                [names(edge.u), names(edge.v), edge.curve, edge.position]
                for edge in graph.edges
            ],
            'components': [
                [names(v) for v in part] for part in analysis.components
            ],
            'cut_vertices': [names(v) for v in analysis.cut_vertices],
            'valence_one': [
                names(v) for v in analysis.valence_one_vertices
            ],
            'bridge_generators': [
                graph.basis.names[g] for g in analysis.bridge_patterns
            ],
        }
        if dot is not None:
            note_dot(write_dot(graph, dot, 'whitehead'))
        emit(
            report,
            [
                f'vertices {len(graph.vertices)}, edges {len(graph.edges)}',
                f'components {len(analysis.components)}',
                'cut vertices '
                + (' '.join(report['cut_vertices']) or 'none'),
            ],
            as_json,
        )


@router.command('separable')
def separable_command(
    rank: RankOption = None,
    word: WordOption = None,
    system: SystemOption = None,
    pretzel: PretzelOption = None,
    dot: DotOption = None,
    no_fast_paths: Annotated[
        bool, typer.Option('--no-fast-paths', help='Moves only.')
    ] = False,
    as_json: JsonOption = False,
):
    """Whitehead reduction: SEPARABLE exits 1, DISKBUSTING exits 0."""
    with guarded():
        curves = curves_from_options(rank, word, system, pretzel)
        verdict = get_whitehead_service().decide_separability(
            curves, fast_paths=not no_fast_paths
        )
        if dot is not None:
            note_dot(write_dot(build_graph(curves), dot, 'initial'))
            note_dot(
                write_dot(build_graph(verdict.terminal), dot, 'terminal')
            )
        lines = [verdict.verdict.value]
        if verdict.fast_path is not None:
            lines.append(f'fast path {verdict.fast_path.value}')
        lines.append(
            f'complexity {verdict.initial_complexity} -> '
            f'{verdict.terminal_complexity} in {len(verdict.trace)} moves'
        )
        if verdict.exhausted:
            lines.append('level search exhausted; verdict not certified')
        emit(verdict, lines, as_json)
    if verdict.exhausted:
        finish(ExitStatus.INCONCLUSIVE)
    if verdict.verdict == Verdict.SEPARABLE:
        finish(ExitStatus.NEGATIVE)
