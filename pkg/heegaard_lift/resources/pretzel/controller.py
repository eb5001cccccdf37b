from typing import Annotated

import typer

from heegaard_lift.resources.base.cli import (
    JsonOption,
    ParallelOption,
    emit,
    finish,
    guarded,
    int_list,
    slope_pair,
)
from heegaard_lift.resources.base.exceptions import ExitStatus
from heegaard_lift.resources.factor.controller import mha_lines
from heegaard_lift.resources.freegroup.service import format_word
from heegaard_lift.resources.pretzel.enums import OverallStatus
from heegaard_lift.resources.pretzel.pipeline import get_theorem1_pipeline
from heegaard_lift.resources.pretzel.service import (
    component_count,
    make_params,
    pretzel_words,
)

router = typer.Typer()

RequiredPretzel = Annotated[
    str, typer.Option('--pretzel', help='Tangles, e.g. 3,3,3.')
]

CERTIFICATE_EXIT = {
    OverallStatus.PASS: ExitStatus.OK,
    OverallStatus.FAIL: ExitStatus.NEGATIVE,
    OverallStatus.INCONCLUSIVE: ExitStatus.INCONCLUSIVE,
}


@router.command('words')
def words_command(pretzel: RequiredPretzel, as_json: JsonOption = False):
    """Disk boundaries and longitude of a (p, +-3, q) pretzel knot."""
    with guarded():
        params = make_params(int_list(pretzel))
        member = params.normalize()
        words = {
            name: format_word(word)
            for name, word in pretzel_words(params).items()
        }
        emit(
            {'family': member.model_dump(mode='json'), 'words': words},
            [f'{name} = {text}' for name, text in words.items()],
            as_json,
        )


@router.command('components')
def components_command(
    tangles: Annotated[str, typer.Argument(help='e.g. 4,3,3,3')],
    as_json: JsonOption = False,
):
    """Number of components of a pretzel link."""
    with guarded():
        entries = int_list(tangles)
        count = component_count(entries)
        emit({'tangles': entries, 'components': count}, [str(count)], as_json)


@router.command('pipeline')
def pipeline_command(
    pretzel: RequiredPretzel,
    slope: Annotated[
        str, typer.Option('--slope', help='Cover slope M/N.')
    ] = '2/1',
    parallel: ParallelOption = None,
    as_json: JsonOption = False,
):
    """Essential-surface certificate for the filling of slope 3M/N."""
    with guarded():
        params = make_params(int_list(pretzel))
        certificate = get_theorem1_pipeline().run(
            params, slope_pair(slope), parallel
        )
        lines = [
            f'case {int(certificate.family.case)} '
            f'(normalization: {certificate.family.normalization.describe()})',
            f'base slope {certificate.base_slope.text()}, '
            f'cover slope {certificate.cover_slope.text()}',
            f'H1 = {certificate.homology.describe()}',
            *[
                f'disjoint: {{{", ".join(pair.curves)}}} / '
                f'{{{", ".join(pair.disks)}}}'
                for pair in certificate.weak_reducibility
            ],
            'handlebody side:',
            *mha_lines(certificate.handlebody_side),
            'dual side:',
            *mha_lines(certificate.dual_side),
            *[f'warning: {text}' for text in certificate.warnings],
            f'certificate: {certificate.overall.value}',
        ]
        emit(certificate, lines, as_json)
    finish(CERTIFICATE_EXIT[certificate.overall])
