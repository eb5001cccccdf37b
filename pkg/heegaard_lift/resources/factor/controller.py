import typer

from heegaard_lift.resources.base.cli import (
    JsonOption,
    ParallelOption,
    PretzelOption,
    RankOption,
    SystemOption,
    WordOption,
    emit,
    finish,
    guarded,
)
from heegaard_lift.resources.base.exceptions import ExitStatus
from heegaard_lift.resources.factor.enums import MhaStatus
from heegaard_lift.resources.factor.schemas import MhaReport
from heegaard_lift.resources.factor.service import get_factor_service
from heegaard_lift.resources.freegroup.controller import curves_from_options

router = typer.Typer()

MHA_EXIT = {
    MhaStatus.PASS: ExitStatus.OK,
    MhaStatus.FAIL: ExitStatus.NEGATIVE,
    MhaStatus.INCONCLUSIVE: ExitStatus.INCONCLUSIVE,
}


def mha_lines(report: MhaReport) -> list[str]:
    lines = [
        f'condition 0: {report.condition_0.verdict.value}'
        + (' (exhausted)' if report.condition_0.exhausted else '')
    ]
    for condition in report.conditions:
        for item in condition.subsets:
            why = item.report.criterion.value
            if item.report.note:
                why += f': {item.report.note}'
            lines.append(
                f'condition {condition.p}: {{{", ".join(item.curves)}}} '
                f'vs F_{condition.target_rank}: {item.report.status.value} '
                f'({why})'
            )
    lines.append(f'overall: {report.overall.describe()}')
    return lines


@router.command('mha')
def mha_command(
    rank: RankOption = None,
    word: WordOption = None,
    system: SystemOption = None,
    pretzel: PretzelOption = None,
    parallel: ParallelOption = None,
    as_json: JsonOption = False,
):
    """Multi-handle addition test; Pass 0, Fail 1, Inconclusive 3."""
    with guarded():
        curves = curves_from_options(rank, word, system, pretzel)
        report = get_factor_service().mha_check(curves, parallel)
        emit(report, mha_lines(report), as_json)
    finish(MHA_EXIT[report.overall.status])
