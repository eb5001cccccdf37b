"""Plumbing shared by every command router."""

from contextlib import contextmanager
from contextvars import ContextVar
from pathlib import Path
from typing import Annotated, Iterable, Optional

import typer
from pydantic import BaseModel

from heegaard_lift.resources.base.exceptions import (
    ExitStatus,
    HeegaardLiftError,
)
from heegaard_lift.resources.base.schemas import FrozenModel, ReportHeader
from heegaard_lift.settings import get_settings
from heegaard_lift.utils import dump_json, parse_int_list


class CommandOutcome(FrozenModel):
    exit_code: int
    summary: str = ''
    report_path: Optional[str] = None
    dot_paths: tuple[str, ...] = ()


class _Recorder:
    def __init__(self):
        self.lines: list[str] = []
        self.report_path: str | None = None
        self.dot_paths: list[str] = []


_recorder: ContextVar[_Recorder | None] = ContextVar('recorder', default=None)


@contextmanager
def recording():
    recorder = _Recorder()
    token = _recorder.set(recorder)
    try:
        yield recorder
    finally:
        _recorder.reset(token)


def note_dot(path: Path) -> None:
    recorder = _recorder.get()
    if recorder is not None:
        recorder.dot_paths.append(str(path))


def header() -> ReportHeader:
    settings = get_settings()
    return ReportHeader.create(settings.APP_VERSION, settings.REPORT_VERSION)


def emit(
    report: BaseModel | dict,
    lines: Iterable[str],
    as_json: bool,
    out: Path | None = None,
) -> None:
    """
    Prints a report: deterministic JSON with the version header embedded,
    or the header line followed by the human summary.
    """
    recorder = _recorder.get()
    if as_json:
        payload = (
            report.model_dump(mode='json')
            if isinstance(report, BaseModel)
            else dict(report)
        )
        payload.setdefault('header', header().model_dump(mode='json'))
        text = dump_json(payload)
        if out is not None:
            out.write_text(text, encoding='utf-8')
            if recorder is not None:
                recorder.report_path = str(out)
        else:
            typer.echo(text, nl=False)
        summary = [text.rstrip('\n')]
    else:
        summary = [header().line(), *lines]
        for line in summary:
            typer.echo(line)
    if recorder is not None:
        recorder.lines.extend(summary)


def finish(status: ExitStatus) -> None:
    if status != ExitStatus.OK:
        raise typer.Exit(int(status))


@contextmanager
def guarded():
    """Turns domain errors into a stderr message and their exit status."""
    try:
        yield
    except HeegaardLiftError as exc:
        typer.echo(f'error: {exc.detail}', err=True)
        raise typer.Exit(int(exc.status_code)) from exc


def int_list(text: str) -> list[int]:
    try:
        return parse_int_list(text)
    except ValueError as exc:
        raise typer.BadParameter(str(exc)) from exc


def slope_pair(text: str) -> tuple[int, int]:
    numerator, _, denominator = text.partition('/')
    try:
        return int(numerator), int(denominator or '1')
    except ValueError as exc:
        raise typer.BadParameter(f'Malformed slope {text!r}') from exc


RankOption = Annotated[
    Optional[int], typer.Option('--rank', help='Rank of the default basis.')
]
WordOption = Annotated[
    Optional[list[str]],
    typer.Option('--word', help='Cyclic word; repeat for a system.'),
]
SystemOption = Annotated[
    Optional[Path],
    typer.Option('--system', exists=True, dir_okay=False, help='System file.'),
]
DiagramOption = Annotated[
    Path,
    typer.Option('--diagram', exists=True, dir_okay=False, help='Diagram.'),
]
PretzelOption = Annotated[
    Optional[str],
    typer.Option('--pretzel', help='Tangles, e.g. 3,3,3.'),
]
JsonOption = Annotated[
    bool, typer.Option('--json', help='Print the JSON report.')
]
OutOption = Annotated[
    Optional[Path],
    typer.Option('--out', dir_okay=False, help='Write JSON here.'),
]
ParallelOption = Annotated[
    Optional[bool],
    typer.Option(
        '--parallel/--sequential', help='Evaluate subsets concurrently.'
    ),
]
DiskOption = Annotated[
    list[str], typer.Option('--disk', help='Disk or curve name; repeat.')
]
