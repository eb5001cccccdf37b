import sys
from typing import Sequence

import typer

from heegaard_lift.resources.base.cli import (
    CommandOutcome,
    recording,
)
from heegaard_lift.resources.base.exceptions import (
    ExitStatus,
    HeegaardLiftError,
)
from heegaard_lift.resources.cover.controller import router as cover_router
from heegaard_lift.resources.diagram.controller import (
    router as diagram_router,
)
from heegaard_lift.resources.factor.controller import router as factor_router
from heegaard_lift.resources.freegroup.controller import (
    router as freegroup_router,
)
from heegaard_lift.resources.pretzel.controller import (
    router as pretzel_router,
)
from heegaard_lift.resources.whitehead.controller import (
    router as whitehead_router,
)
from heegaard_lift.settings import get_settings
from heegaard_lift.utils import configure_logging

app = typer.Typer(
    name='heegaard-lift',
    help='Whitehead graphs, cyclic covers and multi-handle addition '
    'certificates for Heegaard splittings of knot exteriors.',
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)

for router in (
    pretzel_router,
    freegroup_router,
    whitehead_router,
    factor_router,
    cover_router,
    diagram_router,
):
    app.registered_commands.extend(router.registered_commands)


@app.callback()
def setup() -> None:
    configure_logging(get_settings())


def run(argv: Sequence[str]) -> CommandOutcome:
    """Runs one command line and reports its exit status and output."""
    with recording() as recorder:
        try:
            app(list(argv), prog_name='heegaard-lift')
            code = ExitStatus.OK
        except SystemExit as exc:
            code = exc.code
        except HeegaardLiftError as exc:
            typer.echo(f'error: {exc.detail}', err=True)
            code = exc.status_code
        return CommandOutcome(
            exit_code=int(code or 0),
            summary='\n'.join(recorder.lines),
            report_path=recorder.report_path,
            dot_paths=tuple(recorder.dot_paths),
        )


def main() -> None:
    sys.exit(run(sys.argv[1:]).exit_code)
