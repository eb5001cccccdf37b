from pathlib import Path
from typing import Optional

import typer

from heegaard_lift.resources.base.cli import (
    JsonOption,
    PretzelOption,
    RankOption,
    SystemOption,
    WordOption,
    emit,
    guarded,
    int_list,
)
from heegaard_lift.resources.freegroup.model import CyclicWord
from heegaard_lift.resources.freegroup.service import (
    default_basis,
    homology,
    load_system,
    parse_cyclic,
)
from heegaard_lift.resources.pretzel.service import pretzel_system

router = typer.Typer()


def curves_from_options(
    rank: Optional[int],
    words: Optional[list[str]],
    system: Optional[Path],
    pretzel: Optional[str],
) -> dict[str, CyclicWord]:
    """Reads the curve system from exactly one of the input options."""
    given = [bool(words), system is not None, pretzel is not None]
    if sum(given) != 1:
        raise typer.BadParameter(
            'give exactly one of --word, --system or --pretzel'
        )
    if words:
        if rank is None:
            raise typer.BadParameter('--word needs --rank')
        basis = default_basis(rank)
        return {
            f'c{index}': parse_cyclic(text, basis)
            for index, text in enumerate(words, start=1)
        }
    if system is not None:
        return load_system(system)[1]
    return pretzel_system(int_list(pretzel or ''))


@router.command('homology')
def homology_command(
    rank: RankOption = None,
    word: WordOption = None,
    system: SystemOption = None,
    pretzel: PretzelOption = None,
    as_json: JsonOption = False,
):
    """First homology of the group presented by the curves as relators."""
    with guarded():
        curves = curves_from_options(rank, word, system, pretzel)
        if pretzel is not None:
            curves = {
                name: w for name, w in curves.items() if name != 'lambda'
            }
        if not curves:
            raise typer.BadParameter('no relators given')
        basis = next(iter(curves.values())).basis
        result = homology(list(curves.values()), basis)
        emit(
            {
                'homology': result.model_dump(mode='json'),
                'relators': sorted(curves),
            },
            [f'H1 = {result.describe()}'],
            as_json,
        )
