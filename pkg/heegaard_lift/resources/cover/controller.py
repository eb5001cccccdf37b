from pathlib import Path
from typing import Annotated, Optional

import typer

from heegaard_lift.resources.base.cli import (
    JsonOption,
    OutOption,
    PretzelOption,
    RankOption,
    SystemOption,
    WordOption,
    emit,
    guarded,
    int_list,
)
from heegaard_lift.resources.base.exceptions import CoverError
from heegaard_lift.resources.cover.diagram_lift import (
    lift_diagram,
    lifted_curve_name,
)
from heegaard_lift.resources.cover.model import CyclicHom, OpenPath
from heegaard_lift.resources.cover.service import (
    cover_basis,
    lift_all,
    lift_word,
)
from heegaard_lift.resources.diagram.service import (
    diagram_basis,
    dump_diagram,
    load_diagram,
)
from heegaard_lift.resources.freegroup.controller import curves_from_options
from heegaard_lift.resources.freegroup.service import format_word
from heegaard_lift.settings import get_settings

router = typer.Typer()


def make_hom(rank: int, order: int, values: Optional[str]) -> CyclicHom:
    if values is None:
        return CyclicHom.constant(rank, order, 1)
    residues = int_list(values)
    if len(residues) != rank:
        raise CoverError(f'--hom needs {rank} values, got {len(residues)}')
    try:
        return CyclicHom(
            modulus=order, values=tuple(v % order for v in residues)
        )
    except ValueError as exc:
        raise CoverError(f'Invalid hom: {exc}') from exc


@router.command('cover')
def cover_command(
    rank: RankOption = None,
    word: WordOption = None,
    system: SystemOption = None,
    pretzel: PretzelOption = None,
    diagram: Annotated[
        Optional[Path],
        typer.Option('--diagram', exists=True, dir_okay=False),
    ] = None,
    cover_order: Annotated[
        Optional[int], typer.Option('--cover-order', min=1)
    ] = None,
    tree: Annotated[Optional[str], typer.Option('--tree')] = None,
    hom: Annotated[
        Optional[str],
        typer.Option('--hom', help='Residue per generator, e.g. 1,1,1.'),
    ] = None,
    out: OutOption = None,
    as_json: JsonOption = False,
):
    """Lifts words, or a whole diagram, to the n-fold cyclic cover."""
    settings = get_settings()
    order = cover_order or settings.DEFAULT_COVER_ORDER
    tree_name = tree or settings.DEFAULT_TREE_GENERATOR
    with guarded():
        if diagram is not None:
            base = load_diagram(diagram)
            basis = diagram_basis(base)
            lifted = lift_diagram(
                base, make_hom(basis.rank, order, hom), tree_name
            )
            if out is not None:
                out.write_text(dump_diagram(lifted.diagram), encoding='utf-8')
            emit(
                lifted.model_dump(mode='json', exclude={'diagram'}),
                [
                    f'{item.name} = {item.word}'
                    for item in lifted.curves
                ]
                + [f'warning: {text}' for text in lifted.warnings],
                as_json,
            )
            return

        curves = curves_from_options(rank, word, system, pretzel)
        basis = next(iter(curves.values())).basis
        ctx = cover_basis(basis, make_hom(basis.rank, order, hom), tree_name)
        closed: dict[str, str] = {}
        open_paths: dict[str, dict] = {}
        for name, curve in curves.items():
            if ctx.hom.of_codes(curve.letters) == 0:
                for label, lift in lift_all(curve, ctx).items():
                    closed[lifted_curve_name(name, label)] = format_word(lift)
                continue
            path = lift_word(curve, ctx, 1)
            assert isinstance(path, OpenPath)
            open_paths[name] = path.model_dump(mode='json')
        lines = [f'lifted basis: {" ".join(ctx.lifted.names)}']
        lines += [f'{name} = {text}' for name, text in closed.items()]
        lines += [
            f'{name}: open path from sheet {path["start_sheet"]} '
            f'to sheet {path["end_sheet"]}'
            for name, path in open_paths.items()
        ]
        emit(
            {'context': ctx.describe(), 'lifts': closed, 'open': open_paths},
            lines,
            as_json,
        )
