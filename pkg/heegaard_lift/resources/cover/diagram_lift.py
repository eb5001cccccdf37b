"""Lifting whole diagrams to a cyclic cover."""

import logging

from heegaard_lift.resources.cover.model import CoverContext, CyclicHom
from heegaard_lift.resources.cover.schemas import LiftedCurve, LiftedDiagram
from heegaard_lift.resources.cover.service import cover_basis, lift_orbits
from heegaard_lift.resources.diagram.model import (
    Crossing,
    HeegaardDiagram,
    hole_name,
    split_hole,
)
from heegaard_lift.resources.diagram.service import (
    assemble,
    compress,
    crossings_of,
    curve_words,
    diagram_basis,
    ensure_valid,
)
from heegaard_lift.resources.freegroup.service import format_word

logger = logging.getLogger(__name__)


def lifted_curve_name(curve: str, label: int) -> str:
    return f'{curve}_{label}'


def lift_diagram(
    d: HeegaardDiagram, hom: CyclicHom, tree_generator: str | int
) -> LiftedDiagram:
    """
    Lifts every hole, disk and curve of ``d`` to the n sheets of the cover,
    then splices the sheets together along the tree disk lifts
    ``t_1 .. t_(n-1)``. Lifted curves are named ``<curve>_<label>``.
    """
    ensure_valid(d)
    ctx = cover_basis(diagram_basis(d), hom, tree_generator)
    n = ctx.order
    base = ctx.base
    if n == 1:
        return _trivial_lift(d, ctx)

    holes: dict[str, list[int]] = {}
    disks = []
    generators = [g for g in range(base.rank) if g != ctx.tree_generator]
    generators.append(ctx.tree_generator)
    for generator in generators:
        name = base.names[generator]
        for sheet in range(1, n + 1):
            lifted = ctx.lift_name(generator, sheet)
            disks.append(lifted)
            for hole, points in d.holes.items():
                disk, side = split_hole(hole)
                if disk == name:
                    holes[hole_name(lifted, side)] = list(points)

    crossings: dict[str, list[Crossing]] = {}
    origins: dict[str, tuple[str, int, int]] = {}
    for curve, sequence in crossings_of(d).items():
        codes = [(base.index(item.disk) + 1) * item.sign for item in sequence]
        if not codes:
            crossings[curve] = []
            origins[curve] = (curve, n, n)
            continue
        for label, start, letters in lift_orbits(codes, ctx):
            name = lifted_curve_name(curve, label)
            crossings[name] = [
                Crossing(
                    ctx.lift_name(letter.generator, letter.sheet),
                    sequence[index % len(sequence)].point,
                    letter.sign,
                )
                for index, letter in enumerate(letters)
            ]
            origins[name] = (curve, label, start)

    full = assemble(disks, holes, crossings)
    tree = [
        ctx.lift_name(ctx.tree_generator, sheet) for sheet in range(1, n)
    ]
    result = compress(full, tree)
    ensure_valid(result.diagram)
    words = curve_words(result.diagram, validate=False)
    curves = tuple(
        LiftedCurve(
            base_curve=origins[name][0],
            label=origins[name][1],
            start_sheet=origins[name][2],
            name=name,
            word=format_word(word),
        )
        for name, word in words.items()
    )
    logger.info(
        'lifted %d curves to %d sheets, genus %d',
        len(curves),
        n,
        result.diagram.genus,
    )
    return LiftedDiagram(
        context=ctx,
        diagram=result.diagram,
        curves=curves,
        warnings=result.warnings,
    )


def _trivial_lift(d: HeegaardDiagram, ctx: CoverContext) -> LiftedDiagram:
    words = curve_words(d, validate=False)
    return LiftedDiagram(
        context=ctx,
        diagram=d,
        curves=tuple(
            LiftedCurve(
                base_curve=name,
                label=1,
                start_sheet=1,
                name=name,
                word=format_word(word),
            )
            for name, word in words.items()
        ),
    )
