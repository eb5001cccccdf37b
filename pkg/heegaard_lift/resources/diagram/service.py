import json
import logging
from collections import Counter
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from pydantic import ValidationError

from heegaard_lift.resources.base.exceptions import (
    DiagramError,
    HeegaardLiftError,
)
from heegaard_lift.resources.diagram.model import (
    MINUS,
    PLUS,
    Arc,
    CompressResult,
    Crossing,
    HeegaardDiagram,
    IntersectionCount,
    StabilizationReport,
    hole_name,
    opposite,
    split_hole,
)
from heegaard_lift.resources.diagram.ribbon import ARC, ribbon_complex
from heegaard_lift.resources.freegroup.model import Basis, CyclicWord
from heegaard_lift.resources.freegroup.service import make_basis
from heegaard_lift.utils import dump_json

logger = logging.getLogger(__name__)

CrossingMap = dict[str, list[Crossing]]


def assemble(
    disks: Sequence[str],
    holes: Mapping[str, Sequence[int]],
    crossings: Mapping[str, Sequence[Crossing]],
) -> HeegaardDiagram:
    """Builds arcs from per-curve crossing sequences."""
    arcs = []
    for curve, sequence in crossings.items():
        size = len(sequence)
        for index, current in enumerate(sequence):
            following = sequence[(index + 1) % size]
            arcs.append(
                Arc(
                    curve=curve,
                    index=index,
                    ends=(
                        (
                            hole_name(current.disk, current.exit_side),
                            current.point,
                        ),
                        (
                            hole_name(following.disk, following.entry_side),
                            following.point,
                        ),
                    ),
                )
            )
    return HeegaardDiagram(
        disks=tuple(disks),
        holes={name: tuple(points) for name, points in holes.items()},
        arcs=tuple(arcs),
        curves=tuple(crossings),
    )


def _structural_violations(d: HeegaardDiagram) -> list[str]:
    violations = []
    for disk, count in Counter(d.disks).items():
        if count > 1:
            violations.append(f'disk {disk} declared {count} times')
    for name in sorted(d.holes):
        try:
            disk, _ = split_hole(name)
        except ValueError as exc:
            violations.append(str(exc))
            continue
        if disk not in d.disks:
            violations.append(f'hole {name} belongs to no declared disk')
        duplicates = [p for p, n in Counter(d.holes[name]).items() if n > 1]
        if duplicates:
            violations.append(f'hole {name} repeats points {duplicates}')
    for disk in d.disks:
        for side in (PLUS, MINUS):
            if hole_name(disk, side) not in d.holes:
                violations.append(f'missing hole {hole_name(disk, side)}')
        plus, minus = d.hole(disk, PLUS), d.hole(disk, MINUS)
        if set(plus) != set(minus):
            violations.append(f'through_pairing not bijective on disk {disk}')
        elif plus and not _is_reversed(plus, minus):
            violations.append(
                f'through_pairing does not reverse orientation on disk {disk}'
            )

    known = {
        (name, point) for name, points in d.holes.items() for point in points
    }
    usage: Counter = Counter()
    for arc in d.arcs:
        for end in arc.ends:
            end = tuple(end)
            if end not in known:
                violations.append(
                    f'arc {arc.curve}#{arc.index} ends at unknown point '
                    f'{end[0]}:{end[1]}'
                )
            usage[end] += 1
    for end in sorted(known):
        if usage[end] != 1:
            violations.append(
                f'point {end[0]}:{end[1]} is the endpoint of '
                f'{usage[end]} arcs'
            )

    for curve in d.curve_names():
        arcs = d.arcs_of(curve)
        if [arc.index for arc in arcs] != list(range(len(arcs))):
            violations.append(
                f'curve {curve} arc indices do not form a single cyclic order'
            )
            continue
        for index, arc in enumerate(arcs):
            following = arcs[(index + 1) % len(arcs)]
            if not _glued(arc.head, following.tail):
                violations.append(
                    f'curve {curve} does not close up after arc {index}'
                )
    return violations


def _is_reversed(plus: Sequence[int], minus: Sequence[int]) -> bool:
    backwards = list(reversed(minus))
    start = backwards.index(plus[0])
    return backwards[start:] + backwards[:start] == list(plus)


def _glued(head: Sequence, tail: Sequence) -> bool:
    try:
        head_disk, head_side = split_hole(head[0])
        tail_disk, tail_side = split_hole(tail[0])
    except ValueError:
        return False
    return (
        head_disk == tail_disk
        and head_side == opposite(tail_side)
        and head[1] == tail[1]
    )


def validate_diagram(d: HeegaardDiagram) -> list[str]:
    """
    Lists every violated diagram invariant; empty when the diagram is a
    valid embedded curve system.
    """
    violations = _structural_violations(d)
    if violations:
        return violations
    ribbon = ribbon_complex(d)
    if not ribbon.is_embedded():
        violations.append(
            'arcs are not embedded: Euler characteristic '
            f'{ribbon.euler_characteristic} != {2 - 2 * d.genus}'
        )
    return violations


def ensure_valid(d: HeegaardDiagram) -> None:
    violations = validate_diagram(d)
    if violations:
        raise DiagramError('invalid diagram: ' + '; '.join(violations))


def crossings_of(d: HeegaardDiagram) -> CrossingMap:
    """Per-curve crossing sequences read off the arc tails."""
    crossings: CrossingMap = {}
    for curve in d.curve_names():
        sequence = []
        for arc in d.arcs_of(curve):
            disk, side = split_hole(arc.tail[0])
            sign = 1 if side == PLUS else -1
            sequence.append(Crossing(disk, arc.tail[1], sign))
        crossings[curve] = sequence
    return crossings


def diagram_basis(d: HeegaardDiagram) -> Basis:
    return make_basis(d.disks)


def _word(basis: Basis, sequence: Iterable[Crossing]) -> CyclicWord:
    return CyclicWord.from_codes(
        basis,
        [(basis.index(item.disk) + 1) * item.sign for item in sequence],
    )


def curve_word(
    d: HeegaardDiagram, curve: str, validate: bool = True
) -> CyclicWord:
    """
    Reads a curve as a cyclic word in the disks: a passage from the minus
    side to the plus side of disk g reads g, the reverse reads g^-1.
    """
    if curve not in d.curve_names():
        raise DiagramError(f'Unknown curve {curve!r}')
    if validate:
        ensure_valid(d)
    return _word(diagram_basis(d), crossings_of(d)[curve])


def curve_words(
    d: HeegaardDiagram, validate: bool = True
) -> dict[str, CyclicWord]:
    if validate:
        ensure_valid(d)
    basis = diagram_basis(d)
    return {
        curve: _word(basis, sequence)
        for curve, sequence in crossings_of(d).items()
    }


def _drop_points(
    holes: dict[str, list[int]], removed: set[tuple[str, int]]
) -> dict[str, list[int]]:
    kept = {}
    for name, points in holes.items():
        disk, _ = split_hole(name)
        kept[name] = [p for p in points if (disk, p) not in removed]
    return kept


def restrict_curves(
    d: HeegaardDiagram, names: Sequence[str]
) -> HeegaardDiagram:
    """Keeps only the named curves and the hole points they use."""
    crossings = crossings_of(d)
    for name in names:
        if name not in crossings:
            raise DiagramError(f'Unknown curve {name!r}')
    kept = {name: crossings[name] for name in names}
    used = {(item.disk, item.point) for seq in kept.values() for item in seq}
    holes = {
        name: [p for p in points if (split_hole(name)[0], p) in used]
        for name, points in d.holes.items()
    }
    return assemble(d.disks, holes, kept)


def compress(d: HeegaardDiagram, disks: Sequence[str]) -> CompressResult:
    """
    Deletes the named hole pairs and splices every arc through them.

    Curves left without any crossing vanish with a warning.
    """
    removed = set(disks)
    unknown = removed - set(d.disks)
    if unknown:
        raise DiagramError(f'Unknown disks {sorted(unknown)}')
    if not removed:
        return CompressResult(diagram=d)
    warnings = []
    crossings = {}
    for curve, sequence in crossings_of(d).items():
        spliced = [item for item in sequence if item.disk not in removed]
        if sequence and not spliced:
            warnings.append(
                f'curve {curve} vanished after compression '
                '(trivial or boundary-parallel candidate)'
            )
            continue
        crossings[curve] = spliced
    holes = {
        name: list(points)
        for name, points in d.holes.items()
        if split_hole(name)[0] not in removed
    }
    remaining = [disk for disk in d.disks if disk not in removed]
    for warning in warnings:
        logger.warning(warning)
    return CompressResult(
        diagram=assemble(remaining, holes, crossings),
        warnings=tuple(warnings),
    )


def dualize(d: HeegaardDiagram, new_disks: Sequence[str]) -> HeegaardDiagram:
    """
    Cuts the surface along ``new_disks`` instead of the current disks.

    The plus side of a new disk is the left of its curve, so its plus hole
    lists crossings in traversal order and its minus hole in reverse.
    Every old disk boundary becomes a curve, read clockwise around its
    plus hole.
    """
    ensure_valid(d)
    if len(set(new_disks)) != len(new_disks):
        raise DiagramError('new disks must be distinct curves')
    crossings = crossings_of(d)
    for name in new_disks:
        if name not in crossings:
            raise DiagramError(f'Unknown curve {name!r}')
    if set(new_disks) & set(d.disks):
        raise DiagramError('new disk names collide with current disks')

    located: dict[tuple[str, int], tuple[str, int, int]] = {}
    for name in new_disks:
        for position, item in enumerate(crossings[name]):
            located[(item.disk, item.point)] = (name, position, item.sign)

    holes: dict[str, list[int]] = {}
    for name in new_disks:
        positions = list(range(len(crossings[name])))
        holes[hole_name(name, PLUS)] = positions
        holes[hole_name(name, MINUS)] = list(reversed(positions))

    dual: CrossingMap = {}
    for disk in d.disks:
        sequence = []
        for point in d.hole(disk, PLUS):
            found = located.get((disk, point))
            if found is None:
                continue
            curve, position, sign = found
            sequence.append(Crossing(curve, position, -sign))
        dual[disk] = sequence
    return assemble(new_disks, holes, dual)


def _find_bigon(d: HeegaardDiagram) -> tuple[str, int] | None:
    ribbon = ribbon_complex(d)
    for face in ribbon.faces:
        if len(face) != 2:
            continue
        kinds = sorted(ribbon.darts[item].kind for item in face)
        if kinds.count(ARC) != 1:
            continue
        arc = next(
            ribbon.darts[i] for i in face if ribbon.darts[i].kind == ARC
        )
        return arc.curve or '', arc.index or 0
    return None


def stabilization_report(d: HeegaardDiagram) -> StabilizationReport:
    """
    Intersection counts of every (curve, disk) pair after removing
    innermost bigons until none is left.
    """
    ensure_valid(d)
    removed = 0
    while (bigon := _find_bigon(d)) is not None:
        curve, index = bigon
        crossings = crossings_of(d)
        sequence = crossings[curve]
        size = len(sequence)
        first, second = sequence[index], sequence[(index + 1) % size]
        dropped = {(first.disk, first.point), (second.disk, second.point)}
        crossings[curve] = [
            item for item in sequence if (item.disk, item.point) not in dropped
        ]
        holes = _drop_points(
            {name: list(points) for name, points in d.holes.items()}, dropped
        )
        d = assemble(d.disks, holes, crossings)
        removed += 1
        logger.debug('removed bigon of %s at arc %d', curve, index)

    pairs = []
    for curve, sequence in crossings_of(d).items():
        counts = Counter(item.disk for item in sequence)
        pairs.extend(
            IntersectionCount(curve=curve, disk=disk, count=counts[disk])
            for disk in d.disks
        )
    return StabilizationReport(pairs=tuple(pairs), bigons_removed=removed)


def load_diagram(path: Path) -> HeegaardDiagram:
    try:
        raw = json.loads(Path(path).read_text(encoding='utf-8'))
        return HeegaardDiagram.model_validate(raw)
    except (OSError, json.JSONDecodeError, ValidationError) as exc:
        raise HeegaardLiftError(f'Cannot read diagram file {path}: {exc}')


def dump_diagram(d: HeegaardDiagram) -> str:
    return dump_json(d.model_dump(mode='json', exclude={'genus'}))
