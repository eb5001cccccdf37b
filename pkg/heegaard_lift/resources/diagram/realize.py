"""
Embedded diagrams from curve words.

The hole graph (one vertex per hole, one edge per arc) is embedded in the
plane; parallel arcs run as bands, so each hole's clockwise point order is
fixed by the embedding up to one rotation per disk, the offset of its
gluing. Embeddings are tried starting from the one networkx finds and its
mirror, then every other planar rotation system, and for each one the
offsets are searched until the traced curves read the requested words.
"""

import logging
from collections import Counter
from itertools import permutations, product
from typing import Iterator, Mapping

import networkx as nx

from heegaard_lift.resources.base.exceptions import DiagramError
from heegaard_lift.resources.diagram.model import (
    MINUS,
    PLUS,
    Crossing,
    HeegaardDiagram,
    hole_name,
    split_hole,
)
from heegaard_lift.resources.diagram.service import (
    assemble,
    curve_words,
    validate_diagram,
)
from heegaard_lift.resources.freegroup.model import (
    Basis,
    Code,
    CyclicWord,
    generator_of,
    invert_codes,
)
from heegaard_lift.settings import get_settings

logger = logging.getLogger(__name__)

Strand = tuple[str, int]


class _Layout:
    """Strands of every curve and the hole they start and end at."""

    def __init__(self, basis: Basis, curves: Mapping[str, CyclicWord]):
        self.basis = basis
        self.ends: dict[Strand, tuple[str, str]] = {}
        self.bundles: dict[tuple[str, str], list[Strand]] = {}
        for curve, word in curves.items():
            codes = word.letters
            for index, code in enumerate(codes):
                following = codes[(index + 1) % len(codes)]
                start = self.exit_hole(code)
                end = self.entry_hole(following)
                strand = (curve, index)
                self.ends[strand] = (start, end)
                pair = (min(start, end), max(start, end))
                self.bundles.setdefault(pair, []).append(strand)

    def exit_hole(self, code: Code) -> str:
        name = self.basis.names[generator_of(code)]
        return hole_name(name, PLUS if code > 0 else MINUS)

    def entry_hole(self, code: Code) -> str:
        name = self.basis.names[generator_of(code)]
        return hole_name(name, MINUS if code > 0 else PLUS)

    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_edges_from(self.bundles)
        return graph

    def slots(self, rotation: Mapping[str, list[str]]):
        order: dict[str, list[Strand]] = {}
        position: dict[tuple[Strand, str], int] = {}
        for hole, neighbours in rotation.items():
            sequence: list[Strand] = []
            for neighbour in neighbours:
                pair = (min(hole, neighbour), max(hole, neighbour))
                strands = self.bundles[pair]
                if hole == pair[0]:
                    sequence.extend(strands)
                else:
                    sequence.extend(reversed(strands))
            order[hole] = sequence
            for slot, strand in enumerate(sequence):
                position[(strand, hole)] = slot
        return order, position


def _trace(layout, order, position, offsets, targets: Counter):
    """
    Follows strands through the gluings; returns the traced cycles as
    crossing lists or None as soon as a cycle reads an unwanted word.
    """
    remaining = Counter(targets)
    used: set[Strand] = set()
    cycles = []
    for first in layout.ends:
        if first in used:
            continue
        start_hole = layout.ends[first][0]
        strand, origin = first, start_hole
        crossings: list[tuple[str, int, int]] = []
        codes: list[Code] = []
        while True:
            if strand in used:
                return None
            used.add(strand)
            a, b = layout.ends[strand]
            arrival = b if origin == a else a
            disk, side = split_hole(arrival)
            size, offset = offsets[disk]
            slot = position[(strand, arrival)]
            partner = (offset - slot) % size
            generator = layout.basis.index(disk) + 1
            if side == MINUS:
                codes.append(generator)
                crossings.append((disk, partner, 1))
            else:
                codes.append(-generator)
                crossings.append((disk, slot, -1))
            other = hole_name(disk, PLUS if side == MINUS else MINUS)
            strand = order[other][partner]
            origin = other
            if strand == first and origin == start_hole:
                break
        key = CyclicWord(basis=layout.basis, letters=tuple(codes)).unoriented
        if remaining[key] <= 0:
            return None
        remaining[key] -= 1
        cycles.append((key, codes, crossings))
    return cycles


def _orient(codes, crossings, target: tuple[Code, ...]):
    candidates = [
        (tuple(codes), crossings),
        (
            invert_codes(codes),
            [
                (disk, point, -sign)
                for disk, point, sign in reversed(crossings)
            ],
        ),
    ]
    for letters, sequence in candidates:
        for shift in range(len(letters)):
            if letters[shift:] + letters[:shift] == target:
                return sequence[shift:] + sequence[:shift]
    return None


def _normalized(rotation: Mapping[str, list[str]]) -> tuple:
    """Rotation system with every cyclic order started at its least hole."""
    items = []
    for hole in sorted(rotation):
        order = list(rotation[hole])
        start = order.index(min(order)) if order else 0
        items.append((hole, tuple(order[start:] + order[:start])))
    return tuple(items)


def _is_planar(rotation: Mapping[str, list[str]]) -> bool:
    embedding = nx.PlanarEmbedding()
    embedding.set_data(rotation)
    try:
        embedding.check_structure()
    except nx.NetworkXException:
        return False
    return True


def planar_rotations(graph: nx.Graph) -> Iterator[dict[str, list[str]]]:
    """
    Every planar rotation system of ``graph``: the embedding networkx
    finds and its mirror first, then the rest in a fixed order. Mirror
    pairs are both yielded; they glue into different diagrams.

    Raises:
        DiagramError: the graph is not planar.
    """
    is_planar, embedding = nx.check_planarity(graph)
    if not is_planar:
        raise DiagramError('hole graph is not planar')
    found = {
        hole: list(embedding.neighbors_cw_order(hole)) for hole in graph
    }
    mirrored = {hole: list(reversed(order)) for hole, order in found.items()}
    seen = set()
    for rotation in (found, mirrored):
        key = _normalized(rotation)
        if key not in seen:
            seen.add(key)
            yield rotation

    holes = sorted(graph)
    choices = []
    for hole in holes:
        first, *rest = sorted(graph[hole])
        choices.append([[first, *order] for order in permutations(rest)])
    for picked in product(*choices):
        rotation = dict(zip(holes, picked))
        key = _normalized(rotation)
        if key in seen or not _is_planar(rotation):
            continue
        seen.add(key)
        yield rotation


def realize_diagram(
    curves: Mapping[str, CyclicWord],
    basis: Basis | None = None,
    max_attempts: int | None = None,
) -> HeegaardDiagram:
    """
    Builds an embedded diagram whose curve words are exactly ``curves``.

    Raises:
        DiagramError: the hole graph is not planar, or no gluing of any of
            its planar embeddings reads the requested words.
    """
    if basis is None:
        if not curves:
            raise DiagramError('An empty curve family needs a basis')
        basis = next(iter(curves.values())).basis
    if max_attempts is None:
        max_attempts = get_settings().MAX_REALIZATION_ATTEMPTS
    for word in curves.values():
        if word.basis != basis:
            raise DiagramError('Curves are over different bases')

    layout = _Layout(basis, curves)
    targets = Counter(
        word.unoriented for word in curves.values() if word.letters
    )
    graph = layout.graph()
    disks = [
        name for name in basis.names if hole_name(name, PLUS) in graph
    ]
    attempts = 0
    for system in planar_rotations(graph):
        order, position = layout.slots(system)
        sizes = {disk: len(order[hole_name(disk, PLUS)]) for disk in disks}
        for disk in disks:
            if sizes[disk] != len(order[hole_name(disk, MINUS)]):
                raise DiagramError(f'disk {disk} has unbalanced crossings')
        for chosen in product(*(range(sizes[disk]) for disk in disks)):
            attempts += 1
            if attempts > max_attempts:
                raise DiagramError(
                    f'no realization within {max_attempts} gluings'
                )
            offsets = {
                disk: (sizes[disk], offset)
                for disk, offset in zip(disks, chosen)
            }
            cycles = _trace(layout, order, position, offsets, targets)
            if cycles is None:
                continue
            diagram = _build(basis, curves, cycles, sizes, offsets)
            if diagram is not None:
                logger.info('realized diagram after %d gluings', attempts)
                return diagram
    raise DiagramError('no gluing of any planar embedding reads the words')


def _build(basis, curves, cycles, sizes, offsets):
    pool = list(cycles)
    crossings: dict[str, list[Crossing]] = {}
    for curve, word in curves.items():
        if not word.letters:
            crossings[curve] = []
            continue
        key = word.unoriented
        for index, (cycle_key, codes, sequence) in enumerate(pool):
            if cycle_key != key:
                continue
            oriented = _orient(codes, sequence, word.letters)
            if oriented is None:
                return None
            crossings[curve] = [Crossing(*item) for item in oriented]
            del pool[index]
            break
        else:
            return None

    holes: dict[str, list[int]] = {}
    for name in basis.names:
        size, offset = offsets.get(name, (0, 0))
        holes[hole_name(name, PLUS)] = list(range(size))
        holes[hole_name(name, MINUS)] = [
            (offset - slot) % size for slot in range(size)
        ]
    diagram = assemble(basis.names, holes, crossings)
    if validate_diagram(diagram):
        return None
    words = curve_words(diagram, validate=False)
    if any(words[name].letters != curves[name].letters for name in curves):
        return None
    return diagram
