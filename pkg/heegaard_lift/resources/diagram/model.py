from typing import NamedTuple, Optional

from pydantic import Field, computed_field

from heegaard_lift.resources.base.schemas import FrozenModel

PLUS = '+'
MINUS = '-'

HolePoint = tuple[str, int]


def hole_name(disk: str, side: str) -> str:
    return f'{disk}{side}'


def split_hole(name: str) -> tuple[str, str]:
    if len(name) < 2 or name[-1] not in {PLUS, MINUS}:
        raise ValueError(f'Hole name {name!r} must end in + or -')
    return name[:-1], name[-1]


def opposite(side: str) -> str:
    return MINUS if side == PLUS else PLUS


class Crossing(NamedTuple):
    """One passage of a curve through a disk; sign +1 is minus -> plus."""

    disk: str
    point: int
    sign: int

    @property
    def exit_side(self) -> str:
        return PLUS if self.sign > 0 else MINUS

    @property
    def entry_side(self) -> str:
        return MINUS if self.sign > 0 else PLUS


class Arc(FrozenModel):
    curve: str
    index: int = Field(ge=0)
    ends: tuple[tuple[str, int], tuple[str, int]]

    @property
    def tail(self) -> HolePoint:
        return self.ends[0]

    @property
    def head(self) -> HolePoint:
        return self.ends[1]


class HeegaardDiagram(FrozenModel):
    """
    Sphere with paired holes: each disk contributes ``X+`` and ``X-``
    holes whose points are listed clockwise. Point ``i`` of ``X+`` is glued
    to point ``i`` of ``X-``. Arcs run from the exit point of one crossing
    to the entry point of the next along their curve.
    """

    disks: tuple[str, ...] = ()
    holes: dict[str, tuple[int, ...]] = Field(default_factory=dict)
    arcs: tuple[Arc, ...] = ()
    curves: tuple[str, ...] = ()

    @computed_field
    @property
    def genus(self) -> int:
        return len(self.disks)

    def curve_names(self) -> tuple[str, ...]:
        names = list(self.curves)
        for arc in self.arcs:
            if arc.curve not in names:
                names.append(arc.curve)
        return tuple(names)

    def hole(self, disk: str, side: str) -> tuple[int, ...]:
        return self.holes.get(hole_name(disk, side), ())

    def through_pairing(self, disk: str) -> dict[int, int]:
        return {point: point for point in self.hole(disk, PLUS)}

    def arcs_of(self, curve: str) -> list[Arc]:
        return sorted(
            (arc for arc in self.arcs if arc.curve == curve),
            key=lambda arc: arc.index,
        )


class Dart(FrozenModel):
    """Half-edge of the ribbon complex."""

    kind: str
    hole: str
    point: Optional[int] = None
    curve: Optional[str] = None
    index: Optional[int] = None


class RibbonComplex(FrozenModel):
    """
    Cellular structure of the glued surface: vertices are crossings,
    edges are arcs plus hole-boundary segments, and faces are traced from
    the clockwise rotation (arc, next boundary point, previous boundary
    point) at each hole point.
    """

    genus: int
    vertex_count: int
    edge_count: int
    components: int
    darts: tuple[Dart, ...]
    faces: tuple[tuple[int, ...], ...]
    hole_faces: int

    @computed_field
    @property
    def face_count(self) -> int:
        return len(self.faces)

    @computed_field
    @property
    def euler_characteristic(self) -> int:
        return (
            self.vertex_count
            - self.edge_count
            + self.face_count
            - 2 * (self.components - 1)
        )

    def is_embedded(self) -> bool:
        return (
            self.hole_faces == 2 * self.genus
            and self.euler_characteristic == 2 - 2 * self.genus
        )


class IntersectionCount(FrozenModel):
    curve: str
    disk: str
    count: int = Field(ge=0)

    @computed_field
    @property
    def stabilizing(self) -> bool:
        return self.count == 1


class StabilizationReport(FrozenModel):
    pairs: tuple[IntersectionCount, ...]
    bigons_removed: int = 0
    caveat: str = (
        'counts depend on the arc routing chosen for the diagram; '
        'only bigon removal is applied'
    )

    @computed_field
    @property
    def flagged(self) -> tuple[tuple[str, str], ...]:
        return tuple(
            (pair.curve, pair.disk) for pair in self.pairs if pair.stabilizing
        )


class CompressResult(FrozenModel):
    diagram: HeegaardDiagram
    warnings: tuple[str, ...] = ()
