import networkx as nx

from heegaard_lift.resources.diagram.model import (
    Dart,
    HeegaardDiagram,
    RibbonComplex,
    split_hole,
)

ARC = 'arc'
FORWARD = 'forward'
BACKWARD = 'backward'


def ribbon_complex(d: HeegaardDiagram) -> RibbonComplex:
    """
    Traces the faces of a structurally valid diagram.

    Faces follow ``next(dart) = rotation(twin(dart))``; the faces made of
    backward boundary darts only are the holes themselves and are counted
    apart.
    """
    darts: list[Dart] = []
    twin: list[int] = []
    rotation: dict[int, int] = {}
    arc_dart_at: dict[tuple[str, int], int] = {}
    planar = nx.Graph()

    def add_edge(first: Dart, second: Dart, start, end) -> tuple[int, int]:
        left, right = len(darts), len(darts) + 1
        darts.extend((first, second))
        twin.extend((right, left))
        planar.add_edge(start, end)
        return left, right

    for arc in d.arcs:
        tail, head = tuple(arc.tail), tuple(arc.head)
        planar.add_nodes_from((tail, head))
        first = Dart(
            kind=ARC, hole=tail[0], point=tail[1], curve=arc.curve,
            index=arc.index,
        )
        second = Dart(
            kind=ARC, hole=head[0], point=head[1], curve=arc.curve,
            index=arc.index,
        )
        left, right = add_edge(first, second, tail, head)
        arc_dart_at[tail] = left
        arc_dart_at[head] = right

    identified = 0
    for name in sorted(d.holes):
        points = d.holes[name]
        disk, _ = split_hole(name)
        if disk not in d.disks:
            continue
        if not points:
            dummy = (name, None)
            planar.add_node(dummy)
            forward, backward = add_edge(
                Dart(kind=FORWARD, hole=name),
                Dart(kind=BACKWARD, hole=name),
                dummy,
                dummy,
            )
            rotation[forward] = backward
            rotation[backward] = forward
            continue
        size = len(points)
        forwards, backwards = [], []
        for position, point in enumerate(points):
            following = points[(position + 1) % size]
            forward, backward = add_edge(
                Dart(kind=FORWARD, hole=name, point=point),
                Dart(kind=BACKWARD, hole=name, point=following),
                (name, point),
                (name, following),
            )
            forwards.append(forward)
            backwards.append(backward)
        for position, point in enumerate(points):
            arc = arc_dart_at[(name, point)]
            forward = forwards[position]
            backward = backwards[position - 1]
            rotation[arc] = forward
            rotation[forward] = backward
            rotation[backward] = arc

    for disk in d.disks:
        identified += max(len(d.hole(disk, '+')), 1)

    faces: list[tuple[int, ...]] = []
    hole_faces = 0
    seen = [False] * len(darts)
    for start in range(len(darts)):
        if seen[start]:
            continue
        cycle = []
        dart = start
        while not seen[dart]:
            seen[dart] = True
            cycle.append(dart)
            dart = rotation[twin[dart]]
        if all(darts[item].kind == BACKWARD for item in cycle):
            hole_faces += 1
        else:
            faces.append(tuple(cycle))

    return RibbonComplex(
        genus=len(d.disks),
        vertex_count=planar.number_of_nodes() - identified,
        edge_count=len(darts) // 2 - identified,
        components=nx.number_connected_components(planar),
        darts=tuple(darts),
        faces=tuple(faces),
        hole_faces=hole_faces,
    )
