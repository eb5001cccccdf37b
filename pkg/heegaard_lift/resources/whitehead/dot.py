"""
DOT export of Whitehead graphs.

Vertices are named ``g+``/``g-``; parallel edges are kept and labelled with
the curve and position that produced them. Render with::

    dot -Tpng -O graph.gv
"""

from pathlib import Path

from heegaard_lift.resources.whitehead.model import WhiteheadGraph


def to_dot(graph: WhiteheadGraph, name: str = 'whitehead') -> str:
    lines: list[str] = []
    write_line = lines.append
    write_line(f'graph "{name}" {{')
    write_line('\tnode [shape=circle];')
    for vertex in graph.vertices:
        write_line(f'\t"{graph.basis.vertex_name(vertex)}";')
    for edge in graph.edges:
        u = graph.basis.vertex_name(edge.u)
        v = graph.basis.vertex_name(edge.v)
        write_line(
            f'\t"{u}" -- "{v}" [label="{edge.curve}:{edge.position}"];'
        )
    write_line('}')
    return '\n'.join(lines) + '\n'


def write_dot(graph: WhiteheadGraph, directory: Path, name: str) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f'{name}.gv'
    path.write_text(to_dot(graph, name), encoding='utf-8')
    return path
