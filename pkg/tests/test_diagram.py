import networkx as nx
import pytest

from heegaard_lift.resources.base.exceptions import (
    DiagramError,
    HeegaardLiftError,
)
from heegaard_lift.resources.diagram.model import Crossing, HeegaardDiagram
from heegaard_lift.resources.diagram.realize import (
    planar_rotations,
    realize_diagram,
)
from heegaard_lift.resources.diagram.ribbon import ribbon_complex
from heegaard_lift.resources.diagram.service import (
    assemble,
    compress,
    curve_word,
    curve_words,
    dualize,
    dump_diagram,
    ensure_valid,
    load_diagram,
    restrict_curves,
    stabilization_report,
    validate_diagram,
)
from heegaard_lift.resources.freegroup.service import format_word


@pytest.fixture
def torus():
    return assemble(
        ['x'], {'x+': [0], 'x-': [0]}, {'c': [Crossing('x', 0, 1)]}
    )


@pytest.fixture
def two_handles():
    return assemble(
        ['x', 'y'],
        {'x+': [0], 'x-': [0], 'y+': [0], 'y-': [0]},
        {'a': [Crossing('x', 0, 1)], 'b': [Crossing('y', 0, -1)]},
    )


@pytest.fixture
def bigon():
    return assemble(
        ['x'],
        {'x+': [0, 1], 'x-': [1, 0]},
        {'c': [Crossing('x', 0, 1), Crossing('x', 1, -1)]},
    )


def test_assembled_arcs_run_exit_to_entry(torus):
    (arc,) = torus.arcs
    assert arc.tail == ('x+', 0)
    assert arc.head == ('x-', 0)
    assert torus.genus == 1


def test_single_crossing_reads_the_disk(torus):
    assert validate_diagram(torus) == []
    assert format_word(curve_word(torus, 'c')) == 'x'


def test_negative_crossing_reads_the_inverse(two_handles):
    words = curve_words(two_handles)
    assert format_word(words['a']) == 'x'
    assert format_word(words['b']) == 'y^-1'


def test_unknown_curve(torus):
    with pytest.raises(DiagramError, match='Unknown curve'):
        curve_word(torus, 'd')


def test_euler_characteristic(torus, two_handles, bigon):
    for diagram in (torus, two_handles, bigon):
        ribbon = ribbon_complex(diagram)
        assert ribbon.euler_characteristic == 2 - 2 * diagram.genus
        assert ribbon.hole_faces == 2 * diagram.genus


def test_missing_hole_is_reported():
    diagram = HeegaardDiagram(disks=('x',), holes={'x+': ()})
    assert 'missing hole x-' in validate_diagram(diagram)


def test_unused_point_is_reported():
    diagram = HeegaardDiagram(disks=('x',), holes={'x+': (0,), 'x-': (0,)})
    assert validate_diagram(diagram) == [
        'point x+:0 is the endpoint of 0 arcs',
        'point x-:0 is the endpoint of 0 arcs',
    ]


def test_through_pairing_must_be_bijective():
    diagram = HeegaardDiagram(disks=('x',), holes={'x+': (0,), 'x-': (1,)})
    assert 'through_pairing not bijective on disk x' in validate_diagram(
        diagram
    )


def test_through_pairing_must_reverse_orientation():
    diagram = assemble(
        ['x'],
        {'x+': [0, 1, 2], 'x-': [0, 1, 2]},
        {
            'c': [
                Crossing('x', 0, 1),
                Crossing('x', 1, 1),
                Crossing('x', 2, 1),
            ]
        },
    )
    assert (
        'through_pairing does not reverse orientation on disk x'
        in validate_diagram(diagram)
    )


def test_ensure_valid_raises():
    diagram = HeegaardDiagram(disks=('x', 'x'))
    with pytest.raises(DiagramError, match='declared 2 times'):
        ensure_valid(diagram)


def test_compress_drops_vanishing_curves(two_handles):
    result = compress(two_handles, ['x'])
    assert result.diagram.disks == ('y',)
    assert result.warnings == (
        'curve a vanished after compression '
        '(trivial or boundary-parallel candidate)',
    )
    assert format_word(curve_word(result.diagram, 'b')) == 'y^-1'


def test_compress_unknown_disk(torus):
    with pytest.raises(DiagramError, match='Unknown disks'):
        compress(torus, ['z'])


def test_compress_nothing_is_identity(torus):
    assert compress(torus, []).diagram == torus


def test_restrict_curves(two_handles):
    kept = restrict_curves(two_handles, ['b'])
    assert kept.curve_names() == ('b',)
    assert kept.hole('x', '+') == ()
    assert validate_diagram(kept) == []


def test_dualize_swaps_roles(torus):
    dual = dualize(torus, ['c'])
    assert dual.disks == ('c',)
    assert format_word(curve_word(dual, 'x')) == 'c^-1'


def test_dualize_twice_is_identity(torus):
    assert dualize(dualize(torus, ['c']), ['x']) == torus


def test_dualize_rejects_collisions(torus):
    with pytest.raises(DiagramError, match='Unknown curve'):
        dualize(torus, ['q'])
    with pytest.raises(DiagramError, match='distinct'):
        dualize(torus, ['c', 'c'])


def test_stabilization_flags_single_crossings(torus):
    report = stabilization_report(torus)
    assert report.flagged == (('c', 'x'),)
    assert report.bigons_removed == 0


def test_stabilization_removes_bigons(bigon):
    report = stabilization_report(bigon)
    assert report.bigons_removed == 1
    assert [pair.count for pair in report.pairs] == [0]
    assert report.flagged == ()


def test_realize_single_points(words):
    word = words('x y')
    diagram = realize_diagram({'c': word})
    assert validate_diagram(diagram) == []
    assert diagram.hole('x', '+') == (0,)
    assert curve_words(diagram)['c'] == word


def test_realize_boundary_curves(pretzel_333):
    curves = {name: pretzel_333[name] for name in ('D1', 'D2')}
    diagram = realize_diagram(curves)
    assert validate_diagram(diagram) == []
    read = curve_words(diagram)
    for name, word in curves.items():
        assert read[name] == word


def test_realize_curve_whose_hole_graph_has_pendants(pretzel_333):
    word = pretzel_333['D2']
    diagram = realize_diagram({'D2': word})
    assert validate_diagram(diagram) == []
    assert curve_words(diagram)['D2'].letters == word.letters


def test_planar_rotations_place_pendants_in_every_face():
    graph = nx.cycle_graph(['z+', 'y-', 'z-', 'x+'])
    graph.add_edges_from([('z+', 'y+'), ('z-', 'x-')])
    rotations = list(planar_rotations(graph))
    assert len(rotations) == 4
    assert all(
        sorted(rotation[hole]) == sorted(graph[hole])
        for rotation in rotations
        for hole in graph
    )


def test_planar_rotations_reject_nonplanar_graphs():
    with pytest.raises(DiagramError, match='not planar'):
        next(planar_rotations(nx.complete_bipartite_graph(3, 3)))


def test_realize_needs_a_basis():
    with pytest.raises(DiagramError, match='needs a basis'):
        realize_diagram({})


def test_realize_mixed_bases(words):
    with pytest.raises(DiagramError, match='different bases'):
        realize_diagram({'a': words('x'), 'b': words('x', rank=3)})


def test_realize_attempt_bound(pretzel_333):
    curves = {name: pretzel_333[name] for name in ('D1', 'D2')}
    with pytest.raises(DiagramError, match='within 0 gluings'):
        realize_diagram(curves, max_attempts=0)


def test_dump_and_load(tmp_path, bigon):
    path = tmp_path / 'diagram.json'
    path.write_text(dump_diagram(bigon), encoding='utf-8')
    assert load_diagram(path) == bigon


def test_load_missing_file(tmp_path):
    with pytest.raises(HeegaardLiftError, match='Cannot read diagram file'):
        load_diagram(tmp_path / 'missing.json')
