import pytest

from heegaard_lift.resources.base.exceptions import (
    CoverError,
    PreconditionError,
)
from heegaard_lift.resources.cover.diagram_lift import lift_diagram
from heegaard_lift.resources.cover.model import CyclicHom, OpenPath
from heegaard_lift.resources.cover.service import (
    cover_basis,
    full_lift,
    lift_all,
    lift_word,
    project_lift,
    project_word,
    slope_word,
    weak_reducibility_report,
)
from heegaard_lift.resources.diagram.service import (
    curve_words,
    validate_diagram,
)
from heegaard_lift.resources.freegroup.model import CyclicWord
from heegaard_lift.resources.freegroup.service import (
    default_basis,
    format_word,
    make_basis,
    parse_cyclic,
    parse_word,
)
from heegaard_lift.resources.pretzel.service import gated_diagram


@pytest.fixture
def ctx(f3):
    return cover_basis(f3, CyclicHom.constant(3, 3, 1), 'y')


def test_cover_basis_names(ctx):
    assert ctx.lifted.names == ('X1', 'X2', 'X3', 'Z1', 'Z2', 'Z3', 'Y3')
    assert ctx.lifted.rank == 7


def test_trivial_cover_keeps_rank(f3):
    trivial = cover_basis(f3, CyclicHom.constant(3, 1), 'y')
    assert trivial.lifted.rank == 3
    assert trivial.lifted == f3


def test_trivial_cover_lifts_words_to_themselves(f3, words):
    trivial = cover_basis(f3, CyclicHom.constant(3, 1), 'y')
    word = words('x^2 z^-1 y x', rank=3)
    assert lift_all(word, trivial) == {1: word}


def test_double_cover_rank():
    basis = default_basis(2)
    double = cover_basis(basis, CyclicHom(modulus=2, values=(1, 0)), 'x')
    assert double.lifted.names == ('Y1', 'Y2', 'X2')


def test_tree_generator_must_be_a_unit():
    basis = default_basis(2)
    with pytest.raises(CoverError, match='non-unit'):
        cover_basis(basis, CyclicHom(modulus=2, values=(1, 0)), 'y')


def test_hom_needs_a_unit():
    with pytest.raises(ValueError, match='unit'):
        CyclicHom(modulus=3, values=(0, 0))


def test_open_path_for_nonzero_hom_value(ctx, f3):
    path = lift_word(parse_word('x', f3), ctx, 1)
    assert isinstance(path, OpenPath)
    assert path.end_sheet == 2
    assert path.letters == ('X1',)


def test_boundary_lifts(ctx, pretzel_333):
    lifts = lift_all(pretzel_333['D1'], ctx)
    assert sorted(lifts) == [1, 2, 3]
    assert format_word(lifts[3]) == 'X1^-2 X2^2 Z2^-1 X2 Z2^-1 X1^-1 Z1'
    second = lift_all(pretzel_333['D2'], ctx)
    assert format_word(second[3]) == 'Z2^2 Z1^-2 X1 Z1^-1 X1 Z2 X2^-1'


def test_distinguished_lifts_miss_top_sheet(ctx, pretzel_333):
    top = {ctx.lifted.index(name) for name in ('X3', 'Y3', 'Z3')}
    for name in ('D1', 'D2', 'lambda'):
        assert not lift_all(pretzel_333[name], ctx)[3].generators() & top


def test_full_lifts_cover_the_word_three_times(ctx, pretzel_333):
    total = sum(
        len(full_lift(pretzel_333['D1'].letters, ctx, start)[0])
        for start in (1, 2, 3)
    )
    assert total == 3 * 12


def test_projection_of_full_lift_is_the_word(ctx, pretzel_333):
    for start in (1, 2, 3):
        letters, end = full_lift(pretzel_333['lambda'].letters, ctx, start)
        assert end == start
        assert project_lift(letters, ctx) == pretzel_333['lambda']


def test_project_word_forgets_sheets(ctx, pretzel_333):
    word = pretzel_333['D1']
    without_tree = CyclicWord.from_codes(
        word.basis, [code for code in word.letters if abs(code) != 2]
    )
    assert project_word(lift_all(word, ctx)[3], ctx) == without_tree


def test_lift_all_rejects_open_words(ctx, f3):
    with pytest.raises(CoverError, match='nonzero hom value'):
        lift_all(parse_cyclic('x', f3), ctx)


def test_weak_reducibility_pair(ctx, pretzel_333):
    curves = {
        f'{name}_{label}': word
        for name in ('D1', 'D2')
        for label, word in lift_all(pretzel_333[name], ctx).items()
    }
    pairs = weak_reducibility_report(ctx, curves, ctx.lifted.names)
    found = {(pair.curves, frozenset(pair.disks)) for pair in pairs}
    assert (('D1_3', 'D2_3'), frozenset({'X3', 'Y3', 'Z3'})) in found


def test_weak_reducibility_empty_when_every_disk_is_used():
    basis = make_basis(['a', 'b'])
    hom = CyclicHom.constant(2, 1)
    trivial = cover_basis(basis, hom, 'a')
    word = parse_cyclic('a b a^-1 b^-1', basis)
    assert weak_reducibility_report(trivial, {'w': word}, ['a', 'b']) == []


def test_slope_word(f3, pretzel_333):
    meridian = parse_word('x', f3)
    longitude = pretzel_333['lambda']
    filling = slope_word(6, 1, meridian, longitude)
    assert len(filling) == 24
    assert slope_word(0, 1, meridian, longitude) == longitude


def test_slope_word_lifts_close_only_for_multiples_of_three(
    ctx, f3, pretzel_333
):
    meridian = parse_word('x', f3)
    longitude = pretzel_333['lambda']
    closed = lift_word(slope_word(6, 1, meridian, longitude), ctx, 1)
    assert isinstance(closed, CyclicWord)
    opened = lift_word(slope_word(2, 1, meridian, longitude), ctx, 1)
    assert isinstance(opened, OpenPath)


def test_slope_word_preconditions(f3):
    x = parse_word('x', f3)
    with pytest.raises(PreconditionError, match='not coprime'):
        slope_word(2, 2, x, x)
    with pytest.raises(PreconditionError, match='trivial filling'):
        slope_word(1, 0, x, x)


@pytest.fixture
def base_diagram(pretzel_333):
    return gated_diagram({name: pretzel_333[name] for name in ('D1', 'D2')})


def test_lift_diagram_genus_and_names(base_diagram):
    lifted = lift_diagram(base_diagram, CyclicHom.constant(3, 3, 1), 'y')
    assert lifted.diagram.genus == 7
    assert lifted.diagram.disks == lifted.context.lifted.names
    assert validate_diagram(lifted.diagram) == []
    assert {item.name for item in lifted.curves} == {
        f'{name}_{label}'
        for name in ('D1', 'D2')
        for label in (1, 2, 3)
    }


def test_lift_diagram_agrees_with_word_lifts(base_diagram, pretzel_333):
    lifted = lift_diagram(base_diagram, CyclicHom.constant(3, 3, 1), 'y')
    ctx = lifted.context
    read = curve_words(lifted.diagram)
    for name in ('D1', 'D2'):
        for label, lift in lift_all(pretzel_333[name], ctx).items():
            assert read[f'{name}_{label}'] == lift


def test_trivial_diagram_lift_is_unchanged(base_diagram):
    lifted = lift_diagram(base_diagram, CyclicHom.constant(3, 1), 'y')
    assert lifted.diagram == base_diagram
