import pytest

from heegaard_lift.resources.base.exceptions import (
    PreconditionError,
    PretzelParamsError,
)
from heegaard_lift.resources.cover.model import CyclicHom
from heegaard_lift.resources.cover.service import cover_basis, lift_all
from heegaard_lift.resources.diagram.service import (
    curve_words,
    validate_diagram,
)
from heegaard_lift.resources.factor.enums import BindingStatus, MhaStatus
from heegaard_lift.resources.factor.service import mha_check
from heegaard_lift.resources.freegroup.service import (
    delete_generators,
    format_word,
    homology,
    parse_cyclic,
)
from heegaard_lift.resources.pretzel.enums import OverallStatus, PretzelCase
from heegaard_lift.resources.pretzel.model import PretzelParams
from heegaard_lift.resources.pretzel.pipeline import theorem1_pipeline
from heegaard_lift.resources.pretzel.service import (
    component_count,
    load_pretzel_system,
    make_params,
    pretzel_basis,
    pretzel_diagram,
    pretzel_system,
    pretzel_words,
)
from heegaard_lift.resources.whitehead.enums import FastPath, Verdict
from heegaard_lift.resources.whitehead.service import decide_separability


@pytest.mark.parametrize(
    ('tangles', 'expected'),
    [
        ((3, 3, 3), 1),
        ((3, 3, 3, 3), 2),
        ((4, 3, 3, 3), 1),
        ((4, 2, 3), 2),
        ((-3, 5, 7, 9, 11), 1),
    ],
)
def test_component_count(tangles, expected):
    assert component_count(tangles) == expected


def test_component_count_errors():
    with pytest.raises(PretzelParamsError, match='at least one tangle'):
        component_count([])
    with pytest.raises(PretzelParamsError, match='nonzero'):
        component_count([3, 0, 3])


@pytest.mark.parametrize(
    ('tangles', 'normal', 'case', 'i', 'j', 'steps'),
    [
        ((3, 3, 3), (3, 3, 3), PretzelCase.POSITIVE, 1, 1, 'none'),
        ((-3, 3, 3), (-3, 3, 3), PretzelCase.MIXED, 1, 1, 'none'),
        ((3, 3, -5), (-5, 3, 3), PretzelCase.MIXED, 2, 1, 'reversed'),
        ((-3, -3, -5), (3, 3, 5), PretzelCase.POSITIVE, 1, 2, 'mirrored'),
        ((-3, 3, -3), (-3, 3, -3), PretzelCase.NEGATIVE, 1, 1, 'none'),
        (
            (3, -5, -3),
            (-3, 3, 5),
            PretzelCase.MIXED,
            1,
            2,
            'rotated by 1, mirrored, reversed',
        ),
    ],
)
def test_normalize(tangles, normal, case, i, j, steps):
    member = PretzelParams(tangles=tangles).normalize()
    assert member.tangles == normal
    assert member.case == case
    assert (member.i, member.j) == (i, j)
    assert member.normalization.describe() == steps


@pytest.mark.parametrize('tangles', [(2, 3, 3), (1, 3, 3), (5, 5, 7)])
def test_normalize_rejects_other_knots(tangles):
    with pytest.raises(PretzelParamsError, match='is not of the form'):
        PretzelParams(tangles=tangles).normalize()


def test_normalize_needs_three_tangles():
    with pytest.raises(PretzelParamsError, match='three-tangle'):
        PretzelParams(tangles=(3, 3, 3, 3)).normalize()


def test_make_params_rejects_zero():
    with pytest.raises(PretzelParamsError, match='Invalid tangles'):
        make_params([3, 0, 3])


def test_words_match_the_shipped_fixture(pretzel_333):
    words = pretzel_words(make_params([3, 3, 3]))
    assert words == pretzel_333
    assert format_word(words['D1']) == (
        'x^-1 y x^-1 y x y^-1 x z^-1 x z^-1 x^-1 z'
    )


def test_mixed_case_first_disk():
    words = pretzel_words(make_params([-3, 3, 3]))
    expected = parse_cyclic(
        '(y^-1 x) (y x^-1)^2 (x z^-1)^2 (x^-1 z)', pretzel_basis()
    )
    assert words['D1'] == expected


@pytest.mark.parametrize('case', [(3, 3, 3), (-3, 3, 3), (-3, 3, -3)])
@pytest.mark.parametrize('i', [1, 2, 3])
@pytest.mark.parametrize('j', [1, 2, 3])
def test_boundary_homology_is_integers(case, i, j):
    p, _, q = case
    tangles = (
        (2 * i + 1) * (1 if p > 0 else -1),
        3,
        (2 * j + 1) * (1 if q > 0 else -1),
    )
    words = pretzel_words(make_params(tangles))
    result = homology([words['D1'], words['D2']], pretzel_basis())
    assert result.is_integers()


def test_empty_fixture_slots_are_rejected():
    with pytest.raises(PretzelParamsError, match='ships empty'):
        load_pretzel_system((4, 3, 3, 3))


def test_unknown_fixture_slot():
    with pytest.raises(PretzelParamsError, match='No word fixture'):
        load_pretzel_system((5, 5, 5, 5))


def test_pretzel_system_uses_the_family_for_three_tangles(pretzel_333):
    assert pretzel_system([3, 3, 3]) == pretzel_333


def test_handlebody_side(pretzel_333):
    ctx = cover_basis(pretzel_basis(), CyclicHom.constant(3, 3, 1), 'y')
    top = ['X3', 'Y3', 'Z3']
    compressed = {
        f'{name}_3': delete_generators(
            lift_all(pretzel_333[name], ctx)[3], top
        )
        for name in ('D1', 'D2')
    }
    assert compressed['D1_3'].basis.names == ('X1', 'X2', 'Z1', 'Z2')
    joint = decide_separability(compressed)
    assert joint.verdict == Verdict.DISKBUSTING
    for name, word in compressed.items():
        alone = decide_separability({name: word})
        assert alone.verdict == Verdict.SEPARABLE
        assert alone.fast_path == FastPath.VALENCE_ONE
    assert mha_check(compressed).overall.status == MhaStatus.PASS


def test_pipeline_preconditions():
    params = make_params([3, 3, 3])
    with pytest.raises(PreconditionError, match='not coprime'):
        theorem1_pipeline(params, (2, 2))
    with pytest.raises(PreconditionError, match='Base slope 3/3'):
        theorem1_pipeline(params, (1, 3))


def test_pipeline_certifies_the_symmetric_knot():
    certificate = theorem1_pipeline(make_params([3, 3, 3]), (2, 1))
    assert certificate.base_slope.text() == '6/1'
    assert certificate.homology.is_integers()
    assert certificate.handlebody_side.overall.status == MhaStatus.PASS
    assert certificate.stabilization.flagged
    assert certificate.overall == OverallStatus.PASS


def test_pipeline_is_deterministic():
    params = make_params([3, 3, 3])
    first = theorem1_pipeline(params, (2, 1))
    second = theorem1_pipeline(params, (2, 1))
    assert first.model_dump_json() == second.model_dump_json()


@pytest.fixture(scope='module')
def symmetric_certificate():
    return theorem1_pipeline(make_params([3, 3, 3]), (2, 1))


def test_dual_side_cites_the_graph_evidence(symmetric_certificate):
    dual_side = symmetric_certificate.dual_side
    assert dual_side.passed
    assert dual_side.k == 5
    reports = {
        frozenset(item.curves): item.report
        for condition in dual_side.conditions
        for item in condition.subsets
    }
    assert all(
        report.status == BindingStatus.DOES_NOT_BIND
        for report in reports.values()
    )
    for name in ('X3', 'Y3', 'Z3'):
        assert reports[frozenset({name})].evidence.disconnected
    assert 'D_3' in reports[frozenset({'Y3', 'Z3'})].evidence.omitted
    for pair in ({'X3', 'Y3'}, {'X3', 'Z3'}):
        assert 'D_3' in reports[frozenset(pair)].evidence.bridges


def test_case_one_diagram_reads_the_shifted_words():
    diagram = pretzel_diagram(make_params([5, 3, 3]))
    assert validate_diagram(diagram) == []
    expected = parse_cyclic(
        '(x^-1 y)^3 (x y^-1)^2 (x z^-1)^2 (x^-1 z)', pretzel_basis()
    )
    assert curve_words(diagram)['D1'].letters == expected.letters


@pytest.mark.parametrize(
    ('tangles', 'case'),
    [
        ((5, 3, 3), PretzelCase.POSITIVE),
        ((-3, 3, 3), PretzelCase.MIXED),
        ((-3, 3, -3), PretzelCase.NEGATIVE),
    ],
)
def test_pipeline_certifies_every_case(tangles, case):
    certificate = theorem1_pipeline(make_params(list(tangles)), (2, 1))
    assert certificate.family.case == case
    assert certificate.homology.is_integers()
    assert certificate.handlebody_side.passed
    assert certificate.dual_side.passed
    assert certificate.overall == OverallStatus.PASS
