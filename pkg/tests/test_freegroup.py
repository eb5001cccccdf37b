import pytest

from heegaard_lift.resources.base.exceptions import (
    BasisError,
    HeegaardLiftError,
    WordParseError,
)
from heegaard_lift.resources.freegroup.enums import ReductionMode, WordOp
from heegaard_lift.resources.freegroup.service import (
    abelianize,
    cyclic_reduction,
    default_basis,
    delete_generators,
    format_word,
    homology,
    load_system,
    make_basis,
    parse_word,
    rebase,
    reduce,
    word_algebra,
)


def test_parse_reduces_freely(f2):
    word = parse_word('x x x^-1 y', f2)
    assert word.letters == (1, 2)
    assert format_word(word) == 'x y'


def test_parse_group_powers(f2):
    word = parse_word('(x^-1 y)^2 (x y^-1)', f2)
    assert format_word(word) == 'x^-1 y x^-1 y x y^-1'


def test_negative_power_inverts_group(f2):
    assert parse_word('(x y)^-2', f2) == parse_word(
        'y^-1 x^-1 y^-1 x^-1', f2
    )


def test_format_runs_and_identity(f2):
    assert format_word(parse_word('x^6 y^-2', f2)) == 'x^6 y^-2'
    identity = parse_word('1', f2)
    assert identity.is_identity()
    assert format_word(identity) == '1'


def test_parse_unknown_generator(f2):
    with pytest.raises(WordParseError, match='Unknown generator'):
        parse_word('x q', f2)


def test_parse_unbalanced_parentheses(f2):
    with pytest.raises(WordParseError, match='Unbalanced parentheses'):
        parse_word('(x y', f2)
    with pytest.raises(WordParseError, match='Unbalanced parentheses'):
        parse_word('x y)', f2)


def test_parse_malformed_exponent(f2):
    with pytest.raises(WordParseError, match='Malformed exponent'):
        parse_word('x^', f2)


def test_parse_error_reports_position(f2):
    with pytest.raises(WordParseError) as info:
        parse_word('x y q', f2)
    assert info.value.position == 4


def test_cyclic_words_compare_by_conjugacy(words):
    assert words('x y') == words('y x')
    assert words('x y') != words('y^-1 x^-1')
    assert words('x y').unoriented == words('y^-1 x^-1').unoriented


def test_cyclic_reduction_returns_prefix(f2):
    core, prefix = cyclic_reduction(parse_word('y x y^-1', f2))
    assert core.letters == (1,)
    assert prefix.letters == (2,)


def test_reduce_cyclic_mode(f2):
    reduced = reduce(parse_word('y x^2 y^-1', f2), ReductionMode.CYCLIC)
    assert format_word(reduced) == 'x^2'


def test_abelianize_counts_exponents(f3):
    vector = abelianize(parse_word('x y^-1 x z', f3))
    assert vector.exponents == (2, -1, 1)
    assert vector.l1_norm() == 4


def test_homology_of_pretzel_relators(pretzel_333):
    relators = [pretzel_333['D1'], pretzel_333['D2']]
    result = homology(relators, relators[0].basis)
    assert result.free_rank == 1
    assert result.torsion == ()
    assert result.is_integers()
    assert result.describe() == 'Z'


def test_homology_with_torsion():
    basis = default_basis(1)
    result = homology([parse_word('x^2', basis)], basis)
    assert result.torsion == (2,)
    assert result.free_rank == 0
    assert result.describe() == 'Z/2'


def test_homology_ignores_null_homologous_relators(f2):
    result = homology([parse_word('x y x^-1 y^-1', f2)], f2)
    assert result.describe() == 'Z^2'


def test_homology_rejects_foreign_basis(f2, f3):
    with pytest.raises(BasisError, match='not over the given basis'):
        homology([parse_word('x', f3)], f2)


def test_word_algebra(f2):
    a = parse_word('x', f2)
    b = parse_word('y', f2)
    assert format_word(word_algebra(a, b, WordOp.CONCAT)) == 'x y'
    assert format_word(word_algebra(a, b, WordOp.CONJUGATE)) == 'y^-1 x y'
    assert format_word(word_algebra(a, op=WordOp.INVERT)) == 'x^-1'
    assert format_word(word_algebra(a, op=WordOp.POWER, n=3)) == 'x^3'


def test_default_basis_names():
    assert default_basis(3).names == ('x', 'y', 'z')
    assert default_basis(5).names == ('x1', 'x2', 'x3', 'x4', 'x5')


def test_make_basis_rejects_duplicates():
    with pytest.raises(BasisError, match='unique'):
        make_basis(['x', 'x'])


def test_make_basis_rejects_reserved_characters():
    with pytest.raises(BasisError, match='reserved character'):
        make_basis(['a^b'])


def test_delete_generators_rebases(f3):
    word = parse_word('x y z y^-1', f3)
    shorter = delete_generators(word, ['y'])
    assert shorter.basis.names == ('x', 'z')
    assert format_word(shorter) == 'x z'


def test_rebase_into_larger_basis(f2):
    word = parse_word('x y^-1', f2)
    moved = rebase(word, make_basis(['y', 'x', 'z']))
    assert moved.letters == (2, -1)


def test_load_system_reads_fixture(pretzel_333):
    assert set(pretzel_333) == {'D1', 'D2', 'lambda'}
    assert len(pretzel_333['D1']) == 12


def test_load_system_missing_file(tmp_path):
    with pytest.raises(HeegaardLiftError, match='Cannot read system file'):
        load_system(tmp_path / 'missing.json')
