from hypothesis import given
from hypothesis import strategies as st

from heegaard_lift.resources.freegroup.enums import ReductionMode
from heegaard_lift.resources.freegroup.model import Word
from heegaard_lift.resources.freegroup.service import (
    abelianize,
    concat,
    conjugate,
    default_basis,
    format_word,
    homology,
    invert,
    parse_word,
    reduce,
    to_cyclic,
)
from tests.test_properties.strategies import letters

RANK = 3
BASIS = default_basis(RANK)


def words(max_size=10):
    return st.lists(letters(RANK), max_size=max_size).map(
        lambda codes: Word.from_codes(BASIS, codes)
    )


@given(words())
def test_free_reduction_is_idempotent(word):
    once = reduce(word)
    assert once == word
    assert reduce(once) == once


@given(words())
def test_cyclic_reduction_is_idempotent(word):
    once = reduce(word, ReductionMode.CYCLIC)
    assert reduce(once, ReductionMode.CYCLIC) == once
    assert once.letters == to_cyclic(word).letters


@given(words(), words())
def test_abelianize_is_a_homomorphism(a, b):
    product = abelianize(concat(a, b)).exponents
    assert product == tuple(
        left + right
        for left, right in zip(
            abelianize(a).exponents, abelianize(b).exponents
        )
    )
    assert abelianize(invert(a)).exponents == tuple(
        -value for value in abelianize(a).exponents
    )


@given(
    st.lists(words(), min_size=1, max_size=3),
    st.lists(st.tuples(words(max_size=4), st.booleans()), min_size=3),
)
def test_homology_ignores_conjugation_and_inversion(relators, changes):
    changed = []
    for relator, (by, flip) in zip(relators, changes):
        relator = conjugate(relator, by)
        changed.append(invert(relator) if flip else relator)
    assert homology(changed, BASIS) == homology(relators, BASIS)


@given(words().filter(lambda word: word.letters))
def test_format_then_parse_is_the_identity(word):
    assert parse_word(format_word(word), BASIS) == word
