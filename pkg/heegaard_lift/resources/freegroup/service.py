import json
import logging
import re
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from heegaard_lift.resources.base.exceptions import (
    BasisError,
    HeegaardLiftError,
    WordParseError,
)
from heegaard_lift.resources.freegroup.enums import ReductionMode, WordOp
from heegaard_lift.resources.freegroup.model import (
    Basis,
    Code,
    CyclicWord,
    Word,
    cyclic_core,
    free_reduce,
    generator_of,
    invert_codes,
)
from heegaard_lift.resources.freegroup.schemas import (
    AbelianVector,
    HomologyResult,
    SystemFile,
)

logger = logging.getLogger(__name__)

TOKEN = re.compile(
    r'\s*(?:(?P<open>\()|(?P<close>\))|(?P<caret>\^)'
    r'|(?P<int>[+-]?\d+(?![^\s\^()\-]))|(?P<name>[^\s\^()\-]+))'
)
SMALL_NAMES = ('x', 'y', 'z', 'w')


def make_basis(names: Sequence[str]) -> Basis:
    try:
        return Basis(names=tuple(names))
    except ValidationError as exc:
        raise BasisError(exc.errors()[0]['msg']) from exc


def default_basis(rank: int) -> Basis:
    """
    Returns the conventional basis of F_rank.

    :return: ``x, y, z, w`` up to rank 4, ``x1 .. xk`` above.
    """
    if rank < 0:
        raise BasisError('Rank must be non-negative')
    if rank <= len(SMALL_NAMES):
        return make_basis(SMALL_NAMES[:rank])
    return make_basis([f'x{index}' for index in range(1, rank + 1)])


class _Parser:
    def __init__(self, text: str, basis: Basis):
        self.text = text
        self.basis = basis
        self.tokens = self._tokenize(text)
        self.position = 0

    @staticmethod
    def _tokenize(text: str) -> list[tuple[str, str, int]]:
        tokens = []
        index = 0
        while index < len(text):
            if text[index].isspace():
                index += 1
                continue
            match = TOKEN.match(text, index)
            if not match or match.end() == index:
                raise WordParseError(
                    f'Unexpected character {text[index]!r}', index
                )
            kind = match.lastgroup or ''
            tokens.append((kind, match.group(kind), match.start(kind)))
            index = match.end()
        return tokens

    def _peek(self) -> tuple[str, str, int] | None:
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return None

    def parse(self) -> list[Code]:
        codes = self._word()
        token = self._peek()
        if token is not None:
            if token[0] == 'close':
                raise WordParseError('Unbalanced parentheses', token[2])
            raise WordParseError(f'Unexpected {token[1]!r}', token[2])
        return codes

    def _word(self) -> list[Code]:
        codes: list[Code] = []
        while (token := self._peek()) is not None and token[0] in {
            'open',
            'name',
            'int',
        }:
            codes.extend(self._term())
        return codes

    def _term(self) -> list[Code]:
        atom = self._atom()
        token = self._peek()
        if token is None or token[0] != 'caret':
            return atom
        self.position += 1
        exponent = self._peek()
        if exponent is None or exponent[0] != 'int':
            where = exponent[2] if exponent else len(self.text)
            raise WordParseError('Malformed exponent', where)
        self.position += 1
        power = int(exponent[1])
        if power < 0:
            return list(invert_codes(atom)) * -power
        return atom * power

    def _atom(self) -> list[Code]:
        kind, value, where = self.tokens[self.position]
        self.position += 1
        if kind == 'open':
            codes = self._word()
            closing = self._peek()
            if closing is None or closing[0] != 'close':
                raise WordParseError('Unbalanced parentheses', where)
            self.position += 1
            return codes
        if value in self.basis:
            return [self.basis.index(value) + 1]
        if kind == 'int' and value == '1':
            return []
        raise WordParseError(f'Unknown generator {value!r}', where)


def parse_word(text: str, basis: Basis) -> Word:
    """
    Parses ``(x^-1 y)^2 (x y^-1)``-style text into a freely reduced word.

    Raises:
        WordParseError: unknown generator, malformed exponent or
            unbalanced parentheses.
    """
    return Word.from_codes(basis, _Parser(text, basis).parse())


def parse_cyclic(text: str, basis: Basis) -> CyclicWord:
    return to_cyclic(parse_word(text, basis))


def format_codes(codes: Sequence[Code], basis: Basis) -> str:
    if not codes:
        return '1'
    terms = []
    index = 0
    while index < len(codes):
        run = 1
        while index + run < len(codes) and codes[index + run] == codes[index]:
            run += 1
        code = codes[index]
        name = basis.names[generator_of(code)]
        exponent = run if code > 0 else -run
        terms.append(name if exponent == 1 else f'{name}^{exponent}')
        index += run
    return ' '.join(terms)


def format_word(word: Word) -> str:
    return format_codes(word.letters, word.basis)


def to_cyclic(word: Word) -> CyclicWord:
    return CyclicWord.from_codes(word.basis, word.letters)


def reduce(word: Word, mode: ReductionMode = ReductionMode.FREE) -> Word:
    """Free or cyclic reduction; cyclic mode returns a CyclicWord."""
    codes = free_reduce(word.letters)
    if mode == ReductionMode.CYCLIC:
        core, _ = cyclic_core(codes)
        return CyclicWord(basis=word.basis, letters=core)
    return Word(basis=word.basis, letters=codes)


def cyclic_reduction(word: Word) -> tuple[CyclicWord, Word]:
    """
    :return: the cyclic core and the conjugating prefix removed, so that
        ``word = prefix . core . prefix^-1``.
    """
    core, prefix = cyclic_core(free_reduce(word.letters))
    return (
        CyclicWord(basis=word.basis, letters=core),
        Word(basis=word.basis, letters=prefix),
    )


def abelianize(word: Word) -> AbelianVector:
    exponents = [0] * word.basis.rank
    for code in word.letters:
        exponents[generator_of(code)] += 1 if code > 0 else -1
    return AbelianVector(exponents=tuple(exponents))


def homology(relators: Sequence[Word], basis: Basis) -> HomologyResult:
    """
    First homology of ``<basis | relators>`` via the Smith normal form of
    the abelianized relator matrix over ZZ.
    """
    for relator in relators:
        if relator.basis != basis:
            raise BasisError('Relator is not over the given basis')
    rows = [list(abelianize(relator).exponents) for relator in relators]
    rows = [row for row in rows if any(row)]
    if not rows or basis.rank == 0:
        return HomologyResult(free_rank=basis.rank)
    matrix = DomainMatrix(
        [[ZZ(value) for value in row] for row in rows],
        (len(rows), basis.rank),
        ZZ,
    )
    factors = [abs(int(value)) for value in invariant_factors(matrix)]
    nonzero = [value for value in factors if value]
    logger.debug('invariant factors %s', factors)
    return HomologyResult(
        torsion=tuple(value for value in nonzero if value > 1),
        free_rank=basis.rank - len(nonzero),
    )


def concat(a: Word, b: Word) -> Word:
    _check_same_basis(a, b)
    return Word.from_codes(a.basis, a.letters + b.letters)


def invert(a: Word) -> Word:
    return Word(basis=a.basis, letters=invert_codes(a.letters))


def conjugate(a: Word, b: Word) -> Word:
    """``b^-1 a b``."""
    _check_same_basis(a, b)
    return Word.from_codes(
        a.basis, invert_codes(b.letters) + a.letters + b.letters
    )


def power(a: Word, n: int) -> Word:
    codes = a.letters if n >= 0 else invert_codes(a.letters)
    return Word.from_codes(a.basis, codes * abs(n))


def word_algebra(
    a: Word,
    b: Word | None = None,
    op: WordOp = WordOp.CONCAT,
    n: int = 1,
) -> Word:
    match op:
        case WordOp.CONCAT:
            return concat(a, _require(b, op))
        case WordOp.INVERT:
            return invert(a)
        case WordOp.CONJUGATE:
            return conjugate(a, _require(b, op))
        case WordOp.POWER:
            return power(a, n)
    raise ValueError(f'Unknown word operation {op!r}')


def delete_generators(word: Word, names: Sequence[str]) -> Word:
    """Drops every letter of the named generators and re-reduces."""
    dropped = {word.basis.index(name) for name in names}
    remaining = tuple(
        name for name in word.basis.names if name not in set(names)
    )
    basis = make_basis(remaining)
    codes = [
        code for code in word.letters if generator_of(code) not in dropped
    ]
    rebased = _rename(codes, word.basis, basis)
    if isinstance(word, CyclicWord):
        return CyclicWord.from_codes(basis, rebased)
    return Word.from_codes(basis, rebased)


def rebase(word: Word, basis: Basis) -> Word:
    """Re-expresses ``word`` over a basis containing its generators."""
    codes = _rename(word.letters, word.basis, basis)
    if isinstance(word, CyclicWord):
        return CyclicWord(basis=basis, letters=codes)
    return Word(basis=basis, letters=codes)


def load_system(path: Path) -> tuple[Basis, dict[str, CyclicWord]]:
    """
    Reads a System file ``{"basis": [...], "curves": {name: word}}``.

    Raises:
        HeegaardLiftError: unreadable file or invalid content.
    """
    try:
        raw = json.loads(Path(path).read_text(encoding='utf-8'))
        system = SystemFile.model_validate(raw)
    except (OSError, json.JSONDecodeError, ValidationError) as exc:
        raise HeegaardLiftError(f'Cannot read system file {path}: {exc}')
    basis = make_basis(system.basis)
    curves = {
        name: parse_cyclic(text, basis)
        for name, text in system.curves.items()
    }
    return basis, curves


def _rename(
    codes: Sequence[Code], source: Basis, target: Basis
) -> tuple[Code, ...]:
    renamed = []
    for code in codes:
        name = source.names[generator_of(code)]
        if name not in target:
            raise BasisError(f'Generator {name!r} missing from target basis')
        index = target.index(name) + 1
        renamed.append(index if code > 0 else -index)
    return tuple(renamed)


def _check_same_basis(a: Word, b: Word) -> None:
    if a.basis != b.basis:
        raise BasisError('Words are over different bases')


def _require(b: Word | None, op: WordOp) -> Word:
    if b is None:
        raise ValueError(f'{op.value} needs a second word')
    return b
