import re
from functools import cached_property
from typing import Iterable, Sequence

from pydantic import field_validator, model_validator

from heegaard_lift.resources.base.schemas import FrozenModel

RESERVED = re.compile(r'[\^()\s\-]')

# A letter is stored as a signed code: generator index g is +(g + 1) and
# its inverse is -(g + 1).
Code = int


def code_of(generator: int, sign: int) -> Code:
    return (generator + 1) * (1 if sign > 0 else -1)


def generator_of(code: Code) -> int:
    return abs(code) - 1


def letter_key(code: Code) -> tuple[int, int]:
    """Order used for least rotations: x < x^-1 < y < y^-1 < ..."""
    return abs(code), 0 if code > 0 else 1


def free_reduce(codes: Iterable[Code]) -> tuple[Code, ...]:
    stack: list[Code] = []
    for code in codes:
        if stack and stack[-1] == -code:
            stack.pop()
        else:
            stack.append(code)
    return tuple(stack)


def cyclic_core(
    codes: Sequence[Code],
) -> tuple[tuple[Code, ...], tuple[Code, ...]]:
    """
    Splits a freely reduced word as ``prefix . core . prefix^-1``.

    :return: (core, prefix).
    """
    start, end = 0, len(codes)
    while end - start >= 2 and codes[start] == -codes[end - 1]:
        start += 1
        end -= 1
    return tuple(codes[start:end]), tuple(codes[:start])


def invert_codes(codes: Sequence[Code]) -> tuple[Code, ...]:
    return tuple(-code for code in reversed(codes))


def least_rotation(codes: Sequence[Code]) -> tuple[Code, ...]:
    if not codes:
        return ()
    keyed = [letter_key(code) for code in codes]
    size = len(codes)
    best = min(range(size), key=lambda i: keyed[i:] + keyed[:i])
    return tuple(codes[best:]) + tuple(codes[:best])


class Basis(FrozenModel):
    """Ordered free generating set of F_k."""

    names: tuple[str, ...]

    @field_validator('names')
    @classmethod
    def validate_names(cls, names: tuple[str, ...]) -> tuple[str, ...]:
        for name in names:
            if not name:
                raise ValueError('Generator names must be nonempty')
            if RESERVED.search(name):
                raise ValueError(
                    f'Generator name {name!r} contains a reserved character'
                )
        if len(set(names)) != len(names):
            raise ValueError('Generator names must be unique')
        return names

    @property
    def rank(self) -> int:
        return len(self.names)

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {name: index for index, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise KeyError(f'Unknown generator {name!r}') from None

    def __contains__(self, name: object) -> bool:
        return name in self._positions

    def letter_name(self, code: Code) -> str:
        name = self.names[generator_of(code)]
        return name if code > 0 else f'{name}^-1'

    def vertex_name(self, code: Code) -> str:
        sign = '+' if code > 0 else '-'
        return f'{self.names[generator_of(code)]}{sign}'

    def vertices(self) -> tuple[Code, ...]:
        return tuple(
            code
            for index in range(self.rank)
            for code in (code_of(index, 1), code_of(index, -1))
        )


class Word(FrozenModel):
    """Freely reduced word over ``basis``."""

    basis: Basis
    letters: tuple[Code, ...] = ()

    @model_validator(mode='after')
    def validate_letters(self):
        for code in self.letters:
            if code == 0 or generator_of(code) >= self.basis.rank:
                raise ValueError(
                    f'Letter code {code} out of range for rank '
                    f'{self.basis.rank}'
                )
        if free_reduce(self.letters) != self.letters:
            raise ValueError('Word is not freely reduced')
        return self

    @classmethod
    def from_codes(cls, basis: Basis, codes: Iterable[Code]):
        return cls(basis=basis, letters=free_reduce(codes))

    @classmethod
    def identity(cls, basis: Basis):
        return cls(basis=basis)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        from heegaard_lift.resources.freegroup.service import format_word

        return format_word(self)

    def is_identity(self) -> bool:
        return not self.letters

    def generators(self) -> frozenset[int]:
        return frozenset(generator_of(code) for code in self.letters)


class CyclicWord(Word):
    """
    Cyclically reduced word standing for a conjugacy class.

    Keeps the rotation it was built with; equality and hashing go through
    the least rotation.
    """

    @model_validator(mode='after')
    def validate_cyclic(self):
        core, _ = cyclic_core(self.letters)
        if core != self.letters:
            raise ValueError('Word is not cyclically reduced')
        return self

    @classmethod
    def from_codes(cls, basis: Basis, codes: Iterable[Code]):
        core, _ = cyclic_core(free_reduce(codes))
        return cls(basis=basis, letters=core)

    @cached_property
    def canonical(self) -> tuple[Code, ...]:
        return least_rotation(self.letters)

    @cached_property
    def unoriented(self) -> tuple[Code, ...]:
        """Least of the canonical forms of the word and its inverse."""
        inverse = least_rotation(invert_codes(self.letters))
        forward = self.canonical
        return min(
            forward,
            inverse,
            key=lambda codes: [letter_key(code) for code in codes],
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return (
            self.basis == other.basis and self.canonical == other.canonical
        )

    def __hash__(self) -> int:
        return hash((self.basis.names, self.canonical))

    def rotate(self, shift: int) -> 'CyclicWord':
        if not self.letters:
            return self
        shift %= len(self.letters)
        codes = self.letters[shift:] + self.letters[:shift]
        return CyclicWord(basis=self.basis, letters=codes)

    def inverse(self) -> 'CyclicWord':
        return CyclicWord(
            basis=self.basis, letters=invert_codes(self.letters)
        )
