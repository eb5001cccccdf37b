from math import gcd

from pydantic import Field, field_validator, model_validator

from heegaard_lift.resources.base.schemas import FrozenModel
from heegaard_lift.resources.freegroup.model import Basis, Code


class CyclicHom(FrozenModel):
    """Homomorphism F_k -> Z_n given by one residue per generator."""

    modulus: int = Field(ge=1)
    values: tuple[int, ...]

    @model_validator(mode='after')
    def validate_values(self):
        residues = tuple(value % self.modulus for value in self.values)
        if residues != self.values:
            raise ValueError('Hom values must be residues 0..n-1')
        if self.values and not any(
            gcd(value, self.modulus) == 1 for value in self.values
        ):
            raise ValueError('At least one hom value must be a unit mod n')
        return self

    @classmethod
    def constant(cls, rank: int, modulus: int, value: int = 1):
        return cls(modulus=modulus, values=(value % modulus,) * rank)

    def of_codes(self, codes: tuple[Code, ...] | list[Code]) -> int:
        total = 0
        for code in codes:
            value = self.values[abs(code) - 1]
            total += value if code > 0 else -value
        return total % self.modulus


class LiftedLetter(FrozenModel):
    """Crossing of the disk lift ``generator`` in ``sheet`` (1..n)."""

    generator: int
    sheet: int
    sign: int


class CoverContext(FrozenModel):
    base: Basis
    hom: CyclicHom
    tree_generator: int
    lifted: Basis

    @field_validator('tree_generator')
    @classmethod
    def validate_tree(cls, tree_generator: int) -> int:
        if tree_generator < 0:
            raise ValueError('Tree generator index must be non-negative')
        return tree_generator

    @property
    def order(self) -> int:
        return self.hom.modulus

    def shift(self, sheet: int, steps: int) -> int:
        return (sheet - 1 + steps) % self.order + 1

    def lift_name(self, generator: int, sheet: int) -> str:
        return lift_name(self.base.names[generator], sheet, self.order)

    def is_eliminated(self, generator: int, sheet: int) -> bool:
        return generator == self.tree_generator and sheet != self.order

    def lifted_code(self, letter: LiftedLetter) -> Code | None:
        if self.is_eliminated(letter.generator, letter.sheet):
            return None
        name = self.lift_name(letter.generator, letter.sheet)
        index = self.lifted.index(name)
        return (index + 1) * letter.sign

    def describe(self) -> dict[str, object]:
        return {
            'base': list(self.base.names),
            'order': self.order,
            'hom': dict(zip(self.base.names, self.hom.values)),
            'tree_generator': self.base.names[self.tree_generator],
            'lifted': list(self.lifted.names),
        }


class OpenPath(FrozenModel):
    """Lift of a word whose hom value is nonzero: it does not close up."""

    start_sheet: int
    end_sheet: int
    letters: tuple[str, ...]


def lift_name(name: str, sheet: int, order: int) -> str:
    if order == 1:
        return name
    if len(name) == 1 and name.islower():
        return f'{name.upper()}{sheet}'
    return f'{name}_{sheet}'
