from pydantic import Field, field_validator

from heegaard_lift.resources.base.exceptions import PretzelParamsError
from heegaard_lift.resources.base.schemas import FrozenModel
from heegaard_lift.resources.pretzel.enums import PretzelCase


class Normalization(FrozenModel):
    """How the given tangles were moved into ``(p, 3, q)`` form."""

    rotation: int = 0
    mirrored: bool = False
    reversed: bool = False

    def describe(self) -> str:
        steps = []
        if self.rotation:
            steps.append(f'rotated by {self.rotation}')
        if self.mirrored:
            steps.append('mirrored')
        if self.reversed:
            steps.append('reversed')
        return ', '.join(steps) or 'none'


class FamilyMember(FrozenModel):
    """A knot ``(+-(2i+1), 3, +-(2j+1))`` with its case and parameters."""

    tangles: tuple[int, int, int]
    case: PretzelCase
    i: int = Field(ge=1)
    j: int = Field(ge=1)
    normalization: Normalization


class PretzelParams(FrozenModel):
    tangles: tuple[int, ...]

    @field_validator('tangles')
    @classmethod
    def validate_tangles(cls, tangles: tuple[int, ...]) -> tuple[int, ...]:
        if not tangles:
            raise ValueError('A pretzel link needs at least one tangle')
        if any(entry == 0 for entry in tangles):
            raise ValueError('Tangle entries must be nonzero')
        return tangles

    def label(self) -> str:
        return ','.join(str(entry) for entry in self.tangles)

    def normalize(self) -> FamilyMember:
        """
        Rotates the middle tangle to +-3, mirrors a -3 middle to +3, and
        reverses ``(p, 3, -q)`` with p > 0 so that the negative end leads.

        Raises:
            PretzelParamsError: the knot is not ``(+-(2i+1), +-3,
                +-(2j+1))`` with i, j >= 1.
        """
        if len(self.tangles) != 3:
            raise PretzelParamsError(
                f'({self.label()}) is not a three-tangle pretzel knot'
            )
        for rotation in range(3):
            rotated = self.tangles[rotation:] + self.tangles[:rotation]
            if abs(rotated[1]) == 3 and all(
                abs(end) >= 3 and end % 2 for end in (rotated[0], rotated[2])
            ):
                break
        else:
            raise PretzelParamsError(
                f'({self.label()}) is not of the form '
                '(+-(2i+1), +-3, +-(2j+1)) with i, j >= 1'
            )
        p, middle, q = rotated
        mirrored = middle < 0
        if mirrored:
            p, q = -p, -q
        flipped = p > 0 > q
        if flipped:
            p, q = q, p
        if p > 0:
            case = PretzelCase.POSITIVE
        elif q > 0:
            case = PretzelCase.MIXED
        else:
            case = PretzelCase.NEGATIVE
        return FamilyMember(
            tangles=(p, 3, q),
            case=case,
            i=(abs(p) - 1) // 2,
            j=(abs(q) - 1) // 2,
            normalization=Normalization(
                rotation=rotation, mirrored=mirrored, reversed=flipped
            ),
        )
