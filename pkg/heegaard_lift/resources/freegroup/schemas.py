from pydantic import Field, field_validator

from heegaard_lift.resources.base.schemas import FrozenModel


class AbelianVector(FrozenModel):
    """Exponent sums of a word, one entry per generator."""

    exponents: tuple[int, ...]

    def __add__(self, other: 'AbelianVector') -> 'AbelianVector':
        if len(self.exponents) != len(other.exponents):
            raise ValueError('Abelian vectors of different rank')
        return AbelianVector(
            exponents=tuple(
                a + b for a, b in zip(self.exponents, other.exponents)
            )
        )

    def l1_norm(self) -> int:
        return sum(abs(value) for value in self.exponents)


class HomologyResult(FrozenModel):
    torsion: tuple[int, ...] = ()
    free_rank: int = Field(ge=0)

    @field_validator('torsion')
    @classmethod
    def validate_divisibility(cls, torsion: tuple[int, ...]):
        for left, right in zip(torsion, torsion[1:]):
            if right % left:
                raise ValueError(
                    'Invariant factors must form a divisibility chain'
                )
        return torsion

    def is_integers(self) -> bool:
        return self.free_rank == 1 and not self.torsion

    def describe(self) -> str:
        parts = [f'Z/{value}' for value in self.torsion]
        if self.free_rank == 1:
            parts.append('Z')
        elif self.free_rank > 1:
            parts.append(f'Z^{self.free_rank}')
        return ' + '.join(parts) or '0'


class SystemFile(FrozenModel):
    """On-disk curve system: a basis plus named word strings."""

    basis: tuple[str, ...]
    curves: dict[str, str] = Field(default_factory=dict)
