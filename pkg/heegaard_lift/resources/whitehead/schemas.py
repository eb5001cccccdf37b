from typing import Optional

from pydantic import Field, computed_field, field_serializer

from heegaard_lift.resources.base.schemas import FrozenModel
from heegaard_lift.resources.freegroup.model import CyclicWord
from heegaard_lift.resources.whitehead.enums import FastPath, Verdict
from heegaard_lift.resources.whitehead.model import WhiteheadMove


class TraceStep(FrozenModel):
    move: WhiteheadMove
    complexity: int

    @field_serializer('move')
    def serialize_move(self, move: WhiteheadMove):
        return move.describe()


class SeparabilityVerdict(FrozenModel):
    """
    Outcome of the Whitehead reduction loop.

    ``witness`` holds the vertex partition for separable systems (the
    components of the terminal graph) or the terminal edge list for
    diskbusting ones.
    """

    verdict: Verdict
    initial_complexity: int
    trace: tuple[TraceStep, ...] = ()
    fast_path: Optional[FastPath] = None
    witness: tuple[tuple[str, ...], ...] = ()
    exhausted: bool = False
    terminal: dict[str, CyclicWord] = Field(default_factory=dict, exclude=True)

    @computed_field
    @property
    def terminal_words(self) -> dict[str, str]:
        return {name: str(word) for name, word in self.terminal.items()}

    @computed_field
    @property
    def terminal_complexity(self) -> int:
        return sum(len(word) for word in self.terminal.values())

    @property
    def separable(self) -> bool:
        return self.verdict == Verdict.SEPARABLE
