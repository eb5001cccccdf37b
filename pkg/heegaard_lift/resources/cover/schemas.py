from heegaard_lift.resources.base.schemas import FrozenModel
from heegaard_lift.resources.cover.model import CoverContext
from heegaard_lift.resources.diagram.model import HeegaardDiagram


class WeakReductionPair(FrozenModel):
    """Curves on one side that miss every listed disk on the other."""

    curves: tuple[str, ...]
    disks: tuple[str, ...]


class LiftedCurve(FrozenModel):
    base_curve: str
    label: int
    start_sheet: int
    name: str
    word: str


class LiftedDiagram(FrozenModel):
    context: CoverContext
    diagram: HeegaardDiagram
    curves: tuple[LiftedCurve, ...]
    warnings: tuple[str, ...] = ()

    def curve(self, base_curve: str, label: int) -> LiftedCurve:
        for item in self.curves:
            if item.base_curve == base_curve and item.label == label:
                return item
        raise KeyError(f'{base_curve}_{label}')
