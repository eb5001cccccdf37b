from typing import Optional

from pydantic import computed_field

from heegaard_lift.resources.base.schemas import FrozenModel, ReportHeader
from heegaard_lift.resources.cover.schemas import WeakReductionPair
from heegaard_lift.resources.diagram.model import StabilizationReport
from heegaard_lift.resources.factor.enums import MhaStatus
from heegaard_lift.resources.factor.schemas import MhaReport
from heegaard_lift.resources.freegroup.schemas import HomologyResult
from heegaard_lift.resources.pretzel.enums import OverallStatus
from heegaard_lift.resources.pretzel.model import FamilyMember


class Slope(FrozenModel):
    m: int
    n: int

    def text(self) -> str:
        return f'{self.m}/{self.n}'


class Theorem1Certificate(FrozenModel):
    """
    Evidence that the filling of slope ``base_slope`` of the knot exterior
    contains an essential surface, read off its cyclic cover.
    """

    header: ReportHeader
    tangles: tuple[int, ...]
    family: FamilyMember
    cover_slope: Slope
    base_slope: Slope
    words: dict[str, str]
    homology: HomologyResult
    cover: dict[str, object]
    lifted_words: dict[str, str]
    weak_reducibility: tuple[WeakReductionPair, ...]
    stabilization: Optional[StabilizationReport] = None
    handlebody_side: MhaReport
    dual_curves: dict[str, str]
    dual_side: MhaReport
    warnings: tuple[str, ...] = ()

    @computed_field
    @property
    def overall(self) -> OverallStatus:
        sides = (self.handlebody_side, self.dual_side)
        if not self.homology.is_integers():
            return OverallStatus.FAIL
        if all(side.passed for side in sides):
            return OverallStatus.PASS
        if any(side.overall.status == MhaStatus.FAIL for side in sides):
            return OverallStatus.FAIL
        return OverallStatus.INCONCLUSIVE
