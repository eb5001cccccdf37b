from typing import Optional

from pydantic import computed_field

from heegaard_lift.resources.base.schemas import FrozenModel
from heegaard_lift.resources.factor.enums import (
    BindingCriterion,
    BindingStatus,
    MhaStatus,
)
from heegaard_lift.resources.whitehead.schemas import SeparabilityVerdict


class BindingEvidence(FrozenModel):
    """What the Whitehead graph of the system as given shows."""

    omitted: tuple[str, ...] = ()
    disconnected: bool = False
    valence_one: tuple[str, ...] = ()
    bridges: tuple[str, ...] = ()


class FactorBindingReport(FrozenModel):
    target_rank: int
    status: BindingStatus
    criterion: BindingCriterion
    support: tuple[str, ...]
    evidence: BindingEvidence = BindingEvidence()
    minimized: dict[str, str] = {}
    support_verdict: Optional[SeparabilityVerdict] = None
    note: str = ''

    @computed_field
    @property
    def support_size(self) -> int:
        return len(self.support)


class SubsetReport(FrozenModel):
    curves: tuple[str, ...]
    report: FactorBindingReport


class ConditionReport(FrozenModel):
    """Condition (p): every (n - p)-subset must not bind F_(k - p + 1)."""

    p: int
    target_rank: int
    subsets: tuple[SubsetReport, ...]


class MhaOutcome(FrozenModel):
    status: MhaStatus
    condition: Optional[int] = None
    subset: Optional[tuple[str, ...]] = None

    def describe(self) -> str:
        if self.status == MhaStatus.PASS:
            return 'Pass'
        where = f'condition {self.condition}'
        if self.subset:
            where += f', subset {{{", ".join(self.subset)}}}'
        return f'{self.status.value}({where})'


class MhaReport(FrozenModel):
    k: int
    n: int
    curves: tuple[str, ...]
    condition_0: SeparabilityVerdict
    conditions: tuple[ConditionReport, ...] = ()
    overall: MhaOutcome

    @property
    def passed(self) -> bool:
        return self.overall.status == MhaStatus.PASS
