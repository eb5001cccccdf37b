import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Mapping, Sequence

import networkx as nx

from heegaard_lift.resources.base.exceptions import PreconditionError
from heegaard_lift.resources.factor.enums import (
    BindingCriterion,
    BindingStatus,
    MhaStatus,
)
from heegaard_lift.resources.factor.schemas import (
    BindingEvidence,
    ConditionReport,
    FactorBindingReport,
    MhaOutcome,
    MhaReport,
    SubsetReport,
)
from heegaard_lift.resources.freegroup.model import CyclicWord
from heegaard_lift.resources.freegroup.service import make_basis, rebase
from heegaard_lift.resources.whitehead.enums import Verdict
from heegaard_lift.resources.whitehead.service import (
    CurveSystem,
    WhiteheadService,
    analyze,
    as_system,
    build_graph,
    generator_support,
    system_basis,
)
from heegaard_lift.settings import Settings, get_settings

logger = logging.getLogger(__name__)


def _restrict_to_support(system: CurveSystem) -> CurveSystem:
    basis = system_basis(system)
    support = sorted(generator_support(system))
    restricted = make_basis([basis.names[index] for index in support])
    return {
        name: rebase(word, restricted)  # type: ignore[misc]
        for name, word in system.items()
    }


def _disjoint_parts(system: CurveSystem) -> list[list[str]]:
    """Curves grouped by shared generators."""
    graph = nx.Graph()
    for name, word in system.items():
        graph.add_node(('curve', name))
        for generator in word.generators():
            graph.add_edge(('curve', name), ('generator', generator))
    order = list(system)
    parts = [
        sorted(
            (node[1] for node in component if node[0] == 'curve'),
            key=order.index,
        )
        for component in nx.connected_components(graph)
    ]
    parts = [part for part in parts if part]
    return sorted(parts, key=lambda part: order.index(part[0]))


def _evidence(system: CurveSystem) -> BindingEvidence:
    basis = system_basis(system)
    analysis = analyze(build_graph(system))
    support = generator_support(system)
    return BindingEvidence(
        omitted=tuple(
            name
            for index, name in enumerate(basis.names)
            if index not in support
        ),
        disconnected=not analysis.connected,
        valence_one=tuple(
            basis.vertex_name(code)
            for code in analysis.valence_one_vertices
        ),
        bridges=tuple(
            basis.names[generator] for generator in analysis.bridge_patterns
        ),
    )


def _graph_criterion(
    evidence: BindingEvidence, rank: int, m: int
) -> tuple[BindingCriterion, str] | None:
    """
    DoesNotBind read straight off the input graph. Below full rank only a
    short support counts; at full rank any separability witness does.
    """
    if rank - len(evidence.omitted) < m:
        return (
            BindingCriterion.SUPPORT_OMITS,
            f'words omit {", ".join(evidence.omitted)}',
        )
    if m != rank:
        return None
    if evidence.disconnected:
        return BindingCriterion.DISCONNECTED, 'Whitehead graph disconnected'
    if evidence.bridges:
        name = evidence.bridges[0]
        return (
            BindingCriterion.BRIDGE,
            f'sides joined only through {name}+ and {name}-',
        )
    if evidence.valence_one:
        return (
            BindingCriterion.VALENCE_ONE,
            f'valence-one vertex {evidence.valence_one[0]}',
        )
    return None


class FactorService:
    def __init__(self, settings: Settings, whitehead: WhiteheadService):
        self.whitehead = whitehead
        self.parallel = settings.PARALLEL_SUBSETS
        self.max_workers = settings.MAX_PARALLEL_WORKERS

    def binds_free_factor(
        self,
        words: Mapping[str, CyclicWord] | Sequence[CyclicWord],
        m: int,
    ) -> FactorBindingReport:
        """
        Decides whether a system binds a free factor of rank ``m``: first
        from what its own Whitehead graph shows, then with the
        minimize-then-support criteria; Unknown whenever neither is
        decisive. The input graph evidence is kept on every report.
        """
        system = as_system(words)
        if not system:
            raise PreconditionError('Binding test needs a nonempty system')
        basis = system_basis(system)
        if not 1 <= m <= basis.rank:
            raise PreconditionError(
                f'Target rank {m} out of range 1..{basis.rank}'
            )

        evidence = _evidence(system)
        shortcut = _graph_criterion(evidence, basis.rank, m)
        if shortcut is not None:
            criterion, note = shortcut
            return FactorBindingReport(
                target_rank=m,
                status=BindingStatus.DOES_NOT_BIND,
                criterion=criterion,
                support=tuple(
                    name for name in basis.names
                    if name not in evidence.omitted
                ),
                evidence=evidence,
                note=note,
            )

        reduced = self.whitehead.decide_separability(
            system, fast_paths=False
        ).terminal
        minimized = self.whitehead.minimize(reduced)
        support_names = tuple(
            basis.names[index]
            for index in sorted(generator_support(minimized))
        )
        minimized_text = {name: str(word) for name, word in minimized.items()}

        def report(status, criterion, verdict=None, note=''):
            return FactorBindingReport(
                target_rank=m,
                status=status,
                criterion=criterion,
                support=support_names,
                evidence=evidence,
                minimized=minimized_text,
                support_verdict=verdict,
                note=note,
            )

        size = len(support_names)
        if size < m:
            return report(
                BindingStatus.DOES_NOT_BIND,
                BindingCriterion.SUPPORT_DEFICIENCY,
                note=f'support of size {size} misses rank {m}',
            )

        parts = _disjoint_parts(minimized)
        if len(parts) >= 2:
            sizes = [
                len(generator_support({n: minimized[n] for n in part}))
                for part in parts
            ]
            if m > max(sizes):
                return report(
                    BindingStatus.DOES_NOT_BIND,
                    BindingCriterion.DISJOINT_PARTS,
                    note=f'parts with supports of sizes {sizes}',
                )

        restricted = _restrict_to_support(minimized)
        verdict = self.whitehead.decide_separability(restricted)
        if verdict.exhausted:
            return report(
                BindingStatus.UNKNOWN,
                BindingCriterion.SEARCH_EXHAUSTED,
                verdict,
                note='level-move exploration bound reached',
            )
        if verdict.verdict == Verdict.DISKBUSTING:
            status = (
                BindingStatus.BINDS if size == m
                else BindingStatus.DOES_NOT_BIND
            )
            return report(
                status, BindingCriterion.DISKBUSTING_ON_SUPPORT, verdict
            )
        return report(
            BindingStatus.DOES_NOT_BIND,
            BindingCriterion.SEPARABLE_ON_SUPPORT,
            verdict,
            note=(
                'separable via '
                + (verdict.fast_path.value if verdict.fast_path else 'moves')
            ),
        )

    def mha_check(
        self,
        words: Mapping[str, CyclicWord] | Sequence[CyclicWord],
        parallel: bool | None = None,
    ) -> MhaReport:
        """Checks conditions (0)..(n-1) of the multi-handle addition test."""
        system = as_system(words)
        if not system:
            raise PreconditionError('Multi-handle addition needs curves')
        k = system_basis(system).rank
        names = tuple(system)
        n = len(names)

        condition_0 = self.whitehead.decide_separability(system)
        if condition_0.verdict != Verdict.DISKBUSTING or (
            condition_0.exhausted
        ):
            status = (
                MhaStatus.INCONCLUSIVE if condition_0.exhausted
                else MhaStatus.FAIL
            )
            return MhaReport(
                k=k,
                n=n,
                curves=names,
                condition_0=condition_0,
                overall=MhaOutcome(status=status, condition=0),
            )

        tasks = [
            (p, k - p + 1, subset)
            for p in range(1, n)
            for subset in combinations(names, n - p)
        ]

        def run(task):
            _, rank, subset = task
            return self.binds_free_factor(
                {name: system[name] for name in subset}, rank
            )

        use_pool = self.parallel if parallel is None else parallel
        if use_pool and len(tasks) > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
                results = list(pool.map(run, tasks))
        else:
            results = [run(task) for task in tasks]

        conditions = []
        overall = MhaOutcome(status=MhaStatus.PASS)
        for p in range(1, n):
            subsets = tuple(
                SubsetReport(curves=subset, report=result)
                for (task_p, _, subset), result in zip(tasks, results)
                if task_p == p
            )
            conditions.append(
                ConditionReport(p=p, target_rank=k - p + 1, subsets=subsets)
            )
            for item in subsets:
                status = item.report.status
                if status == BindingStatus.BINDS and (
                    overall.status != MhaStatus.FAIL
                ):
                    overall = MhaOutcome(
                        status=MhaStatus.FAIL, condition=p, subset=item.curves
                    )
                elif (
                    status == BindingStatus.UNKNOWN
                    and overall.status == MhaStatus.PASS
                ):
                    overall = MhaOutcome(
                        status=MhaStatus.INCONCLUSIVE,
                        condition=p,
                        subset=item.curves,
                    )
        logger.info('multi-handle addition: %s', overall.describe())
        return MhaReport(
            k=k,
            n=n,
            curves=names,
            condition_0=condition_0,
            conditions=tuple(conditions),
            overall=overall,
        )


def get_factor_service(settings: Settings | None = None) -> FactorService:
    settings = settings or get_settings()
    return FactorService(settings, WhiteheadService(settings))


def binds_free_factor(
    words: Mapping[str, CyclicWord] | Sequence[CyclicWord], m: int
) -> FactorBindingReport:
    return get_factor_service().binds_free_factor(words, m)


def mha_check(
    words: Mapping[str, CyclicWord] | Sequence[CyclicWord],
    parallel: bool | None = None,
) -> MhaReport:
    return get_factor_service().mha_check(words, parallel)
