import logging
from typing import Iterable, Mapping, Sequence

import networkx as nx

from heegaard_lift.resources.base.exceptions import (
    BasisError,
    PreconditionError,
    WhiteheadMoveError,
)
from heegaard_lift.resources.freegroup.model import (
    Basis,
    Code,
    CyclicWord,
    cyclic_core,
    free_reduce,
    generator_of,
    letter_key,
)
from heegaard_lift.resources.whitehead.enums import FastPath, Verdict
from heegaard_lift.resources.whitehead.model import (
    GraphAnalysis,
    WhiteheadEdge,
    WhiteheadGraph,
    WhiteheadMove,
)
from heegaard_lift.resources.whitehead.schemas import (
    SeparabilityVerdict,
    TraceStep,
)
from heegaard_lift.settings import Settings, get_settings

logger = logging.getLogger(__name__)

CurveSystem = dict[str, CyclicWord]
State = tuple[tuple[Code, ...], ...]


def as_system(
    words: Mapping[str, CyclicWord] | Sequence[CyclicWord],
) -> CurveSystem:
    """Names bare word lists ``c1, c2, ...`` and checks the basis."""
    if isinstance(words, Mapping):
        system = dict(words)
    else:
        system = {f'c{index}': word for index, word in enumerate(words, 1)}
    bases = {word.basis for word in system.values()}
    if len(bases) > 1:
        raise BasisError('Curve system mixes different bases')
    return system


def system_basis(system: CurveSystem) -> Basis:
    return next(iter(system.values())).basis


def complexity(system: CurveSystem) -> int:
    return sum(len(word) for word in system.values())


def build_graph(
    words: Mapping[str, CyclicWord] | Sequence[CyclicWord],
    basis: Basis | None = None,
) -> WhiteheadGraph:
    system = as_system(words)
    if basis is None:
        if not system:
            raise BasisError('An empty system needs an explicit basis')
        basis = system_basis(system)
    edges = []
    for name, word in system.items():
        codes = word.letters
        for position, current in enumerate(codes):
            following = codes[(position + 1) % len(codes)]
            u, v = sorted((-current, following), key=letter_key)
            edges.append(
                WhiteheadEdge(u=u, v=v, curve=name, position=position)
            )
    return WhiteheadGraph(basis=basis, edges=tuple(edges))


def _sorted_codes(codes: Iterable[Code]) -> tuple[Code, ...]:
    return tuple(sorted(codes, key=letter_key))


def _bridge_pattern(graph: WhiteheadGraph, generator: int) -> bool:
    plus, minus = generator + 1, -(generator + 1)
    simple = graph.simple
    remainder = simple.subgraph(
        node for node in simple if node not in {plus, minus}
    )
    sides: list[tuple[bool, bool]] = []
    edged = 0
    for component in nx.connected_components(remainder):
        touches_plus = any(simple.has_edge(plus, node) for node in component)
        touches_minus = any(
            simple.has_edge(minus, node) for node in component
        )
        if not touches_plus and not touches_minus:
            continue
        if touches_plus and touches_minus:
            return False
        sides.append((touches_plus, touches_minus))
        if remainder.subgraph(component).number_of_edges():
            edged += 1
    return (
        edged >= 2
        and any(plus_side for plus_side, _ in sides)
        and any(minus_side for _, minus_side in sides)
    )


def analyze(graph: WhiteheadGraph) -> GraphAnalysis:
    components = sorted(
        (_sorted_codes(part) for part in nx.connected_components(
            graph.multigraph
        )),
        key=lambda part: letter_key(part[0]),
    )
    cut_vertices = _sorted_codes(nx.articulation_points(graph.simple))
    valence_one = _sorted_codes(
        vertex for vertex in graph.vertices if graph.degree(vertex) == 1
    )
    bridges = tuple(
        generator
        for generator in range(graph.basis.rank)
        if _bridge_pattern(graph, generator)
    )
    return GraphAnalysis(
        components=tuple(components),
        cut_vertices=cut_vertices,
        valence_one_vertices=valence_one,
        bridge_patterns=bridges,
    )


def apply_move_codes(
    move: WhiteheadMove, codes: Sequence[Code]
) -> tuple[Code, ...]:
    image: list[Code] = []
    for code in codes:
        image.extend(move.image(code))
    core, _ = cyclic_core(free_reduce(image))
    return core


def apply_move(
    move: WhiteheadMove,
    words: Mapping[str, CyclicWord] | Sequence[CyclicWord],
) -> CurveSystem:
    """Applies a type-II Whitehead automorphism to every word."""
    system = as_system(words)
    for word in system.values():
        if word.basis != move.basis:
            raise WhiteheadMoveError('Move and system bases differ')
    return {
        name: CyclicWord(
            basis=word.basis, letters=apply_move_codes(move, word.letters)
        )
        for name, word in system.items()
    }


def make_move(basis: Basis, multiplier: Code, letters: Iterable[Code]):
    try:
        return WhiteheadMove(
            basis=basis, multiplier=multiplier, letters=frozenset(letters)
        )
    except ValueError as exc:
        raise WhiteheadMoveError(f'Malformed Whitehead move: {exc}') from exc


def canonical_state(system: CurveSystem) -> State:
    return tuple(sorted(word.unoriented for word in system.values()))


def _move_key(move: WhiteheadMove) -> tuple:
    return (
        letter_key(move.multiplier),
        tuple(letter_key(code) for code in _sorted_codes(move.letters)),
    )


def cut_vertex_moves(
    graph: WhiteheadGraph, analysis: GraphAnalysis
) -> list[WhiteheadMove]:
    """
    Candidate moves at every cut vertex v: for each component C of the
    graph minus v that misses v^-1, both ({v} + C, v) and its mirror
    ({v^-1} + C^-1, v^-1).
    """
    simple = graph.simple
    moves: dict[tuple, WhiteheadMove] = {}
    for vertex in analysis.cut_vertices:
        rest = simple.subgraph(node for node in simple if node != vertex)
        for component in nx.connected_components(rest):
            if -vertex in component:
                continue
            if not any(simple.has_edge(vertex, node) for node in component):
                continue
            side = frozenset(component) | {vertex}
            mirror = frozenset(-code for code in side)
            for multiplier, letters in (
                (vertex, side),
                (-vertex, mirror),
            ):
                if -multiplier in letters:
                    continue
                move = WhiteheadMove(
                    basis=graph.basis, multiplier=multiplier, letters=letters
                )
                moves.setdefault(_move_key(move), move)
    return [moves[key] for key in sorted(moves)]


def component_moves(
    graph: WhiteheadGraph, analysis: GraphAnalysis
) -> list[WhiteheadMove]:
    """
    Moves (C, v) for every component C holding v but not v^-1; nothing
    crosses the boundary of C, so each shortens the system by deg(v).
    """
    moves: dict[tuple, WhiteheadMove] = {}
    for component in analysis.components:
        members = frozenset(component)
        for vertex in component:
            if -vertex in members or not graph.degree(vertex):
                continue
            move = WhiteheadMove(
                basis=graph.basis, multiplier=vertex, letters=members
            )
            moves.setdefault(_move_key(move), move)
    return [moves[key] for key in sorted(moves)]


class WhiteheadService:
    """Separability decisions with the configured search bounds."""

    def __init__(self, settings: Settings):
        self.max_level_moves = settings.MAX_LEVEL_MOVES

    def decide_separability(
        self,
        words: Mapping[str, CyclicWord] | Sequence[CyclicWord],
        fast_paths: bool = True,
    ) -> SeparabilityVerdict:
        system = as_system(words)
        if not system:
            raise PreconditionError('Separability needs a nonempty system')
        basis = system_basis(system)
        initial = complexity(system)
        trace: list[TraceStep] = []
        visited: set[State] = {canonical_state(system)}
        level_moves = 0

        while True:
            graph = build_graph(system, basis)
            analysis = analyze(graph)
            if not analysis.connected:
                return self._verdict(
                    Verdict.SEPARABLE,
                    initial,
                    trace,
                    system,
                    witness=self._partition(basis, analysis),
                    fast_path=FastPath.DISCONNECTED if not trace else None,
                )
            if fast_paths and basis.rank >= 2 and not trace:
                shortcut = self._fast_path(analysis)
                if shortcut is not None:
                    logger.debug('fast path %s', shortcut.value)
                    return self._verdict(
                        Verdict.SEPARABLE,
                        initial,
                        trace,
                        system,
                        witness=self._partition(basis, analysis),
                        fast_path=shortcut,
                    )
            if not analysis.cut_vertices:
                return self._verdict(
                    Verdict.DISKBUSTING,
                    initial,
                    trace,
                    system,
                    witness=self._edge_list(graph),
                )

            current = complexity(system)
            candidates = []
            for move in cut_vertex_moves(graph, analysis):
                image = apply_move(move, system)
                candidates.append((complexity(image), _move_key(move), move))
            candidates.sort(key=lambda item: (item[0], item[1]))

            chosen = None
            if candidates and candidates[0][0] < current:
                chosen = candidates[0]
            else:
                for candidate in candidates:
                    if candidate[0] > current:
                        break
                    state = canonical_state(apply_move(candidate[2], system))
                    if state not in visited:
                        chosen = candidate
                        level_moves += 1
                        break
            if chosen is None or level_moves > self.max_level_moves:
                logger.warning(
                    'level exploration exhausted at complexity %d', current
                )
                return self._verdict(
                    Verdict.DISKBUSTING,
                    initial,
                    trace,
                    system,
                    witness=self._edge_list(graph),
                    exhausted=True,
                )
            new_complexity, _, move = chosen
            system = apply_move(move, system)
            visited.add(canonical_state(system))
            trace.append(TraceStep(move=move, complexity=new_complexity))
            logger.debug(
                'move %s -> complexity %d', move.describe(), new_complexity
            )

    def minimize(
        self, words: Mapping[str, CyclicWord] | Sequence[CyclicWord]
    ) -> CurveSystem:
        """Applies shortening moves until none is left."""
        system = as_system(words)
        if not system:
            raise PreconditionError('Minimizing needs a nonempty system')
        basis = system_basis(system)
        while True:
            graph = build_graph(system, basis)
            analysis = analyze(graph)
            moves = cut_vertex_moves(graph, analysis)
            if not analysis.connected:
                moves += component_moves(graph, analysis)
            current = complexity(system)
            best = None
            for move in moves:
                image = apply_move(move, system)
                if complexity(image) < current and (
                    best is None or complexity(image) < complexity(best)
                ):
                    best = image
            if best is None:
                return system
            system = best

    @staticmethod
    def _fast_path(analysis: GraphAnalysis) -> FastPath | None:
        if analysis.valence_one_vertices:
            return FastPath.VALENCE_ONE
        if analysis.bridge_patterns:
            return FastPath.BRIDGE
        return None

    @staticmethod
    def _partition(
        basis: Basis, analysis: GraphAnalysis
    ) -> tuple[tuple[str, ...], ...]:
        return tuple(
            tuple(basis.vertex_name(code) for code in component)
            for component in analysis.components
        )

    @staticmethod
    def _edge_list(graph: WhiteheadGraph) -> tuple[tuple[str, ...], ...]:
        return tuple(
            (
                graph.basis.vertex_name(edge.u),
                graph.basis.vertex_name(edge.v),
            )
            for edge in graph.edges
        )

    @staticmethod
    def _verdict(
        verdict: Verdict,
        initial: int,
        trace: list[TraceStep],
        system: CurveSystem,
        witness: tuple[tuple[str, ...], ...],
        fast_path: FastPath | None = None,
        exhausted: bool = False,
    ) -> SeparabilityVerdict:
        logger.info('verdict %s after %d moves', verdict.value, len(trace))
        return SeparabilityVerdict(
            verdict=verdict,
            initial_complexity=initial,
            trace=tuple(trace),
            fast_path=fast_path,
            witness=witness,
            exhausted=exhausted,
            terminal=dict(system),
        )


def get_whitehead_service(settings: Settings | None = None):
    return WhiteheadService(settings or get_settings())


def decide_separability(
    words: Mapping[str, CyclicWord] | Sequence[CyclicWord],
    fast_paths: bool = True,
) -> SeparabilityVerdict:
    return get_whitehead_service().decide_separability(words, fast_paths)


def generator_support(system: CurveSystem) -> frozenset[int]:
    return frozenset(
        generator_of(code)
        for word in system.values()
        for code in word.letters
    )
