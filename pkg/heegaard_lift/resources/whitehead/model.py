from functools import cached_property

import networkx as nx
from pydantic import field_validator, model_validator

from heegaard_lift.resources.base.schemas import FrozenModel
from heegaard_lift.resources.freegroup.model import (
    Basis,
    Code,
    generator_of,
    letter_key,
)


class WhiteheadEdge(FrozenModel):
    u: Code
    v: Code
    curve: str
    position: int

    @model_validator(mode='after')
    def order_ends(self):
        if letter_key(self.v) < letter_key(self.u):
            raise ValueError('Edge ends must be stored in letter order')
        return self


class WhiteheadGraph(FrozenModel):
    """Multigraph on the 2k letters; one edge per cyclic adjacency."""

    basis: Basis
    edges: tuple[WhiteheadEdge, ...] = ()

    @property
    def vertices(self) -> tuple[Code, ...]:
        return self.basis.vertices()

    def degree(self, vertex: Code) -> int:
        return sum(
            (edge.u == vertex) + (edge.v == vertex) for edge in self.edges
        )

    @cached_property
    def multigraph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(
                edge.u, edge.v, curve=edge.curve, position=edge.position
            )
        return graph

    @cached_property
    def simple(self) -> nx.Graph:
        return nx.Graph(self.multigraph)


class WhiteheadMove(FrozenModel):
    """Type-II automorphism given by a multiplier and a letter set."""

    basis: Basis
    multiplier: Code
    letters: frozenset[Code]

    @field_validator('letters')
    @classmethod
    def validate_codes(cls, letters: frozenset[Code]) -> frozenset[Code]:
        if 0 in letters:
            raise ValueError('Letter code 0 is not a letter')
        return letters

    @model_validator(mode='after')
    def validate_move(self):
        rank = self.basis.rank
        for code in self.letters | {self.multiplier}:
            if generator_of(code) >= rank:
                raise ValueError(f'Letter code {code} out of range')
        if self.multiplier not in self.letters:
            raise ValueError('Multiplier must belong to the letter set')
        if -self.multiplier in self.letters:
            raise ValueError(
                'Inverse of the multiplier must not belong to the letter set'
            )
        return self

    def image(self, code: Code) -> tuple[Code, ...]:
        if code in {self.multiplier, -self.multiplier}:
            return (code,)
        image: tuple[Code, ...] = (code,)
        if -code in self.letters:
            image = (-self.multiplier, *image)
        if code in self.letters:
            image = (*image, self.multiplier)
        return image

    def inverse(self) -> 'WhiteheadMove':
        """The move (A - a + a^-1, a^-1) undoes this one."""
        letters = (self.letters - {self.multiplier}) | {-self.multiplier}
        return WhiteheadMove(
            basis=self.basis, multiplier=-self.multiplier, letters=letters
        )

    def describe(self) -> dict[str, object]:
        ordered = sorted(self.letters, key=letter_key)
        return {
            'multiplier': self.basis.vertex_name(self.multiplier),
            'set': [self.basis.vertex_name(code) for code in ordered],
        }


class GraphAnalysis(FrozenModel):
    components: tuple[tuple[Code, ...], ...]
    cut_vertices: tuple[Code, ...]
    valence_one_vertices: tuple[Code, ...]
    bridge_patterns: tuple[int, ...]

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1
