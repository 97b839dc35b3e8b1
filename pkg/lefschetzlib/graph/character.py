from __future__ import annotations

import cmath
import math

import numpy as np
import sympy

from lefschetzlib.constants import UNIT_CIRCLE_TOLERANCE
from lefschetzlib.graph.geodesic_graph import GeodesicGraph
from lefschetzlib.graph.geodesic_graph import GraphParseError
from lefschetzlib.utils.simple_functions import as_rational

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Mapping
    from lefschetzlib.graph.geodesics import GeodesicClass
    from lefschetzlib.typing import RationalLike


def turn_to_complex(turn: float | sympy.Rational) -> complex:
    return cmath.exp(2j * math.pi * float(turn))


class EdgeCharacter(object):
    """
    A one dimensional unitary character of the fundamental group, given by
    a weight on each directed edge with weight(rev e) = conj(weight(e)).

    When built from turns t (weight exp(2 pi i t)) with rational t the
    values are exact roots of unity, and characters with only the weights
    +1 and -1 are evaluated in integer arithmetic.
    """
    def __init__(
        self,
        graph: GeodesicGraph,
        weights: np.ndarray,
        turns: tuple[sympy.Rational, ...] | None = None,
        tolerance: float = UNIT_CIRCLE_TOLERANCE,
    ):
        weights = np.asarray(weights, dtype=complex)
        if weights.shape != (graph.num_directed_edges,):
            raise ValueError(f"Expected {graph.num_directed_edges} weights, got shape {weights.shape}")
        if np.any(np.abs(np.abs(weights) - 1) > tolerance):
            raise ValueError("Edge weights must lie on the unit circle")
        reversed_weights = weights[[graph.rev(e) for e in graph.directed_edges]]
        if np.any(np.abs(reversed_weights - weights.conj()) > tolerance):
            raise ValueError("The weight of a reversed edge must be the inverse weight")
        self.graph = graph
        self.weights = weights
        self.turns = turns

    @classmethod
    def trivial(cls, graph: GeodesicGraph) -> EdgeCharacter:
        return cls.from_turns(graph, {})

    @classmethod
    def from_turns(cls, graph: GeodesicGraph, turns: Mapping[int, RationalLike]) -> EdgeCharacter:
        """
        turns maps an undirected edge index k to t, giving weight
        exp(2 pi i t) on the directed edge 2k and its inverse on 2k + 1.
        """
        directed_turns = [sympy.Integer(0)] * graph.num_directed_edges
        for k, turn in turns.items():
            if not 0 <= k < graph.num_edges:
                raise ValueError(f"{k} is not an edge index of {graph}")
            turn = as_rational(turn) % 1
            directed_turns[2 * k] = turn
            directed_turns[2 * k + 1] = (-turn) % 1
        weights = np.array([turn_to_complex(t) for t in directed_turns])
        return cls(graph, weights, turns=tuple(directed_turns))

    @classmethod
    def sign_flip(cls, graph: GeodesicGraph, *edge_indices: int) -> EdgeCharacter:
        """-1 on the given undirected edges, +1 elsewhere"""
        return cls.from_turns(graph, {k: sympy.Rational(1, 2) for k in edge_indices})

    @classmethod
    def random(cls, graph: GeodesicGraph, rng: np.random.Generator) -> EdgeCharacter:
        angles = rng.uniform(0, 2 * math.pi, size=graph.num_edges)
        weights = np.empty(graph.num_directed_edges, dtype=complex)
        weights[0::2] = np.exp(1j * angles)
        weights[1::2] = np.exp(-1j * angles)
        return cls(graph, weights)

    @property
    def is_exact(self) -> bool:
        return self.turns is not None

    @property
    def is_trivial(self) -> bool:
        return self.is_exact and all(t == 0 for t in self.turns)

    @property
    def is_sign_character(self) -> bool:
        return self.is_exact and all(t in (0, sympy.Rational(1, 2)) for t in self.turns)

    def integer_weights(self) -> list[int]:
        if not self.is_sign_character:
            raise ValueError("Only characters with values +1 and -1 have integer weights")
        return [-1 if t else 1 for t in self.turns]

    def weight(self, e: int) -> complex:
        return complex(self.weights[e])


def character_value(omega: EdgeCharacter, c: GeodesicClass) -> int | complex:
    """
    tr omega(gamma), the product of the edge weights around the cycle.
    Exact integers for sign characters, complex otherwise.
    """
    if omega.is_sign_character:
        signs = omega.integer_weights()
        return math.prod(signs[e] for e in c.edges)
    return complex(np.prod(omega.weights[list(c.edges)]))


def character_turn(omega: EdgeCharacter, c: GeodesicClass) -> sympy.Rational:
    """The exact rational t with tr omega(gamma) = exp(2 pi i t), t in [0, 1)"""
    if not omega.is_exact:
        raise ValueError("Character was not built from rational turns")
    return sum((omega.turns[e] for e in c.edges), sympy.Integer(0)) % 1


def read_twist_file(graph: GeodesicGraph, path: str) -> EdgeCharacter:
    """
    Lines `twist <edge index> <turns>`, where turns is a rational such as 1/3,
    and `#` starts a comment. Unlisted edges get weight 1.
    """
    turns = {}
    with open(path, "r") as file:
        for line_number, raw_line in enumerate(file, start=1):
            line = raw_line.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 3 or fields[0] != "twist":
                raise GraphParseError(f"{path}, line {line_number}: unrecognized line `{line}`")
            try:
                turns[int(fields[1])] = sympy.Rational(fields[2])
            except (ValueError, TypeError, sympy.SympifyError) as err:
                raise GraphParseError(f"{path}, line {line_number}: {err}")
    return EdgeCharacter.from_turns(graph, turns)
