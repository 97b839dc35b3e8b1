from __future__ import annotations

from dataclasses import dataclass

from lefschetzlib.graph.geodesic_graph import GeodesicGraph
from lefschetzlib.logger import log
from lefschetzlib.utils.iterables import adjacent_pairs
from lefschetzlib.utils.iterables import minimal_period
from lefschetzlib.utils.iterables import minimal_rotation

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Sequence


class InvalidCycleError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class GeodesicClass:
    """
    A conjugacy class of closed geodesics, i.e. a closed non-backtracking
    walk up to rotation, stored in its lexicographically minimal rotation.
    Ordering is by length, then by that canonical form.
    """
    length: int
    edges: tuple[int, ...]

    @classmethod
    def from_edges(cls, edges: Sequence[int]) -> GeodesicClass:
        edges = minimal_rotation(tuple(edges))
        return cls(len(edges), edges)

    @property
    def primitive_length(self) -> int:
        return minimal_period(self.edges)

    @property
    def multiplicity(self) -> int:
        return self.length // self.primitive_length

    @property
    def is_primitive(self) -> bool:
        return self.multiplicity == 1

    def primitive(self) -> GeodesicClass:
        return GeodesicClass.from_edges(self.edges[:self.primitive_length])

    def power(self, k: int) -> GeodesicClass:
        if k < 1:
            raise ValueError(f"Only positive powers of a geodesic exist, got {k}")
        return GeodesicClass(k * self.length, self.edges * k)

    def reversed(self) -> GeodesicClass:
        return GeodesicClass.from_edges([GeodesicGraph.rev(e) for e in reversed(self.edges)])


def check_cycle(g: GeodesicGraph, edges: Sequence[int]) -> None:
    if len(edges) == 0:
        raise InvalidCycleError("A closed geodesic needs at least one edge")
    for e in edges:
        if not 0 <= e < g.num_directed_edges:
            raise InvalidCycleError(f"{e} is not a directed edge of {g}")
    for e, f in adjacent_pairs(list(edges)):
        if g.head(e) != g.tail(f):
            raise InvalidCycleError(f"Edge {f} does not start where edge {e} ends")
        if f == g.rev(e):
            raise InvalidCycleError(f"Cycle backtracks along edges {e}, {f}")


def primitive_decomposition(g: GeodesicGraph, edges: Sequence[int]) -> tuple[GeodesicClass, int]:
    """Writes the closed geodesic as gamma_0^mu with gamma_0 primitive"""
    check_cycle(g, edges)
    geodesic = GeodesicClass.from_edges(edges)
    return geodesic.primitive(), geodesic.multiplicity


def _lyndon_cycles_from(g: GeodesicGraph, e0: int, max_length: int) -> list[tuple[int, ...]]:
    """
    Closed non-backtracking walks starting at e0 that are Lyndon words,
    i.e. primitive and in canonical rotation. The search only extends
    prefixes of necklaces, tracking the period p of the current prefix.
    """
    found = []
    path = [e0]
    closing_tail = g.tail(e0)
    closing_forbidden = g.rev(e0)

    def extend(p: int):
        t = len(path)
        last = path[-1]
        if p == t and g.head(last) == closing_tail and last != closing_forbidden:
            found.append(tuple(path))
        if t == max_length:
            return
        reference = path[t - p]
        for f in g.continuations(last):
            if f < reference:
                continue
            path.append(f)
            extend(p if f == reference else t + 1)
            path.pop()

    extend(1)
    return found


def primitive_geodesics(g: GeodesicGraph, L: int) -> list[GeodesicClass]:
    """
    All primitive closed geodesics of length at most L, sorted by length
    and then canonical form. Worst case cost is O(|E| q^L).
    """
    if L < 1:
        raise ValueError(f"L must be positive, got {L}")
    classes = [
        GeodesicClass(len(cycle), cycle)
        for e0 in g.directed_edges
        for cycle in _lyndon_cycles_from(g, e0, L)
    ]
    classes.sort()
    log.debug(f"{len(classes)} primitive geodesics of length <= {L} on {g}")
    return classes


def geodesics_up_to(g: GeodesicGraph, L: int, primitives: Sequence[GeodesicClass] | None = None) -> list[GeodesicClass]:
    """Every closed geodesic class of length at most L, primitive or not"""
    if primitives is None:
        primitives = primitive_geodesics(g, L)
    classes = [
        gamma.power(k)
        for gamma in primitives
        for k in range(1, L // gamma.length + 1)
    ]
    return sorted(classes)
