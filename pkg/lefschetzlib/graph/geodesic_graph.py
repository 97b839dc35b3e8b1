from __future__ import annotations

from collections.abc import Mapping
import os
from pathlib import Path

import networkx as nx
import numpy as np
import sympy

from lefschetzlib.logger import log
from lefschetzlib.utils.directories import get_graph_dirs
from lefschetzlib.utils.exact_linalg import integer_matrix
from lefschetzlib.utils.exact_linalg import trace_powers
from lefschetzlib.utils.file_ops import find_file

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Hashable, Sequence
    from lefschetzlib.typing import IntMatrix


GRAPH_FILE_EXTENSIONS = ["", ".graph"]


class GraphError(ValueError):
    pass


class GraphParseError(GraphError):
    pass


class DegreeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DanglingEdgeError(GraphError):
    pass


class GeodesicGraph(object):
    """
    A finite (q+1)-regular multigraph without self-loops, standing in for
    the quotient of the Bruhat-Tits tree of PGL_2 by a neat cocompact lattice.

    Undirected edge k = (u, v) gives the directed edges 2k (u -> v) and
    2k + 1 (v -> u), so reversal is e -> e ^ 1.
    """
    def __init__(
        self,
        q: int,
        vertices: int | Sequence[Hashable],
        edges: Sequence[tuple[Hashable, Hashable]],
        name: str = "",
    ):
        if not isinstance(q, int) or q < 2:
            raise GraphError(f"q must be an integer >= 2, got {q}")
        if not sympy.isprime(q):
            log.warning(f"q = {q} is not prime; the graph is not a quotient of a Bruhat-Tits tree")
        self.q = q
        self.name = name

        if isinstance(vertices, int):
            labels = list(range(vertices))
        else:
            labels = list(vertices)
        if len(set(labels)) != len(labels):
            raise GraphError(f"Repeated vertex labels in {labels}")
        if not labels:
            raise GraphError("A graph needs at least one vertex")
        self.vertex_labels = labels
        index_of = {label: i for i, label in enumerate(labels)}

        pairs = []
        for u, v in edges:
            for endpoint in (u, v):
                if endpoint not in index_of:
                    raise DanglingEdgeError(f"Edge ({u}, {v}) uses unknown vertex {endpoint}")
            if u == v:
                raise SelfLoopError(f"Self-loop at vertex {u}")
            pairs.append((index_of[u], index_of[v]))
        self.edges: tuple[tuple[int, int], ...] = tuple(pairs)

        self.nx_graph = nx.MultiGraph()
        self.nx_graph.add_nodes_from(range(len(labels)))
        self.nx_graph.add_edges_from(self.edges)

        self.init_directed_edges()
        self.check_regularity()
        if not nx.is_connected(self.nx_graph):
            log.warning(f"Graph {self.name or ''} is not connected")

    def init_directed_edges(self) -> None:
        tails = []
        heads = []
        for u, v in self.edges:
            tails.extend([u, v])
            heads.extend([v, u])
        self.tails: tuple[int, ...] = tuple(tails)
        self.heads: tuple[int, ...] = tuple(heads)
        self.out_edges: list[list[int]] = [[] for _ in self.vertex_labels]
        for e, tail in enumerate(self.tails):
            self.out_edges[tail].append(e)

    def check_regularity(self) -> None:
        for vertex, degree in sorted(self.nx_graph.degree()):
            if degree != self.q + 1:
                raise DegreeError(
                    f"Vertex {self.vertex_labels[vertex]} has degree {degree}, expected {self.q + 1}"
                )

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_labels)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_directed_edges(self) -> int:
        return len(self.tails)

    @property
    def directed_edges(self) -> range:
        return range(self.num_directed_edges)

    @staticmethod
    def rev(e: int) -> int:
        return e ^ 1

    def tail(self, e: int) -> int:
        return self.tails[e]

    def head(self, e: int) -> int:
        return self.heads[e]

    def continuations(self, e: int) -> list[int]:
        """The q directed edges that may follow e in a non-backtracking walk"""
        return [f for f in self.out_edges[self.heads[e]] if f != self.rev(e)]

    def adjacency_matrix(self) -> IntMatrix:
        n = self.num_vertices
        matrix = np.zeros((n, n), dtype=int)
        for u, v in self.edges:
            matrix[u, v] += 1
            matrix[v, u] += 1
        return integer_matrix(matrix)

    def summary(self) -> dict:
        return dict(
            name=self.name,
            q=self.q,
            vertices=self.num_vertices,
            edges=self.num_edges,
            directed_edges=self.num_directed_edges,
        )

    def __repr__(self) -> str:
        return f"GeodesicGraph({self.name or 'unnamed'}, q={self.q}, |V|={self.num_vertices}, |E|={self.num_edges})"

    # Interchange with networkx
    @classmethod
    def from_networkx(cls, graph: nx.Graph, q: int | None = None, name: str = "") -> GeodesicGraph:
        """
        Any networkx graph or multigraph. q defaults to the degree of the
        first vertex minus one.
        """
        nodes = list(graph.nodes())
        if q is None:
            if not nodes:
                raise GraphError("Empty graph")
            q = graph.degree(nodes[0]) - 1
        edges = [(u, v) for u, v, *_ in graph.edges()]
        return cls(q, nodes, edges, name=name or str(graph.name or ""))

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph(name=self.name)
        graph.add_nodes_from(self.vertex_labels)
        graph.add_edges_from(
            (self.vertex_labels[u], self.vertex_labels[v])
            for u, v in self.edges
        )
        return graph


def hashimoto_matrix(g: GeodesicGraph) -> IntMatrix:
    """T[e, f] = 1 when f continues e without backtracking"""
    size = g.num_directed_edges
    matrix = np.zeros((size, size), dtype=int)
    for e in g.directed_edges:
        for f in g.continuations(e):
            matrix[e, f] = 1
    return integer_matrix(matrix)


def closed_geodesic_count(g: GeodesicGraph, m: int) -> int:
    """tr(T^m), the number of based closed non-backtracking walks of length m"""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return int(trace_powers(hashimoto_matrix(g), m)[-1])


def girth(g: GeodesicGraph) -> int:
    """Length of the shortest closed geodesic"""
    T = hashimoto_matrix(g)
    power = T
    for m in range(1, g.num_directed_edges + 1):
        if power.trace() > 0:
            return m
        power = power @ T
    raise GraphError("Graph has no closed geodesic")


# Text format


def parse_graph_text(text: str, name: str = "") -> GeodesicGraph:
    """
    Lines are `q <int>`, `vertices <count>` or `vertices <label> <label> ...`,
    and one `edge <u> <v>` per undirected edge. Repeated edges are multi-edges,
    and `#` starts a comment.
    """
    q = None
    vertices = None
    edges = []
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *fields = line.split()
        try:
            if keyword == "q" and len(fields) == 1:
                q = int(fields[0])
            elif keyword == "vertices" and len(fields) == 1 and fields[0].isdigit():
                vertices = [str(i) for i in range(int(fields[0]))]
            elif keyword == "vertices" and fields:
                vertices = fields
            elif keyword == "edge" and len(fields) == 2:
                edges.append((fields[0], fields[1]))
            else:
                raise ValueError(f"Unrecognized line `{line}`")
        except ValueError as err:
            raise GraphParseError(f"{name or 'graph'}, line {line_number}: {err}")
    if q is None:
        raise GraphParseError(f"{name or 'graph'}: missing `q` line")
    if vertices is None:
        raise GraphParseError(f"{name or 'graph'}: missing `vertices` line")
    return GeodesicGraph(q, vertices, edges, name=name)


def graph_to_text(g: GeodesicGraph) -> str:
    labels = [str(label) for label in g.vertex_labels]
    if labels == [str(i) for i in range(len(labels))]:
        vertex_line = f"vertices {len(labels)}"
    else:
        vertex_line = "vertices " + " ".join(labels)
    lines = [f"q {g.q}", vertex_line]
    lines.extend(f"edge {labels[u]} {labels[v]}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def find_graph_file(name: str) -> Path:
    return find_file(
        name,
        directories=get_graph_dirs(),
        extensions=GRAPH_FILE_EXTENSIONS,
    )


def read_graph_file(path: str | Path) -> GeodesicGraph:
    path = find_graph_file(str(path))
    with open(path, "r") as file:
        text = file.read()
    return parse_graph_text(text, name=Path(path).stem)


def load_graph(data: GeodesicGraph | nx.Graph | Mapping | str | Path) -> GeodesicGraph:
    """
    Accepts a path or bundled graph name, the text of a graph file, a
    mapping with keys q, vertices and edges, or a networkx graph.
    """
    if isinstance(data, GeodesicGraph):
        return data
    if isinstance(data, nx.Graph):
        return GeodesicGraph.from_networkx(data)
    if isinstance(data, Mapping):
        missing = [key for key in ("q", "vertices", "edges") if key not in data]
        if missing:
            raise GraphParseError(f"Graph description is missing {missing}")
        return GeodesicGraph(
            int(data["q"]),
            data["vertices"],
            [tuple(edge) for edge in data["edges"]],
            name=str(data.get("name", "")),
        )
    text = str(data)
    if "\n" in text:
        return parse_graph_text(text)
    return read_graph_file(os.fspath(data))
