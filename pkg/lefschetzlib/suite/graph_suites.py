from __future__ import annotations

import numpy as np

from lefschetzlib.graph.character import EdgeCharacter
from lefschetzlib.graph.character import read_twist_file
from lefschetzlib.graph.geodesics import primitive_geodesics
from lefschetzlib.lefschetz.geometric import class_weight
from lefschetzlib.lefschetz.geometric import dictionary_constants
from lefschetzlib.lefschetz.geometric import geometric_side
from lefschetzlib.lefschetz.hecke import hecke_characteristic_polynomial
from lefschetzlib.lefschetz.hecke import hecke_operators
from lefschetzlib.lefschetz.hecke import hecke_operators_from_walks
from lefschetzlib.lefschetz.hecke import hecke_spectral_image
from lefschetzlib.lefschetz.hecke import hecke_trace_formula
from lefschetzlib.lefschetz.spectral import ihara_polynomial
from lefschetzlib.lefschetz.verifier import verify_lefschetz
from lefschetzlib.suite.suite import Suite

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from lefschetzlib.graph.geodesic_graph import GeodesicGraph
    from lefschetzlib.lefschetz.verifier import LefschetzReport


class GraphSuite(Suite):
    def construct(self) -> None:
        graphs = self.load_graphs()
        if len(graphs) == 1:
            self.header = dict(graph=graphs[0].summary(), q=graphs[0].q)
        else:
            # One entry per graph, in load order
            self.header = dict(graph=[g.summary() for g in graphs], q=[g.q for g in graphs])
        for g in graphs:
            self.construct_graph(g)

    def construct_graph(self, g: GeodesicGraph) -> None:
        # To be implemented in subclasses
        pass


class LefschetzSuite(GraphSuite):
    """
    Both sides of the Lefschetz formula for graph quotients, for the trivial
    character (or the one read from the twist file) up to m_max, then for
    random unitary characters up to twisted_m_max.
    """
    name = "lefschetz"

    def construct(self) -> None:
        config = self.suite_config
        self.m_max = self.m_max or config.m_max
        self.twist_samples = self.get_case_count(config.twist_samples)
        self.twisted_m_max = min(self.m_max, config.twisted_m_max)
        self.parameters = dict(
            m_max=self.m_max,
            twist=self.twist_path,
            twist_samples=self.twist_samples,
            twisted_m_max=self.twisted_m_max,
        )
        super().construct()
        self.footer = dict(dictionary=dictionary_constants())

    def construct_graph(self, g: GeodesicGraph) -> None:
        primitives = primitive_geodesics(g, self.m_max)
        # With l(gamma_0) as lambda_gamma and chi_1(Z) = 1 the covolume
        # of every primitive class is its length
        self.checks[f"{g.name} covolume"] = all(class_weight(c) == c.length for c in primitives)

        omega = read_twist_file(g, self.twist_path) if self.twist_path else None
        report = verify_lefschetz(g, self.m_max, omega, primitives=primitives)
        self.add_report_rows(g, report, "twist file" if omega is not None else "trivial")

        twisted_primitives = [c for c in primitives if c.length <= self.twisted_m_max]
        for k in range(self.twist_samples):
            omega = EdgeCharacter.random(g, self.rng)
            report = verify_lefschetz(g, self.twisted_m_max, omega, primitives=twisted_primitives)
            self.add_report_rows(g, report, f"random {k}")

    def add_report_rows(self, g: GeodesicGraph, report: LefschetzReport, sample: str) -> None:
        for row in report.rows:
            self.add_row(
                graph=g.name,
                character=report.character,
                sample=sample,
                m=row.m,
                geometric=row.geometric,
                transfer_trace=row.transfer_trace,
                spectral_from_adjacency=row.spectral_from_adjacency,
                **{"pass": row.passed},
            )


class HeckeSuite(GraphSuite):
    """
    The Hecke recurrence against direct counts of non-backtracking walks,
    the spectral image of A_m through P_m, and the
    trace formula tr A_m = sum_lambda P_m(lambda) = geometric side, plus
    agreement of the two routes to the Ihara zeta function.
    """
    name = "hecke"

    def construct(self) -> None:
        self.m_max = self.m_max or self.suite_config.m_max
        self.parameters = dict(m_max=self.m_max)
        super().construct()

    def construct_graph(self, g: GeodesicGraph) -> None:
        operators = hecke_operators(g, self.m_max)
        walk_counts = hecke_operators_from_walks(g, self.m_max)
        closed_counts = geometric_side(g, self.m_max).terms
        for m in range(1, self.m_max + 1):
            recurrence_ok = np.array_equal(operators[m], walk_counts[m])
            image_ok = hecke_spectral_image(g, m) == hecke_characteristic_polynomial(g, m)
            spectral, geometric = hecke_trace_formula(g, m, closed_counts)
            direct = int(operators[m].trace())
            self.add_row(
                graph=g.name,
                m=m,
                recurrence=recurrence_ok,
                spectral_image=image_ok,
                trace_direct=direct,
                trace_spectral=spectral,
                trace_geometric=geometric,
                **{"pass": recurrence_ok and image_ok and direct == spectral == geometric},
            )
        self.checks[f"{g.name} ihara"] = ihara_polynomial(g, "bass") == ihara_polynomial(g, "hashimoto")
