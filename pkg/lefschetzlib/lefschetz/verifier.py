from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from lefschetzlib.constants import TWIST_TOLERANCE
from lefschetzlib.graph.geodesic_graph import hashimoto_matrix
from lefschetzlib.lefschetz.geometric import dictionary_constants
from lefschetzlib.lefschetz.geometric import geometric_side
from lefschetzlib.lefschetz.spectral import spectral_side_from_adjacency
from lefschetzlib.logger import log
from lefschetzlib.utils.exact_linalg import integer_matrix
from lefschetzlib.utils.exact_linalg import trace_powers
from lefschetzlib.utils.simple_functions import is_close

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Sequence
    from lefschetzlib.graph.character import EdgeCharacter
    from lefschetzlib.graph.geodesic_graph import GeodesicGraph
    from lefschetzlib.graph.geodesics import GeodesicClass


@dataclass
class LefschetzRow:
    m: int
    geometric: int | complex
    transfer_trace: int | complex
    spectral_from_adjacency: int | None
    passed: bool


@dataclass
class LefschetzReport:
    graph: dict
    q: int
    character: str
    exact: bool
    rows: list[LefschetzRow] = field(default_factory=list)
    dictionary: dict = field(default_factory=dictionary_constants)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def failures(self) -> list[LefschetzRow]:
        return [row for row in self.rows if not row.passed]


def twisted_transfer_matrix(g: GeodesicGraph, omega: EdgeCharacter | None = None) -> np.ndarray:
    """
    T_omega[e, f] = T[e, f] omega(f), so tr(T_omega^m) sums the character
    over based closed non-backtracking walks. Integer valued for sign
    characters, complex otherwise.
    """
    T = hashimoto_matrix(g)
    if omega is None or omega.is_trivial:
        return T
    if omega.is_sign_character:
        return integer_matrix(T * np.array(omega.integer_weights(), dtype=object)[np.newaxis, :])
    return T.astype(complex) * omega.weights[np.newaxis, :]


def describe_character(omega: EdgeCharacter | None) -> str:
    if omega is None or omega.is_trivial:
        return "trivial"
    if omega.is_sign_character:
        return "sign"
    if omega.is_exact:
        return "root of unity"
    return "unitary"


def verify_lefschetz(
    g: GeodesicGraph,
    L: int,
    omega: EdgeCharacter | None = None,
    tolerance: float = TWIST_TOLERANCE,
    primitives: Sequence[GeodesicClass] | None = None,
) -> LefschetzReport:
    """
    Compares, for each m <= L, the geometric side from geodesic enumeration,
    the trace of the twisted transfer matrix, and for trivial omega the power
    sums of the spectrum derived from the adjacency polynomial.

    With the test function phi(a) = |a^(-2 rho)| 1[l(a) = m] the left side
    is the sum over transfer eigenvalues of their m-th powers, and the right
    side the sum over classes of length m of c_gamma tr omega(gamma).
    """
    if L < 1:
        raise ValueError(f"L must be positive, got {L}")
    trivial = omega is None or omega.is_trivial
    geometric = geometric_side(g, L, omega, primitives=primitives)
    transfer_traces = trace_powers(twisted_transfer_matrix(g, omega), L)
    spectral = spectral_side_from_adjacency(g, L) if trivial else None

    report = LefschetzReport(
        graph=g.summary(),
        q=g.q,
        character=describe_character(omega),
        exact=geometric.exact,
    )
    for m in range(1, L + 1):
        geo_value = geometric[m]
        trace_value = transfer_traces[m - 1]
        spectral_value = spectral[m] if spectral is not None else None
        if geometric.exact:
            geo_value = int(geo_value)
            trace_value = int(trace_value)
            passed = geo_value == trace_value
            if spectral_value is not None:
                passed = passed and geo_value == spectral_value
        else:
            geo_value = complex(geo_value)
            trace_value = complex(trace_value)
            passed = is_close(geo_value, trace_value, tolerance)
        report.rows.append(LefschetzRow(m, geo_value, trace_value, spectral_value, passed))
        if not passed:
            log.error(
                f"Lefschetz identity fails on {g} at m={m}: geometric {geo_value}, "
                f"transfer trace {trace_value}, spectral {spectral_value}"
            )
    return report
