from __future__ import annotations

import pytest
import sympy

from lefschetzlib.graph.geodesic_graph import hashimoto_matrix
from lefschetzlib.graph.geodesic_graph import load_graph
from lefschetzlib.lefschetz.spectral import SpectralSide
from lefschetzlib.lefschetz.spectral import adjacency_polynomial
from lefschetzlib.lefschetz.spectral import ihara_polynomial
from lefschetzlib.lefschetz.spectral import spectral_side_from_adjacency
from lefschetzlib.utils.exact_linalg import X
from lefschetzlib.utils.exact_linalg import power_sums_from_polynomial
from lefschetzlib.utils.exact_linalg import trace_powers


def test_k4_adjacency_polynomial(k4):
    expected = sympy.Poly((X - 3) * (X + 1)**3, X, domain=sympy.ZZ)
    assert adjacency_polynomial(k4) == expected


def test_k4_transfer_traces(k4):
    side = spectral_side_from_adjacency(k4, 6)
    assert [side[m] for m in range(1, 7)] == [0, 0, 24, 24, 0, 96]
    assert side.correction_exponent == 2
    assert side.transfer_poly.degree() == k4.num_directed_edges


def test_spectral_side_matches_transfer_matrix(bundled_graph):
    side = SpectralSide(bundled_graph, 8)
    traces = trace_powers(hashimoto_matrix(bundled_graph), 8)
    assert [side[m] for m in side.computed_range] == [int(t) for t in traces]


def test_transfer_eigenvalues_of_k4(k4):
    multiplicities = SpectralSide(k4, 1).eigenvalue_multiplicities()
    assert multiplicities[1] == 3
    assert multiplicities[-1] == 2
    assert multiplicities[2] == 1
    assert sum(multiplicities.values()) == 12


def test_ihara_routes_agree():
    for name in ["k4", "k33"]:
        g = load_graph(name)
        assert ihara_polynomial(g, "bass") == ihara_polynomial(g, "hashimoto")


def test_ihara_constant_term(k4):
    assert ihara_polynomial(k4).eval(0) == 1
    with pytest.raises(ValueError):
        ihara_polynomial(k4, "adjacency")


def test_spectral_side_needs_positive_range(k4):
    with pytest.raises(ValueError):
        SpectralSide(k4, 0)


def test_power_sums_need_monic_input():
    with pytest.raises(ValueError):
        power_sums_from_polynomial(sympy.Poly(2 * X**2 + 1, X), 3)
    assert power_sums_from_polynomial(sympy.Poly(X**2 - 3 * X + 2, X), 3) == [3, 5, 9]
