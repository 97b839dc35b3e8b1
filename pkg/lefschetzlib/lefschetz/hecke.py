from __future__ import annotations

from functools import lru_cache

import numpy as np
import sympy

from lefschetzlib.graph.geodesic_graph import hashimoto_matrix
from lefschetzlib.lefschetz.spectral import adjacency_polynomial
from lefschetzlib.lefschetz.spectral import integer_poly
from lefschetzlib.utils.exact_linalg import X
from lefschetzlib.utils.exact_linalg import characteristic_polynomial
from lefschetzlib.utils.exact_linalg import identity_matrix
from lefschetzlib.utils.exact_linalg import integer_matrix
from lefschetzlib.utils.exact_linalg import power_sums_from_polynomial

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Mapping
    from lefschetzlib.graph.geodesic_graph import GeodesicGraph
    from lefschetzlib.typing import IntMatrix


Y = sympy.Symbol("y")


def hecke_operators(g: GeodesicGraph, m_max: int) -> list[IntMatrix]:
    """
    [A_0, ..., A_m_max], where A_m sums over tree distance m spheres:
    A_0 = I, A_1 = adjacency, A_2 = A_1^2 - (q + 1) I and
    A_(m+1) = A_1 A_m - q A_(m-1).
    """
    if m_max < 0:
        raise ValueError(f"m must be nonnegative, got {m_max}")
    q = g.q
    A1 = g.adjacency_matrix()
    I = identity_matrix(g.num_vertices)
    operators = [I, A1]
    for m in range(1, m_max):
        correction = (q + 1) * I if m == 1 else q * operators[m - 1]
        operators.append(A1 @ operators[m] - correction)
    return operators[:m_max + 1]


def hecke_operator(g: GeodesicGraph, m: int) -> IntMatrix:
    return hecke_operators(g, m)[m]


def hecke_operators_from_walks(g: GeodesicGraph, m_max: int) -> list[IntMatrix]:
    """
    [A_0, ..., A_m_max] counted directly: A_m[u, v] is the number of
    non-backtracking walks of length m from u to v, the sum of T^(m-1)[e, f]
    over directed edges e leaving u and f entering v.
    """
    if m_max < 0:
        raise ValueError(f"m must be nonnegative, got {m_max}")
    leaving = np.zeros((g.num_vertices, g.num_directed_edges), dtype=int)
    entering = np.zeros((g.num_directed_edges, g.num_vertices), dtype=int)
    for e in g.directed_edges:
        leaving[g.tail(e), e] = 1
        entering[e, g.head(e)] = 1
    leaving, entering = integer_matrix(leaving), integer_matrix(entering)

    T = hashimoto_matrix(g)
    operators = [identity_matrix(g.num_vertices)]
    walks = identity_matrix(g.num_directed_edges)
    for m in range(1, m_max + 1):
        operators.append(leaving @ walks @ entering)
        walks = walks @ T
    return operators


@lru_cache(maxsize=256)
def hecke_polynomial(q: int, m: int) -> sympy.Poly:
    """P_m with A_m = P_m(A_1)"""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if m == 0:
        return sympy.Poly(1, X, domain=sympy.ZZ)
    if m == 1:
        return sympy.Poly(X, X, domain=sympy.ZZ)
    if m == 2:
        return sympy.Poly(X**2 - (q + 1), X, domain=sympy.ZZ)
    x = sympy.Poly(X, X, domain=sympy.ZZ)
    return x * hecke_polynomial(q, m - 1) - q * hecke_polynomial(q, m - 2)


def hecke_spectral_image(g: GeodesicGraph, m: int) -> sympy.Poly:
    """
    The characteristic polynomial A_m must have, predicted from the
    adjacency polynomial p as Res_x(p(x), y - P_m(x)), the polynomial
    whose roots are P_m(lambda) for the roots lambda of p.
    """
    p = adjacency_polynomial(g).as_expr()
    shifted = Y - hecke_polynomial(g.q, m).as_expr()
    image = sympy.Poly(sympy.resultant(p, shifted, X), Y)
    if image.LC() < 0:
        image = -image
    return sympy.Poly([int(c) for c in image.all_coeffs()], X, domain=sympy.ZZ)


def hecke_characteristic_polynomial(g: GeodesicGraph, m: int) -> sympy.Poly:
    return integer_poly(characteristic_polynomial(hecke_operator(g, m).tolist()))


def hecke_trace_formula(
    g: GeodesicGraph,
    m: int,
    closed_counts: Mapping[int, int],
) -> tuple[int, int]:
    """
    Both sides of the trace formula for the spherical kernel of A_m:
    the spectral side sum_lambda P_m(lambda), from the adjacency polynomial,
    and the geometric side N_m + (q - 1) sum_(1 <= j < m/2) q^(j-1) N_(m-2j),
    with N_k the weighted closed geodesic counts. Every closed
    non-backtracking walk is a cyclically reduced core with a tail of
    length j, which accounts for the sum.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    q = g.q
    p_sums = [g.num_vertices, *power_sums_from_polynomial(adjacency_polynomial(g), m)]
    P_m = hecke_polynomial(q, m)
    spectral = sum(
        int(coefficient) * p_sums[k]
        for k, coefficient in enumerate(reversed(P_m.all_coeffs()))
    )
    geometric = int(closed_counts[m]) + (q - 1) * sum(
        q**(j - 1) * int(closed_counts[m - 2 * j])
        for j in range(1, (m + 1) // 2)
    )
    return int(spectral), geometric


def hecke_trace(g: GeodesicGraph, m: int) -> int:
    return int(np.trace(hecke_operator(g, m)))
