from __future__ import annotations

import sympy

from lefschetzlib.graph.geodesic_graph import DegreeError
from lefschetzlib.graph.geodesic_graph import hashimoto_matrix
from lefschetzlib.utils.exact_linalg import X
from lefschetzlib.utils.exact_linalg import characteristic_polynomial
from lefschetzlib.utils.exact_linalg import power_sums_from_polynomial

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Literal
    from lefschetzlib.graph.geodesic_graph import GeodesicGraph


U = sympy.Symbol("u")


def integer_poly(poly: sympy.Poly, gen: sympy.Symbol = X) -> sympy.Poly:
    coeffs = poly.all_coeffs()
    if any(not sympy.Rational(c).is_integer for c in coeffs):
        raise ValueError(f"{poly.as_expr()} does not have integer coefficients")
    return sympy.Poly([int(c) for c in coeffs], gen, domain=sympy.ZZ)


def adjacency_polynomial(g: GeodesicGraph) -> sympy.Poly:
    return integer_poly(characteristic_polynomial(g.adjacency_matrix().tolist()))


def transfer_polynomial_from_adjacency(adjacency_poly: sympy.Poly, q: int, correction: int) -> sympy.Poly:
    """
    det(u I - T) = (u^2 - 1)^correction * prod_lambda (u^2 - lambda u + q),
    assembled as (u^2 - 1)^correction * sum_j c_j (u^2 + q)^(n - j) u^j
    where the adjacency polynomial is sum_j c_j x^(n - j).
    """
    coeffs = adjacency_poly.all_coeffs()
    n = len(coeffs) - 1
    shifted = sympy.Poly(U**2 + q, U, domain=sympy.ZZ)
    result = sympy.Poly(0, U, domain=sympy.ZZ)
    for j, c in enumerate(coeffs):
        result += int(c) * shifted**(n - j) * sympy.Poly(U**j, U, domain=sympy.ZZ)
    if correction < 0:
        raise DegreeError(f"A (q+1)-regular graph has at least as many edges as vertices, got correction {correction}")
    return result * sympy.Poly(U**2 - 1, U, domain=sympy.ZZ)**correction


class SpectralSide(object):
    """
    The transfer matrix spectrum, held exactly as the adjacency
    characteristic polynomial together with the number |E| - |V| of
    eigenvalue pairs {+1, -1}. terms[m] = tr(T^m), by Newton's identities.
    """
    def __init__(self, g: GeodesicGraph, m_max: int):
        if m_max < 1:
            raise ValueError(f"m_max must be positive, got {m_max}")
        adjacency = g.adjacency_matrix()
        row_sums = set(int(s) for s in adjacency.sum(axis=1))
        if row_sums != {g.q + 1}:
            raise DegreeError(f"Adjacency row sums {sorted(row_sums)} differ from q + 1 = {g.q + 1}")
        self.q = g.q
        self.m_max = m_max
        self.adjacency_poly = adjacency_polynomial(g)
        self.correction_exponent = g.num_edges - g.num_vertices
        self.transfer_poly = transfer_polynomial_from_adjacency(
            self.adjacency_poly, g.q, self.correction_exponent
        )
        power_sums = power_sums_from_polynomial(self.transfer_poly, m_max)
        self.terms: dict[int, int] = {
            m: int(value)
            for m, value in enumerate(power_sums, start=1)
        }

    @property
    def computed_range(self) -> range:
        return range(1, self.m_max + 1)

    def __getitem__(self, m: int) -> int:
        return self.terms[m]

    def eigenvalue_multiplicities(self) -> dict:
        """
        Exact transfer eigenvalues with multiplicities, as sympy algebraic
        numbers. Only meant for display; the trace identities never use it.
        """
        return sympy.roots(self.transfer_poly)


def spectral_side_from_adjacency(g: GeodesicGraph, m_max: int) -> SpectralSide:
    return SpectralSide(g, m_max)


def ihara_polynomial(g: GeodesicGraph, method: Literal["bass", "hashimoto"] = "bass") -> sympy.Poly:
    """
    det(I - u T) over ZZ. "bass" derives it from the adjacency polynomial,
    "hashimoto" from the characteristic polynomial of T itself.
    """
    if method == "bass":
        char_poly = transfer_polynomial_from_adjacency(
            adjacency_polynomial(g), g.q, g.num_edges - g.num_vertices
        )
    elif method == "hashimoto":
        char_poly = integer_poly(characteristic_polynomial(hashimoto_matrix(g).tolist()), U)
    else:
        raise ValueError(f"Unknown method {method}, expected `bass` or `hashimoto`")
    # det(I - uT) = u^N det(u^(-1) I - T)
    return sympy.Poly(list(reversed(char_poly.all_coeffs())), U, domain=sympy.ZZ)
