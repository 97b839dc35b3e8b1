from __future__ import annotations

from collections import defaultdict
import numbers

import sympy

from lefschetzlib.cohomology.euler import BettiVector
from lefschetzlib.cohomology.euler import chi_r
from lefschetzlib.cohomology.euler import covolume
from lefschetzlib.graph.character import character_value
from lefschetzlib.graph.geodesics import geodesics_up_to
from lefschetzlib.graph.geodesics import primitive_geodesics
from lefschetzlib.utils.simple_functions import sign_power

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Mapping, Sequence
    from lefschetzlib.graph.character import EdgeCharacter
    from lefschetzlib.graph.geodesic_graph import GeodesicGraph
    from lefschetzlib.graph.geodesics import GeodesicClass
    from lefschetzlib.lefschetz.spectral import SpectralSide


# Rank one dictionary: G = PGL_2 has q(G) = 1, the centralizer of a
# hyperbolic class is a torus times an infinite cyclic lattice, so r = 1
# and Gamma_gamma = Z with Betti numbers (1, 1).
Q_G = 1
CENTRAL_RANK = 1
CENTRALIZER_BETTI = BettiVector([1, 1])


class SupportError(ValueError):
    pass


def dictionary_constants() -> dict:
    return dict(
        lambda_gamma="primitive length l(gamma_0), with vol(A_c) = 1",
        q_G=Q_G,
        r=CENTRAL_RANK,
        chi_1=chi_r(CENTRALIZER_BETTI, CENTRAL_RANK),
        sign=sign_power(Q_G + CENTRAL_RANK),
        sigma_value=1,
        test_function="phi(a) = |a^(-2 rho)| 1[l(a) = m]",
    )


def class_weight(gamma: GeodesicClass) -> sympy.Rational:
    """c_gamma up to the modulus factor, vol(Gamma_gamma \\ G_gamma) by the covolume formula"""
    return covolume(gamma.primitive_length, Q_G, CENTRAL_RANK, CENTRALIZER_BETTI)


class GeometricSide(object):
    """
    terms[m] = sum over closed geodesic classes gamma of length m of
    c_gamma tr omega(gamma) tr sigma(m_gamma), the factor
    phi(a_gamma) |a_gamma^(2 rho)| being left to evaluate_distribution.
    """
    def __init__(self, terms: Mapping[int, int | complex], m_max: int, exact: bool):
        self.terms = dict(terms)
        self.m_max = m_max
        self.exact = exact

    @property
    def computed_range(self) -> range:
        return range(1, self.m_max + 1)

    def __getitem__(self, m: int) -> int | complex:
        return self.terms[m]


def geometric_side(
    g: GeodesicGraph,
    L: int,
    omega: EdgeCharacter | None = None,
    sigma_value: int | complex = 1,
    primitives: Sequence[GeodesicClass] | None = None,
) -> GeometricSide:
    if L < 1:
        raise ValueError(f"L must be positive, got {L}")
    if primitives is None:
        primitives = primitive_geodesics(g, L)
    exact = (omega is None or omega.is_sign_character) and isinstance(sigma_value, numbers.Rational)
    terms: dict[int, int | complex] = defaultdict(int)
    for gamma in geodesics_up_to(g, L, primitives):
        weight = class_weight(gamma)
        value = character_value(omega, gamma) if omega is not None else 1
        terms[gamma.length] += (int(weight) if exact else complex(weight)) * value * sigma_value
    return GeometricSide(
        {m: terms.get(m, 0) for m in range(1, L + 1)},
        m_max=L,
        exact=exact,
    )


class TestFunction(object):
    """
    A finitely supported function on A^- / A_c, which in rank one is the
    set of positive lengths m. The weighted norm with vol(A_c) = 1 is
    sum_m |phi(m)| q^m, since |a_m^(-2 rho)| = q^m.
    """
    # Keep pytest from collecting this class
    __test__ = False

    def __init__(self, support: Mapping[int, complex | sympy.Expr] | None = None):
        cleaned = {}
        for m, coefficient in (support or {}).items():
            if not isinstance(m, int) or m < 1:
                raise SupportError(f"Test functions live on positive lengths, got {m}")
            if coefficient != 0:
                cleaned[m] = coefficient
        self.support = dict(sorted(cleaned.items()))

    @classmethod
    def delta(cls, m: int, coefficient: complex | sympy.Expr = 1) -> TestFunction:
        return cls({m: coefficient})

    def __add__(self, other: TestFunction) -> TestFunction:
        support = dict(self.support)
        for m, coefficient in other.support.items():
            support[m] = support.get(m, 0) + coefficient
        return TestFunction(support)

    def __mul__(self, scalar: complex | sympy.Expr) -> TestFunction:
        return TestFunction({m: scalar * c for m, c in self.support.items()})

    __rmul__ = __mul__

    def __call__(self, m: int):
        return self.support.get(m, 0)

    def norm(self, q: int) -> sympy.Expr | float:
        return sum((abs(c) * sympy.Integer(q)**m for m, c in self.support.items()), sympy.Integer(0))

    def absorb_modulus(self, q: int) -> TestFunction:
        """phi -> phi |a^(2 rho)|, i.e. phi(m) q^(-m)"""
        return TestFunction({
            m: c * sympy.Rational(1, q**m)
            for m, c in self.support.items()
        })

    def __repr__(self) -> str:
        return f"TestFunction({self.support})"


def evaluate_distribution(side: SpectralSide | GeometricSide, phi: TestFunction) -> int | complex | sympy.Expr:
    """
    sum_m phi(m) side[m]. This is linear in phi, and bounded by
    max_m |side[m] q^(-m)| times the weighted norm of phi.
    """
    outside = [m for m in phi.support if m not in side.computed_range]
    if outside:
        raise SupportError(f"Test function is supported at {outside}, beyond the computed range 1..{side.computed_range[-1]}")
    return sum((c * side[m] for m, c in phi.support.items()), 0)
