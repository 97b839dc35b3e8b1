from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import sympy

from lefschetzlib.logger import log
from lefschetzlib.utils.exact_linalg import characteristic_polynomial
from lefschetzlib.utils.exact_linalg import to_rational_matrix
from lefschetzlib.utils.simple_functions import as_rational

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Iterable, Mapping, Sequence
    from lefschetzlib.typing import RationalLike, RationalMatrix, Valuation


@dataclass(frozen=True)
class PadicContext:
    """
    The local field is modelled as QQ with the q-adic valuation, which is
    dense in QQ_q. The uniformizer is q itself, and |x| = q^(-v(x)).
    """
    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 2:
            raise ValueError(f"q must be an integer >= 2, got {self.q}")
        if not sympy.isprime(self.q):
            raise ValueError(f"q must be prime, got {self.q}")

    @property
    def uniformizer(self) -> int:
        return self.q

    def abs_value(self, exponent: RationalLike) -> sympy.Expr:
        """q^(-exponent), the absolute value belonging to a valuation"""
        return sympy.Integer(self.q)**(-as_rational(exponent))


def valuation(ctx: PadicContext, x: RationalLike) -> Valuation:
    x = as_rational(x)
    if x == 0:
        return sympy.oo
    return int(sympy.multiplicity(ctx.q, abs(x.p))) - int(sympy.multiplicity(ctx.q, x.q))


@dataclass(frozen=True)
class AbsValueSpectrum:
    """
    The multiset E(g|V) of absolute values of eigenvalues, stored by
    valuation: an entry s with multiplicity k stands for k eigenvalues of
    absolute value q^(-s).
    """
    ctx: PadicContext
    entries: Mapping[sympy.Rational, int] = field(default_factory=dict)

    def __post_init__(self):
        entries = Counter()
        for s, mult in dict(self.entries).items():
            if not isinstance(mult, int) or mult <= 0:
                raise ValueError(f"Multiplicities must be positive integers, got {mult} for {s}")
            entries[as_rational(s)] += mult
        object.__setattr__(self, "entries", dict(sorted(entries.items())))

    @classmethod
    def from_exponents(cls, ctx: PadicContext, exponents: Iterable[RationalLike]) -> AbsValueSpectrum:
        return cls(ctx, Counter(as_rational(s) for s in exponents))

    @property
    def dimension(self) -> int:
        return sum(self.entries.values())

    def exponents(self) -> list[sympy.Rational]:
        """The valuations, sorted, with repetition"""
        return [s for s, mult in self.entries.items() for _ in range(mult)]

    def absolute_values(self) -> list[sympy.Expr]:
        return [self.ctx.abs_value(s) for s in self.exponents()]

    def __len__(self) -> int:
        return self.dimension

    def __bool__(self) -> bool:
        return self.dimension > 0


def _lower_convex_hull(points: Sequence[tuple[int, sympy.Rational]]) -> list[tuple[int, sympy.Rational]]:
    # Monotone chain, points already sorted by abscissa
    hull: list[tuple[int, sympy.Rational]] = []
    for point in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            x3, y3 = point
            # Drop the middle point unless it lies strictly below the chord
            if (y2 - y1) * (x3 - x1) >= (y3 - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(point)
    return hull


def newton_slopes(
    ctx: PadicContext,
    poly: sympy.Poly | Sequence[RationalLike],
) -> tuple[list[sympy.Rational], int]:
    """
    Valuations of the roots of poly over the algebraic closure of QQ_q.

    poly is a sympy Poly or a coefficient list, leading coefficient first.
    Returns (valuations sorted increasingly with repetition, k), where k is the
    order of vanishing at 0; those k roots have valuation +oo and are not part
    of the list.
    """
    if isinstance(poly, sympy.Poly):
        coeffs = poly.all_coeffs()
    else:
        coeffs = list(poly)
    coeffs = [as_rational(c) for c in coeffs]
    # Strip leading zeros, then index by degree
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if not coeffs:
        raise ValueError("The zero polynomial has no Newton polygon")
    by_degree = coeffs[::-1]
    zero_roots = next(i for i, c in enumerate(by_degree) if c != 0)

    points = [
        (i, sympy.Rational(valuation(ctx, c)))
        for i, c in enumerate(by_degree)
        if c != 0
    ]
    slopes: list[sympy.Rational] = []
    hull = _lower_convex_hull(points)
    for (x1, y1), (x2, y2) in zip(hull[:-1], hull[1:]):
        root_valuation = -(y2 - y1) / (x2 - x1)
        slopes.extend([root_valuation] * (x2 - x1))
    return sorted(slopes), zero_roots


def eigen_abs_values(ctx: PadicContext, g: RationalMatrix) -> AbsValueSpectrum:
    """
    E(g|V) for V the standard space, from the Newton polygon of the
    characteristic polynomial. No root is ever computed numerically.
    Triangular matrices skip the polygon, their diagonal is the spectrum.
    """
    matrix = to_rational_matrix(g)
    if matrix.is_upper or matrix.is_lower:
        diagonal = [matrix[i, i] for i in range(matrix.rows)]
        if any(entry == 0 for entry in diagonal):
            raise ValueError("Matrix is singular; 0 would be an eigenvalue")
        return AbsValueSpectrum.from_exponents(ctx, [valuation(ctx, entry) for entry in diagonal])

    char_poly = characteristic_polynomial(matrix)
    if char_poly.eval(0) == 0:
        raise ValueError("Matrix is singular; 0 would be an eigenvalue")
    slopes, zero_roots = newton_slopes(ctx, char_poly)
    log.debug("Newton slopes of %s at q=%d: %s", char_poly, ctx.q, slopes)
    return AbsValueSpectrum.from_exponents(ctx, slopes)


def lambda_min_max(spec: AbsValueSpectrum) -> tuple[sympy.Rational, sympy.Rational]:
    """
    (lambda_min, lambda_max) encoded as exponents e with lambda = q^e.
    Since |mu| = q^(-s), the smallest absolute value belongs to the
    largest valuation.
    """
    if not spec:
        raise ValueError("lambda_min / lambda_max of an empty spectrum")
    exponents = spec.exponents()
    return (-exponents[-1], -exponents[0])
