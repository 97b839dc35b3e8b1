from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from functools import lru_cache
import itertools as it

import sympy
from tqdm.auto import tqdm as ProgressDisplay

from lefschetzlib.group.root_datum import RootDatum
from lefschetzlib.group.root_datum import TorusElement
from lefschetzlib.group.root_datum import in_A_minus
from lefschetzlib.group.root_datum import modular_delta
from lefschetzlib.logger import log
from lefschetzlib.padic.valuation import AbsValueSpectrum
from lefschetzlib.padic.valuation import PadicContext
from lefschetzlib.padic.valuation import eigen_abs_values
from lefschetzlib.padic.valuation import lambda_min_max
from lefschetzlib.padic.valuation import valuation
from lefschetzlib.utils.exact_linalg import to_rational_matrix

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    import random
    from typing import Literal, Sequence
    from lefschetzlib.typing import AdjointSubspace, RationalMatrix

    LeviPart = Literal["a", "m", "am"]


SUBSPACES = ("n", "nbar", "g", "a+m+n", "n+nbar")


class PreconditionError(ValueError):
    pass


class LeviPair(object):
    """
    An element am of AM for the upper triangular Borel, with a a torus
    element and m in the Levi subgroup, which here is the diagonal torus.
    m counts as elliptic when all its eigenvalues are units.
    """
    def __init__(
        self,
        ctx: PadicContext,
        rd: RootDatum,
        a: TorusElement,
        m: RationalMatrix | None = None,
    ):
        self.ctx = ctx
        self.rd = rd
        self.a = a
        self.m = to_rational_matrix(m) if m is not None else sympy.eye(rd.n)

        if a.rd != rd or a.ctx != ctx:
            raise ValueError("Torus element does not belong to this group")
        if self.m.shape != (rd.n, rd.n):
            raise ValueError(f"m must be {rd.n}x{rd.n}, got {self.m.shape}")
        if self.m.det() == 0:
            raise ValueError("m must be invertible")
        if not self.in_levi(self.m):
            raise ValueError(f"m is not in the Levi subgroup of {rd.name}: {self.m.tolist()}")
        a_matrix = a.matrix()
        if a_matrix * self.m != self.m * a_matrix:
            raise ValueError("a and m do not commute")
        self.spectra: dict[tuple[LeviPart, AdjointSubspace], AbsValueSpectrum] = dict()

    def in_levi(self, matrix: sympy.Matrix) -> bool:
        # Block diagonal with respect to levi_blocks
        block_of = [k for k, size in enumerate(self.rd.levi_blocks) for _ in range(size)]
        return all(
            matrix[i, j] == 0
            for i, j in it.product(range(self.rd.n), repeat=2)
            if block_of[i] != block_of[j]
        )

    @property
    def am(self) -> sympy.Matrix:
        return self.a.matrix() * self.m

    @cached_property
    def is_elliptic_model(self) -> bool:
        spectrum = eigen_abs_values(self.ctx, self.m)
        return all(s == 0 for s in spectrum.entries)

    def spectrum(self, part: LeviPart, subspace: AdjointSubspace) -> AbsValueSpectrum:
        """E(Ad(part) | subspace), computed once per pair"""
        key = (part, subspace)
        if key not in self.spectra:
            if part == "a":
                matrix = self.a.matrix()
            elif part == "m":
                matrix = self.m
            elif part == "am":
                matrix = self.am
            else:
                raise ValueError(f"Unknown part {part}, expected a / m / am")
            self.spectra[key] = adjoint_spectrum_of(self.ctx, self.rd, matrix, subspace)
        return self.spectra[key]

    def __repr__(self) -> str:
        return f"LeviPair({self.rd.name}, q={self.ctx.q}, v(a)={self.a.val_vector}, m={self.m.tolist()})"


def matrix_unit(n: int, i: int, j: int) -> sympy.Matrix:
    result = sympy.zeros(n, n)
    result[i, j] = 1
    return result


def subspace_basis(rd: RootDatum, subspace: AdjointSubspace) -> list[sympy.Matrix]:
    """
    Basis of the named subspace of the Lie algebra, as n x n matrices.
    For SL_n and PGL_2 the diagonal part is cut down to trace zero, which
    removes the contribution of the center.
    """
    if subspace not in SUBSPACES:
        raise ValueError(f"Unknown subspace {subspace}, expected one of {SUBSPACES}")
    n = rd.n
    upper = [matrix_unit(n, i, j) for i, j in it.combinations(range(n), 2)]
    lower = [matrix_unit(n, j, i) for i, j in it.combinations(range(n), 2)]
    if rd.family == "GL":
        diagonal = [matrix_unit(n, i, i) for i in range(n)]
    else:
        diagonal = [
            matrix_unit(n, i, i) - matrix_unit(n, i + 1, i + 1)
            for i in range(n - 1)
        ]
    return {
        "n": upper,
        "nbar": lower,
        "g": diagonal + upper + lower,
        "a+m+n": diagonal + upper,
        "n+nbar": upper + lower,
    }[subspace]


def _is_diagonal_or_unit(X: sympy.Matrix) -> bool:
    """Diagonal, or a multiple of a single off-diagonal matrix unit"""
    return X.is_diagonal() or sum(1 for entry in X if entry != 0) == 1


def _conjugation_factor(g: sympy.Matrix, X: sympy.Matrix) -> sympy.Rational:
    # For diagonal g, g E_ij g^(-1) = (g_i / g_j) E_ij and diagonal X is fixed
    if X.is_diagonal():
        return sympy.Integer(1)
    i, j = next((i, j) for i, j in it.product(range(X.rows), repeat=2) if X[i, j] != 0)
    return g[i, i] / g[j, j]


@lru_cache(maxsize=64)
def _left_inverse(basis: tuple[sympy.ImmutableMatrix, ...]) -> sympy.ImmutableMatrix:
    """(B^T B)^(-1) B^T for the flattened basis B, exact on its span"""
    n2 = basis[0].rows * basis[0].cols
    B = sympy.Matrix.hstack(*[X.reshape(n2, 1) for X in basis])
    return sympy.ImmutableMatrix((B.T * B).inv() * B.T)


def restricted_adjoint_matrix(g: sympy.Matrix, basis: Sequence[sympy.Matrix]) -> sympy.Matrix:
    """
    Matrix of X -> g X g^(-1) on the span of basis, which must be stable.

    When g is diagonal and the basis consists of diagonal matrices and
    multiples of matrix units, the result is diagonal and read off the
    entries of g. Otherwise coordinates come from a left inverse of the
    basis, computed once per basis.
    """
    if not basis:
        return sympy.zeros(0, 0)
    if g.is_diagonal() and all(_is_diagonal_or_unit(X) for X in basis):
        return sympy.diag(*[_conjugation_factor(g, X) for X in basis])

    n = g.shape[0]
    g_inv = g.inv()
    frozen = tuple(sympy.ImmutableMatrix(X) for X in basis)
    B = sympy.Matrix.hstack(*[X.reshape(n * n, 1) for X in frozen])
    Y = sympy.Matrix.hstack(*[(g * X * g_inv).reshape(n * n, 1) for X in frozen])
    C = _left_inverse(frozen) * Y
    if B * C != Y:
        raise ValueError("Subspace is not stable under the adjoint action")
    return sympy.Matrix(C)


def adjoint_spectrum_of(
    ctx: PadicContext,
    rd: RootDatum,
    g: RationalMatrix,
    subspace: AdjointSubspace,
) -> AbsValueSpectrum:
    basis = subspace_basis(rd, subspace)
    if not basis:
        return AbsValueSpectrum(ctx, {})
    matrix = restricted_adjoint_matrix(to_rational_matrix(g), basis)
    return eigen_abs_values(ctx, matrix)


def adjoint_spectrum(p: LeviPair, subspace: AdjointSubspace) -> AbsValueSpectrum:
    """E(Ad(am) | subspace)"""
    return p.spectrum("am", subspace)


def lambda_am(p: LeviPair) -> sympy.Rational:
    """
    The exponent e with lambda(am) = q^e, where
    lambda(am) = lambda_min(a | nbar) / lambda_max(m | g)^2.
    """
    nbar_spec = p.spectrum("a", "nbar")
    g_spec = p.spectrum("m", "g")
    # GL_1 has no roots, so nbar is zero and lambda_min is vacuous
    e_min = lambda_min_max(nbar_spec)[0] if nbar_spec else sympy.Integer(0)
    e_max = lambda_min_max(g_spec)[1]
    return e_min - 2 * e_max


def in_AM_tilde(p: LeviPair) -> bool:
    return lambda_am(p) > 0


def _det_abs_value(ctx: PadicContext, x: sympy.Rational) -> sympy.Expr:
    if x == 0:
        return sympy.Integer(0)
    return ctx.abs_value(valuation(ctx, x))


def det_identity(p: LeviPair) -> tuple[sympy.Expr, sympy.Expr]:
    """
    (|det(1 - Ad(am) | n + nbar)|, |a^(-2 rho)|), which agree when a lies in
    A^- and m is elliptic: every eigenvalue on n then has absolute value
    below 1, every eigenvalue on nbar above 1.
    """
    if not in_A_minus(p.a, p.rd):
        raise PreconditionError(f"a with valuations {p.a.val_vector} is not in A^-")
    if not p.is_elliptic_model:
        raise PreconditionError("m does not have unit spectrum")
    basis = subspace_basis(p.rd, "n+nbar")
    ad = restricted_adjoint_matrix(p.am, basis)
    det = (sympy.eye(ad.shape[0]) - ad).det()
    return (_det_abs_value(p.ctx, det), 1 / modular_delta(p.a, p.rd))


def modular_delta_from_adjoint(a: TorusElement, rd: RootDatum) -> sympy.Expr:
    """|det Ad(a) restricted to n|, computed without using rho"""
    basis = subspace_basis(rd, "n")
    if not basis:
        return sympy.Integer(1)
    ad = restricted_adjoint_matrix(a.matrix(), basis)
    return _det_abs_value(a.ctx, ad.det())


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    counterexample: int | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def record(self, index: int, holds: bool):
        self.checked += 1
        if not holds and self.counterexample is None:
            self.counterexample = index


@dataclass
class MAPropertyReport:
    samples: int
    results: dict[str, PropertyResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results.values())

    def failures(self) -> list[PropertyResult]:
        return [result for result in self.results.values() if not result.passed]


MA_PROPERTIES = (
    "chamber_and_elliptic_implies_tilde",
    "tilde_implies_chamber",
    "nbar_separation",
    "elliptic_lambda_product",
)


def check_MA_properties(
    ctx: PadicContext,
    rd: RootDatum,
    samples: Sequence[LeviPair],
    show_progress: bool = False,
) -> MAPropertyReport:
    """
    Checks, per sample,
      1. a in A^- and m elliptic imply am in (AM)~
      2. am in (AM)~ implies a in A^-
      3. on (AM)~, every eigenvalue of am on nbar is strictly larger in
         absolute value than every eigenvalue on a + m + n
      4. lambda_max(m | g) * lambda_min(m | g) = 1
    A property whose hypothesis fails for a sample is vacuous there and
    does not count towards `checked`.
    """
    report = MAPropertyReport(samples=len(samples))
    results = {name: PropertyResult(name) for name in MA_PROPERTIES}
    report.results = results
    for index, p in enumerate(ProgressDisplay(samples, desc="MA properties", disable=not show_progress)):
        if p.ctx != ctx or p.rd != rd:
            raise ValueError(f"Sample {index} does not belong to {rd.name} over q={ctx.q}")
        chamber = in_A_minus(p.a, rd)
        elliptic = p.is_elliptic_model
        tilde = in_AM_tilde(p)
        if chamber and elliptic:
            results["chamber_and_elliptic_implies_tilde"].record(index, tilde)
        if tilde:
            results["tilde_implies_chamber"].record(index, chamber)
            nbar_min = lambda_min_max(adjoint_spectrum(p, "nbar"))[0]
            rest_max = lambda_min_max(adjoint_spectrum(p, "a+m+n"))[1]
            results["nbar_separation"].record(index, nbar_min > rest_max)
        m_min, m_max = lambda_min_max(p.spectrum("m", "g"))
        results["elliptic_lambda_product"].record(index, m_min + m_max == 0)

    for result in report.failures():
        log.error(f"Property {result.name} fails for sample {samples[result.counterexample]}")
    return report


def random_levi_pair(
    ctx: PadicContext,
    rd: RootDatum,
    rng: random.Random,
    in_chamber: bool | None = True,
    elliptic: bool = True,
    max_valuation: int = 4,
    max_unit: int = 7,
) -> LeviPair:
    """
    Samples am with a diagonal. With in_chamber True the valuation vector is
    strictly decreasing, with in_chamber False it is resampled until it is
    not, and None leaves it unconstrained. Elliptic m have unit entries.
    """
    if in_chamber is False and not rd.simple_roots:
        raise ValueError(f"Every torus element of {rd.name} lies in A^-")
    while True:
        vector = _random_valuation_vector(rd, rng, in_chamber, max_valuation)
        a = TorusElement(ctx, vector, rd)
        if in_chamber is None or in_A_minus(a, rd) == in_chamber:
            break
    m = sympy.diag(*_random_levi_diagonal(ctx, rd, rng, elliptic, max_unit))
    return LeviPair(ctx, rd, a, m)


def _random_valuation_vector(
    rd: RootDatum,
    rng: random.Random,
    in_chamber: bool | None,
    max_valuation: int,
) -> tuple[int, ...]:
    n = rd.n
    if in_chamber:
        gaps = [rng.randint(1, max_valuation) for _ in range(n - 1)]
        last = rng.randint(-max_valuation, max_valuation)
        vector = [last + sum(gaps[i:]) for i in range(n - 1)] + [last]
    else:
        vector = [rng.randint(-max_valuation, max_valuation) for _ in range(n)]
    if rd.family == "SL":
        # Scaling by n keeps the chamber and makes the sum divisible
        total = sum(vector)
        vector = [n * v - total for v in vector]
    elif rd.family == "PGL2":
        vector = [v - vector[-1] for v in vector]
    return tuple(vector)


def _random_levi_diagonal(
    ctx: PadicContext,
    rd: RootDatum,
    rng: random.Random,
    elliptic: bool,
    max_unit: int,
) -> list[sympy.Rational]:
    units = [u for u in range(1, max_unit + 1) if u % ctx.q != 0]

    def random_entry():
        entry = sympy.Rational(rng.choice(units) * rng.choice([1, -1]))
        if not elliptic:
            entry *= sympy.Integer(ctx.q)**rng.randint(-2, 2)
        return entry

    entries = [random_entry() for _ in range(rd.n)]
    if rd.family == "SL":
        entries[-1] = 1 / sympy.Mul(*entries[:-1])
    elif rd.family == "PGL2":
        entries[-1] = sympy.Integer(1)
    return entries
