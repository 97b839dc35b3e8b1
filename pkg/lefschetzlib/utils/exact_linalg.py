from __future__ import annotations

from functools import reduce

import numpy as np
import sympy

from lefschetzlib.utils.simple_functions import as_rational

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Sequence
    from lefschetzlib.typing import RationalMatrix, IntMatrix


X = sympy.Symbol("x")


def to_rational_matrix(matrix: RationalMatrix) -> sympy.Matrix:
    if isinstance(matrix, sympy.MatrixBase):
        rows = matrix.tolist()
    else:
        rows = [list(row) for row in matrix]
    if len(rows) == 0 or any(len(row) != len(rows) for row in rows):
        raise ValueError("Expected a non-empty square matrix")
    return sympy.Matrix([[as_rational(entry) for entry in row] for row in rows])


def clear_denominators(matrix: sympy.Matrix) -> tuple[sympy.Matrix, int]:
    """
    Returns (d * matrix, d) with d the least common denominator of
    the entries, so the first component has integer entries.
    """
    d = reduce(sympy.ilcm, (sympy.Rational(e).q for e in matrix), 1)
    return (matrix * d).applyfunc(sympy.Integer), int(d)


def characteristic_polynomial(matrix: RationalMatrix) -> sympy.Poly:
    """
    Characteristic polynomial det(x I - g) over QQ.

    The Berkowitz recursion runs on the integer matrix d*g, which is
    division free, and the result is rescaled with
    char_g(x) = d^(-n) char_{dg}(d x).
    """
    g = to_rational_matrix(matrix)
    int_g, d = clear_denominators(g)
    int_coeffs = int_g.charpoly(X).all_coeffs()
    coeffs = [
        sympy.Rational(c, d**k)
        for k, c in enumerate(int_coeffs)
    ]
    return sympy.Poly(coeffs, X, domain=sympy.QQ)


def integer_matrix(rows: Sequence[Sequence[int]] | np.ndarray) -> IntMatrix:
    """numpy array of Python ints, so matrix products never overflow"""
    arr = np.array(rows, dtype=object)
    return np.vectorize(int, otypes=[object])(arr) if arr.size else arr


def identity_matrix(n: int) -> IntMatrix:
    return integer_matrix(np.identity(n, dtype=int))


def trace_powers(matrix: np.ndarray, max_power: int) -> list:
    """[tr(M^1), ..., tr(M^max_power)] by repeated multiplication"""
    traces = []
    power = matrix
    for m in range(1, max_power + 1):
        if m > 1:
            power = power @ matrix
        traces.append(power.trace())
    return traces


def power_sums_from_polynomial(poly: sympy.Poly, max_power: int) -> list:
    """
    Power sums p_1, ..., p_max_power of the roots of a monic polynomial,
    by Newton's identities on its coefficients. Never touches the roots.
    """
    coeffs = poly.all_coeffs()
    if coeffs[0] != 1:
        raise ValueError("Newton's identities here expect a monic polynomial")
    degree = len(coeffs) - 1
    # x^N + c_1 x^(N-1) + ... + c_N
    c = [0, *coeffs[1:]]
    sums: list = [degree]
    for m in range(1, max_power + 1):
        total = m * c[m] if m <= degree else 0
        for i in range(1, min(m, degree + 1)):
            total += c[i] * sums[m - i]
        sums.append(-total)
    return sums[1:]
