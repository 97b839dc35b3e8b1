from __future__ import annotations

import sympy

from lefschetzlib.logger import log
from lefschetzlib.utils.exact_linalg import X
from lefschetzlib.utils.exact_linalg import characteristic_polynomial
from lefschetzlib.utils.exact_linalg import to_rational_matrix

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from lefschetzlib.typing import RationalMatrix


def default_degree_bound(g: RationalMatrix) -> int:
    """
    Largest k with totient(k) <= n, so that every Phi_k which can divide
    the characteristic polynomial is inspected. totient(k) >= sqrt(k / 2)
    bounds the search by 2n^2.

    This deliberately departs from the plain bound n^2, which misses Phi_6
    for 2x2 matrices. Pass degree_bound=n * n explicitly to get n^2.
    """
    n = to_rational_matrix(g).shape[0]
    return max(
        [k for k in range(2, 2 * n * n + 1) if sympy.totient(k) <= n],
        default=1,
    )


def has_root_of_unity_eigenvalue(g: RationalMatrix, degree_bound: int | None = None) -> bool:
    """
    True iff some eigenvalue of g is a root of unity other than 1, i.e.
    the characteristic polynomial shares a factor with a cyclotomic
    polynomial Phi_k for some 2 <= k <= degree_bound.

    Only the standard representation is inspected, so this is a
    necessary condition for neatness, not the full definition.
    """
    if degree_bound is None:
        degree_bound = default_degree_bound(g)
    if degree_bound < 1:
        raise ValueError(f"degree_bound must be >= 1, got {degree_bound}")
    char_poly = characteristic_polynomial(g)
    for k in range(2, degree_bound + 1):
        common = sympy.gcd(char_poly, sympy.cyclotomic_poly(k, X, polys=True))
        if common.degree() > 0:
            log.debug("%s shares %s with Phi_%d", char_poly, common, k)
            return True
    return False


def is_neat(g: RationalMatrix, degree_bound: int | None = None) -> bool:
    return not has_root_of_unity_eigenvalue(g, degree_bound)


def centralizer_dimension(g: RationalMatrix) -> int:
    """
    Dimension over QQ of {X : gX = Xg}, the kernel of X -> gX - Xg.
    On column-stacked X that map is I (x) g - g^T (x) I.
    """
    matrix = to_rational_matrix(g)
    n = matrix.shape[0]
    commutator = (
        sympy.kronecker_product(sympy.eye(n), matrix)
        - sympy.kronecker_product(matrix.T, sympy.eye(n))
    )
    return n * n - commutator.rank()


def centralizer_stable_under_powers(g: RationalMatrix, k: int) -> bool:
    """
    Whether g and g^k have the same centralizer. Since the centralizer of
    g always sits inside that of g^k, equal dimensions mean equal groups.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    matrix = to_rational_matrix(g)
    return centralizer_dimension(matrix) == centralizer_dimension(matrix**k)
