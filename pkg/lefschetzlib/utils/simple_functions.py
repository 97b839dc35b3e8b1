from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
import math

import sympy

from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from lefschetzlib.typing import RationalLike


@lru_cache(maxsize=1024)
def choose(n: int, k: int) -> int:
    # math.comb already returns 0 for k > n
    return math.comb(n, k)


def sign_power(k: int) -> int:
    """(-1)^k for any integer k"""
    return -1 if k % 2 else 1


def as_rational(x: RationalLike) -> sympy.Rational:
    """
    Exact conversion to a sympy Rational. Floats are refused,
    since a binary float is almost never the rational that was meant.
    """
    if isinstance(x, float):
        raise TypeError(f"Refusing to convert float {x} to an exact rational")
    if isinstance(x, Fraction):
        return sympy.Rational(x.numerator, x.denominator)
    result = sympy.Rational(x)
    if not result.is_Rational:
        raise TypeError(f"{x} is not a rational number")
    return result


def rational_to_str(x: sympy.Rational) -> str:
    x = sympy.Rational(x)
    if x.q == 1:
        return str(x.p)
    return f"{x.p}/{x.q}"


def is_close(a: complex, b: complex, tolerance: float) -> bool:
    return abs(complex(a) - complex(b)) < tolerance
