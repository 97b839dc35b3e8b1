from __future__ import annotations

import sympy

from lefschetzlib.utils.simple_functions import as_rational
from lefschetzlib.utils.simple_functions import choose
from lefschetzlib.utils.simple_functions import sign_power

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    import random
    from typing import Iterable
    from lefschetzlib.typing import RationalLike


T = sympy.Symbol("t")


class BettiVector(object):
    """
    Betti numbers b_p = dim H^p(Sigma, Q), with trailing zeros trimmed, so
    that len(b) - 1 is the cohomological dimension.
    """
    def __init__(self, entries: Iterable[int]):
        entries = list(entries)
        for b in entries:
            if not isinstance(b, int) or isinstance(b, bool) or b < 0:
                raise ValueError(f"Betti numbers must be nonnegative integers, got {entries}")
        while entries and entries[-1] == 0:
            entries.pop()
        self.entries: tuple[int, ...] = tuple(entries)

    @property
    def cohomological_dimension(self) -> int:
        return len(self.entries) - 1

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, p: int) -> int:
        return self.entries[p] if 0 <= p < len(self.entries) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, BettiVector):
            return self.entries == other.entries
        return self.entries == BettiVector(other).entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __add__(self, other: BettiVector) -> BettiVector:
        length = max(len(self), len(other))
        return BettiVector(self[p] + other[p] for p in range(length))

    def __repr__(self) -> str:
        return f"BettiVector({list(self.entries)})"


def _as_betti(b: BettiVector | Iterable[int]) -> BettiVector:
    return b if isinstance(b, BettiVector) else BettiVector(b)


def chi(b: BettiVector | Iterable[int]) -> int:
    return sum(sign_power(p) * b_p for p, b_p in enumerate(_as_betti(b)))


def chi_r(b: BettiVector | Iterable[int], r: int) -> int:
    """The higher Euler characteristic sum_p (-1)^(p+r) C(p, r) b_p"""
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    return sum(
        sign_power(p + r) * choose(p, r) * b_p
        for p, b_p in enumerate(_as_betti(b))
    )


def convolve_circle(b: BettiVector) -> BettiVector:
    """Kunneth with the cohomology (1, 1) of Z"""
    return BettiVector(b[p] + b[p - 1] for p in range(len(b) + 1))


def central_extension_betti(b_lambda: BettiVector | Iterable[int], r: int) -> BettiVector:
    """
    Betti numbers of Gamma in 1 -> Z^r -> Gamma -> Lambda -> 1, assuming
    the Hochschild-Serre spectral sequence degenerates at E_2.
    """
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    result = _as_betti(b_lambda)
    for _ in range(r):
        result = convolve_circle(result)
    return result


def verify_chichi(b_lambda: BettiVector | Iterable[int], r: int) -> bool:
    """
    chi(Lambda) == chi_r(Gamma) for the central Z^r extension, together
    with every one step identity chi_{s-1}(B) == chi_s(B x Z).
    """
    b_lambda = _as_betti(b_lambda)
    if chi(b_lambda) != chi_r(central_extension_betti(b_lambda, r), r):
        return False
    for s in range(1, r + 1):
        if chi_r(b_lambda, s - 1) != chi_r(convolve_circle(b_lambda), s):
            return False
    return True


def covolume(
    lambda_gamma: RationalLike,
    q_G: int,
    r: int,
    b_gamma: BettiVector | Iterable[int],
) -> sympy.Rational:
    """vol(Gamma_gamma \\ G_gamma) = lambda_gamma (-1)^(q(G) + r) chi_r(Gamma_gamma)"""
    return as_rational(lambda_gamma) * sign_power(q_G + r) * chi_r(b_gamma, r)


def poincare_polynomial(b: BettiVector | Iterable[int]) -> sympy.Poly:
    entries = list(_as_betti(b)) or [0]
    return sympy.Poly(list(reversed(entries)), T, domain=sympy.ZZ)


def chi_r_from_poincare(b: BettiVector | Iterable[int], r: int) -> int:
    """chi_r as P^(r)(-1) / r!, independent of the binomial sum"""
    poly = poincare_polynomial(b)
    derivative = poly.diff(T) if r else poly
    for _ in range(r - 1):
        derivative = derivative.diff(T)
    return int(derivative.eval(-1) / sympy.factorial(r))


def random_betti_vector(rng: random.Random, max_length: int = 10, max_entry: int = 20) -> BettiVector:
    length = rng.randint(1, max_length)
    return BettiVector(rng.randint(0, max_entry) for _ in range(length))
