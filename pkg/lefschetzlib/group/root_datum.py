from __future__ import annotations

from dataclasses import dataclass, field
import itertools as it
import math

import numpy as np
import sympy

from lefschetzlib.padic.valuation import PadicContext
from lefschetzlib.padic.valuation import valuation
from lefschetzlib.utils.simple_functions import as_rational

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Sequence
    from lefschetzlib.typing import FamilyName, IntVector, RationalLike, Self


FAMILIES = ("GL", "SL", "PGL2")


def _unit_vector(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(k == i) for k in range(n))


def _difference(n: int, i: int, j: int) -> tuple[int, ...]:
    return tuple(a - b for a, b in zip(_unit_vector(n, i), _unit_vector(n, j)))


@dataclass(frozen=True)
class RootDatum:
    """
    Root datum of a split group with respect to its diagonal torus and
    the upper triangular Borel subgroup.

    X*(A) and X_*(A) are both realized as Z^n, paired by the dot product.
    For SL_n the cocharacters are the sum zero vectors and characters are
    taken modulo (1, ..., 1). For PGL_2 the roles flip: characters are sum
    zero and cocharacters are taken modulo (1, 1), stored in the gauge
    where the last entry is 0, so the coroot e_1 - e_2 is stored as (2, 0).
    """
    family: FamilyName
    n: int
    roots: tuple[tuple[int, ...], ...]
    coroots: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    simple_roots: tuple[tuple[int, ...], ...]
    rho2: tuple[int, ...]
    r: int
    levi_blocks: tuple[int, ...] = field(default=())

    @classmethod
    def gl(cls, n: int) -> RootDatum:
        return cls._type_a("GL", n, r=n)

    @classmethod
    def sl(cls, n: int) -> RootDatum:
        if n < 2:
            raise ValueError(f"SL_n needs n >= 2, got {n}")
        return cls._type_a("SL", n, r=n - 1)

    @classmethod
    def pgl2(cls) -> RootDatum:
        alpha = (1, -1)
        return cls(
            family="PGL2",
            n=2,
            roots=(alpha, (-1, 1)),
            coroots=((2, 0), (-2, 0)),
            positive_roots=(alpha,),
            simple_roots=(alpha,),
            rho2=alpha,
            r=1,
            levi_blocks=(1, 1),
        )

    @classmethod
    def from_name(cls, name: str) -> RootDatum:
        """Parses names like GL3, SL2 or PGL2"""
        name = name.upper()
        if name == "PGL2":
            return cls.pgl2()
        for family, constructor in [("GL", cls.gl), ("SL", cls.sl)]:
            if name.startswith(family) and name[len(family):].isdigit():
                return constructor(int(name[len(family):]))
        raise ValueError(f"Unknown group {name}, expected GLn, SLn or PGL2")

    @classmethod
    def _type_a(cls, family: FamilyName, n: int, r: int) -> RootDatum:
        if n < 1:
            raise ValueError(f"Rank parameter must be positive, got {n}")
        pairs = [(i, j) for i, j in it.product(range(n), repeat=2) if i != j]
        roots = tuple(_difference(n, i, j) for i, j in pairs)
        positive = tuple(_difference(n, i, j) for i, j in pairs if i < j)
        simple = tuple(_difference(n, i, i + 1) for i in range(n - 1))
        return cls(
            family=family,
            n=n,
            roots=roots,
            # e_i - e_j is its own coroot in these coordinates
            coroots=roots,
            positive_roots=positive,
            simple_roots=simple,
            rho2=tuple(n - 1 - 2 * i for i in range(n)),
            r=r,
            levi_blocks=(1,) * n,
        )

    @property
    def name(self) -> str:
        return "PGL2" if self.family == "PGL2" else f"{self.family}{self.n}"

    def coroot_of(self, alpha: IntVector) -> tuple[int, ...]:
        alpha = tuple(alpha)
        try:
            return self.coroots[self.roots.index(alpha)]
        except ValueError:
            raise ValueError(f"{alpha} is not a root of {self.name}")

    def root_position(self, alpha: IntVector) -> tuple[int, int]:
        """(i, j) with alpha = e_i - e_j, i.e. alpha acts on the matrix unit e_ij"""
        alpha = tuple(alpha)
        if alpha not in self.roots:
            raise ValueError(f"{alpha} is not a root of {self.name}")
        return (alpha.index(1), alpha.index(-1))

    def is_valid_cocharacter(self, vector: IntVector) -> bool:
        if len(vector) != self.n:
            return False
        if self.family == "SL":
            return sum(vector) == 0
        if self.family == "PGL2":
            return vector[-1] == 0
        return True


def pairing(chi: IntVector, eta: IntVector) -> int:
    if len(chi) != len(eta):
        raise ValueError(f"Rank mismatch: {len(chi)} vs {len(eta)}")
    return sum(a * b for a, b in zip(chi, eta))


@dataclass(frozen=True)
class TorusElement:
    """
    The class a A_c of a diagonal element, i.e. its image in the lattice
    Sigma = A / A_c, recorded by the valuations of the diagonal entries.
    """
    ctx: PadicContext
    val_vector: tuple[int, ...]
    rd: RootDatum

    def __post_init__(self):
        vector = tuple(int(v) for v in self.val_vector)
        object.__setattr__(self, "val_vector", vector)
        if not self.rd.is_valid_cocharacter(vector):
            raise ValueError(f"{vector} is not a valid valuation vector for {self.rd.name}")

    @classmethod
    def from_diagonal(cls, ctx: PadicContext, rd: RootDatum, entries: Sequence[RationalLike]) -> TorusElement:
        entries = [as_rational(e) for e in entries]
        if len(entries) != rd.n:
            raise ValueError(f"{rd.name} needs {rd.n} diagonal entries, got {len(entries)}")
        if any(e == 0 for e in entries):
            raise ValueError("Diagonal entries of a torus element must be nonzero")
        vector = [valuation(ctx, e) for e in entries]
        if rd.family == "SL" and sum(vector) != 0:
            raise ValueError(f"Entries {entries} do not have unit determinant valuation")
        if rd.family == "PGL2":
            vector = [v - vector[-1] for v in vector]
        return cls(ctx, tuple(vector), rd)

    @classmethod
    def from_valuations(cls, ctx: PadicContext, rd: RootDatum, vector: IntVector) -> TorusElement:
        return cls(ctx, tuple(vector), rd)

    @classmethod
    def identity(cls, ctx: PadicContext, rd: RootDatum) -> TorusElement:
        return cls(ctx, (0,) * rd.n, rd)

    def __mul__(self, other: TorusElement) -> Self:
        if other.ctx != self.ctx or other.rd != self.rd:
            raise ValueError("Cannot multiply torus elements of different groups")
        return TorusElement(self.ctx, tuple(a + b for a, b in zip(self.val_vector, other.val_vector)), self.rd)

    def __pow__(self, k: int) -> Self:
        return TorusElement(self.ctx, tuple(k * v for v in self.val_vector), self.rd)

    def matrix(self) -> sympy.Matrix:
        """The representative diag(q^v_1, ..., q^v_n)"""
        q = sympy.Integer(self.ctx.q)
        return sympy.diag(*[q**v for v in self.val_vector])

    def is_identity(self) -> bool:
        return not any(self.val_vector)


class Quasicharacter(object):
    """
    An unramified quasicharacter, stored by its values z_i on the basis
    of Sigma. Values are exact sympy numbers when exact is True,
    complex floats otherwise.
    """
    def __init__(self, values: Sequence[complex | sympy.Expr], exact: bool | None = None):
        if exact is None:
            exact = not any(isinstance(z, (float, complex, np.floating, np.complexfloating)) for z in values)
        if exact:
            values = tuple(sympy.sympify(z) for z in values)
        else:
            values = tuple(complex(z) for z in values)
        if any(z == 0 for z in values):
            raise ValueError("Quasicharacter values must be nonzero")
        self.values = values
        self.exact = exact

    @classmethod
    def from_exponents(cls, ctx: PadicContext, mu: Sequence[RationalLike]) -> Quasicharacter:
        """The quasicharacter a -> q^(-mu . v(a))"""
        return cls([ctx.abs_value(m) for m in mu], exact=True)

    @classmethod
    def trivial(cls, n: int) -> Quasicharacter:
        return cls([sympy.Integer(1)] * n, exact=True)

    def __len__(self) -> int:
        return len(self.values)

    def __mul__(self, other: Quasicharacter) -> Quasicharacter:
        if len(other) != len(self):
            raise ValueError(f"Rank mismatch: {len(self)} vs {len(other)}")
        exact = self.exact and other.exact
        return Quasicharacter([a * b for a, b in zip(self.values, other.values)], exact=exact)

    def __repr__(self) -> str:
        return f"Quasicharacter({list(self.values)}, exact={self.exact})"


def nu_alpha(nu: Sequence[complex | RationalLike], alpha: IntVector, rd: RootDatum | None = None) -> complex | sympy.Expr:
    """nu_alpha = (nu, alpha^vee)"""
    coroot = rd.coroot_of(alpha) if rd is not None else tuple(alpha)
    if len(nu) != len(coroot):
        raise ValueError(f"Rank mismatch: {len(nu)} vs {len(coroot)}")
    return sum(
        (n if isinstance(n, (float, complex)) else as_rational(n)) * c
        for n, c in zip(nu, coroot)
    )


def is_positive(nu: Sequence[RationalLike | float], rd: RootDatum) -> bool:
    return all(nu_alpha(nu, alpha, rd) > 0 for alpha in rd.positive_roots)


def a_to_lambda(a: TorusElement, lam: Quasicharacter | Sequence[RationalLike]) -> complex | sympy.Expr:
    """
    a^lambda = q^(-lambda(a)). A quasicharacter is evaluated multiplicatively
    on the class of a, an exponent vector mu gives q^(-mu . v(a)).
    """
    if isinstance(lam, Quasicharacter):
        if len(lam) != len(a.val_vector):
            raise ValueError(f"Rank mismatch: {len(lam)} vs {len(a.val_vector)}")
        result = sympy.Integer(1) if lam.exact else complex(1)
        for z, v in zip(lam.values, a.val_vector):
            result *= z**v
        return result
    if len(lam) != len(a.val_vector):
        raise ValueError(f"Rank mismatch: {len(lam)} vs {len(a.val_vector)}")
    exponent = sum(as_rational(m) * v for m, v in zip(lam, a.val_vector))
    return a.ctx.abs_value(exponent)


def re_part(chi: Quasicharacter, ctx: PadicContext) -> tuple:
    """
    Re(chi), with entries -log_q |z_i|. It is zero exactly when chi
    is unitary.
    """
    if chi.exact:
        return tuple(
            sympy.simplify(-sympy.log(sympy.Abs(z), ctx.q))
            for z in chi.values
        )
    return tuple(-math.log(abs(z), ctx.q) for z in chi.values)


def in_A_minus(a: TorusElement, rd: RootDatum) -> bool:
    """|a^alpha| < 1 for every simple root alpha"""
    return all(pairing(alpha, a.val_vector) > 0 for alpha in rd.simple_roots)


def modular_delta(a: TorusElement, rd: RootDatum) -> sympy.Rational:
    """Delta_P(a) = |a^(2 rho)|"""
    return a.ctx.abs_value(pairing(rd.rho2, a.val_vector))
