from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Union, Annotated, Literal, Sequence
    from fractions import Fraction
    import numpy as np
    import sympy

    try:
        from typing_extensions import Self
    except ImportError:
        from typing import Self

    # Anything that converts losslessly to a sympy Rational
    RationalLike = Union[int, Fraction, "sympy.Rational", str]
    # Valuations are integers or rationals, with sympy.oo for zero
    Valuation = Union[int, "sympy.Rational", "sympy.core.numbers.Infinity"]

    IntVector = Sequence[int]
    RationalMatrix = Union[Sequence[Sequence[RationalLike]], "sympy.Matrix"]

    # These are alternate names for np.ndarray meant to specify the
    # kind of entries. Integer matrices use dtype=object so that entries
    # are Python ints and never overflow.
    IntMatrix = Annotated[np.ndarray, Literal["N", "N"], Literal["object"]]

    FamilyName = Literal["GL", "SL", "PGL2"]
    AdjointSubspace = Literal["n", "nbar", "g", "a+m+n", "n+nbar"]
    OutputFormat = Literal["json", "csv", "text"]
