from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
import sympy

from lefschetzlib.utils.dict_ops import merge_dicts_recursively
from lefschetzlib.utils.exact_linalg import X
from lefschetzlib.utils.exact_linalg import characteristic_polynomial
from lefschetzlib.utils.exact_linalg import clear_denominators
from lefschetzlib.utils.exact_linalg import integer_matrix
from lefschetzlib.utils.exact_linalg import to_rational_matrix
from lefschetzlib.utils.exact_linalg import trace_powers
from lefschetzlib.utils.file_ops import find_file
from lefschetzlib.utils.iterables import adjacent_pairs
from lefschetzlib.utils.iterables import minimal_period
from lefschetzlib.utils.iterables import minimal_rotation
from lefschetzlib.utils.simple_functions import as_rational
from lefschetzlib.utils.simple_functions import rational_to_str
from lefschetzlib.utils.simple_functions import sign_power

R = sympy.Rational


def test_merge_dicts_recursively():
    merged = merge_dicts_recursively(
        {"a": 1, "nested": {"x": 1, "y": 2}},
        {"nested": {"y": 3}, "b": 2},
    )
    assert merged == {"a": 1, "nested": {"x": 1, "y": 3}, "b": 2}


def test_as_rational():
    assert as_rational(Fraction(3, 4)) == R(3, 4)
    assert as_rational("-5/6") == R(-5, 6)
    with pytest.raises(TypeError):
        as_rational(0.25)
    with pytest.raises(TypeError):
        as_rational(sympy.sqrt(2))


def test_rational_to_str():
    assert rational_to_str(R(6, 3)) == "2"
    assert rational_to_str(R(-1, 4)) == "-1/4"


def test_sign_power():
    assert [sign_power(k) for k in range(-2, 3)] == [1, -1, 1, -1, 1]


def test_cyclic_helpers():
    assert list(adjacent_pairs([1, 2, 3])) == [(1, 2), (2, 3), (3, 1)]
    assert minimal_rotation((3, 1, 2)) == (1, 2, 3)
    assert minimal_period((1, 2, 1, 2)) == 2
    assert minimal_period((1, 2, 1)) == 3


def test_characteristic_polynomial_with_fractions():
    poly = characteristic_polynomial([[R(1, 2), 1], [0, R(1, 3)]])
    assert poly == sympy.Poly((X - R(1, 2)) * (X - R(1, 3)), X, domain=sympy.QQ)


def test_clear_denominators():
    matrix, d = clear_denominators(sympy.Matrix([[R(1, 2), R(1, 3)], [1, 0]]))
    assert d == 6
    assert matrix == sympy.Matrix([[3, 2], [6, 0]])


def test_to_rational_matrix_requires_square():
    with pytest.raises(ValueError):
        to_rational_matrix([[1, 2]])


def test_integer_matrices_do_not_overflow():
    matrix = integer_matrix([[2**40, 0], [0, 1]])
    assert trace_powers(matrix, 3)[-1] == 2**120 + 1
    assert matrix.dtype == np.dtype(object)


def test_find_file(tmp_path):
    (tmp_path / "cube.graph").write_text("q 2\n")
    assert find_file("cube", [tmp_path], ["", ".graph"]) == tmp_path / "cube.graph"
    assert find_file("nested/cube.graph", [tmp_path]) == tmp_path / "cube.graph"
    with pytest.raises(FileNotFoundError):
        find_file("sphere", [tmp_path], [".graph"])
