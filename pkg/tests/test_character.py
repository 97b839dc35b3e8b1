from __future__ import annotations

import cmath

import numpy as np
import pytest
import sympy

from lefschetzlib.graph.character import EdgeCharacter
from lefschetzlib.graph.character import character_turn
from lefschetzlib.graph.character import character_value
from lefschetzlib.graph.character import read_twist_file
from lefschetzlib.graph.geodesic_graph import GraphParseError
from lefschetzlib.graph.geodesics import primitive_geodesics

R = sympy.Rational


def test_trivial_character(k4):
    omega = EdgeCharacter.trivial(k4)
    assert omega.is_trivial
    assert omega.is_sign_character
    for c in primitive_geodesics(k4, 4):
        assert character_value(omega, c) == 1


def test_weights_on_reversed_edges(k4):
    omega = EdgeCharacter.from_turns(k4, {0: R(1, 3)})
    assert omega.is_exact
    assert not omega.is_sign_character
    assert omega.weight(0) == pytest.approx(cmath.exp(2j * cmath.pi / 3))
    assert omega.weight(1) == pytest.approx(omega.weight(0).conjugate())
    assert omega.weight(2) == 1


def test_invalid_characters(k4):
    with pytest.raises(ValueError):
        EdgeCharacter(k4, np.full(k4.num_directed_edges, 2.0))
    with pytest.raises(ValueError):
        EdgeCharacter(k4, np.ones(3))
    weights = np.ones(k4.num_directed_edges, dtype=complex)
    weights[0] = 1j
    weights[1] = 1j
    with pytest.raises(ValueError):
        EdgeCharacter(k4, weights)
    with pytest.raises(ValueError):
        EdgeCharacter.from_turns(k4, {6: R(1, 2)})


def test_sign_flip_on_triangles(k4):
    omega = EdgeCharacter.sign_flip(k4, 0)
    assert omega.is_sign_character
    assert omega.integer_weights()[0] == omega.integer_weights()[1] == -1
    for c in primitive_geodesics(k4, 3):
        through_edge = any(e // 2 == 0 for e in c.edges)
        assert character_value(omega, c) == (-1 if through_edge else 1)
        assert isinstance(character_value(omega, c), int)


def test_multiplicativity_over_powers(k4):
    omega = EdgeCharacter.random(k4, np.random.default_rng(5))
    for c in primitive_geodesics(k4, 4):
        z = character_value(omega, c)
        assert abs(abs(z) - 1) < 1e-12
        assert character_value(omega, c.power(3)) == pytest.approx(z**3)


def test_reversal_conjugates(k4):
    omega = EdgeCharacter.random(k4, np.random.default_rng(1))
    for c in primitive_geodesics(k4, 4):
        assert character_value(omega, c.reversed()) == pytest.approx(character_value(omega, c).conjugate())


def test_character_turn(k4):
    omega = EdgeCharacter.from_turns(k4, {k: R(1, 5) for k in range(k4.num_edges)})
    for c in primitive_geodesics(k4, 4):
        turn = character_turn(omega, c)
        assert 0 <= turn < 1
        assert character_value(omega, c) == pytest.approx(cmath.exp(2j * cmath.pi * float(turn)))
    with pytest.raises(ValueError):
        character_turn(EdgeCharacter.random(k4, np.random.default_rng(0)), c)


def test_read_twist_file(k4, tmp_path):
    path = tmp_path / "half.twist"
    path.write_text("# flip one edge\ntwist 2 1/2\n\n")
    omega = read_twist_file(k4, str(path))
    assert omega.is_sign_character
    assert omega.integer_weights()[4] == -1


def test_read_twist_file_errors(k4, tmp_path):
    path = tmp_path / "bad.twist"
    path.write_text("twist 2\n")
    with pytest.raises(GraphParseError):
        read_twist_file(k4, str(path))
    path.write_text("twist 2 half\n")
    with pytest.raises(GraphParseError):
        read_twist_file(k4, str(path))
