from __future__ import annotations

import cmath
import random

import pytest
import sympy

from lefschetzlib.group.contraction import random_levi_pair
from lefschetzlib.group.root_datum import Quasicharacter
from lefschetzlib.group.root_datum import RootDatum
from lefschetzlib.group.root_datum import TorusElement
from lefschetzlib.group.root_datum import a_to_lambda
from lefschetzlib.group.root_datum import in_A_minus
from lefschetzlib.group.root_datum import is_positive
from lefschetzlib.group.root_datum import modular_delta
from lefschetzlib.group.root_datum import nu_alpha
from lefschetzlib.group.root_datum import pairing
from lefschetzlib.group.root_datum import re_part
from lefschetzlib.padic.valuation import PadicContext

R = sympy.Rational


def test_gl3_root_counts(gl3):
    assert len(gl3.roots) == 6
    assert len(gl3.positive_roots) == 3
    assert gl3.simple_roots == ((1, -1, 0), (0, 1, -1))
    assert gl3.rho2 == (2, 0, -2)
    assert gl3.r == 3


def test_root_coroot_pairing_is_two():
    for rd in [RootDatum.gl(3), RootDatum.sl(3), RootDatum.pgl2()]:
        for alpha in rd.roots:
            assert pairing(alpha, rd.coroot_of(alpha)) == 2


def test_pairing_examples():
    assert pairing((1, -1, 0), (1, -1, 0)) == 2
    assert pairing((1, 0, -1), (0, 1, 0)) == 0
    assert pairing((1, -1), (1, 0)) == 1
    with pytest.raises(ValueError):
        pairing((1, 0), (1, 0, 0))


def test_from_name():
    assert RootDatum.from_name("GL3") == RootDatum.gl(3)
    assert RootDatum.from_name("sl2").r == 1
    assert RootDatum.from_name("PGL2").coroots == ((2, 0), (-2, 0))
    with pytest.raises(ValueError):
        RootDatum.from_name("SO5")
    with pytest.raises(ValueError):
        RootDatum.sl(1)


def test_coroot_of_non_root(gl2):
    with pytest.raises(ValueError):
        gl2.coroot_of((1, 1))


def test_nu_alpha(gl2, gl3):
    assert nu_alpha((3, 1, 0), (1, -1, 0), gl3) == 2
    assert all(nu_alpha((5, 5, 5), alpha, gl3) == 0 for alpha in gl3.roots)
    assert nu_alpha((1, 0), (1, -1), gl2) == 1


def test_is_positive(gl2, gl3):
    assert is_positive((3, 2, 1), gl3)
    assert not is_positive((1, 1, 0), gl3)
    assert not is_positive((0, 1), gl2)


def test_a_to_lambda(q2, q3, gl2):
    a = TorusElement.from_diagonal(q3, gl2, [3, 1])
    assert a_to_lambda(a, (1, 0)) == R(1, 3)
    assert a_to_lambda(a, Quasicharacter.trivial(2)) == 1
    b = TorusElement.from_diagonal(q2, gl2, [4, 2])
    assert b.val_vector == (2, 1)
    assert a_to_lambda(b, (1, -1)) == R(1, 2)


def test_a_to_lambda_of_quasicharacter_from_exponents(q3, gl2):
    a = TorusElement.from_valuations(q3, gl2, (2, -1))
    chi = Quasicharacter.from_exponents(q3, (1, 1))
    assert a_to_lambda(a, chi) == a_to_lambda(a, (1, 1)) == R(1, 3)


def test_re_part(q2, q3):
    assert re_part(Quasicharacter([R(1, 3), 1]), q3) == (1, 0)
    assert re_part(Quasicharacter([4, R(1, 2)]), q2) == (-2, 1)
    assert re_part(Quasicharacter([sympy.I, -1]), q2) == (0, 0)


def test_re_part_of_float_values(q2):
    assert re_part(Quasicharacter([1j, -1.0]), q2) == pytest.approx((0.0, 0.0))


def test_quasicharacter_rejects_zero():
    with pytest.raises(ValueError):
        Quasicharacter([0, 1])


def test_in_A_minus(q2, q3, gl2, gl3):
    assert in_A_minus(TorusElement.from_diagonal(q3, gl2, [3, 1]), gl2)
    assert not in_A_minus(TorusElement.identity(q3, gl2), gl2)
    assert in_A_minus(TorusElement.from_diagonal(q2, gl3, [4, 2, 1]), gl3)
    assert not in_A_minus(TorusElement.from_diagonal(q3, gl2, [1, 3]), gl2)


def test_modular_delta(q2, q3, gl2, gl3):
    assert modular_delta(TorusElement.from_diagonal(q3, gl2, [3, 1]), gl2) == R(1, 3)
    assert modular_delta(TorusElement.identity(q3, gl2), gl2) == 1
    a = TorusElement.from_diagonal(q2, gl3, [2, 1, R(1, 2)])
    assert modular_delta(a, gl3) == R(1, 16)


def test_sl_gauge(q2):
    sl2 = RootDatum.sl(2)
    assert TorusElement.from_diagonal(q2, sl2, [2, R(1, 2)]).val_vector == (1, -1)
    with pytest.raises(ValueError):
        TorusElement.from_diagonal(q2, sl2, [2, 1])


def test_pgl2_gauge(q3):
    pgl2 = RootDatum.pgl2()
    a = TorusElement.from_diagonal(q3, pgl2, [27, 3])
    assert a.val_vector == (2, 0)
    assert in_A_minus(a, pgl2)
    assert modular_delta(a, pgl2) == R(1, 9)


def test_torus_element_group_law(q2, gl2):
    a = TorusElement.from_valuations(q2, gl2, (1, 0))
    b = TorusElement.from_valuations(q2, gl2, (0, 2))
    assert (a * b).val_vector == (1, 2)
    assert (a**3).val_vector == (3, 0)
    assert a.matrix() == sympy.diag(2, 1)
    assert (a**0).is_identity()


FAMILIES = ["GL2", "GL3", "SL2", "SL3", "PGL2"]


@pytest.mark.parametrize("name", FAMILIES)
def test_chamber_is_closed_under_positive_powers(name):
    rd = RootDatum.from_name(name)
    ctx = PadicContext(2)
    rng = random.Random(3)
    for _ in range(20):
        a = random_levi_pair(ctx, rd, rng, in_chamber=True).a
        assert all(in_A_minus(a**k, rd) for k in range(1, 6))


@pytest.mark.parametrize("name", FAMILIES)
def test_modular_delta_is_multiplicative(name):
    rd = RootDatum.from_name(name)
    ctx = PadicContext(3)
    rng = random.Random(5)
    for _ in range(20):
        a = random_levi_pair(ctx, rd, rng, in_chamber=None).a
        b = random_levi_pair(ctx, rd, rng, in_chamber=None).a
        assert modular_delta(a * b, rd) == modular_delta(a, rd) * modular_delta(b, rd)
        assert modular_delta(a**-1, rd) * modular_delta(a, rd) == 1


def test_re_part_ignores_unitary_twists(q3):
    rng = random.Random(4)
    units = [1, -1, sympy.I, -sympy.I, (3 + 4 * sympy.I) / 5]
    for _ in range(20):
        mu = [rng.randint(-4, 4) for _ in range(3)]
        chi = Quasicharacter.from_exponents(q3, mu)
        omega = Quasicharacter([rng.choice(units) for _ in range(3)])
        assert re_part(omega, q3) == (0, 0, 0)
        assert re_part(chi * omega, q3) == re_part(chi, q3) == tuple(mu)


def test_re_part_ignores_unitary_twists_in_floats(q2):
    rng = random.Random(6)
    for _ in range(20):
        chi = Quasicharacter([complex(2.0**rng.randint(-3, 3)) for _ in range(2)])
        omega = Quasicharacter([cmath.exp(2j * cmath.pi * rng.random()) for _ in range(2)])
        assert re_part(chi * omega, q2) == pytest.approx(re_part(chi, q2))
