from __future__ import annotations

import random

import pytest

from lefschetzlib.cohomology.euler import BettiVector
from lefschetzlib.cohomology.euler import central_extension_betti
from lefschetzlib.cohomology.euler import chi
from lefschetzlib.cohomology.euler import chi_r
from lefschetzlib.cohomology.euler import chi_r_from_poincare
from lefschetzlib.cohomology.euler import convolve_circle
from lefschetzlib.cohomology.euler import covolume
from lefschetzlib.cohomology.euler import random_betti_vector
from lefschetzlib.cohomology.euler import verify_chichi


def test_betti_vector_trims_trailing_zeros():
    b = BettiVector([1, 2, 0, 0])
    assert list(b) == [1, 2]
    assert b.cohomological_dimension == 1
    assert b[5] == 0
    assert b == [1, 2]


def test_betti_vector_rejects_negative_entries():
    with pytest.raises(ValueError):
        BettiVector([1, -1])
    with pytest.raises(ValueError):
        BettiVector([1.0])


def test_chi():
    assert chi([1]) == 1
    assert chi([1, 4, 1]) == -2
    assert chi([1, 2, 1]) == 0


@pytest.mark.parametrize("r", range(7))
def test_chi_r_of_free_abelian_group(r):
    assert chi_r(central_extension_betti([1], r), r) == 1


def test_chi_r_examples():
    assert chi_r([1, 1], 1) == 1
    assert chi_r([1, 5, 5, 1], 1) == -2
    assert chi_r([1, 4, 1], 0) == chi([1, 4, 1])
    with pytest.raises(ValueError):
        chi_r([1], -1)


def test_central_extension_betti():
    assert central_extension_betti([1, 4, 1], 1) == [1, 5, 5, 1]
    assert central_extension_betti([1, 4, 1], 0) == [1, 4, 1]
    assert central_extension_betti([1], 3) == [1, 3, 3, 1]
    assert convolve_circle(BettiVector([1, 1])) == [1, 2, 1]


def test_verify_chichi_examples():
    assert verify_chichi([1, 4, 1], 1)
    for r in range(7):
        assert verify_chichi([1], r)


def test_verify_chichi_on_random_vectors():
    rng = random.Random(7)
    for _ in range(300):
        b = random_betti_vector(rng, max_length=10, max_entry=20)
        r = rng.choice([1, 2, 3, 4])
        assert verify_chichi(b, r)


def test_chi_r_agrees_with_poincare_derivative():
    rng = random.Random(1)
    for _ in range(50):
        b = random_betti_vector(rng)
        for r in range(5):
            assert chi_r(b, r) == chi_r_from_poincare(b, r)


def test_random_betti_vector_bounds():
    rng = random.Random(0)
    for _ in range(100):
        b = random_betti_vector(rng, max_length=4, max_entry=3)
        assert len(b) <= 4
        assert all(0 <= entry <= 3 for entry in b)


def test_covolume():
    assert covolume(2, 1, 1, [1, 1]) == 2
    assert covolume(1, 0, 0, [1]) == 1
    assert covolume(3, 1, 1, [1, 1]) == 3


def test_chi_and_chi_r_are_additive():
    rng = random.Random(11)
    for _ in range(100):
        b1, b2 = random_betti_vector(rng), random_betti_vector(rng)
        assert chi(b1 + b2) == chi(b1) + chi(b2)
        for r in range(5):
            assert chi_r(b1 + b2, r) == chi_r(b1, r) + chi_r(b2, r)


def test_central_extensions_compose():
    rng = random.Random(12)
    for _ in range(100):
        b = random_betti_vector(rng)
        r1, r2 = rng.randint(0, 4), rng.randint(0, 4)
        assert central_extension_betti(b, r1 + r2) == central_extension_betti(
            central_extension_betti(b, r1), r2
        )


@pytest.mark.parametrize("r", [1, 2, 3, 5])
def test_central_extension_has_vanishing_euler_characteristic(r):
    rng = random.Random(r)
    for _ in range(50):
        b = random_betti_vector(rng)
        assert chi(central_extension_betti(b, r)) == 0
