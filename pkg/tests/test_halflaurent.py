import random

import pytest

from motivic import HalfLaurent


def test_canonical_form_drops_zeros():
    assert HalfLaurent({3: 0, 1: 2}).items() == [(1, 2)]
    assert HalfLaurent([(1, 2), (1, -2)]).is_zero()


def test_half_power_multiplication_adds_exponents():
    half = HalfLaurent.half()
    assert half * half == HalfLaurent.L()
    assert HalfLaurent.power(-1) * HalfLaurent.power(3) == HalfLaurent.L()


def test_ring_laws_randomized():
    rng = random.Random(0)

    def rand():
        return HalfLaurent({rng.randrange(-8, 9): rng.randrange(-5, 6)
                            for _ in range(rng.randrange(0, 4))})

    for _ in range(300):
        a, b, c = rand(), rand(), rand()
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == HalfLaurent.zero()


def test_large_coefficients_are_exact():
    # powers of (1 + L) grow binomially; spot-check an exact big value
    p = (HalfLaurent.const(1) + HalfLaurent.L()) ** 64
    assert p.coefficient(64) == 1832624140942590534


def test_integrality_and_rendering():
    assert HalfLaurent.L().is_integral()
    assert not HalfLaurent.half().is_integral()
    assert (HalfLaurent.const(1) - HalfLaurent.half()).text() == "1 - L^(1/2)"
    assert HalfLaurent.power(-1).text() == "L^(-1/2)"
    assert HalfLaurent.power(-2).text() == "L^-1"
    assert HalfLaurent.power(3, 2).text() == "2*L^(3/2)"
    assert HalfLaurent.zero().text() == "0"


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        HalfLaurent({0.5: 1})
    with pytest.raises(TypeError):
        HalfLaurent({0: 1.5})
