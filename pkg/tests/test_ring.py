from __future__ import annotations

import random

import numpy as np
import pytest

from fpf5.ring import CoeffRing, gf, gf_quadratic, is_prime, least_nonresidue, zmod


def test_least_nonresidue():
    assert least_nonresidue(3) == 2
    assert least_nonresidue(7) == 3
    assert least_nonresidue(11) == 2
    assert least_nonresidue(13) == 2


def test_factories_validate():
    with pytest.raises(ValueError):
        gf(6)
    with pytest.raises(ValueError):
        zmod(4, 2)
    with pytest.raises(ValueError):
        gf_quadratic(7, nonresidue=2)  # 2 = 3^2 mod 7
    assert zmod(7, 1) == gf(7)
    assert str(zmod(7, 2)) == "Z/49"
    assert str(gf_quadratic(7)) == "GF(49)"


def test_unit_counts():
    assert gf(7).unit_count == 6
    assert zmod(7, 2).unit_count == 42
    assert gf_quadratic(7).unit_count == 48
    assert zmod(3, 2).unit_count == 6


def exhaustive_pairs(ring: CoeffRing):
    xs = ring.elements()
    return np.repeat(xs, ring.size), np.tile(xs, ring.size)


@pytest.mark.parametrize("ring", [gf(7), zmod(7, 2), gf_quadratic(7), gf_quadratic(3)])
def test_field_axioms_spotcheck(ring):
    rnd = random.Random(11)
    for _ in range(300):
        x, y, z = (rnd.randrange(ring.size) for _ in range(3))
        assert ring.add(x, y) == ring.add(y, x)
        assert ring.mul(x, y) == ring.mul(y, x)
        assert ring.mul(x, ring.add(y, z)) == ring.add(ring.mul(x, y), ring.mul(x, z))
        assert ring.add(x, ring.neg(x)) == 0
        assert ring.mul(x, 1) == x
        assert ring.sub(x, y) == ring.add(x, ring.neg(y))


@pytest.mark.parametrize("ring", [gf(7), gf(13), zmod(7, 2), zmod(3, 2), gf_quadratic(7), gf_quadratic(11)])
def test_inverses(ring):
    xs = ring.elements()
    units = xs[np.asarray(ring.is_unit(xs))]
    assert len(units) == ring.unit_count
    inv = ring.inv(units)
    assert np.all(np.asarray(ring.mul(units, inv)) == 1)
    nonunits = xs[~np.asarray(ring.is_unit(xs))]
    if len(nonunits):
        with pytest.raises(ZeroDivisionError):
            ring.inv(nonunits)


def test_gf2_encoding():
    F = gf_quadratic(7)  # t^2 = 3
    assert F.n == 3
    t = F.of_pair(0, 1)
    assert t == 7
    assert F.mul(t, t) == 3
    assert F.conj(t) == F.of_pair(0, 6)
    # norm of t is -3 = 4
    assert F.mul(t, F.conj(t)) == 4
    a = F.of_pair(2, 5)
    b = F.of_pair(6, 1)
    # (2+5t)(6+t) = 12 + 2t + 30t + 5*3 = 27 + 32t = 6 + 4t mod 7
    assert F.mul(a, b) == F.of_pair(6, 4)


@pytest.mark.parametrize("p", [3, 7])
def test_frobenius_is_additive_and_fixes_subfield(p):
    F = gf_quadratic(p)
    rnd = random.Random(5)
    for _ in range(1000):
        x, y = rnd.randrange(F.size), rnd.randrange(F.size)
        assert F.pow_(F.add(x, y), p) == F.add(F.pow_(x, p), F.pow_(y, p))
    for a in range(p):
        assert F.pow_(a, p) == a


@pytest.mark.parametrize("p", [3, 5, 7])
def test_frobenius_exhaustive(p):
    F = gf_quadratic(p)
    xs = F.elements()
    # x^p agrees with conjugation, and x^(p^2) = x
    assert np.array_equal(np.asarray(F.pow_(xs, p)), F.conj(xs))
    assert np.array_equal(np.asarray(F.pow_(xs, p * p)), xs)


def test_valuation():
    R = zmod(7, 2)
    assert R.val(0) == 2
    assert R.val(7) == 1
    assert R.val(14) == 1
    assert R.val(1) == 0
    assert R.val(48) == 0
    assert np.array_equal(R.val(np.array([0, 7, 1])), np.array([2, 1, 0]))
    with pytest.raises(ValueError):
        gf_quadratic(7).val(7)


def test_pow_negative_and_zero():
    R = zmod(7, 2)
    for x in (1, 2, 5, 48):
        assert R.mul(R.pow_(x, -1), x) == 1
        assert R.pow_(x, 0) == 1
    F = gf_quadratic(7)
    rnd = random.Random(3)
    for _ in range(50):
        x = rnd.randrange(1, F.size)
        assert F.mul(F.pow_(x, -3), F.pow_(x, 3)) == 1


def test_multiplicative_order_structure():
    # GF(49)* is cyclic of order 48, so fifth powers are a bijection
    F = gf_quadratic(7)
    xs = F.elements()[1:]
    fifth = np.asarray(F.pow_(xs, 5))
    assert len(set(fifth.tolist())) == 48


def test_is_prime():
    assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(1)
