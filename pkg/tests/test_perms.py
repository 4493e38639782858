from __future__ import annotations

import random

import numpy as np

from fpf5.matrix import Mat
from fpf5.perms import Perm
from fpf5.ring import gf


def rand_perm(rnd, n):
    img = list(range(n))
    rnd.shuffle(img)
    return Perm(tuple(img))


def test_cycle_construction():
    s = Perm.from_cycles(5, [(0, 1, 2, 3, 4)])
    assert s(0) == 1 and s(4) == 0
    assert s.order() == 5
    t = Perm.from_cycles(5, [(0, 1)])
    assert t.order() == 2 and t.sign() == -1
    assert s.sign() == 1
    u = Perm.from_cycles(6, [(0, 1), (2, 3, 4)])
    assert u.order() == 6
    assert u.cycles() == [(0, 1), (2, 3, 4)]


def test_composition_is_function_composition():
    s = Perm.from_cycles(3, [(0, 1, 2)])
    t = Perm.from_cycles(3, [(0, 1)])
    # (s*t)(0) = s(t(0)) = s(1) = 2
    assert (s * t)(0) == 2
    assert (t * s)(0) == 0


def test_group_laws_random():
    rnd = random.Random(83)
    for _ in range(200):
        a, b, c = (rand_perm(rnd, 8) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * a.inv() == Perm.identity(8)
        assert (a * b).inv() == b.inv() * a.inv()
        k = rnd.randrange(-6, 7)
        assert a**k == (a.inv() ** (-k) if k < 0 else a**k)
    a = rand_perm(rnd, 9)
    assert (a ** a.order()).is_identity()


def test_matrix_representation():
    F = gf(7)
    rnd = random.Random(89)
    for _ in range(50):
        a, b = rand_perm(rnd, 6), rand_perm(rnd, 6)
        assert a.to_matrix(F) @ b.to_matrix(F) == (a * b).to_matrix(F)
    s = Perm.from_cycles(4, [(0, 1, 2)])
    M = s.to_matrix(F)
    for i in range(4):
        e = np.zeros(4, dtype=np.int64)
        e[i] = 1
        out = M.apply(e)
        assert out[s(i)] == 1 and out.sum() == 1


def test_sign_multiplicative():
    rnd = random.Random(97)
    for _ in range(100):
        a, b = rand_perm(rnd, 7), rand_perm(rnd, 7)
        assert (a * b).sign() == a.sign() * b.sign()
