"""Coefficient rings with encoded integer scalars.

Three kinds are supported:

  * ``gf``   prime field GF(p), scalars are 0..p-1
  * ``gf2``  quadratic extension GF(p^2) = GF(p)[t]/(t^2 - n) with n a
             nonresidue mod p; the element a + b*t is encoded as a + p*b
  * ``zmod`` the ring Z/p^e for e >= 2, scalars are 0..p^e-1

All scalar operations accept plain ints or numpy integer arrays and are
vectorized.  Results are always reduced to canonical encoded form.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def least_nonresidue(p: int) -> int:
    """Smallest quadratic nonresidue mod an odd prime p."""
    if p == 2:
        raise ValueError("no nonresidue mod 2")
    squares = {(i * i) % p for i in range(1, p)}
    for n in range(2, p):
        if n not in squares:
            return n
    raise AssertionError("unreachable for odd p")


@functools.lru_cache(maxsize=None)
def _inverse_table(kind: str, p: int, e: int, n: int) -> np.ndarray:
    """Encoded inverses, -1 at non-units."""
    if kind == "gf2":
        size = p * p
        xs = np.arange(size, dtype=np.int64)
        a, b = xs % p, xs // p
        # norm of a + b*t is (a + b*t)(a - b*t) = a^2 - n*b^2, nonzero off 0
        nrm = (a * a - n * b * b) % p
        inv_nrm = np.array([pow(int(v), -1, p) if v else 0 for v in nrm], dtype=np.int64)
        ia = a * inv_nrm % p
        ib = (p - b) % p * inv_nrm % p
        table = ia + p * ib
        table[0] = -1
        return table
    size = p**e
    table = np.full(size, -1, dtype=np.int64)
    for x in range(1, size):
        if x % p != 0:
            table[x] = pow(x, -1, size)
    return table


@dataclass(frozen=True)
class CoeffRing:
    kind: str
    p: int
    e: int = 1
    n: int = 0

    @property
    def size(self) -> int:
        return self.p * self.p if self.kind == "gf2" else self.p**self.e

    @property
    def is_field(self) -> bool:
        return self.kind in ("gf", "gf2")

    @property
    def unit_count(self) -> int:
        if self.is_field:
            return self.size - 1
        return self.p**self.e - self.p ** (self.e - 1)

    def __str__(self) -> str:
        if self.kind == "gf":
            return f"GF({self.p})"
        if self.kind == "gf2":
            return f"GF({self.p * self.p})"
        return f"Z/{self.size}"

    # -- scalar arithmetic on encoded values -------------------------------

    def add(self, x, y):
        if self.kind == "gf2":
            p = self.p
            x, y = np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64)
            return (x % p + y % p) % p + p * ((x // p + y // p) % p)
        return (np.asarray(x, dtype=np.int64) + np.asarray(y, dtype=np.int64)) % self.size

    def neg(self, x):
        if self.kind == "gf2":
            p = self.p
            x = np.asarray(x, dtype=np.int64)
            return (p - x % p) % p + p * ((p - x // p) % p)
        return (-np.asarray(x, dtype=np.int64)) % self.size

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if self.kind == "gf2":
            p, n = self.p, self.n
            x, y = np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64)
            a0, a1 = x % p, x // p
            b0, b1 = y % p, y // p
            return (a0 * b0 + n * a1 * b1) % p + p * ((a0 * b1 + a1 * b0) % p)
        return (np.asarray(x, dtype=np.int64) * np.asarray(y, dtype=np.int64)) % self.size

    def is_unit(self, x):
        x = np.asarray(x, dtype=np.int64) % self.size
        if self.kind == "gf2":
            return x != 0
        return x % self.p != 0

    def inv(self, x):
        x = np.asarray(x, dtype=np.int64) % self.size
        r = _inverse_table(self.kind, self.p, self.e, self.n)[x]
        if np.any(r < 0):
            raise ZeroDivisionError(f"non-unit in inverse over {self}")
        return r if r.ndim else int(r)

    def pow_(self, x, k: int):
        """Elementwise x**k, k any int (negative requires units)."""
        x = np.asarray(x, dtype=np.int64) % self.size
        if k < 0:
            x, k = np.asarray(self.inv(x), dtype=np.int64), -k
        out = np.ones_like(x)
        b = x
        while k:
            if k & 1:
                out = np.asarray(self.mul(out, b))
            k >>= 1
            if k:
                b = np.asarray(self.mul(b, b))
        return out if out.ndim else int(out)

    def conj(self, x):
        """Frobenius x -> x^p.  Identity unless kind is gf2, where a+bt -> a-bt."""
        x = np.asarray(x, dtype=np.int64) % self.size
        if self.kind != "gf2":
            return x.copy()
        p = self.p
        return x % p + p * ((p - x // p) % p)

    def val(self, x):
        """p-adic valuation of the canonical representative; val(0) = e."""
        if self.kind == "gf2":
            raise ValueError("valuation undefined for quadratic extension encoding")
        x = np.asarray(x, dtype=np.int64) % self.size
        v = np.zeros_like(x)
        q = self.p
        for _ in range(self.e):
            v += x % q == 0
            q *= self.p
        return v if v.ndim else int(v)

    # -- gf2 helpers --------------------------------------------------------

    def of_pair(self, a: int, b: int) -> int:
        """Encode a + b*t (gf2 only)."""
        assert self.kind == "gf2"
        return a % self.p + self.p * (b % self.p)

    def as_pair(self, x):
        assert self.kind == "gf2"
        x = np.asarray(x, dtype=np.int64) % self.size
        return x % self.p, x // self.p

    def elements(self) -> np.ndarray:
        return np.arange(self.size, dtype=np.int64)


def gf(p: int) -> CoeffRing:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return CoeffRing("gf", p)


def gf_quadratic(p: int, nonresidue: int | None = None) -> CoeffRing:
    """GF(p^2) presented as GF(p)[t]/(t^2 - n)."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"need an odd prime, got {p}")
    n = least_nonresidue(p) if nonresidue is None else nonresidue % p
    if n in {(i * i) % p for i in range(p)}:
        raise ValueError(f"{n} is a square mod {p}")
    return CoeffRing("gf2", p, 1, n)


def zmod(p: int, e: int) -> CoeffRing:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError("exponent must be at least 1")
    if e == 1:
        return gf(p)
    return CoeffRing("zmod", p, e)
