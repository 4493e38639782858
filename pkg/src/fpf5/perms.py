"""Permutations of {0, ..., n-1} composing as functions: (s*t)(x) = s(t(x))."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matrix import Mat
from .ring import CoeffRing


@dataclass(frozen=True)
class Perm:
    img: tuple[int, ...]

    @staticmethod
    def identity(n: int) -> Perm:
        return Perm(tuple(range(n)))

    @staticmethod
    def from_cycles(n: int, cycles) -> Perm:
        """Build from disjoint cycles of 0-indexed points."""
        img = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for i, a in enumerate(cyc):
                if a in seen or not 0 <= a < n:
                    raise ValueError(f"bad cycle point {a}")
                seen.add(a)
                img[a] = cyc[(i + 1) % len(cyc)]
        return Perm(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.img)

    def __call__(self, x: int) -> int:
        return self.img[x]

    def __mul__(self, other: Perm) -> Perm:
        return Perm(tuple(self.img[other.img[x]] for x in range(len(self.img))))

    def inv(self) -> Perm:
        out = [0] * len(self.img)
        for x, y in enumerate(self.img):
            out[y] = x
        return Perm(tuple(out))

    def __pow__(self, k: int) -> Perm:
        n = len(self.img)
        base = self.inv() if k < 0 else self
        k = abs(k)
        out = Perm.identity(n)
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def is_identity(self) -> bool:
        return all(self.img[x] == x for x in range(len(self.img)))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        seen: set[int] = set()
        out = []
        for a in range(len(self.img)):
            if a in seen or self.img[a] == a:
                continue
            cyc = [a]
            seen.add(a)
            b = self.img[a]
            while b != a:
                cyc.append(b)
                seen.add(b)
                b = self.img[b]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def as_array(self) -> np.ndarray:
        return np.array(self.img, dtype=np.int64)

    def to_matrix(self, ring: CoeffRing) -> Mat:
        """Permutation matrix sending e_i to e_{pi(i)} (columns indexed by i)."""
        n = len(self.img)
        a = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            a[self.img[i], i] = 1
        return Mat(ring, a)
