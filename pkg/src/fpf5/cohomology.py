"""First cohomology of a presented group on a finite module.

A derivation d is determined by its generator values, subject to one linear
condition per relator: with the left convention d(uv) = d(u) + u.d(v), a
relator s_1...s_m forces sum_j rho(s_1...s_{j-1}) delta(s_j) = 0, where
delta(+k) = d(g_k) and delta(-k) = -rho(g_k)^-1 d(g_k).  Inner derivations
are v -> (rho(g) v - v), of dimension dim M - dim M^G.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix import Mat, nullspace
from .presentation import Presentation
from .reps import fixed_subspace, hom_rep


@dataclass
class DerivationSpace:
    presentation: Presentation
    images: list[Mat]
    cocycles: list[tuple[np.ndarray, ...]]
    inner_dim: int
    h1: int

    @property
    def z1_dim(self) -> int:
        return len(self.cocycles)


def _check_relators(pres: Presentation, images: list[Mat], inverses: list[Mat]):
    dim = images[0].a.shape[0]
    for rel in pres.relators:
        e = Mat.identity(images[0].ring, dim)
        for s in rel:
            e = e @ (images[s - 1] if s > 0 else inverses[-s - 1])
        if not e.is_identity():
            raise ValueError(f"relator {rel} not satisfied by the module images")


def derivation_space(pres: Presentation, images: list[Mat]) -> DerivationSpace:
    if pres.ngens == 0:
        return DerivationSpace(pres, images, [], 0, 0)
    if len(images) != pres.ngens:
        raise ValueError("one image per generator required")
    ring = images[0].ring
    assert ring.is_field
    dim = images[0].a.shape[0]
    inverses = []
    for M in images:
        Minv = M.inv()
        if Minv is None:
            raise ValueError("module images must be invertible")
        inverses.append(Minv)
    _check_relators(pres, images, inverses)

    blocks = []
    for rel in pres.relators:
        C = [np.zeros((dim, dim), dtype=np.int64) for _ in range(pres.ngens)]
        P = Mat.identity(ring, dim)
        for s in rel:
            k = abs(s) - 1
            if s > 0:
                C[k] = ring.add(C[k], P.a)
                P = P @ images[k]
            else:
                P = P @ inverses[k]
                C[k] = ring.sub(C[k], P.a)
        blocks.append(np.concatenate(C, axis=1))
    if blocks:
        Z = nullspace(Mat(ring, np.concatenate(blocks, axis=0)))
    else:
        Z = Mat(ring, np.eye(pres.ngens * dim, dtype=np.int64))
    cocycles = [
        tuple(Z.a[:, j].reshape(pres.ngens, dim)) for j in range(Z.a.shape[1])
    ]
    fixed = fixed_subspace(images)
    inner = dim - len(fixed)
    return DerivationSpace(pres, images, cocycles, inner, len(cocycles) - inner)


def h1_dim(pres: Presentation, images: list[Mat]) -> int:
    return derivation_space(pres, images).h1


def ext1_dim(pres: Presentation, imagesV: list[Mat], imagesW: list[Mat]) -> int:
    """dim Ext^1(V, W) = dim H^1(G, Hom(V, W))."""
    return h1_dim(pres, [hom_rep(v, w) for v, w in zip(imagesV, imagesW)])
