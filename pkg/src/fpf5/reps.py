"""Module constructors and invariant-subspace tools.

Conventions: matrices act on column vectors from the left.  A subspace is
stored as the rows of an rref basis array, so subspace identity is literal
array equality.  vec() flattens row-major, and the hom module Hom(V, W) with
action f -> w f v^-1 therefore has generator images kron(w, (v^-1)^T).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix import Mat, act_on_rows, kron, nullspace, rref
from .perms import Perm
from .ring import CoeffRing, gf


def perm_deleted_rep(ring: CoeffRing, pi: Perm) -> Mat:
    """Action of pi on the deleted permutation module.

    Basis v_i = a_0 - a_{i+1} for i = 0..n-2, where a_j are the permuted
    coordinates.  pi sends v_i to w_{pi(i+1)} - w_{pi(0)} with w_0 = 0 and
    w_k = v_{k-1} for k >= 1."""
    n = pi.degree
    a = np.zeros((n - 1, n - 1), dtype=np.int64)
    for i in range(n - 1):
        hi = pi(i + 1)
        lo = pi(0)
        if hi >= 1:
            a[hi - 1, i] += 1
        if lo >= 1:
            a[lo - 1, i] -= 1
    return Mat(ring, a)


def perm_sum_zero_mod_ones_rep(ring: CoeffRing, pi: Perm) -> Mat:
    """Action on (sum-zero subspace)/(all-ones line) of the permutation module.

    Needs the characteristic to divide the degree, else the line is not inside
    the sum-zero subspace.  Basis b_i = a_i - a_{n-1} for i = 0..n-2, with the
    all-ones vector b_0 + ... + b_{n-2} set to zero, killing b_{n-2}."""
    n = pi.degree
    if n % ring.p != 0:
        raise ValueError("characteristic must divide the degree")
    d = n - 2
    a = np.zeros((d, d), dtype=np.int64)

    def emit(col: int, k: int, sign: int):
        # b_k in the quotient basis; b_{n-1} = 0 and b_{n-2} = -(b_0+...+b_{n-3})
        if k == n - 1:
            return
        if k == n - 2:
            a[:, col] -= sign
        else:
            a[k, col] += sign

    for i in range(d):
        emit(i, pi(i), 1)
        emit(i, pi(n - 1), -1)
    return Mat(ring, a)


def sym_power(M: Mat, j: int) -> Mat:
    """Action on degree-j forms in two variables; M must be 2x2, result (j+1)-square.

    Basis x^j, x^(j-1) y, ..., y^j where (x, y) is the dual reading of e1, e2."""
    r = M.ring
    assert M.a.shape == (2, 2)
    if j == 0:
        return Mat.identity(r, 1)
    a, c = int(M.a[0, 0]), int(M.a[1, 0])
    b, d = int(M.a[0, 1]), int(M.a[1, 1])
    cols = []
    for k in range(j + 1):
        # image of e1^(j-k) e2^k is (a e1 + c e2)^(j-k) (b e1 + d e2)^k
        poly = np.zeros(j + 1, dtype=np.int64)
        poly[0] = 1
        for _ in range(j - k):
            nxt = np.zeros(j + 1, dtype=np.int64)
            nxt = np.asarray(r.add(nxt, r.mul(poly, a)))
            nxt[1:] = r.add(nxt[1:], r.mul(poly[:-1], c))
            poly = nxt
        for _ in range(k):
            nxt = np.zeros(j + 1, dtype=np.int64)
            nxt = np.asarray(r.add(nxt, r.mul(poly, b)))
            nxt[1:] = r.add(nxt[1:], r.mul(poly[:-1], d))
            poly = nxt
        cols.append(poly)
    return Mat(r, np.stack(cols, axis=1))


def dual_rep(M: Mat) -> Mat:
    inv = M.inv()
    if inv is None:
        raise ValueError("dual of a singular matrix")
    return inv.T


def hom_rep(gV: Mat, gW: Mat) -> Mat:
    """Image of g acting on Hom(V, W) by f -> gW f gV^-1, on row-major vec."""
    return kron(gW, dual_rep(gV))


def fixed_subspace(gens: list[Mat]) -> np.ndarray:
    """Rows spanning the common fixed space of the given matrices."""
    r = gens[0].ring
    n = gens[0].a.shape[0]
    blocks = [r.sub(g.a, np.eye(n, dtype=np.int64)) for g in gens]
    stacked = Mat(r, np.concatenate(blocks, axis=0))
    return nullspace(stacked).a.T.copy()


def spin(ring: CoeffRing, seeds: np.ndarray, gens: list[Mat]) -> np.ndarray:
    """Smallest invariant subspace containing the seed rows, as rref rows."""
    assert ring.is_field
    R, piv = rref(Mat(ring, np.atleast_2d(seeds)))
    rows = R.a[: len(piv)]
    changed = True
    while changed:
        changed = False
        for g in gens:
            img = act_on_rows(g, rows)
            R, piv = rref(Mat(ring, np.concatenate([rows, img], axis=0)))
            if len(piv) > len(rows):
                rows = R.a[: len(piv)].copy()
                changed = True
    return rows


def row_space_contains(sup: np.ndarray, sub: np.ndarray, ring: CoeffRing) -> bool:
    if len(sub) == 0:
        return True
    if len(sup) == 0:
        return False
    R, piv = rref(Mat(ring, np.concatenate([sup, sub], axis=0)))
    return len(piv) == len(rref(Mat(ring, sup))[1])


def cyclic_spans(ring: CoeffRing, gens: list[Mat], cap: int = 1_000_000) -> list[np.ndarray]:
    """Distinct spans of single vectors under the generated algebra action.

    Every submodule is a sum of such spans, so if they form a chain under
    inclusion the module is uniserial and the chain lists all submodules."""
    n = gens[0].a.shape[0]
    total = ring.size**n
    if total > cap:
        raise ValueError(f"{total} vectors exceeds cap {cap}")
    weights = ring.size ** np.arange(n, dtype=np.int64)
    out: dict[bytes, np.ndarray] = {}
    for code in range(1, total):
        v = (code // weights) % ring.size
        rows = spin(ring, v[None, :], gens)
        out.setdefault(rows.tobytes(), rows)
    return list(out.values())


def submodule_chain_dims(ring: CoeffRing, gens: list[Mat], cap: int = 1_000_000):
    """If all cyclic spans form a chain, the full ordered dimension list
    (0 and the whole space included); otherwise None."""
    n = gens[0].a.shape[0]
    spans = cyclic_spans(ring, gens, cap)
    spans.sort(key=len)
    for a, b in zip(spans, spans[1:]):
        if not row_space_contains(b, a, ring):
            return None
    dims = [0] + [len(s) for s in spans]
    if not spans or len(spans[-1]) < n:
        dims.append(n)
    seen = sorted(set(dims))
    if len(seen) != len(dims):
        return None
    return dims


def all_submodules(ring: CoeffRing, gens: list[Mat], cap: int = 1_000_000) -> list[np.ndarray]:
    """Every invariant subspace, as rref row bases sorted by (dimension, bytes).

    Cyclic spans are closed under pairwise join; since any submodule is the
    join of the cyclic spans of its vectors, the closure is the whole lattice."""
    n = gens[0].a.shape[0]
    out = [np.zeros((0, n), dtype=np.int64)] + sorted(
        cyclic_spans(ring, gens, cap), key=lambda s: (len(s), s.tobytes())
    )
    have = {s.tobytes() for s in out}
    i = 0
    while i < len(out):
        for j in range(i):
            stacked = np.concatenate([out[i], out[j]], axis=0)
            R, piv = rref(Mat(ring, stacked)) if len(stacked) else (None, [])
            joined = R.a[: len(piv)].copy() if piv else out[0]
            key = joined.tobytes()
            if key not in have:
                have.add(key)
                out.append(joined)
        i += 1
    out.sort(key=lambda s: (len(s), s.tobytes()))
    return out


def intertwiners(gensA: list[Mat], gensB: list[Mat]) -> list[Mat]:
    """Basis of {T : T a_i = b_i T}, the module maps from the A-module to the B-module."""
    ring = gensA[0].ring
    na = gensA[0].a.shape[0]
    nb = gensB[0].a.shape[0]
    eye_a = Mat.identity(ring, na)
    eye_b = Mat.identity(ring, nb)
    blocks = []
    for A, B in zip(gensA, gensB):
        lhs = kron(eye_b, A.T)
        rhs = kron(B, eye_a)
        blocks.append((lhs - rhs).a)
    ns = nullspace(Mat(ring, np.concatenate(blocks, axis=0)))
    return [Mat(ring, ns.a[:, j].reshape(nb, na)) for j in range(ns.a.shape[1])]


def rep_on_gens(make, ring: CoeffRing, perms: list[Perm]) -> list[Mat]:
    return [make(ring, p) for p in perms]


@dataclass
class Representation:
    """Generator images of a group representation over a field."""

    images: list[Mat]

    def __post_init__(self):
        assert self.images
        for M in self.images:
            if M.inv() is None:
                raise ValueError("representation images must be invertible")

    @property
    def ring(self) -> CoeffRing:
        return self.images[0].ring

    @property
    def dim(self) -> int:
        return self.images[0].a.shape[0]

    def image_of_word(self, word) -> Mat:
        e = Mat.identity(self.ring, self.dim)
        for s in word:
            M = self.images[abs(s) - 1]
            e = e @ (M if s > 0 else M.inv())
        return e


@dataclass
class ModuleMap:
    """matrix maps the source module to the target: matrix . src(g) = tgt(g) . matrix."""

    source: Representation
    target: Representation
    matrix: Mat

    def check(self) -> bool:
        return all(
            self.matrix @ a == b @ self.matrix
            for a, b in zip(self.source.images, self.target.images)
        )


def tensor(a: Representation, b: Representation) -> Representation:
    """Basis e_i (x) f_k in lexicographic (i, k) order."""
    assert a.ring == b.ring
    return Representation([kron(x, y) for x, y in zip(a.images, b.images)])


def wedge2_mat(M: Mat) -> Mat:
    r = M.ring
    n = M.a.shape[0]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    a = np.zeros((len(pairs), len(pairs)), dtype=np.int64)
    for col, (i, j) in enumerate(pairs):
        for row, (k, l) in enumerate(pairs):
            a[row, col] = r.sub(
                r.mul(int(M.a[k, i]), int(M.a[l, j])),
                r.mul(int(M.a[l, i]), int(M.a[k, j])),
            )
    return Mat(r, a)


def wedge2(a: Representation) -> Representation:
    if a.dim < 2:
        raise ValueError("wedge of a module of dimension < 2 is zero")
    return Representation([wedge2_mat(M) for M in a.images])


def dual(a: Representation) -> Representation:
    return Representation([dual_rep(M) for M in a.images])


def frobenius_twist(a: Representation) -> Representation:
    assert a.ring.kind == "gf2"
    return Representation([M.frobenius() for M in a.images])


def hom_space(a: Representation, b: Representation) -> list[ModuleMap]:
    assert a.ring == b.ring
    return [ModuleMap(a, b, T) for T in intertwiners(a.images, b.images)]


def fixed_points(a: Representation, elements: list[Mat]) -> np.ndarray:
    """Common fixed vectors of the given element images, as basis rows."""
    if not elements:
        return np.eye(a.dim, dtype=np.int64)
    return fixed_subspace(elements)


def fpf_check(a: Representation, g: Mat) -> bool:
    """True iff every nontrivial power of the order-5 element g is fixed point free."""
    powers = [g]
    for _ in range(3):
        powers.append(powers[-1] @ g)
    if (powers[-1] @ g) != Mat.identity(a.ring, a.dim) or g.is_identity():
        raise ValueError("element order is not 5")
    return all(len(fixed_subspace([p])) == 0 for p in powers)


def galois_descent(a: Representation) -> tuple[Representation, ModuleMap]:
    """GF(p^2)-representation with a one-dimensional twist intertwiner, rewritten
    over the prime field on the fixed space of the semilinear map v -> B v^sigma.

    Returns the descended representation and the base-change certificate P with
    P . descended(g) = input(g) . P over GF(p^2)."""
    ring = a.ring
    if ring.kind != "gf2":
        raise ValueError("descent needs a quadratic field extension")
    p, nn, d = ring.p, ring.n, a.dim
    homs = intertwiners(a.images, [M.frobenius() for M in a.images])
    if len(homs) != 1 or homs[0].inv() is None:
        raise ValueError("not descendable: twist intertwiner not unique invertible")
    B = homs[0]
    BB = B @ B.frobenius()
    mu = int(BB.a[0, 0])
    if BB != Mat.identity(ring, d).scale(mu) or ring.conj(mu) != mu:
        raise ValueError("not descendable: B B^sigma is not a prime-field scalar")
    mu_inv = ring.inv(mu)
    c = next(x for x in range(1, ring.size) if ring.pow_(x, p + 1) == mu_inv)
    B = B.scale(c)

    base = gf(p)
    pair = np.vectorize(ring.as_pair)
    B0, B1 = pair(B.a)
    eye = np.eye(d, dtype=np.int64)
    blocks = np.block([[B0 - eye, -nn * B1], [B1, -(B0 + eye)]])
    K = nullspace(Mat(base, blocks))
    assert K.a.shape[1] == d
    enc = np.vectorize(ring.of_pair)
    P = Mat(ring, enc(K.a[:d], K.a[d:]))
    Pinv = P.inv()
    assert Pinv is not None
    out = []
    for M in a.images:
        C = Pinv @ M @ P
        c0, c1 = pair(C.a)
        assert not c1.any(), "descended image has entries outside the prime field"
        out.append(Mat(base, c0))
    desc = Representation(out)
    return desc, ModuleMap(Representation([Mat(ring, M.a) for M in out]), a, P)
