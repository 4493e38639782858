"""Commutant algebras in matrix rings over Z/p^e, unit counting, and
normalizers of small matrix groups via linear conjugacy systems.

The unit group of the commutant of a set of matrices is exactly the
centralizer of that set in the ambient GL_n.  Normalizers reduce to the same
linear algebra: for each automorphism phi of a small subgroup P, the solutions
of {x p = phi(p) x for all p in P} form a module whose invertible elements are
one coset of the commutant units, and the normalizer is the union over phi.
No backtrack search anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .groups import MatDomain, element_order
from .matrix import HowellForm, Mat, bdet, bmatmul, howell, kron, right_kernel
from .ring import CoeffRing, gf


@dataclass
class CommutantAlgebra:
    """Basis of {x : x g = g x for all given g}, as a canonical row module on
    vec coordinates.  Closure under products and the identity are certified on
    construction."""

    ring: CoeffRing
    n: int
    basis: list[Mat]
    form: HowellForm

    def __post_init__(self):
        eye = Mat.identity(self.ring, self.n)
        if not self.form.contains(eye.a.reshape(-1)):
            raise ValueError("commutant does not contain the identity")
        for a in self.basis:
            for b in self.basis:
                if not self.form.contains((a @ b).a.reshape(-1)):
                    raise ValueError("basis is not closed under products")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def element(self, coeffs) -> Mat:
        acc = np.zeros((self.n, self.n), dtype=np.int64)
        for c, b in zip(coeffs, self.basis):
            acc = self.ring.add(acc, self.ring.mul(int(c), b.a))
        return Mat(self.ring, acc)

    def contains(self, M: Mat) -> bool:
        return self.form.contains(M.a.reshape(-1))


def commutant(
    mats: list[Mat], ring: CoeffRing | None = None, n: int | None = None
) -> CommutantAlgebra:
    """The algebra of matrices commuting with every given one.

    An empty generating set imposes no constraint, so the full matrix algebra
    comes back; ring and n must then be passed explicitly."""
    if mats:
        ring = mats[0].ring
        n = mats[0].a.shape[0]
        eye = Mat.identity(ring, n)
        blocks = [(kron(eye, g.T) - kron(g, eye)).a for g in mats]
        form = right_kernel(Mat(ring, np.concatenate(blocks, axis=0)))
    else:
        if ring is None or n is None:
            raise ValueError("empty generating set needs an explicit ring and size")
        form = howell(Mat(ring, np.eye(n * n, dtype=np.int64)))
    basis = [Mat(ring, row.reshape(n, n)) for row in form.rows]
    for b in basis:
        for g in mats:
            if b @ g != g @ b:
                raise AssertionError("solver returned a non-commuting basis element")
    return CommutantAlgebra(ring, n, basis, form)


def _unit_mask(ring: CoeffRing, batch: np.ndarray) -> np.ndarray:
    if batch.shape[-1] <= 4:
        return np.asarray(ring.is_unit(bdet(ring, batch)), dtype=bool)
    return np.array(
        [Mat(ring, m).inv() is not None for m in batch.reshape(-1, *batch.shape[-2:])],
        dtype=bool,
    ).reshape(batch.shape[:-2])


def unit_group_order(alg: CommutantAlgebra, cap: int = 10_000_000) -> int:
    """Order of the algebra's unit group.

    Exhaustive invertibility count over the mod-p reduction (p^rank elements),
    then the lifting factor p^((e-1) rank) for the 1 + p(...) kernel.  The
    algebra must be a free module, which the Howell pivots certify."""
    r = alg.ring
    if r.kind == "gf2":
        raise ValueError("unit counting expects a prime-field or Z/p^e algebra")
    d = alg.rank
    if any(v for _, v in alg.form.pivots):
        raise ValueError("algebra is not free over its ring")
    if r.p**d > cap:
        raise ValueError(f"mod-p reduction has {r.p ** d} elements, cap is {cap}")
    base = gf(r.p)
    coeffs = np.indices((r.p,) * d).reshape(d, -1).T
    B = np.stack([b.a % r.p for b in alg.basis])
    batch = np.einsum("kd,dij->kij", coeffs, B) % r.p
    units = int(np.count_nonzero(_unit_mask(base, batch)))
    return units * r.p ** ((r.e - 1) * d)


def sylow5_element(
    alg: CommutantAlgebra, target_order: int, seed: int = 0, budget: int = 1000
) -> Mat:
    """A unit of order 5 or 25 in the algebra's unit group.

    Random units raised to the 5'-cofactor of the group order land in the
    Sylow 5-subgroup; excess order is trimmed by fifth powers."""
    if target_order not in (5, 25):
        raise ValueError("target order must be 5 or 25")
    total = unit_group_order(alg)
    five_part = 1
    while total % (5 * five_part) == 0:
        five_part *= 5
    if five_part % target_order:
        raise ValueError(
            f"unit group of order {total} has no element of order {target_order}"
        )
    cofactor = total // five_part
    rng = random.Random(seed)
    dom = MatDomain(alg.ring, alg.n)
    for _ in range(budget):
        X = alg.element([rng.randrange(alg.ring.size) for _ in range(alg.rank)])
        if X.inv() is None:
            continue
        Y = X**cofactor
        o = element_order(dom, Y, cap=five_part + 1)
        while o > target_order:
            Y, o = Y**5, o // 5
        if o == target_order:
            return Y
    raise RuntimeError(
        f"no unit of order {target_order} found with seed {seed} in {budget} tries"
    )


def group_automorphisms(elements: list[Mat]) -> list[tuple[int, ...]]:
    """All automorphisms of a small matrix group, as permutations of the given
    element list.  Brute force over generator images filtered by element order,
    then a full multiplication-table check."""
    m = len(elements)
    if m == 0:
        raise ValueError("empty element list")
    idx = {g.key(): i for i, g in enumerate(elements)}
    if len(idx) != m:
        raise ValueError("duplicate elements")
    table = np.zeros((m, m), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            k = idx.get((a @ b).key())
            if k is None:
                raise ValueError("set is not closed under products")
            table[i, j] = k
    ident = [i for i in range(m) if all(int(table[i, j]) == j for j in range(m))]
    if len(ident) != 1 or not all(int(table[j, ident[0]]) == j for j in range(m)):
        raise ValueError("no identity element")
    e = ident[0]

    def order_of(i: int) -> int:
        o, x = 1, i
        while x != e:
            x = int(table[x, i])
            o += 1
        return o

    orders = [order_of(i) for i in range(m)]

    def close(gens: tuple[int, ...]) -> set[int]:
        got = {e, *gens}
        while True:
            new = {int(table[a, b]) for a in got for b in got} - got
            if not new:
                return got
            got |= new

    gens: list[int] = []
    got = close(())
    for i in range(m):
        if i not in got:
            gens.append(i)
            got = close(tuple(gens))

    word: dict[int, tuple[int, ...]] = {e: ()}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = int(table[x, g])
                if y not in word:
                    word[y] = word[x] + (g,)
                    nxt.append(y)
        frontier = nxt

    def build(images: list[int]) -> tuple[int, ...] | None:
        gmap = dict(zip(gens, images))
        phi = [e] * m
        for x, w in word.items():
            y = e
            for g in w:
                y = int(table[y, gmap[g]])
            phi[x] = y
        if len(set(phi)) != m:
            return None
        for i in range(m):
            for j in range(m):
                if phi[int(table[i, j])] != int(table[phi[i], phi[j]]):
                    return None
        return tuple(phi)

    autos: list[tuple[int, ...]] = []
    if not gens:
        return [tuple(range(m))]

    def extend(k: int, images: list[int]):
        if k == len(gens):
            phi = build(images)
            if phi is not None:
                autos.append(phi)
            return
        want = orders[gens[k]]
        for cand in range(m):
            if orders[cand] == want:
                extend(k + 1, images + [cand])

    extend(0, [])
    return autos


def normalizer_of_finite_subgroup(
    ring: CoeffRing,
    n: int,
    elements: list[Mat],
    autos: list[tuple[int, ...]] | None = None,
    cap: int = 100_000,
) -> list[Mat]:
    """Every invertible x with x P x^{-1} = P, as an explicit list.

    One linear solve per automorphism of P: stack the conjugacy conditions
    x p = phi(p) x, enumerate the solution module, keep the units.  The
    identity automorphism is always included, so the commutant units are a
    subset of the result.  Output order is deterministic."""
    if not elements:
        raise ValueError("empty subgroup")
    if len(elements) > 16:
        raise ValueError("subgroup too large for the linear method")
    for g in elements:
        if g.ring != ring or g.a.shape != (n, n):
            raise ValueError("subgroup lives in a different matrix ring")
    if autos is None:
        autos = group_automorphisms(elements)
    phis = sorted({tuple(range(len(elements)))} | {tuple(a) for a in autos})
    eye = Mat.identity(ring, n)
    out: list[Mat] = []
    seen: set[bytes] = set()
    for phi in phis:
        if sorted(phi) != list(range(len(elements))):
            raise ValueError("automorphism candidate is not a permutation")
        blocks = [
            (kron(eye, p.T) - kron(elements[phi[i]], eye)).a
            for i, p in enumerate(elements)
        ]
        K = right_kernel(Mat(ring, np.concatenate(blocks, axis=0)))
        if K.module_size() > cap:
            raise ValueError(
                f"solution module has {K.module_size()} elements, cap is {cap}"
            )
        sols = K.enumerate_elements(cap).reshape(-1, n, n)
        for v in sols[_unit_mask(ring, sols)]:
            g = Mat(ring, v)
            if g.key() not in seen:
                seen.add(g.key())
                out.append(g)
    if len(out) > cap:
        raise ValueError(f"normalizer has {len(out)} elements, cap is {cap}")
    _certify_normalizer(ring, out, elements, seen)
    return out


def _certify_normalizer(
    ring: CoeffRing, out: list[Mat], elements: list[Mat], seen: set[bytes]
):
    # every g moves P to P: for each p there is q with p g = g q
    G = np.stack([g.a for g in out])
    for p in elements:
        covered = np.zeros(len(out), dtype=bool)
        for q in elements:
            lhs = bmatmul(ring, p.a[None], G)
            rhs = bmatmul(ring, G, q.a[None])
            covered |= (lhs == rhs).all(axis=(1, 2))
        if not covered.all():
            raise AssertionError("certificate failure: an element does not normalize")
    if Mat.identity(ring, G.shape[-1]).key() not in seen:
        raise AssertionError("certificate failure: identity missing")
    for g in out:
        gi = g.inv()
        if gi is None or gi.key() not in seen:
            raise AssertionError("certificate failure: inverse missing")
    rng = random.Random(12345)
    for _ in range(1000):
        a = out[rng.randrange(len(out))]
        b = out[rng.randrange(len(out))]
        if (a @ b).key() not in seen:
            raise AssertionError("certificate failure: product escapes the set")
