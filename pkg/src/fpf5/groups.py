"""Stabilizer chains for permutation and matrix groups, with certified orders.

A chain is built by a randomized Schreier-Sims phase and then completed by a
deterministic sweep that checks every Schreier generator of every level sifts
to the identity.  Once the sweep is clean the product of the orbit lengths is
the exact group order (Sims verification); nothing downstream depends on the
randomized phase having been lucky.

Matrix groups act on column vectors over the coefficient ring; a vector is
encoded as an integer in base ring.size, so orbit bookkeeping is on plain
integers.  Domains small enough get a dense position table plus fully batched
orbit, transversal and verification arithmetic; larger domains fall back to
dictionaries and scalar arithmetic, which is fine because the large-domain
groups used here have tiny orbits.

Transversal convention: point x reached from parent y by directed generator d
has u_x = d * u_y, so u_x is the product of the edge labels from x up to the
base, leftmost label at x.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .matrix import Mat, act_on_rows, bapply, bmatmul
from .perms import Perm
from .ring import CoeffRing

DENSE_LIMIT = 8_000_000
ORBIT_CAP = 10_000_000
BATCH_VERIFY_MIN = 4_000
CHUNK = 120_000


class PermDomain:
    def __init__(self, n: int):
        self.n = n
        self.npoints = n
        self.dense = True
        self.kind = "perm"

    def identity(self):
        return Perm.identity(self.n)

    def mul(self, a: Perm, b: Perm) -> Perm:
        return a * b

    def inv(self, a: Perm) -> Perm:
        return a.inv()

    def is_identity(self, a: Perm) -> bool:
        return a.is_identity()

    def key(self, a: Perm):
        return a.img

    def act(self, a: Perm, x: int) -> int:
        return a.img[x]

    def act_batch(self, a: Perm, xs: np.ndarray) -> np.ndarray:
        return a.as_array()[xs]

    def first_moved(self, a: Perm) -> int | None:
        for x in range(self.n):
            if a.img[x] != x:
                return x
        return None


class MatDomain:
    """Invertible n x n matrices over a CoeffRing acting on encoded vectors."""

    def __init__(self, ring: CoeffRing, n: int, force_sparse: bool = False):
        self.ring = ring
        self.n = n
        self.npoints = ring.size**n
        self.dense = self.npoints <= DENSE_LIMIT and not force_sparse
        self.kind = "mat"
        self.weights = ring.size ** np.arange(n, dtype=np.int64)

    def identity(self):
        return Mat.identity(self.ring, self.n)

    def mul(self, a: Mat, b: Mat) -> Mat:
        return a @ b

    def inv(self, a: Mat) -> Mat:
        out = a.inv()
        if out is None:
            raise ValueError("domain element is not invertible")
        return out

    def is_identity(self, a: Mat) -> bool:
        return a.is_identity()

    def key(self, a: Mat):
        return a.key()

    def encode(self, V: np.ndarray) -> np.ndarray:
        return np.asarray(V, dtype=np.int64) @ self.weights

    def decode(self, codes: np.ndarray) -> np.ndarray:
        return (np.asarray(codes, dtype=np.int64)[..., None] // self.weights) % self.ring.size

    def act_batch(self, a: Mat, codes: np.ndarray) -> np.ndarray:
        return self.encode(act_on_rows(a, self.decode(codes)))

    def act(self, a: Mat, x: int) -> int:
        return int(self.act_batch(a, np.array([x], dtype=np.int64))[0])

    def first_moved(self, a: Mat) -> int | None:
        for i in range(self.n):
            p = int(self.weights[i])
            if self.act(a, p) != p:
                return p
        return None


class WordTable:
    """Straight-line programs over the original generators.

    Nodes are ints; node i < ngens is generator i, later nodes are built by
    mul and inv.  Sharing keeps sift residue words from blowing up."""

    def __init__(self, ngens: int):
        self.ngens = ngens
        self.ops: list[tuple] = [("gen", i) for i in range(ngens)]

    def mul(self, a: int, b: int) -> int:
        self.ops.append(("mul", a, b))
        return len(self.ops) - 1

    def inv(self, a: int) -> int:
        self.ops.append(("inv", a))
        return len(self.ops) - 1

    def evaluate(self, nodes: list[int], gen_images: list, mul, inv) -> list:
        """Images of the given nodes under generator i -> gen_images[i]."""
        top = max(nodes) if nodes else -1
        vals: list = [None] * (top + 1)
        for i in range(top + 1):
            op = self.ops[i]
            if op[0] == "gen":
                vals[i] = gen_images[op[1]]
            elif op[0] == "mul":
                vals[i] = mul(vals[op[1]], vals[op[2]])
            else:
                vals[i] = inv(vals[op[1]])
        return [vals[n] for n in nodes]


class Level:
    """One orbit with its Schreier vector (parent position, directed label)."""

    def __init__(self, domain, base: int):
        self.base = base
        self.active: list[int] = []
        self._pts = [np.array([base], dtype=np.int64)]
        self._par = [np.array([-1], dtype=np.int32)]
        self._dir = [np.array([-1], dtype=np.int16)]
        self.size = 1
        self._cache: tuple | None = None
        if domain.dense:
            self.pos: np.ndarray | dict = np.full(domain.npoints, -1, dtype=np.int32)
            self.pos[base] = 0
        else:
            self.pos = {base: 0}

    def index(self, point: int) -> int:
        if isinstance(self.pos, dict):
            return self.pos.get(point, -1)
        return int(self.pos[point])

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if self._cache is None:
            self._cache = (
                np.concatenate(self._pts),
                np.concatenate(self._par),
                np.concatenate(self._dir),
            )
        return self._cache

    def extend(self, pts: np.ndarray, par: np.ndarray, dirs: np.ndarray):
        if len(pts) == 0:
            return
        self._pts.append(pts.astype(np.int64))
        self._par.append(par.astype(np.int32))
        self._dir.append(dirs.astype(np.int16))
        self._cache = None
        if isinstance(self.pos, dict):
            start = self.size
            for i, p in enumerate(pts.tolist()):
                self.pos[p] = start + i
        else:
            self.pos[pts] = np.arange(self.size, self.size + len(pts), dtype=np.int32)
        self.size += len(pts)


@dataclass
class StabChain:
    domain: object
    gens: list
    seed: int = 0
    rand_rounds: int = 16
    levels: list[Level] = field(default_factory=list)
    strong: list = field(default_factory=list)
    strong_nodes: list[int] = field(default_factory=list)

    def __post_init__(self):
        self.slp = WordTable(len(self.gens))
        self._dir_elems: dict[int, object] = {}
        self._dir_nodes: dict[int, int] = {}
        self._base_vecs: dict[int, np.ndarray] = {}
        self._idn: int | None = None
        for i, g in enumerate(self.gens):
            if not self.domain.is_identity(g):
                self._add_strong(g, i)
        self._random_phase(random.Random(self.seed))
        self._complete()
        self.order = 1
        for lv in self.levels:
            self.order *= lv.size

    @property
    def base(self) -> list[int]:
        return [lv.base for lv in self.levels]

    # -- directed generator access --------------------------------------------

    def _dir_elem(self, d: int):
        e = self._dir_elems.get(d)
        if e is None:
            s = self.strong[d >> 1]
            e = self.domain.inv(s) if d & 1 else s
            self._dir_elems[d] = e
        return e

    def _dir_mat(self, d: int) -> np.ndarray:
        return self._dir_elem(d).a

    def _dir_node(self, d: int) -> int:
        nd = self._dir_nodes.get(d)
        if nd is None:
            base = self.strong_nodes[d >> 1]
            nd = self.slp.inv(base) if d & 1 else base
            self._dir_nodes[d] = nd
        return nd

    def _id_node(self) -> int:
        if self._idn is None:
            a = self.strong_nodes[0]
            self._idn = self.slp.mul(a, self.slp.inv(a))
        return self._idn

    # -- transversals ------------------------------------------------------------

    def path_dirs(self, l: int, idx: int) -> list[int]:
        """Directed labels climbing from orbit position idx up to the base."""
        _, par, dirs = self.levels[l].arrays()
        out = []
        while idx != 0:
            out.append(int(dirs[idx]))
            idx = int(par[idx])
        return out

    def u(self, l: int, idx: int):
        """Transversal element mapping the level-l base to orbit point idx."""
        e = self.domain.identity()
        for d in self.path_dirs(l, idx):
            e = self.domain.mul(e, self._dir_elem(d))
        return e

    def u_inv(self, l: int, idx: int):
        e = self.domain.identity()
        for d in self.path_dirs(l, idx):
            e = self.domain.mul(self._dir_elem(d ^ 1), e)
        return e

    def u_node(self, l: int, idx: int) -> int:
        dirs = self.path_dirs(l, idx)
        if not dirs:
            return self._id_node()
        node = self._dir_node(dirs[0])
        for d in dirs[1:]:
            node = self.slp.mul(node, self._dir_node(d))
        return node

    def path_symbols(self, l: int, idx: int) -> list[int]:
        """u as a word over strong generators, symbols +-(index+1), leftmost first."""
        out = []
        for d in self.path_dirs(l, idx):
            k = (d >> 1) + 1
            out.append(-k if d & 1 else k)
        return out

    # -- sifting --------------------------------------------------------------------

    def sift(self, g, start: int = 0):
        """Strip g through the chain; returns (residue, level reached)."""
        for l in range(start, len(self.levels)):
            lv = self.levels[l]
            x = self.domain.act(g, lv.base)
            idx = lv.index(x)
            if idx < 0:
                return g, l
            if idx:
                g = self.domain.mul(self.u_inv(l, idx), g)
        return g, len(self.levels)

    def sift_node(self, g, node: int, start: int = 0):
        for l in range(start, len(self.levels)):
            lv = self.levels[l]
            x = self.domain.act(g, lv.base)
            idx = lv.index(x)
            if idx < 0:
                return g, node, l
            if idx:
                g = self.domain.mul(self.u_inv(l, idx), g)
                node = self.slp.mul(self.slp.inv(self.u_node(l, idx)), node)
        return g, node, len(self.levels)

    def sift_factors(self, g, start: int = 0):
        """Transversal factorization g = u_{l0,i0} u_{l1,i1} ... as (level, idx) pairs.

        Returns None when g is not in the group."""
        out = []
        for l in range(start, len(self.levels)):
            lv = self.levels[l]
            x = self.domain.act(g, lv.base)
            idx = lv.index(x)
            if idx < 0:
                return None
            out.append((l, idx))
            if idx:
                g = self.domain.mul(self.u_inv(l, idx), g)
        return out if self.domain.is_identity(g) else None

    def contains(self, g) -> bool:
        r, _ = self.sift(g)
        return self.domain.is_identity(r)

    def random_element(self, rng: random.Random):
        """Uniformly random group element from random transversal factors."""
        e = self.domain.identity()
        for l in range(len(self.levels)):
            e = self.domain.mul(e, self.u(l, rng.randrange(self.levels[l].size)))
        return e

    # -- construction ------------------------------------------------------------------

    def _add_strong(self, g, node: int):
        key = self.domain.key(g)
        for s in self.strong:
            if self.domain.key(s) == key:
                return
        k = len(self.strong)
        self.strong.append(g)
        self.strong_nodes.append(node)
        l = 0
        while l < len(self.levels) and self.domain.act(g, self.levels[l].base) == self.levels[l].base:
            l += 1
        if l == len(self.levels):
            b = self.domain.first_moved(g)
            assert b is not None
            self.levels.append(Level(self.domain, b))
        for m in range(l + 1):
            self.levels[m].active.append(k)
            self._close_orbit(m, new_gen=k)

    def _close_orbit(self, l: int, new_gen: int | None = None):
        lv = self.levels[l]
        dirs_all = [d for k in lv.active for d in (2 * k, 2 * k + 1)]
        frontier = lv.arrays()[0].copy()
        fidx = np.arange(lv.size, dtype=np.int32)
        use = [2 * new_gen, 2 * new_gen + 1] if (new_gen is not None and lv.size > 1) else dirs_all
        while len(frontier):
            cand_p, cand_par, cand_d = [], [], []
            for d in use:
                imgs = self.domain.act_batch(self._dir_elem(d), frontier)
                cand_p.append(imgs)
                cand_par.append(fidx)
                cand_d.append(np.full(len(imgs), d, dtype=np.int16))
            pts = np.concatenate(cand_p)
            pars = np.concatenate(cand_par)
            ds = np.concatenate(cand_d)
            if isinstance(lv.pos, dict):
                keep_p, keep_par, keep_d = [], [], []
                fresh = set()
                for i in range(len(pts)):
                    p = int(pts[i])
                    if p in lv.pos or p in fresh:
                        continue
                    fresh.add(p)
                    keep_p.append(p)
                    keep_par.append(int(pars[i]))
                    keep_d.append(int(ds[i]))
                newp = np.array(keep_p, dtype=np.int64)
                newpar = np.array(keep_par, dtype=np.int32)
                newd = np.array(keep_d, dtype=np.int16)
            else:
                mask = lv.pos[pts] < 0
                pts, pars, ds = pts[mask], pars[mask], ds[mask]
                newp, first_at = np.unique(pts, return_index=True)
                newpar = pars[first_at].astype(np.int32)
                newd = ds[first_at]
            if lv.size + len(newp) > ORBIT_CAP:
                raise RuntimeError(f"orbit exceeds cap {ORBIT_CAP}")
            start = lv.size
            lv.extend(newp, newpar, newd)
            frontier = newp
            fidx = np.arange(start, start + len(newp), dtype=np.int32)
            use = dirs_all

    def _random_phase(self, rng: random.Random):
        ok = 0
        while ok < self.rand_rounds and self.strong:
            e = self.domain.identity()
            node = self._id_node()
            for _ in range(rng.randrange(6, 20)):
                j = rng.randrange(len(self.strong))
                if rng.randrange(2):
                    e = self.domain.mul(e, self.strong[j])
                    node = self.slp.mul(node, self.strong_nodes[j])
                else:
                    e = self.domain.mul(e, self.domain.inv(self.strong[j]))
                    node = self.slp.mul(node, self.slp.inv(self.strong_nodes[j]))
            r, rnode, _ = self.sift_node(e, node)
            if self.domain.is_identity(r):
                ok += 1
            else:
                self._add_strong(r, rnode)
                ok = 0

    # -- deterministic completion ----------------------------------------------------

    def _complete(self):
        wm: dict[tuple[int, int], int] = {}
        while True:
            clean = True
            l = len(self.levels) - 1
            while l >= 0 and clean:
                lv = self.levels[l]
                gi = 0
                while gi < len(lv.active):
                    k = lv.active[gi]
                    bad = self._verify_gen(l, k, wm)
                    if bad is not None:
                        self._add_strong(bad[0], bad[1])
                        clean = False
                        break
                    gi += 1
                l -= 1
            if clean:
                return

    def _verify_gen(self, l: int, k: int, wm: dict):
        """Check Schreier generators of strong gen k at level l from the watermark.

        Orbits and transversal entries never mutate once written, so positions
        verified earlier stay verified.  Returns the failing residue with its
        word node, or None when the remaining positions are all clean."""
        lv = self.levels[l]
        start = wm.get((l, k), 0)
        if start >= lv.size:
            return None
        use_batch = (
            self.domain.kind == "mat"
            and self.domain.dense
            and lv.size - start >= BATCH_VERIFY_MIN
        )
        fail_idx = (
            self._verify_gen_batched(l, k, start)
            if use_batch
            else self._verify_gen_scalar(l, k, start)
        )
        if fail_idx is None:
            wm[(l, k)] = lv.size
            return None
        wm[(l, k)] = fail_idx
        pts, _, _ = lv.arrays()
        sidx = lv.index(self.domain.act(self.strong[k], int(pts[fail_idx])))
        s = self.strong[k]
        w = self.domain.mul(self.u_inv(l, sidx), self.domain.mul(s, self.u(l, fail_idx)))
        node = self.slp.mul(
            self.slp.inv(self.u_node(l, sidx)),
            self.slp.mul(self.strong_nodes[k], self.u_node(l, fail_idx)),
        )
        r, rnode, _ = self.sift_node(w, node, start=l + 1)
        assert not self.domain.is_identity(r)
        return r, rnode

    def _verify_gen_scalar(self, l: int, k: int, start: int):
        lv = self.levels[l]
        s = self.strong[k]
        pts, par, dirs = lv.arrays()
        for idx in range(start, lv.size):
            sa = self.domain.act(s, int(pts[idx]))
            sidx = lv.index(sa)
            assert sidx >= 0, "orbit not closed"
            if int(par[sidx]) == idx and int(dirs[sidx]) == 2 * k:
                continue
            if int(par[idx]) == sidx and int(dirs[idx]) == 2 * k + 1:
                continue
            w = self.domain.mul(self.u_inv(l, sidx), self.domain.mul(s, self.u(l, idx)))
            r, _ = self.sift(w, start=l + 1)
            if not self.domain.is_identity(r):
                return idx
        return None

    # -- batched verification for dense matrix domains ----------------------------------

    def _walk_batch(self, l: int, idxs: np.ndarray, inverse: bool) -> np.ndarray:
        """Stack of transversal matrices u_idx (or their inverses) at level l."""
        dom = self.domain
        n = dom.n
        _, par, dirs = self.levels[l].arrays()
        acc = np.broadcast_to(np.eye(n, dtype=np.int64), (len(idxs), n, n)).copy()
        cur = np.asarray(idxs, dtype=np.int64).copy()
        live = np.nonzero(cur != 0)[0]
        while live.size:
            ds = dirs[cur[live]]
            for d in np.unique(ds):
                rows = live[ds == d]
                if inverse:
                    acc[rows] = bmatmul(dom.ring, self._dir_mat(int(d) ^ 1), acc[rows])
                else:
                    acc[rows] = bmatmul(dom.ring, acc[rows], self._dir_mat(int(d)))
            cur[live] = par[cur[live]]
            live = live[cur[live] != 0]
        return acc

    def _base_vec(self, l: int) -> np.ndarray:
        v = self._base_vecs.get(l)
        if v is None:
            v = self.domain.decode(np.array([self.levels[l].base]))[0]
            self._base_vecs[l] = v
        return v

    def _verify_gen_batched(self, l: int, k: int, start: int):
        dom = self.domain
        ring = dom.ring
        n = dom.n
        lv = self.levels[l]
        s = self.strong[k]
        pts, par, dirs = lv.arrays()
        eye = np.eye(n, dtype=np.int64)
        for c0 in range(start, lv.size, CHUNK):
            c1 = min(c0 + CHUNK, lv.size)
            idxs = np.arange(c0, c1, dtype=np.int64)
            sa = dom.act_batch(s, pts[idxs])
            sidx = lv.pos[sa].astype(np.int64)
            skip = (par[sidx] == idxs) & (dirs[sidx] == 2 * k)
            skip |= (par[idxs] == sidx) & (dirs[idxs] == 2 * k + 1)
            rows = np.nonzero(~skip)[0]
            if rows.size == 0:
                continue
            ua = self._walk_batch(l, idxs[rows], inverse=False)
            usainv = self._walk_batch(l, sidx[rows], inverse=True)
            w = bmatmul(ring, usainv, bmatmul(ring, s.a, ua))
            pending = np.arange(len(rows))
            failed = np.zeros(len(rows), dtype=bool)
            for m in range(l + 1, len(self.levels)):
                if pending.size == 0:
                    break
                lvm = self.levels[m]
                x = dom.encode(bapply(ring, w[pending], self._base_vec(m)))
                pm = lvm.pos[x].astype(np.int64)
                miss = pm < 0
                if miss.any():
                    failed[pending[miss]] = True
                    pending = pending[~miss]
                    pm = pm[~miss]
                strip = np.nonzero(pm != 0)[0]
                if strip.size:
                    sel = pending[strip]
                    w[sel] = bmatmul(ring, self._walk_batch(m, pm[strip], inverse=True), w[sel])
            if pending.size:
                notid = np.nonzero((w[pending] != eye).any(axis=(1, 2)))[0]
                if notid.size:
                    failed[pending[notid]] = True
            if failed.any():
                return int(rows[np.nonzero(failed)[0][0]]) + c0
        return None


def stab_chain(domain, gens, seed: int = 0, rand_rounds: int = 16) -> StabChain:
    return StabChain(domain, list(gens), seed, rand_rounds)


def element_order(domain, g, cap: int = 1_000_000) -> int:
    acc = g
    k = 1
    while not domain.is_identity(acc):
        acc = domain.mul(acc, g)
        k += 1
        if k > cap:
            raise RuntimeError(f"element order exceeds cap {cap}")
    return k


def enumerate_elements(domain, gens, cap: int = 100_000) -> list:
    """All elements of the generated group, breadth first from the identity."""
    idn = domain.identity()
    out = [idn]
    seen = {domain.key(idn)}
    i = 0
    while i < len(out):
        for g in gens:
            h = domain.mul(out[i], g)
            k = domain.key(h)
            if k not in seen:
                if len(out) >= cap:
                    raise RuntimeError(f"enumeration exceeds cap {cap}")
                seen.add(k)
                out.append(h)
        i += 1
    return out


def normal_closure_elements(domain, group_gens, seeds, cap: int = 100_000) -> list:
    """Elements of the normal closure of the seeds in the generated group."""
    ngens = [s for s in seeds if not domain.is_identity(s)]
    while True:
        elems = enumerate_elements(domain, ngens, cap) if ngens else [domain.identity()]
        keys = {domain.key(e) for e in elems}
        grown = False
        for g in group_gens:
            gi = domain.inv(g)
            for s in list(ngens):
                c = domain.mul(domain.mul(g, s), gi)
                if domain.key(c) not in keys:
                    ngens.append(c)
                    grown = True
        if not grown:
            return elems


def is_perfect_small(domain, gens, cap: int = 100_000) -> bool:
    """Whether the generated group equals its derived subgroup (small groups only)."""
    seeds = []
    for a in gens:
        ai = domain.inv(a)
        for b in gens:
            bi = domain.inv(b)
            seeds.append(domain.mul(domain.mul(ai, bi), domain.mul(a, b)))
    derived = normal_closure_elements(domain, gens, seeds, cap)
    return len(derived) == len(enumerate_elements(domain, gens, cap))


def orbit_of(domain, gens, start: int, cap: int = ORBIT_CAP):
    """Orbit of an encoded point with its Schreier vector (parent index, generator index).

    Scalar loop, meant for small orbits; the chain machinery handles big ones."""
    pts = [start]
    pos = {start: 0}
    par = [-1]
    lab = [-1]
    i = 0
    while i < len(pts):
        for k, g in enumerate(gens):
            y = domain.act(g, pts[i])
            if y not in pos:
                if len(pts) >= cap:
                    raise RuntimeError(f"orbit exceeds cap {cap}")
                pos[y] = len(pts)
                pts.append(y)
                par.append(i)
                lab.append(k)
        i += 1
    return pts, par, lab


def coset_action(domain, gens, sub_chain: StabChain) -> list[Perm]:
    """Permutations induced by gens on the left cosets of the subgroup.

    Cosets are discovered breadth first from the subgroup itself, generators
    applied in order, so the numbering is deterministic.  Coset equality is a
    membership sift, so this is meant for small indices."""
    reps = [domain.identity()]

    def locate(g):
        gi = domain.inv(g)
        for j, r in enumerate(reps):
            if sub_chain.contains(domain.mul(gi, r)):
                return j
        reps.append(g)
        return len(reps) - 1

    edges: dict[tuple[int, int], int] = {}
    i = 0
    while i < len(reps):
        for k, g in enumerate(gens):
            edges[(k, i)] = locate(domain.mul(g, reps[i]))
        i += 1
    m = len(reps)
    out = []
    for k in range(len(gens)):
        out.append(Perm(tuple(edges[(k, i)] for i in range(m))))
    return out


def matrix_closure(ring: CoeffRing, gens: list[Mat], cap: int) -> np.ndarray | None:
    """All elements of the group generated by gens, stacked as (N, n, n).

    Returns None as soon as the closure would pass cap elements.  The order is
    deterministic: breadth first from the identity, new elements sorted within
    each round."""
    n = gens[0].a.shape[0]
    G = np.stack([g.a for g in gens])
    eye = np.eye(n, dtype=np.int64)
    seen = {eye.tobytes()}
    chunks = [eye[None]]
    frontier = eye[None]
    total = 1
    while len(frontier):
        prod = bmatmul(ring, G[:, None], frontier[None]).reshape(-1, n, n)
        uniq = np.unique(prod.reshape(len(prod), n * n), axis=0)
        fresh = [r.reshape(n, n) for r in uniq if r.tobytes() not in seen]
        total += len(fresh)
        if total > cap:
            return None
        if not fresh:
            break
        frontier = np.stack(fresh)
        for r in fresh:
            seen.add(r.tobytes())
        chunks.append(frontier)
    return np.concatenate(chunks)
