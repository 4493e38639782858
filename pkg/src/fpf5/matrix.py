"""Dense matrices over a CoeffRing, with exact elimination.

Over fields the workhorse is reduced row echelon form.  Over Z/p^e it is the
row Howell form: echelon with pivot entries p^v, saturation rows appended so
the row module is closed under annihilation of leading units, and entries
above a pivot reduced mod the pivot.  The Howell form is canonical for the
row module and supports exact size counting, membership and enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ring import CoeffRing


@dataclass(eq=False)
class Mat:
    ring: CoeffRing
    a: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=np.int64)
        if self.ring.kind == "gf2":
            # negative ints mean prime-subfield values; nonneg ints are encoded
            a = np.where(a < 0, a % self.ring.p, a)
        self.a = a % self.ring.size

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_rows(ring: CoeffRing, rows) -> Mat:
        return Mat(ring, np.array(rows, dtype=np.int64))

    @staticmethod
    def identity(ring: CoeffRing, n: int) -> Mat:
        return Mat(ring, np.eye(n, dtype=np.int64))

    @staticmethod
    def zeros(ring: CoeffRing, r: int, c: int) -> Mat:
        return Mat(ring, np.zeros((r, c), dtype=np.int64))

    # -- basics --------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def copy(self) -> Mat:
        return Mat(self.ring, self.a.copy())

    def key(self) -> bytes:
        return self.a.tobytes()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.ring == other.ring
            and np.array_equal(self.a, other.a)
        )

    def __repr__(self) -> str:
        return f"Mat({self.ring}, {self.a.tolist()})"

    def is_identity(self) -> bool:
        n, m = self.a.shape
        return n == m and np.array_equal(self.a, np.eye(n, dtype=np.int64))

    def is_zero(self) -> bool:
        return not self.a.any()

    # -- arithmetic ----------------------------------------------------------

    def __matmul__(self, other: Mat) -> Mat:
        r = self.ring
        if r.kind == "gf2":
            p, n = r.p, r.n
            a0, a1 = self.a % p, self.a // p
            b0, b1 = other.a % p, other.a // p
            c0 = (a0 @ b0 + n * (a1 @ b1)) % p
            c1 = (a0 @ b1 + a1 @ b0) % p
            return Mat(r, c0 + p * c1)
        return Mat(r, (self.a @ other.a) % r.size)

    def __add__(self, other: Mat) -> Mat:
        return Mat(self.ring, self.ring.add(self.a, other.a))

    def __sub__(self, other: Mat) -> Mat:
        return Mat(self.ring, self.ring.sub(self.a, other.a))

    def __neg__(self) -> Mat:
        return Mat(self.ring, self.ring.neg(self.a))

    def scale(self, c: int) -> Mat:
        return Mat(self.ring, self.ring.mul(c, self.a))

    @property
    def T(self) -> Mat:
        return Mat(self.ring, self.a.T.copy())

    def frobenius(self) -> Mat:
        """Entrywise x -> x^p (identity unless the ring is a quadratic extension)."""
        return Mat(self.ring, self.ring.conj(self.a))

    def trace(self) -> int:
        d = np.diagonal(self.a)
        r = self.ring
        if r.kind == "gf2":
            return int((d % r.p).sum() % r.p + r.p * ((d // r.p).sum() % r.p))
        return int(d.sum() % r.size)

    def apply(self, v) -> np.ndarray:
        """Matrix times column vector, given and returned as a 1-d array."""
        return act_on_rows(self, np.asarray(v, dtype=np.int64)[None, :])[0]

    def inv(self) -> Mat | None:
        """Inverse, or None when the matrix is not invertible over the ring."""
        r = self.ring
        n = self.a.shape[0]
        assert self.a.shape[1] == n
        M = np.concatenate([self.a.copy(), np.eye(n, dtype=np.int64)], axis=1)
        for c in range(n):
            units = np.nonzero(np.asarray(r.is_unit(M[c:, c])))[0]
            if units.size == 0:
                return None
            k = c + int(units[0])
            if k != c:
                M[[c, k]] = M[[k, c]]
            M[c] = r.mul(M[c], r.inv(int(M[c, c])))
            rest = np.nonzero(M[:, c])[0]
            rest = rest[rest != c]
            if rest.size:
                M[rest] = r.sub(M[rest], r.mul(M[rest, c][:, None], M[c][None, :]))
        return Mat(r, M[:, n:])

    def __pow__(self, k: int) -> Mat:
        n = self.a.shape[0]
        if k < 0:
            base = self.inv()
            if base is None:
                raise ZeroDivisionError("negative power of a singular matrix")
            k = -k
        else:
            base = self
        out = Mat.identity(self.ring, n)
        while k:
            if k & 1:
                out = out @ base
            k >>= 1
            if k:
                base = base @ base
        return out

    def det(self) -> int:
        n = self.a.shape[0]
        if n <= 4:
            return int(bdet(self.ring, self.a[None])[0])
        if self.ring.is_field:
            return _det_field(self)
        raise ValueError("determinant over Z/p^e implemented only for n <= 4")


def act_on_rows(M: Mat, V: np.ndarray) -> np.ndarray:
    """Apply M to a batch of column vectors given as the rows of V."""
    r = M.ring
    V = np.asarray(V, dtype=np.int64)
    if r.kind == "gf2":
        p, n = r.p, r.n
        a0, a1 = M.a % p, M.a // p
        v0, v1 = V % p, V // p
        c0 = (v0 @ a0.T + n * (v1 @ a1.T)) % p
        c1 = (v0 @ a1.T + v1 @ a0.T) % p
        return c0 + p * c1
    return (V @ M.a.T) % r.size


def bmatmul(ring: CoeffRing, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Batched matrix product on stacked encoded arrays, broadcasting as np.matmul."""
    if ring.kind == "gf2":
        p, n = ring.p, ring.n
        a0, a1 = A % p, A // p
        b0, b1 = B % p, B // p
        c0 = (np.matmul(a0, b0) + n * np.matmul(a1, b1)) % p
        c1 = (np.matmul(a0, b1) + np.matmul(a1, b0)) % p
        return c0 + p * c1
    return np.matmul(A, B) % ring.size


def bapply(ring: CoeffRing, W: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Apply a stack of matrices (k,n,n) to one column vector (n,), giving (k,n)."""
    return bmatmul(ring, W, np.asarray(v, dtype=np.int64)[:, None])[..., 0]


def kron(A: Mat, B: Mat) -> Mat:
    ra, ca = A.a.shape
    rb, cb = B.a.shape
    out = A.ring.mul(A.a[:, None, :, None], B.a[None, :, None, :])
    return Mat(A.ring, out.reshape(ra * rb, ca * cb))


def hstack(A: Mat, B: Mat) -> Mat:
    return Mat(A.ring, np.concatenate([A.a, B.a], axis=1))


def vstack(A: Mat, B: Mat) -> Mat:
    return Mat(A.ring, np.concatenate([A.a, B.a], axis=0))


def bdet(ring: CoeffRing, batch: np.ndarray) -> np.ndarray:
    """Determinants of a batch of small matrices, shape (..., n, n), n <= 4."""
    batch = np.asarray(batch, dtype=np.int64)
    n = batch.shape[-1]
    if n > 4:
        raise ValueError("bdet supports n <= 4")
    if n == 1:
        return batch[..., 0, 0] % ring.size
    acc = None
    for j in range(n):
        cols = [c for c in range(n) if c != j]
        minor = bdet(ring, batch[..., 1:, :][..., :, cols])
        term = ring.mul(batch[..., 0, j], minor)
        if j % 2:
            term = ring.neg(term)
        acc = term if acc is None else ring.add(acc, term)
    return np.asarray(acc)


def _det_field(M: Mat) -> int:
    r = M.ring
    A = M.a.copy()
    n = A.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(A[c:, c])[0]
        if nz.size == 0:
            return 0
        k = c + int(nz[0])
        if k != c:
            A[[c, k]] = A[[k, c]]
            det = r.neg(det)
        piv = int(A[c, c])
        det = int(r.mul(det, piv))
        below = np.nonzero(A[c + 1 :, c])[0] + c + 1
        if below.size:
            f = r.mul(A[below, c][:, None], r.inv(piv))
            A[below] = r.sub(A[below], r.mul(f, A[c][None, :]))
    return det


# -- field elimination ------------------------------------------------------


def rref(M: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form over a field; returns (R, pivot columns)."""
    r = M.ring
    assert r.is_field
    A = M.a.copy()
    nrows, ncols = A.shape
    pivots: list[int] = []
    i = 0
    for c in range(ncols):
        if i == nrows:
            break
        nz = np.nonzero(A[i:, c])[0]
        if nz.size == 0:
            continue
        k = i + int(nz[0])
        if k != i:
            A[[i, k]] = A[[k, i]]
        A[i] = r.mul(A[i], r.inv(int(A[i, c])))
        rest = np.nonzero(A[:, c])[0]
        rest = rest[rest != i]
        if rest.size:
            A[rest] = r.sub(A[rest], r.mul(A[rest, c][:, None], A[i][None, :]))
        pivots.append(c)
        i += 1
    return Mat(r, A), pivots


def rank(M: Mat) -> int:
    return len(rref(M)[1])


def nullspace(M: Mat) -> Mat:
    """Right kernel basis over a field, returned as matrix columns."""
    r = M.ring
    R, pivots = rref(M)
    ncols = M.a.shape[1]
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((ncols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, c in enumerate(pivots):
            basis[c, j] = r.neg(int(R.a[i, f]))
    return Mat(r, basis)


def _solve_field(M: Mat, b: np.ndarray) -> np.ndarray | None:
    r = M.ring
    aug = Mat(r, np.concatenate([M.a, np.asarray(b, dtype=np.int64)[:, None]], axis=1))
    R, pivots = rref(aug)
    ncols = M.a.shape[1]
    if ncols in pivots:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = R.a[i, ncols]
    return x


# -- Howell form over Z/p^e (degenerates to rref over GF(p)) -----------------


@dataclass
class HowellForm:
    """Canonical generating rows of a module in R^m, R = Z/p^e or GF(p^2)."""

    ring: CoeffRing
    rows: np.ndarray
    pivots: list[tuple[int, int]]

    @property
    def width(self) -> int:
        return self.rows.shape[1]

    def coeff_sizes(self) -> list[int]:
        r = self.ring
        if r.kind == "gf2":
            return [r.size] * len(self.pivots)
        return [r.p ** (r.e - v) for _, v in self.pivots]

    def module_size(self) -> int:
        total = 1
        for s in self.coeff_sizes():
            total *= s
        return total

    def enumerate_elements(self, cap: int = 100_000) -> np.ndarray:
        """All module elements, one per row.  Deterministic order."""
        total = self.module_size()
        if total > cap:
            raise ValueError(f"module has {total} elements, cap is {cap}")
        r = self.ring
        out = np.zeros((1, self.width), dtype=np.int64)
        for row, s in zip(self.rows, self.coeff_sizes()):
            coefs = np.arange(s, dtype=np.int64)
            block = np.asarray(r.mul(coefs[:, None], row[None, :]))
            out = np.asarray(r.add(out[:, None, :], block[None, :, :])).reshape(-1, self.width)
        return out

    def contains(self, x) -> bool:
        r = self.ring
        x = np.asarray(x, dtype=np.int64) % r.size
        for i, (c, v) in enumerate(self.pivots):
            t = int(x[c])
            if t == 0:
                continue
            if r.kind == "gf2":
                f = t  # pivot normalized to 1 over a field
            else:
                pv = r.p**v
                if t % pv:
                    return False
                f = t // pv
            x = np.asarray(r.sub(x, r.mul(f, self.rows[i])))
        return not x.any()


def _howell_core(ring: CoeffRing, A: np.ndarray, ncols: int):
    """Row reduction with pivots confined to the first ncols columns.

    Returns (H, pivots, leftover) where H holds the pivot rows in canonical
    form and leftover holds nonzero rows whose first ncols entries vanished.
    """
    p, e, size = ring.p, ring.e, ring.size
    work = [np.asarray(row, dtype=np.int64) % size for row in A]
    fin: list[np.ndarray] = []
    piv: list[tuple[int, int]] = []
    for c in range(ncols):
        best, bestv = -1, e + 1
        for i, w in enumerate(work):
            t = int(w[c])
            if t:
                v = ring.val(t) if e > 1 else 0
                if v < bestv:
                    best, bestv = i, v
                    if v == 0:
                        break
        if best < 0:
            continue
        w = work.pop(best)
        v = bestv
        pv = p**v
        u = int(w[c]) // pv
        if u != 1:
            w = w * pow(u, -1, size) % size
        for j in range(len(work)):
            t = int(work[j][c])
            if t:
                work[j] = (work[j] - (t // pv) * w) % size
        if v:
            sat = w * (p ** (e - v)) % size
            if sat.any():
                work.append(sat)
        fin.append(w)
        piv.append((c, v))
    H = (
        np.array(fin, dtype=np.int64)
        if fin
        else np.zeros((0, np.asarray(A).shape[1] if len(np.asarray(A).shape) > 1 else ncols), dtype=np.int64)
    )
    for i in range(len(piv)):
        c, v = piv[i]
        pv = p**v
        for j in range(i):
            f = int(H[j, c]) // pv
            if f:
                H[j] = (H[j] - f * H[i]) % size
    leftover = [w for w in work if w.any()]
    return H, piv, leftover


def howell(M: Mat) -> HowellForm:
    """Canonical Howell form of the row module of M (plain rings only)."""
    r = M.ring
    if r.kind == "gf2":
        R, pivots = rref(M)
        rows = R.a[: len(pivots)]
        return HowellForm(r, rows, [(c, 0) for c in pivots])
    H, piv, _ = _howell_core(r, M.a, M.a.shape[1])
    return HowellForm(r, H, piv)


def right_kernel(M: Mat) -> HowellForm:
    """Solutions of M x = 0 as a canonical row module (one solution per row)."""
    r = M.ring
    if r.kind == "gf2":
        return howell(nullspace(M).T)
    nrows, ncols = M.a.shape
    aug = np.concatenate([M.a.T, np.eye(ncols, dtype=np.int64)], axis=1)
    _, _, leftover = _howell_core(r, aug, nrows)
    if not leftover:
        return HowellForm(r, np.zeros((0, ncols), dtype=np.int64), [])
    gens = np.array([w[nrows:] for w in leftover], dtype=np.int64)
    return howell(Mat(r, gens))


def linsolve(M: Mat, b) -> np.ndarray | None:
    """One particular solution of M x = b, or None when inconsistent."""
    r = M.ring
    b = np.asarray(b, dtype=np.int64) % r.size
    if r.kind == "gf2":
        return _solve_field(M, b)
    nrows, ncols = M.a.shape
    aug = np.concatenate([M.a.T, np.eye(ncols, dtype=np.int64)], axis=1)
    H, piv, _ = _howell_core(r, aug, nrows)
    res = b.copy()
    coeffs = np.zeros(len(piv), dtype=np.int64)
    p = r.p
    for i, (c, v) in enumerate(piv):
        t = int(res[c])
        if t == 0:
            continue
        pv = p**v
        if t % pv:
            return None
        f = t // pv
        coeffs[i] = f
        res = (res - f * H[i, :nrows]) % r.size
    if res.any():
        return None
    return (coeffs @ H[:, nrows:]) % r.size


def solution_set(M: Mat, b) -> tuple[np.ndarray, HowellForm] | None:
    """Particular solution plus kernel module, or None when inconsistent."""
    x = linsolve(M, b)
    if x is None:
        return None
    return x, right_kernel(M)
