"""SL2 over GF(49), its projective-line permutation avatar, the basic modules
U_j, and eigenvalue bookkeeping for order-5 elements.

Order-5 elements of SL2(49) have eigenvalues of multiplicative order 5, which
live in GF(7^4), not GF(49).  Their trace is a root of x^2 + x - 1 over GF(7),
so eigenvalues are reported as exponent multisets {k} meaning lambda^k for a
fixed primitive fifth root lambda: the pair {1,4} is attached to the smaller
encoded root of x^2 + x - 1 and {2,3} to the larger.  Which pair gets which
label is a Galois choice; presence/absence statements do not depend on it.
"""

from __future__ import annotations

import numpy as np

from .groups import MatDomain, PermDomain, StabChain, element_order, stab_chain
from .matrix import Mat, kron, nullspace
from .perms import Perm
from .reps import Representation, frobenius_twist, galois_descent, hom_space, sym_power, tensor
from .ring import CoeffRing, gf_quadratic


def sl2_gens(F: CoeffRing | None = None) -> list[Mat]:
    """Two generators of SL2: a transvection and its transpose twisted by t.

    t generates GF(49) over GF(7), which makes the pair generate the whole
    group (the chain order comes out 49*48*50)."""
    F = F or gf_quadratic(7)
    t = F.of_pair(0, 1)
    return [Mat(F, [[1, 1], [0, 1]]), Mat(F, [[1, 0], [t, 1]])]


def projective_point_count(F: CoeffRing) -> int:
    return F.size + 1


def projective_action(M: Mat, p: int) -> int:
    """Points 0..q-1 are [x:1], point q is [1:0]."""
    F = M.ring
    q = F.size
    a, b = (p, 1) if p < q else (1, 0)
    x = F.add(F.mul(int(M.a[0, 0]), a), F.mul(int(M.a[0, 1]), b))
    y = F.add(F.mul(int(M.a[1, 0]), a), F.mul(int(M.a[1, 1]), b))
    return int(F.mul(x, F.inv(y))) if y else q


def projective_perm(M: Mat) -> Perm:
    q = M.ring.size
    return Perm(tuple(projective_action(M, p) for p in range(q + 1)))


def psl2_perm_gens(F: CoeffRing | None = None) -> list[Perm]:
    return [projective_perm(M) for M in sl2_gens(F)]


def sl2_chain(F: CoeffRing | None = None, seed: int = 0) -> StabChain:
    F = F or gf_quadratic(7)
    return stab_chain(MatDomain(F, 2), sl2_gens(F), seed=seed)


def psl2_chain(F: CoeffRing | None = None, seed: int = 0) -> StabChain:
    F = F or gf_quadratic(7)
    return stab_chain(PermDomain(F.size + 1), psl2_perm_gens(F), seed=seed)


def strong_gen_matrices(chain: StabChain, mat_gens: list[Mat]) -> list[Mat]:
    """Images of the chain's strong generators under original gen i -> mat_gens[i].

    For a quotient avatar (the projective line) the lift is one specific word,
    so it is well defined up to the kernel; modules where the kernel acts
    trivially give well-defined images either way."""

    def minv(M: Mat) -> Mat:
        Mi = M.inv()
        assert Mi is not None
        return Mi

    return chain.slp.evaluate(
        chain.strong_nodes, mat_gens, lambda a, b: a @ b, minv
    )


# -- basic modules ------------------------------------------------------------------


def u_rep(j: int, gens: list[Mat]) -> Representation:
    """U_j on the monomial basis x^j, x^(j-1) y, ..., y^j."""
    if not 0 <= j <= 6:
        raise ValueError("j out of range")
    return Representation([sym_power(g, j) for g in gens])


def n_tensor_rep(gens: list[Mat]) -> Representation:
    """U_1 (x) U_1^sigma, the fixed-point-free 4-dimensional module."""
    return Representation([kron(g, g.frobenius()) for g in gens])


def descended_n_rep(gens: list[Mat]):
    """The GF(7)-form of U_1 (x) U_1^sigma with its base-change certificate."""
    return galois_descent(n_tensor_rep(gens))


# -- order-5 elements and eigenvalue profiles ------------------------------------


def order5_trace_roots(F: CoeffRing) -> tuple[int, int]:
    minus_one = F.neg(1)
    roots = [x for x in range(F.size) if F.add(F.add(F.mul(x, x), x), minus_one) == 0]
    if len(roots) != 2:
        raise ValueError("x^2 + x - 1 must split in the quadratic extension")
    return roots[0], roots[1]


def order5_element(F: CoeffRing) -> Mat:
    """Companion matrix of x^2 - tau x + 1 for the smaller trace root tau."""
    t1, _ = order5_trace_roots(F)
    g = Mat(F, [[0, -1], [1, t1]])
    assert element_order(MatDomain(F, 2), g) == 5
    return g


def eigenvalues_in_gf(M: Mat) -> tuple[int, ...]:
    """Eigenvalues (with multiplicity, sorted by encoding) for a matrix that
    diagonalises over its own field."""
    F = M.ring
    n = M.a.shape[0]
    out: list[int] = []
    for mu in range(F.size):
        shifted = Mat(F, F.sub(M.a, mu * np.eye(n, dtype=np.int64)))
        out.extend([mu] * nullspace(shifted).a.shape[1])
    if len(out) != n:
        raise ValueError("matrix does not diagonalise over the field")
    return tuple(out)


def order5_exponents(M: Mat) -> tuple[int, ...]:
    """Exponent multiset of an order-5 matrix: k means eigenvalue lambda^k."""
    F = M.ring
    n = M.a.shape[0]
    dom = MatDomain(F, n)
    if element_order(dom, M, cap=10) != 5:
        raise ValueError("element order is not 5")
    eye = np.eye(n, dtype=np.int64)
    out: list[int] = []
    m0 = nullspace(Mat(F, F.sub(M.a, eye))).a.shape[1]
    out.extend([0] * m0)
    M2 = (M @ M).a
    for tau, pair in zip(order5_trace_roots(F), ((1, 4), (2, 3))):
        ker = Mat(F, F.add(F.sub(M2, F.mul(tau, M.a)), eye))
        d = nullspace(ker).a.shape[1]
        assert d % 2 == 0
        out.extend(sorted(pair * (d // 2)))
    if len(out) != n:
        raise ValueError("matrix does not split into order-5 eigenspaces")
    return tuple(sorted(out))


# -- the V (x) V multiplicity report ---------------------------------------------


def decompose_tensor_report(gens: list[Mat]) -> dict:
    """Hom-multiplicities of V (x) V against V and the expected summands,
    where V = U_1 (x) U_1^sigma over GF(49)."""
    V = n_tensor_rep(gens)
    VV = tensor(V, V)
    U0 = u_rep(0, gens)
    U2 = u_rep(2, gens)
    U2t = frobenius_twist(U2)
    U2xU2t = tensor(U2, U2t)
    report = {
        "hom_VV_to_V": len(hom_space(VV, V)),
        "hom_V_to_VV": len(hom_space(V, VV)),
        "mult_U0": len(hom_space(VV, U0)),
        "mult_U2": len(hom_space(VV, U2)),
        "mult_U2_twist": len(hom_space(VV, U2t)),
        "mult_U2_x_U2_twist": len(hom_space(VV, U2xU2t)),
    }
    report["summand_dims_total"] = (
        U0.dim * report["mult_U0"]
        + U2.dim * report["mult_U2"]
        + U2t.dim * report["mult_U2_twist"]
        + U2xU2t.dim * report["mult_U2_x_U2_twist"]
    )
    return report
