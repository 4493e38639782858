"""Named verification checks with exact expected values.

Each check recomputes one verified statement from scratch and renders the
outcome as a short string; the runner passes iff the string equals the
expected one character for character.  All comparisons behind the strings
are exact integers, dimensions, and booleans."""

from __future__ import annotations

import hashlib
import os
import pickle
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from .centralizers import (
    commutant,
    normalizer_of_finite_subgroup,
    sylow5_element,
    unit_group_order,
)
from .cohomology import ext1_dim, h1_dim
from .constructions import (
    GradedTriple,
    alt5_perms,
    build_class_two_group,
    class_certificate,
    five_cycle,
    gamma_module_map,
    hall_witt_defect,
    hall_witt_sweep,
    hall_witt_terms,
    klein_four_perms,
    reflection_images,
    self_centralising_check,
    theta_submodule_check,
)
from .groups import (
    MatDomain,
    PermDomain,
    coset_action,
    is_perfect_small,
    matrix_closure,
    stab_chain,
)
from .matrix import Mat, bmatmul, kron, rref
from .perms import Perm
from .presentation import coset_enumeration, presentation_from_chain
from .psl2 import (
    decompose_tensor_report,
    descended_n_rep,
    n_tensor_rep,
    order5_element,
    order5_exponents,
    psl2_chain,
    sl2_gens,
    strong_gen_matrices,
    u_rep,
)
from .reps import (
    Representation,
    fixed_points,
    fpf_check,
    hom_space,
    intertwiners,
    perm_deleted_rep,
    perm_sum_zero_mod_ones_rep,
    submodule_chain_dims,
    sym_power,
    tensor,
    wedge2,
    wedge2_mat,
)
from .ring import gf, gf_quadratic, zmod


class ChainCache:
    """Pickle store for expensive stabilizer chains; a None directory disables it."""

    def __init__(self, directory: str | None):
        self.directory = Path(directory) if directory else None

    def chain(self, name: str, build: Callable):
        if self.directory is None:
            return build()
        path = self.directory / f"{name}.pkl"
        if path.exists():
            with open(path, "rb") as fh:
                return pickle.load(fh)
        obj = build()
        self.directory.mkdir(parents=True, exist_ok=True)
        tmp = path.with_name(f"{path.name}.{os.getpid()}.tmp")
        with open(tmp, "wb") as fh:
            pickle.dump(obj, fh, protocol=pickle.HIGHEST_PROTOCOL)
        os.replace(tmp, path)
        return obj


def derive_seed(seed: int, check_id: str) -> int:
    """Stable per-check seed so checks stay independent of run order."""
    digest = hashlib.sha256(f"{seed}:{check_id}".encode()).digest()
    return int.from_bytes(digest[:4], "big")


_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def factored(n: int) -> str:
    """n as a dot-separated prime power product with superscript exponents."""
    if n < 1:
        raise ValueError("positive integers only")
    if n == 1:
        return "1"
    out = []
    d, m = 2, n
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1
    if m > 1:
        out.append((m, 1))
    return "·".join(
        str(p) + (str(e).translate(_SUP) if e > 1 else "") for p, e in out
    )


def _collapse(primes, strings: dict) -> str:
    """One string when every prime agrees, per-prime breakdown otherwise."""
    vals = [strings[r] for r in primes]
    if len(set(vals)) == 1:
        return vals[0]
    return "; ".join(f"r={r}: {strings[r]}" for r in primes)


# -- check runners ---------------------------------------------------------------
# each returns (computed, expected, notes) for the requested primes


def _check_klein_fixed_points(primes, seed, cache):
    strings = {}
    for r in primes:
        ring = gf(r)
        V = Representation(reflection_images(ring, alt5_perms()))
        W = wedge2(V)
        S = [perm_deleted_rep(ring, p) for p in klein_four_perms()]
        SW = [wedge2_mat(m) for m in S]
        strings[r] = (
            f"dimFix(V^V)={len(fixed_points(W, SW))}, "
            f"dimFix(V)={len(fixed_points(V, S))}, "
            f"dimHom(V^V,V)={len(hom_space(W, V))}, "
            f"dimHom(V,V^V)={len(hom_space(V, W))}"
        )
    computed = _collapse(primes, strings)
    expected = "dimFix(V^V)=0, dimFix(V)=1, dimHom(V^V,V)=0, dimHom(V,V^V)=0"
    notes = (
        "Klein four subgroup acting on the reflection module and its exterior "
        f"square, r in {{{', '.join(map(str, primes))}}}"
    )
    return computed, expected, notes


def _check_reflection_cohomology(primes, seed, cache):
    ring = gf(3)
    chain = stab_chain(PermDomain(5), alt5_perms(), seed=seed)
    pres = presentation_from_chain(chain)
    imgs = [perm_deleted_rep(ring, p) for p in chain.strong]
    e = ext1_dim(pres, imgs, imgs)
    h = h1_dim(pres, imgs)
    dih = [Perm.from_cycles(5, [(0, 1, 2, 3, 4)]), Perm.from_cycles(5, [(1, 4), (2, 3)])]
    sub = stab_chain(PermDomain(5), dih, seed=seed)
    acts = coset_action(PermDomain(5), alt5_perms(), sub)
    imgs6 = [p.to_matrix(ring) for p in acts]
    dims = submodule_chain_dims(ring, imgs6)
    if dims is None:
        layers = "not_a_chain"
    else:
        layers = ",".join(str(b - a) for a, b in zip(dims, dims[1:]))
    computed = f"ext1(V,V)={e}, dimH1(V)={h}, layers={layers}"
    expected = "ext1(V,V)=0, dimH1(V)=1, layers=1,4,1"
    notes = (
        f"GF(3) reflection module of the order-60 group; derivations over a "
        f"{len(pres.relators)}-relator presentation on {pres.ngens} strong "
        f"generators; induction from the dihedral subgroup of order 10 on 6 cosets"
    )
    return computed, expected, notes


def _check_theta_module(primes, seed, cache):
    strings = {}
    for r in primes:
        rep = theta_submodule_check(r)
        iso = "yes" if rep["hom_dim"] == 1 and rep["intertwiner_invertible"] else "no"
        s = f"orbit={rep['orbit_size']}, dimU={rep['span_dim']}, iso={iso}"
        if not rep["translate_sum_zero"]:
            s += ", translate_sum!=0"
        if not rep["stabilizer_fixes"]:
            s += ", stabilizer_moved_theta"
        strings[r] = s
    computed = _collapse(primes, strings)
    expected = "orbit=5, dimU=4, iso=yes"
    notes = (
        "translate sum and point-stabilizer invariance verified alongside the "
        f"displayed values, r in {{{', '.join(map(str, primes))}}}"
    )
    return computed, expected, notes


def _check_class_two_group(primes, seed, cache):
    parts = []
    note_parts = []
    for r in primes:
        grp = build_class_two_group(r)
        dom = MatDomain(grp.ring, 9)
        cert = class_certificate(dom, grp.o_r_gens, grp.group_gens, grp.member)
        cls = str(cert.upper) if cert.upper == cert.lower else f"[{cert.lower},{cert.upper}]"
        fpf = "yes" if self_centralising_check(grp, grp.five_cycle_mat) else "no"
        part = f"r={r}: |O_r(K)|={grp.certificate['o_r_order']}, class={cls}, fpf={fpf}"
        if r == 3:
            small = stab_chain(MatDomain(grp.ring, 9), grp.o_r_gens, seed=seed).order
            full = stab_chain(MatDomain(grp.ring, 9), grp.group_gens, seed=seed).order
            if small != r**12 or full != r**12 * 120:
                part += f", chain_mismatch(|O_r|={small}, |K|={full})"
            note_parts.append(
                f"r=3 stabilizer chains confirm |O_r(K)|={small} and |K|={full}"
            )
        parts.append(part)
    computed = "; ".join(parts)
    expected = "; ".join(f"r={r}: |O_r(K)|={r**12}, class=2, fpf=yes" for r in primes)
    note_parts.append(
        "order r^12 certified by the block/translation parametrization and the "
        "order-120 quotient with trivial normal r-core; class bounds from "
        "central pairwise commutators and a surviving witness; fixed-point "
        "freeness on the translation layer and the conjugation layer"
    )
    return computed, expected, "; ".join(note_parts)


def _check_product_hom(primes, seed, cache):
    strings = {}
    for r in primes:
        mm = gamma_module_map(r)
        hom = intertwiners(mm.source.images, mm.target.images)
        member = False
        if len(hom) >= 1:
            stacked = np.stack([hom[0].a.reshape(-1), mm.matrix.a.reshape(-1)])
            member = len(rref(Mat(gf(r), stacked))[1]) == 1
        strings[r] = (
            f"dimHom(VxV,V)={len(hom)}, gamma_in_hom={'yes' if member else 'no'}"
        )
    computed = _collapse(primes, strings)
    expected = "dimHom(VxV,V)=1, gamma_in_hom=yes"
    notes = (
        "equivariant maps from the tensor square onto the reflection module, "
        f"r in {{{', '.join(map(str, primes))}}}"
    )
    return computed, expected, notes


def _check_commutator_defects(primes, seed, cache):
    parts = []
    for r in primes:
        rep = hall_witt_sweep(r)
        if r == 5:
            parts.append(f"r=5: all_zero={'yes' if rep['all_defects_zero'] else 'no'}")
        else:
            ok = (
                rep["lead_pair_never_zero"]
                and rep["distinct_never_zero"]
                and not rep["all_defects_zero"]
            )
            parts.append(f"r={r}: witness_nonzero={'yes' if ok else 'no'}")
    vals_ok = True
    for r in primes:
        t = GradedTriple(r, j_active=False)
        terms = hall_witt_terms(t, (1, 1, 2))
        d = hall_witt_defect(t, (1, 1, 2))
        vals_ok &= [int(v) for v in terms[0]] == [v % r for v in (5, -5, 5, 5)]
        vals_ok &= [int(v) for v in terms[1]] == [v % r for v in (0, 5, 5, 5)]
        vals_ok &= [int(v) for v in d] == [v % r for v in (5, 0, 10, 10)]
    parts.append(f"displayed_values={'ok' if vals_ok else 'mismatch'}")
    computed = "; ".join(parts)
    exp_parts = [
        "r=5: all_zero=yes" if r == 5 else f"r={r}: witness_nonzero=yes"
        for r in primes
    ]
    exp_parts.append("displayed_values=ok")
    expected = "; ".join(exp_parts)
    notes = (
        "witness families: the 12 lead-pair and 24 fully distinct basis triples, "
        "swept over every scalar assignment with m1 != 0; triples whose third "
        "index repeats an earlier one admit cancelling scalars (already over the "
        "integers, e.g. indices (1,2,1) with scalars (1,-1,0)) and are surveyed, "
        "not asserted; displayed values are the two composite terms and their "
        "sum at unit scalars on indices (1,1,2) with the middle section inactive"
    )
    return computed, expected, notes


def _batch_pow(ring, batch: np.ndarray, k: int) -> np.ndarray:
    n = batch.shape[-1]
    out = np.broadcast_to(np.eye(n, dtype=np.int64), batch.shape).copy()
    sq = batch
    while k:
        if k & 1:
            out = bmatmul(ring, out, sq)
        k >>= 1
        if k:
            sq = bmatmul(ring, sq, sq)
    return out


def torsion25_elements(alg):
    """All algebra elements with x^25 = 1: mod-p roots first, then every lift.

    Reduction mod p is a ring map, so any 25-torsion element reduces to a
    25-torsion element mod p; scanning the p^rank residues and lifting each
    root through all p^rank increments is exhaustive."""
    r = alg.ring
    p, d = r.p, alg.rank
    base = gf(p)
    B = np.stack([b.a for b in alg.basis])
    coeffs = np.indices((p,) * d).reshape(d, -1).T
    red = np.einsum("kd,dij->kij", coeffs, B % p) % p
    eye = np.eye(alg.n, dtype=np.int64)
    roots = coeffs[(_batch_pow(base, red, 25) == eye).all(axis=(1, 2))]
    lifts = np.indices((p,) * d).reshape(d, -1).T * p
    cand = (roots[:, None, :] + lifts[None, :, :]).reshape(-1, d) % r.size
    mats = np.einsum("kd,dij->kij", cand, B) % r.size
    tors = mats[(_batch_pow(r, mats, 25) == eye).all(axis=(1, 2))]
    n5 = int((_batch_pow(r, tors, 5) == eye).all(axis=(1, 2)).sum())
    return tors, len(tors) - n5


def _check_centralizer_sylow(primes, seed, cache):
    ring = zmod(7, 2)
    a1, a2 = (perm_deleted_rep(ring, p) for p in alt5_perms())
    s = perm_deleted_rep(ring, five_cycle())
    alg = commutant([s])
    cu = unit_group_order(alg)
    T = sylow5_element(alg, 25, seed=seed)
    tors, n_order25 = torsion25_elements(alg)
    tkeys = {Mat(ring, m).key() for m in tors}
    powers = [Mat.identity(ring, 4)]
    for _ in range(24):
        powers.append(powers[-1] @ T)
    unique = (
        len(tors) == 25
        and tkeys == {m.key() for m in powers}
        and s.key() in tkeys
    )
    chain = cache.chain(
        f"chain-gl4z49-s{seed}",
        lambda: stab_chain(MatDomain(ring, 4), [a1, a2, T], seed=seed),
    )
    order = chain.order
    divides = 58800 % order == 0
    computed = (
        f"|C_K(S)|={factored(cu)}, |⟨A,T⟩|={factored(order)}, "
        f"divides |PSL₂(49)|: {'yes' if divides else 'no'}"
    )
    if not unique:
        computed += f", torsion25={len(tors)}, single_subgroup=no"
    expected = (
        "|C_K(S)|=2⁵·3·5²·7⁴, "
        "|⟨A,T⟩|=2⁴·3·5²·7⁸, "
        "divides |PSL₂(49)|: no"
    )
    notes = (
        f"commutant rank {alg.rank}; exhaustive 25-torsion: {len(tors)} elements "
        f"of order dividing 25, {n_order25} of order exactly 25, all powers of "
        f"one element, the 5-cycle image among them; 58800 mod 7^8 = "
        f"{58800 % 7**8}, so 7^8 never divides it"
    )
    return computed, expected, notes


def _check_basic_module_profiles(primes, seed, cache):
    F = gf_quadratic(7)
    gens = sl2_gens(F)
    g5 = order5_element(F)
    dims = [u_rep(j, gens).dim for j in range(7)]
    bad = []
    prof4_has_one = False
    for j in range(1, 7):
        prof = set(order5_exponents(sym_power(g5, j)))
        if j >= 3 and not {1, 2, 3, 4} <= prof:
            bad.append(j)
        if j == 4:
            prof4_has_one = 0 in prof
    profiles = "ok" if not bad and prof4_has_one else f"bad(j={bad}, U4_has_1={prof4_has_one})"
    fpf = fpf_check(n_tensor_rep(gens), kron(g5, g5.frobenius()))
    rep = decompose_tensor_report(gens)
    mults = (
        rep["mult_U0"],
        rep["mult_U2"],
        rep["mult_U2_twist"],
        rep["mult_U2_x_U2_twist"],
    )
    computed = (
        f"dims={','.join(map(str, dims))}, profiles={profiles}, "
        f"fpf={'yes' if fpf else 'no'}, dimHom(VxV,V)={rep['hom_VV_to_V']}, "
        f"mults={','.join(map(str, mults))}"
    )
    if rep["hom_V_to_VV"] != 0 or rep["summand_dims_total"] != 16:
        computed += (
            f", dimHom(V,VxV)={rep['hom_V_to_VV']}, "
            f"summand_dims={rep['summand_dims_total']}"
        )
    expected = "dims=1,2,3,4,5,6,7, profiles=ok, fpf=yes, dimHom(VxV,V)=0, mults=1,1,1,1"
    notes = (
        "symmetric powers of the natural module over GF(49); order-5 eigenvalue "
        "profiles for j >= 3 contain all four nontrivial fifth roots and the "
        "j=4 power contains 1; tensor square multiplicities against U0, U2, "
        "U2 twisted, U2 x U2 twisted"
    )
    return computed, expected, notes


def _check_descent_ext(primes, seed, cache):
    F = gf_quadratic(7)
    chain = cache.chain(
        f"chain-psl2deg50-s{seed}", lambda: psl2_chain(F, seed=seed)
    )
    pres = presentation_from_chain(chain)
    cosets = coset_enumeration(pres, (), max_cosets=1_000_000)
    gens = sl2_gens(F)
    desc, cert = descended_n_rep(gens)
    equiv = cert.check() and cert.matrix.inv() is not None
    strong = strong_gen_matrices(chain, desc.images)
    e = ext1_dim(pres, strong, strong)
    computed = (
        f"descent_dim={desc.dim}, cosets={cosets}, "
        f"scalar_ext_equiv={'yes' if equiv else 'no'}, ext1={e}"
    )
    expected = "descent_dim=4, cosets=58800, scalar_ext_equiv=yes, ext1=0"
    notes = (
        f"presentation on {pres.ngens} strong generators with "
        f"{len(pres.relators)} relators; coset enumeration over the trivial "
        "subgroup certifies the presented group order; GF(7) form produced by "
        "Galois descent with an explicit base-change certificate"
    )
    return computed, expected, notes


def _check_normalizer_sweep(primes, seed, cache):
    ring = zmod(3, 2)
    a_imgs = [perm_deleted_rep(ring, p) for p in alt5_perms()]
    k1, k2 = (perm_deleted_rep(ring, p) for p in klein_four_perms())
    S = [Mat.identity(ring, 4), k1, k2, k1 @ k2]
    N = normalizer_of_finite_subgroup(ring, 4, S)
    dom = MatDomain(ring, 4)
    order360 = 0
    candidates = 0
    for x in N:
        closure = matrix_closure(ring, a_imgs + [x], cap=361)
        if closure is None or len(closure) != 360:
            continue
        order360 += 1
        if is_perfect_small(dom, a_imgs + [x], cap=400):
            candidates += 1
    computed = f"|N|={len(N)}, alt6_candidates={candidates}"
    expected = "|N|=7776, alt6_candidates=0"
    notes = (
        f"normalizer of the Klein four subgroup inside GL(4, Z/9); adjoining "
        f"any of its elements to the order-60 group gives order 360 in "
        f"{order360} cases and a perfect group in {candidates}; an "
        "order-360 perfect group is the only way an Alt(6) overgroup could "
        "appear, so none does"
    )
    return computed, expected, notes


def _check_alt6_module(primes, seed, cache):
    ring = gf(3)
    g1 = Perm.from_cycles(6, [(0, 1, 2)])
    g2 = Perm.from_cycles(6, [(1, 2, 3, 4, 5)])
    chain = stab_chain(PermDomain(6), [g1, g2], seed=seed)
    imgs = [perm_sum_zero_mod_ones_rep(ring, p) for p in (g1, g2)]
    V = Representation(imgs)
    pres = presentation_from_chain(chain)
    strong = [perm_sum_zero_mod_ones_rep(ring, p) for p in chain.strong]
    e = ext1_dim(pres, strong, strong)
    h = len(hom_space(tensor(V, V), V))
    computed = f"|Alt(6)|={chain.order}, ext1(V,V)={e}, dimHom(VxV,V)={h}"
    expected = "|Alt(6)|=360, ext1(V,V)=0, dimHom(VxV,V)=0"
    notes = (
        "4-dimensional GF(3) module built as sum-zero vectors modulo the "
        "all-ones line in the 6-point permutation module; vanishing of both "
        "spaces forces iterated extensions to stay elementary abelian and "
        "completely reducible"
    )
    return computed, expected, notes


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    paper_anchor: str
    primes: tuple[int, ...]
    run: Callable


REGISTRY = [
    CheckSpec("lemma2.1", "Lemma 2.1", (3, 7, 11, 13), _check_klein_fixed_points),
    CheckSpec("lemma2.2", "Lemma 2.2", (3,), _check_reflection_cohomology),
    CheckSpec("lemma2.3", "Lemma 2.3", (3, 7, 11), _check_theta_module),
    CheckSpec("thm2.4", "Theorem 2.4", (3, 7, 11), _check_class_two_group),
    CheckSpec("lemma2.5", "Lemma 2.5", (3, 7, 11, 13), _check_product_hom),
    CheckSpec("sec3.hallwitt", "Section 3", (3, 5, 7, 11, 13), _check_commutator_defects),
    CheckSpec("lemma4.1", "Lemma 4.1", (7,), _check_centralizer_sylow),
    CheckSpec("lemma4.2", "Lemma 4.2", (7,), _check_basic_module_profiles),
    CheckSpec("lemma4.3", "Lemma 4.3", (7,), _check_descent_ext),
    CheckSpec("lemma4.5", "Lemma 4.5", (3,), _check_normalizer_sweep),
    CheckSpec("lemma4.6", "Lemma 4.6", (3,), _check_alt6_module),
]

REGISTRY_BY_ID = {spec.check_id: spec for spec in REGISTRY}
