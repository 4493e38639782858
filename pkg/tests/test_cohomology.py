import numpy as np
import pytest

from fpf5.cohomology import derivation_space, ext1_dim, h1_dim
from fpf5.groups import PermDomain, stab_chain
from fpf5.matrix import Mat, nullspace, rank
from fpf5.perms import Perm
from fpf5.presentation import presentation_from_chain
from fpf5.reps import fixed_subspace, hom_rep, perm_deleted_rep
from fpf5.ring import gf


def bfs_with_images(domain, gens, mats, ring):
    idn = domain.identity()
    dim = mats[0].a.shape[0]
    elems = [idn]
    ims = [Mat.identity(ring, dim)]
    seen = {domain.key(idn): 0}
    i = 0
    while i < len(elems):
        for g, m in zip(gens, mats):
            h = domain.mul(elems[i], g)
            k = domain.key(h)
            if k not in seen:
                seen[k] = len(elems)
                elems.append(h)
                ims.append(ims[i] @ m)
        i += 1
    return elems, ims, seen


def brute_h1(domain, gens, mats, ring):
    """Cocycle condition solved on the full multiplication table; no
    presentation involved, so this is an independent oracle."""
    elems, ims, seen = bfs_with_images(domain, gens, mats, ring)
    n = len(elems)
    dim = mats[0].a.shape[0]
    rows = []
    eye = np.eye(dim, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            t = seen[domain.key(domain.mul(elems[i], elems[j]))]
            blk = np.zeros((dim, n * dim), dtype=np.int64)
            blk[:, t * dim : (t + 1) * dim] += eye
            blk[:, i * dim : (i + 1) * dim] -= eye
            blk[:, j * dim : (j + 1) * dim] -= ims[i].a
            rows.append(blk)
    big = Mat(ring, np.concatenate(rows, axis=0))
    z1 = n * dim - rank(big)
    b1 = dim - len(fixed_subspace(mats))
    return z1 - b1


def chain_and_pres(degree, cycles, seed=5):
    dom = PermDomain(degree)
    gens = [Perm.from_cycles(degree, c) for c in cycles]
    chain = stab_chain(dom, gens, seed=seed)
    return dom, chain, presentation_from_chain(chain)


def sign_images(ring, perms):
    return [Mat(ring, [[p.sign()]]) for p in perms]


def perm_mat_images(ring, perms):
    return [p.to_matrix(ring) for p in perms]


def test_h1_cyclic_three_trivial_module():
    dom, chain, pres = chain_and_pres(3, [[(0, 1, 2)]])
    images = [Mat.identity(gf(3), 1) for _ in chain.strong]
    assert h1_dim(pres, images) == 1
    assert brute_h1(dom, chain.strong, images, gf(3)) == 1


def test_h1_order_two_sign_module():
    dom, chain, pres = chain_and_pres(2, [[(0, 1)]])
    images = sign_images(gf(3), chain.strong)
    assert h1_dim(pres, images) == 0
    assert brute_h1(dom, chain.strong, images, gf(3)) == 0


def test_h1_klein_four_trivial_gf2():
    dom, chain, pres = chain_and_pres(4, [[(0, 1), (2, 3)], [(0, 2), (1, 3)]])
    assert chain.order == 4
    images = [Mat.identity(gf(2), 1) for _ in chain.strong]
    assert h1_dim(pres, images) == 2
    assert brute_h1(dom, chain.strong, images, gf(2)) == 2


def test_h1_sym3_sign_mod_three():
    dom, chain, pres = chain_and_pres(3, [[(0, 1)], [(0, 1, 2)]])
    assert chain.order == 6
    images = sign_images(gf(3), chain.strong)
    got = h1_dim(pres, images)
    assert got == brute_h1(dom, chain.strong, images, gf(3))
    assert got == 1


def test_h1_alt4_trivial_mod_three():
    dom, chain, pres = chain_and_pres(4, [[(0, 1, 2)], [(0, 1), (2, 3)]])
    assert chain.order == 12
    images = [Mat.identity(gf(3), 1) for _ in chain.strong]
    got = h1_dim(pres, images)
    assert got == brute_h1(dom, chain.strong, images, gf(3))
    assert got == 1


def test_h1_matches_brute_on_permutation_modules():
    cases = [
        (3, [[(0, 1)], [(0, 1, 2)]], gf(3)),
        (3, [[(0, 1)], [(0, 1, 2)]], gf(2)),
        (4, [[(0, 1, 2)], [(0, 1), (2, 3)]], gf(2)),
        (4, [[(0, 1, 2, 3)]], gf(2)),
    ]
    for degree, cycles, ring in cases:
        dom, chain, pres = chain_and_pres(degree, cycles)
        images = perm_mat_images(ring, chain.strong)
        assert h1_dim(pres, images) == brute_h1(dom, chain.strong, images, ring)


def test_h1_deleted_module_matches_brute_mod_two():
    dom, chain, pres = chain_and_pres(4, [[(0, 1, 2)], [(0, 1), (2, 3)]])
    ring = gf(2)
    images = [perm_deleted_rep(ring, p) for p in chain.strong]
    assert h1_dim(pres, images) == brute_h1(dom, chain.strong, images, ring)


def test_ext1_matches_brute_hom_module():
    dom, chain, pres = chain_and_pres(4, [[(0, 1, 2)], [(0, 1), (2, 3)]])
    ring = gf(2)
    V = [perm_deleted_rep(ring, p) for p in chain.strong]
    hom = [hom_rep(v, v) for v in V]
    assert ext1_dim(pres, V, V) == brute_h1(dom, chain.strong, hom, ring)


def test_h1_coprime_characteristic_vanishes():
    dom, chain, pres = chain_and_pres(5, [[(0, 1)], [(0, 1, 2, 3, 4)]])
    assert chain.order == 120
    ring = gf(7)
    V = [perm_deleted_rep(ring, p) for p in chain.strong]
    assert h1_dim(pres, V) == 0
    assert ext1_dim(pres, V, V) == 0


def test_derivation_space_shape_and_errors():
    dom, chain, pres = chain_and_pres(3, [[(0, 1, 2)]])
    images = [Mat.identity(gf(3), 1) for _ in chain.strong]
    ds = derivation_space(pres, images)
    assert ds.z1_dim == ds.h1 + ds.inner_dim
    for coc in ds.cocycles:
        assert len(coc) == pres.ngens
        assert all(v.shape == (1,) for v in coc)
    bad = [Mat(gf(7), [[3]]) for _ in chain.strong]
    with pytest.raises(ValueError):
        derivation_space(pres, bad)
