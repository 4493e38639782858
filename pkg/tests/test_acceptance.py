"""Acceptance gate: twelve exact-value criteria, one verdict line each.

Every comparison below is an integer, a dimension, or a boolean; nothing is
approximate.  Each criterion times itself and fails if it blows its budget.
Run with -s to see the verdict lines as they happen."""

from __future__ import annotations

import json
import resource
import time

import numpy as np

from fpf5 import cli
from fpf5.centralizers import (
    commutant,
    normalizer_of_finite_subgroup,
    sylow5_element,
    unit_group_order,
)
from fpf5.checks import torsion25_elements
from fpf5.cohomology import ext1_dim, h1_dim
from fpf5.constructions import (
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
from fpf5.groups import (
    MatDomain,
    PermDomain,
    coset_action,
    is_perfect_small,
    matrix_closure,
    stab_chain,
)
from fpf5.matrix import Mat, kron, rref
from fpf5.perms import Perm
from fpf5.presentation import coset_enumeration, presentation_from_chain
from fpf5.psl2 import (
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
from fpf5.reps import (
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
from fpf5.report import strip_timing
from fpf5.ring import gf, gf_quadratic, zmod


class criterion:
    """Context manager printing one pass/fail line and enforcing a budget."""

    def __init__(self, n: int, budget: float | None = None):
        self.n, self.budget = n, budget

    def __enter__(self):
        self.t0 = time.monotonic()
        return self

    def __exit__(self, etype, evalue, tb):
        elapsed = time.monotonic() - self.t0
        over = self.budget is not None and elapsed > self.budget
        verdict = "pass" if etype is None and not over else "fail"
        print(f"criterion {self.n:02d}: {verdict} ({elapsed:.2f}s)")
        if etype is None and over:
            raise AssertionError(
                f"criterion {self.n} took {elapsed:.1f}s, budget {self.budget}s"
            )
        return False


def test_criterion_01_klein_fixed_points():
    with criterion(1, budget=1.0):
        for r in (3, 7, 11, 13):
            ring = gf(r)
            V = Representation(reflection_images(ring, alt5_perms()))
            W = wedge2(V)
            S = [perm_deleted_rep(ring, p) for p in klein_four_perms()]
            SW = [wedge2_mat(m) for m in S]
            assert len(fixed_points(W, SW)) == 0
            assert len(fixed_points(V, S)) == 1
            assert len(hom_space(W, V)) == 0
            assert len(hom_space(V, W)) == 0


def test_criterion_02_theta_submodule():
    with criterion(2, budget=1.0):
        for r in (3, 7, 11):
            rep = theta_submodule_check(r)
            assert rep["orbit_size"] == 5
            assert rep["span_dim"] == 4
            assert rep["hom_dim"] == 1
            assert rep["intertwiner_invertible"] is True
            assert rep["translate_sum_zero"] is True
            assert rep["stabilizer_fixes"] is True


def test_criterion_03_product_hom_line():
    with criterion(3, budget=1.0):
        for r in (3, 7, 11, 13):
            mm = gamma_module_map(r)
            assert mm.check()
            hom = intertwiners(mm.source.images, mm.target.images)
            assert len(hom) == 1
            stacked = np.stack([hom[0].a.reshape(-1), mm.matrix.a.reshape(-1)])
            assert len(rref(Mat(gf(r), stacked))[1]) == 1


def test_criterion_04_reflection_cohomology():
    with criterion(4, budget=30.0):
        ring = gf(3)
        chain = stab_chain(PermDomain(5), alt5_perms(), seed=0)
        assert chain.order == 60
        pres = presentation_from_chain(chain)
        imgs = [perm_deleted_rep(ring, p) for p in chain.strong]
        assert ext1_dim(pres, imgs, imgs) == 0
        assert h1_dim(pres, imgs) == 1
        dih = [
            Perm.from_cycles(5, [(0, 1, 2, 3, 4)]),
            Perm.from_cycles(5, [(1, 4), (2, 3)]),
        ]
        sub = stab_chain(PermDomain(5), dih, seed=0)
        assert sub.order == 10
        acts = coset_action(PermDomain(5), alt5_perms(), sub)
        assert acts[0].degree == 6
        imgs6 = [p.to_matrix(ring) for p in acts]
        # uniserial: the only submodule dimensions are 0, 1, 5, 6
        assert submodule_chain_dims(ring, imgs6) == [0, 1, 5, 6]


def test_criterion_05_class_two_group():
    with criterion(5):
        for r in (3, 7, 11):
            t0 = time.monotonic()
            grp = build_class_two_group(r)
            assert grp.certificate["o_r_order"] == r**12
            assert grp.certificate["order"] == r**12 * 120
            assert grp.certificate["quotient_core_trivial"] is True
            dom = MatDomain(grp.ring, 9)
            cert = class_certificate(dom, grp.o_r_gens, grp.group_gens, grp.member)
            assert cert.upper == 2 and cert.lower == 2
            assert cert.witness is not None
            assert cert.exact_class == 2
            assert self_centralising_check(grp, grp.five_cycle_mat) is True
            assert time.monotonic() - t0 < 30.0


def test_criterion_06_commutator_defects():
    with criterion(6, budget=10.0):
        for r in (3, 7, 11, 13):
            rep = hall_witt_sweep(r)
            assert rep["scalar_assignments"] == (r - 1) * r * r
            assert rep["triple_counts"] == {
                "lead_pair": 12,
                "distinct": 24,
                "overlapping": 28,
            }
            # witness triples: nonzero defect for every assignment with m1 != 0
            assert rep["zero_defects"]["lead_pair"] == 0
            assert rep["zero_defects"]["distinct"] == 0
            assert rep["lead_pair_never_zero"] and rep["distinct_never_zero"]
            assert not rep["all_defects_zero"]
        assert hall_witt_sweep(5)["all_defects_zero"] is True
        for r in (3, 5, 7, 11, 13):
            t = GradedTriple(r, j_active=False)
            terms = hall_witt_terms(t, (1, 1, 2))
            assert [int(v) for v in terms[0]] == [v % r for v in (5, -5, 5, 5)]
            assert [int(v) for v in terms[1]] == [v % r for v in (0, 5, 5, 5)]
            assert not terms[2].any()
            d = hall_witt_defect(t, (1, 1, 2))
            assert [int(v) for v in d] == [v % r for v in (5, 0, 10, 10)]


def test_criterion_07_centralizer_and_sylow():
    with criterion(7, budget=600.0):
        ring = zmod(7, 2)
        a1, a2 = (perm_deleted_rep(ring, p) for p in alt5_perms())
        s = perm_deleted_rep(ring, five_cycle())
        alg = commutant([s])
        assert unit_group_order(alg) == 5762400
        assert 5762400 == 2**5 * 3 * 5**2 * 7**4
        T = sylow5_element(alg, 25, seed=0)
        powers = [Mat.identity(ring, 4)]
        for _ in range(25):
            powers.append(powers[-1] @ T)
        assert not powers[5].is_identity() and powers[25].is_identity()
        tors, n_order25 = torsion25_elements(alg)
        assert len(tors) == 25 and n_order25 == 20
        tkeys = {Mat(ring, m).key() for m in tors}
        assert tkeys == {m.key() for m in powers[:25]}
        assert s.key() in tkeys
        chain = stab_chain(MatDomain(ring, 4), [a1, a2, T], seed=0)
        assert chain.order == 2**4 * 3 * 5**2 * 7**8 == 6917761200
        assert 58800 % 7**8 != 0
        assert resource.getrusage(resource.RUSAGE_SELF).ru_maxrss < 1024**2


def test_criterion_08_basic_module_profiles():
    with criterion(8, budget=30.0):
        F = gf_quadratic(7)
        gens = sl2_gens(F)
        g5 = order5_element(F)
        assert [u_rep(j, gens).dim for j in range(7)] == [1, 2, 3, 4, 5, 6, 7]
        for j in range(1, 7):
            prof = set(order5_exponents(sym_power(g5, j)))
            if j >= 3:
                assert {1, 2, 3, 4} <= prof
            if j == 4:
                assert 0 in prof
        assert fpf_check(n_tensor_rep(gens), kron(g5, g5.frobenius())) is True
        rep = decompose_tensor_report(gens)
        assert rep["hom_VV_to_V"] == 0
        assert rep["mult_U0"] == 1
        assert rep["mult_U2"] == 1
        assert rep["mult_U2_twist"] == 1
        assert rep["mult_U2_x_U2_twist"] == 1
        assert rep["summand_dims_total"] == 16


def test_criterion_09_descent_and_ext():
    with criterion(9, budget=900.0):
        F = gf_quadratic(7)
        chain = psl2_chain(F, seed=0)
        assert chain.order == 58800
        pres = presentation_from_chain(chain)
        assert coset_enumeration(pres, (), max_cosets=1_000_000) == 58800
        desc, cert = descended_n_rep(sl2_gens(F))
        assert desc.dim == 4
        assert desc.ring.size == 7 and desc.ring.is_field
        assert cert.check() and cert.matrix.inv() is not None
        strong = strong_gen_matrices(chain, desc.images)
        assert ext1_dim(pres, strong, strong) == 0


def test_criterion_10_normalizer_sweep():
    with criterion(10, budget=900.0):
        ring = zmod(3, 2)
        a_imgs = [perm_deleted_rep(ring, p) for p in alt5_perms()]
        k1, k2 = (perm_deleted_rep(ring, p) for p in klein_four_perms())
        S = [Mat.identity(ring, 4), k1, k2, k1 @ k2]
        N = normalizer_of_finite_subgroup(ring, 4, S)
        assert len(N) == 7776
        dom = MatDomain(ring, 4)
        candidates = 0
        for x in N:
            closure = matrix_closure(ring, a_imgs + [x], cap=361)
            if closure is None or len(closure) != 360:
                continue
            if is_perfect_small(dom, a_imgs + [x], cap=400):
                candidates += 1
        assert candidates == 0


def test_criterion_11_alt6_module():
    with criterion(11, budget=300.0):
        ring = gf(3)
        g1 = Perm.from_cycles(6, [(0, 1, 2)])
        g2 = Perm.from_cycles(6, [(1, 2, 3, 4, 5)])
        chain = stab_chain(PermDomain(6), [g1, g2], seed=0)
        assert chain.order == 360
        imgs = [perm_sum_zero_mod_ones_rep(ring, p) for p in (g1, g2)]
        V = Representation(imgs)
        assert V.dim == 4
        pres = presentation_from_chain(chain)
        strong = [perm_sum_zero_mod_ones_rep(ring, p) for p in chain.strong]
        assert ext1_dim(pres, strong, strong) == 0
        assert len(hom_space(tensor(V, V), V)) == 0


def test_criterion_12_deterministic_runs(tmp_path):
    with criterion(12):
        out1, out2 = tmp_path / "run1.json", tmp_path / "run2.json"
        cache = str(tmp_path / "cache")
        base = ["all", "--seed", "42", "--cache", cache]
        assert cli.main(base + ["--json", str(out1)]) == 0
        assert cli.main(base + ["--json", str(out2)]) == 0
        assert strip_timing(out1.read_text()) == strip_timing(out2.read_text())
        doc = json.loads(out1.read_text())
        assert doc["seed"] == 42
        assert len(doc["results"]) == 11
        assert all(r["status"] == "pass" for r in doc["results"])
