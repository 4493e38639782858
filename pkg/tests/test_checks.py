import pytest

from fpf5.checks import (
    REGISTRY,
    REGISTRY_BY_ID,
    ChainCache,
    derive_seed,
    factored,
)
from fpf5.groups import PermDomain, stab_chain
from fpf5.perms import Perm


def test_registry_order_and_anchors():
    ids = [s.check_id for s in REGISTRY]
    assert ids == [
        "lemma2.1",
        "lemma2.2",
        "lemma2.3",
        "thm2.4",
        "lemma2.5",
        "sec3.hallwitt",
        "lemma4.1",
        "lemma4.2",
        "lemma4.3",
        "lemma4.5",
        "lemma4.6",
    ]
    anchors = [s.paper_anchor for s in REGISTRY]
    assert anchors == [
        "Lemma 2.1",
        "Lemma 2.2",
        "Lemma 2.3",
        "Theorem 2.4",
        "Lemma 2.5",
        "Section 3",
        "Lemma 4.1",
        "Lemma 4.2",
        "Lemma 4.3",
        "Lemma 4.5",
        "Lemma 4.6",
    ]
    assert set(REGISTRY_BY_ID) == set(ids)


def test_derive_seed_stable_and_distinct():
    a = derive_seed(42, "lemma2.1")
    assert a == derive_seed(42, "lemma2.1")
    assert a != derive_seed(42, "lemma2.2")
    assert a != derive_seed(43, "lemma2.1")
    assert 0 <= a < 2**32


def test_factored_formatting():
    assert factored(1) == "1"
    assert factored(58800) == "2⁴·3·5²·7²"
    assert factored(5762400) == "2⁵·3·5²·7⁴"
    assert factored(6917761200) == "2⁴·3·5²·7⁸"
    assert factored(7) == "7"
    with pytest.raises(ValueError):
        factored(0)


def run_check(check_id, primes=None, seed=0):
    spec = REGISTRY_BY_ID[check_id]
    eff = primes if primes is not None else spec.primes
    return spec.run(eff, derive_seed(seed, check_id), ChainCache(None))


def test_klein_check_single_prime():
    computed, expected, notes = run_check("lemma2.1", (3,))
    assert computed == expected
    assert "r in {3}" in notes


def test_theta_check_collapses_primes():
    computed, expected, _ = run_check("lemma2.3", (3, 7))
    assert computed == expected == "orbit=5, dimU=4, iso=yes"


def test_product_hom_check():
    computed, expected, _ = run_check("lemma2.5", (7,))
    assert computed == expected == "dimHom(VxV,V)=1, gamma_in_hom=yes"


def test_defect_check_mixed_primes():
    computed, expected, _ = run_check("sec3.hallwitt", (3, 5))
    assert computed == expected
    assert computed == (
        "r=3: witness_nonzero=yes; r=5: all_zero=yes; displayed_values=ok"
    )


def test_alt6_check():
    computed, expected, _ = run_check("lemma4.6")
    assert computed == expected == "|Alt(6)|=360, ext1(V,V)=0, dimHom(VxV,V)=0"


def test_chain_cache_roundtrip(tmp_path):
    cache = ChainCache(str(tmp_path))
    calls = []

    def build():
        calls.append(1)
        return stab_chain(PermDomain(4), [Perm.from_cycles(4, [(0, 1, 2, 3)])])

    a = cache.chain("tiny", build)
    b = cache.chain("tiny", build)
    assert len(calls) == 1
    assert a.order == b.order == 4
    assert (tmp_path / "tiny.pkl").exists()


def test_chain_cache_disabled():
    cache = ChainCache(None)
    calls = []

    def build():
        calls.append(1)
        return 7

    assert cache.chain("x", build) == 7
    assert cache.chain("x", build) == 7
    assert len(calls) == 2
