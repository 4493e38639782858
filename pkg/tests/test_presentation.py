import pytest

from fpf5.groups import (
    PermDomain,
    enumerate_elements,
    is_perfect_small,
    orbit_of,
    stab_chain,
)
from fpf5.perms import Perm
from fpf5.presentation import (
    Presentation,
    canonical_cyclic,
    coset_enumeration,
    cyclic_reduce,
    format_presentation,
    free_reduce,
    invert_word,
    parse_presentation,
    presentation_from_chain,
    relators_hold,
)


def test_word_ops():
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert free_reduce(()) == ()
    assert invert_word((1, -2, 3)) == (-3, 2, -1)
    assert cyclic_reduce((2, 1, 3, -1, -2)) == (3,)
    assert canonical_cyclic((2, 1)) == canonical_cyclic((1, 2))
    assert canonical_cyclic((-1, -2)) == canonical_cyclic((1, 2))
    assert canonical_cyclic((1, -1)) == ()


def test_parse_and_format_roundtrip():
    text = """
# classical presentation
gens: a b

rel: a a
rel: b b b   # cube
rel: a b a b a b a b a b
"""
    p = parse_presentation(text)
    assert p.ngens == 2
    assert p.relators == [(1, 1), (2, 2, 2), (1, 2) * 5]
    q = parse_presentation(format_presentation(p))
    assert q.relators == p.relators
    assert q.names == ["a", "b"]
    r = parse_presentation("gens: x y\nrel: x y' x' y\n")
    assert r.relators == [(1, -2, -1, 2)]
    with pytest.raises(ValueError):
        parse_presentation("rel: a\n")
    with pytest.raises(ValueError):
        parse_presentation("gens: a\nrel: b\n")
    with pytest.raises(ValueError):
        parse_presentation("gens: a\nnonsense\n")


def classical_alt5():
    return parse_presentation(
        "gens: a b\nrel: a a\nrel: b b b\nrel: a b a b a b a b a b\n"
    )


def test_enumeration_order_two():
    p = parse_presentation("gens: a\nrel: a a\n")
    assert coset_enumeration(p) == 2


def test_enumeration_cyclic_six():
    p = parse_presentation("gens: a\nrel: a a a a a a\n")
    assert coset_enumeration(p) == 6
    assert coset_enumeration(p, subgroup=[(1, 1)]) == 2
    assert coset_enumeration(p, subgroup=[(1, 1, 1)]) == 3


def test_enumeration_classical_alt5():
    p = classical_alt5()
    assert coset_enumeration(p) == 60
    assert coset_enumeration(p, subgroup=[(1,)]) == 30
    assert coset_enumeration(p, subgroup=[(2,)]) == 20
    assert coset_enumeration(p, subgroup=[(1, 2)]) == 12
    # the relators really are satisfied by permutations generating a group of order 60
    a = Perm.from_cycles(5, [(0, 1), (2, 3)])
    b = Perm.from_cycles(5, [(0, 2, 4)])
    dom = PermDomain(5)
    assert relators_hold(p, [a, b], dom)
    assert stab_chain(dom, [a, b], seed=3).order == 60


def test_enumeration_free_group_hits_cap():
    p = Presentation(2, [])
    assert coset_enumeration(p, max_cosets=300) is None


def test_presentation_of_trivial_chain():
    dom = PermDomain(3)
    chain = stab_chain(dom, [Perm.identity(3)], seed=0)
    pres = presentation_from_chain(chain)
    assert pres.ngens == 0
    assert pres.relators == []
    assert coset_enumeration(pres) == 1


def test_presentation_of_order_two_chain():
    dom = PermDomain(2)
    chain = stab_chain(dom, [Perm.from_cycles(2, [(0, 1)])], seed=0)
    pres = presentation_from_chain(chain)
    assert pres.ngens == 1
    assert pres.relators == [(1, 1)]
    assert coset_enumeration(pres) == 2


@pytest.mark.parametrize(
    "degree,cycles,order",
    [
        (5, [[(0, 1)], [(0, 1, 2, 3, 4)]], 120),
        (5, [[(0, 1, 2)], [(0, 1, 2, 3, 4)]], 60),
        (8, [[(0, 1, 2, 3, 4, 5, 6)], [(0, 7), (1, 6), (2, 3), (4, 5)]], 168),
    ],
)
def test_chain_presentation_enumerates_to_group_order(degree, cycles, order):
    dom = PermDomain(degree)
    gens = [Perm.from_cycles(degree, c) for c in cycles]
    chain = stab_chain(dom, gens, seed=7)
    assert chain.order == order
    pres = presentation_from_chain(chain)
    assert relators_hold(pres, chain.strong, dom)
    assert coset_enumeration(pres) == order


def test_enumerate_elements_small_groups():
    dom = PermDomain(5)
    alt5 = [Perm.from_cycles(5, [(0, 1, 2)]), Perm.from_cycles(5, [(0, 1, 2, 3, 4)])]
    assert len(enumerate_elements(dom, alt5)) == 60
    klein = [
        Perm.from_cycles(5, [(1, 2), (3, 4)]),
        Perm.from_cycles(5, [(1, 3), (2, 4)]),
    ]
    elems = len(enumerate_elements(dom, klein))
    assert elems == 4
    with pytest.raises(RuntimeError):
        enumerate_elements(dom, alt5, cap=59)


def test_is_perfect_small():
    dom = PermDomain(5)
    alt5 = [Perm.from_cycles(5, [(0, 1, 2)]), Perm.from_cycles(5, [(0, 1, 2, 3, 4)])]
    sym5 = [Perm.from_cycles(5, [(0, 1)]), Perm.from_cycles(5, [(0, 1, 2, 3, 4)])]
    assert is_perfect_small(dom, alt5)
    assert not is_perfect_small(dom, sym5)
    assert not is_perfect_small(PermDomain(6), [Perm.from_cycles(6, [(0, 1, 2, 3, 4, 5)])])


def test_orbit_of_with_schreier_vector():
    dom = PermDomain(5)
    gens = [Perm.from_cycles(5, [(0, 1, 2)]), Perm.from_cycles(5, [(0, 1, 2, 3, 4)])]
    pts, par, lab = orbit_of(dom, gens, 1)
    assert sorted(pts) == [0, 1, 2, 3, 4]
    assert par[0] == -1 and lab[0] == -1
    for i in range(1, len(pts)):
        assert dom.act(gens[lab[i]], pts[par[i]]) == pts[i]
