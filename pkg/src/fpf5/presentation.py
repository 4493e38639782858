"""Presentations from verified stabilizer chains, and coset enumeration.

Words are tuples of nonzero ints: +k is generator k (1-based), -k its inverse.
A chain presentation is on the strong generators: for every level, every
Schreier generator of the orbit is rewritten through the deeper levels, which
yields a relator.  The resulting abstract group maps onto the concrete one
(relators are checked by evaluation) and coset enumeration over the trivial
subgroup certifies the order, so equality is machine-checked from both sides.

Coset enumeration is plain HLT with a configurable table cap, run in passes
until a full pass changes nothing; the final pass re-scans every relator at
every live coset, so a returned index never rests on a stale scan.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import StabChain


def free_reduce(w) -> tuple[int, ...]:
    out: list[int] = []
    for s in w:
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def invert_word(w) -> tuple[int, ...]:
    return tuple(-s for s in reversed(w))


def cyclic_reduce(w) -> tuple[int, ...]:
    w = list(free_reduce(w))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def canonical_cyclic(w) -> tuple[int, ...]:
    """Least rotation of the cyclic reduction of w or of its inverse.

    Symbols are ordered 1 < 1' < 2 < 2' < ... so plain generators win ties."""
    w = cyclic_reduce(w)
    if not w:
        return w

    def key(word):
        return tuple(2 * abs(s) + (s < 0) for s in word)

    best = None
    for cand in (w, invert_word(w)):
        for r in range(len(cand)):
            rot = cand[r:] + cand[:r]
            if best is None or key(rot) < key(best):
                best = rot
    return best


def default_names(n: int) -> list[str]:
    return [chr(ord("a") + i) if i < 26 else f"g{i + 1}" for i in range(n)]


@dataclass
class Presentation:
    ngens: int
    relators: list[tuple[int, ...]]
    names: list[str] | None = None

    def gen_names(self) -> list[str]:
        return self.names if self.names is not None else default_names(self.ngens)


def presentation_from_chain(chain: StabChain) -> Presentation:
    dom = chain.domain
    seen: set[tuple[int, ...]] = set()
    rels: list[tuple[int, ...]] = []
    for l, lv in enumerate(chain.levels):
        pts, par, dirs = lv.arrays()
        words: list[tuple[int, ...] | None] = [None] * lv.size

        def w_of(idx: int) -> tuple[int, ...]:
            if words[idx] is None:
                words[idx] = tuple(chain.path_symbols(l, idx))
            return words[idx]

        for k in lv.active:
            s = chain.strong[k]
            for idx in range(lv.size):
                sa = dom.act(s, int(pts[idx]))
                sidx = lv.index(sa)
                if par[sidx] == idx and dirs[sidx] == 2 * k:
                    continue
                if par[idx] == sidx and dirs[idx] == 2 * k + 1:
                    continue
                g = dom.mul(chain.u_inv(l, sidx), dom.mul(s, chain.u(l, idx)))
                word = invert_word(w_of(sidx)) + (k + 1,) + w_of(idx)
                if not dom.is_identity(g):
                    factors = chain.sift_factors(g, l + 1)
                    assert factors is not None, "chain not closed"
                    tail: list[int] = []
                    for fl, fidx in factors:
                        if fidx:
                            tail.extend(chain.path_symbols(fl, fidx))
                    word = word + invert_word(tail)
                rel = canonical_cyclic(word)
                if rel and rel not in seen:
                    seen.add(rel)
                    rels.append(rel)
    return Presentation(len(chain.strong), rels)


def relators_hold(pres: Presentation, images, domain) -> bool:
    for rel in pres.relators:
        e = domain.identity()
        for s in rel:
            g = images[abs(s) - 1]
            e = domain.mul(e, g if s > 0 else domain.inv(g))
        if not domain.is_identity(e):
            return False
    return True


def format_presentation(pres: Presentation) -> str:
    names = pres.gen_names()
    lines = ["gens: " + " ".join(names)]
    for rel in pres.relators:
        toks = [names[s - 1] if s > 0 else names[-s - 1] + "'" for s in rel]
        lines.append("rel: " + " ".join(toks))
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    names: list[str] | None = None
    rels: list[tuple[int, ...]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens:"):
            if names is not None:
                raise ValueError("duplicate gens line")
            names = line[5:].split()
        elif line.startswith("rel:"):
            if names is None:
                raise ValueError("rel before gens")
            word = []
            for t in line[4:].split():
                inv = t.endswith("'")
                nm = t[:-1] if inv else t
                if nm not in names:
                    raise ValueError(f"unknown generator {nm!r}")
                i = names.index(nm) + 1
                word.append(-i if inv else i)
            if word:
                rels.append(tuple(word))
        else:
            raise ValueError(f"unparsable line {raw!r}")
    if names is None:
        raise ValueError("missing gens line")
    return Presentation(len(names), rels, names)


# -- Todd-Coxeter ------------------------------------------------------------------
#
# Table entries are raw coset numbers; dead cosets are resolved through the
# union-find on every read, so stale entries are harmless.  state holds
# [live count, next free coset, changed flag].


def _find(rep, x):
    while rep[x] != x:
        rep[x] = rep[rep[x]]
        x = rep[x]
    return x


def _coincide(tab, rep, qa, qb, a, b, state):
    qn = 0
    qa[qn] = a
    qb[qn] = b
    qn += 1
    ncols = tab.shape[1]
    while qn > 0:
        qn -= 1
        x = _find(rep, qa[qn])
        y = _find(rep, qb[qn])
        if x == y:
            continue
        if x > y:
            t = x
            x = y
            y = t
        rep[y] = x
        state[0] -= 1
        for s in range(ncols):
            d = tab[y, s]
            if d < 0:
                continue
            tab[y, s] = -1
            df = _find(rep, d)
            e = tab[x, s]
            if e < 0:
                tab[x, s] = df
                eb = tab[df, s ^ 1]
                if eb < 0:
                    tab[df, s ^ 1] = x
                else:
                    ebf = _find(rep, eb)
                    if ebf != x:
                        qa[qn] = ebf
                        qb[qn] = x
                        qn += 1
            else:
                ef = _find(rep, e)
                if ef != df:
                    qa[qn] = ef
                    qb[qn] = df
                    qn += 1


def _scan_and_fill(tab, rep, qa, qb, c, word, state, max_cosets):
    i = 0
    j = len(word) - 1
    f = c
    b = c
    while True:
        while i <= j:
            d = tab[f, word[i]]
            if d < 0:
                break
            f = _find(rep, d)
            i += 1
        if i > j:
            if f != b:
                state[2] = 1
                _coincide(tab, rep, qa, qb, f, b, state)
            return 0
        while j >= i:
            d = tab[b, word[j] ^ 1]
            if d < 0:
                break
            b = _find(rep, d)
            j -= 1
        if j < i:
            state[2] = 1
            _coincide(tab, rep, qa, qb, f, b, state)
            return 0
        if j == i:
            tab[f, word[i]] = b
            tab[b, word[i] ^ 1] = f
            state[2] = 1
            return 0
        if state[1] >= max_cosets:
            return -1
        nc = state[1]
        state[1] += 1
        state[0] += 1
        state[2] = 1
        tab[f, word[i]] = nc
        tab[nc, word[i] ^ 1] = f


def _tc_main(rel_flat, rel_off, sub_flat, sub_off, ncols, max_cosets):
    tab = np.full((max_cosets, ncols), -1, dtype=np.int32)
    rep = np.arange(max_cosets, dtype=np.int32)
    qcap = max_cosets * ncols + 8
    qa = np.empty(qcap, dtype=np.int32)
    qb = np.empty(qcap, dtype=np.int32)
    state = np.zeros(3, dtype=np.int64)
    state[0] = 1
    state[1] = 1
    while True:
        state[2] = 0
        for r in range(len(sub_off) - 1):
            w = sub_flat[sub_off[r] : sub_off[r + 1]]
            if len(w) == 0:
                continue
            c0 = _find(rep, 0)
            if _scan_and_fill(tab, rep, qa, qb, c0, w, state, max_cosets) < 0:
                return -1
        c = 0
        while c < state[1]:
            if _find(rep, c) == c:
                alive = True
                for r in range(len(rel_off) - 1):
                    w = rel_flat[rel_off[r] : rel_off[r + 1]]
                    if len(w) == 0:
                        continue
                    if _scan_and_fill(tab, rep, qa, qb, c, w, state, max_cosets) < 0:
                        return -1
                    if _find(rep, c) != c:
                        alive = False
                        break
                if alive:
                    # complete the row, so generators missing from every
                    # relator still get their columns built
                    for s in range(ncols):
                        if tab[c, s] < 0:
                            if state[1] >= max_cosets:
                                return -1
                            nc = state[1]
                            state[1] += 1
                            state[0] += 1
                            state[2] = 1
                            tab[c, s] = nc
                            tab[nc, s ^ 1] = c
            c += 1
        if state[2] == 0:
            return state[0]


try:  # pragma: no cover
    from numba import njit

    _find = njit(cache=True)(_find)
    _coincide = njit(cache=True)(_coincide)
    _scan_and_fill = njit(cache=True)(_scan_and_fill)
    _tc_main = njit(cache=True)(_tc_main)
except ImportError:  # pragma: no cover
    pass


def _encode_words(words, ngens):
    flat: list[int] = []
    off = [0]
    for w in words:
        for s in w:
            if s == 0 or abs(s) > ngens:
                raise ValueError(f"symbol {s} out of range")
            flat.append(2 * (abs(s) - 1) + (1 if s < 0 else 0))
        off.append(len(flat))
    return np.asarray(flat, dtype=np.int32), np.asarray(off, dtype=np.int32)


def coset_enumeration(pres: Presentation, subgroup=(), max_cosets: int = 200_000) -> int | None:
    """Index of the subgroup generated by the given words, or None at the cap."""
    if pres.ngens == 0:
        return 1
    rels = [cyclic_reduce(r) for r in pres.relators]
    # short relators first closes cosets sooner and shrinks the dead weight
    rels = sorted({r for r in rels if r}, key=lambda r: (len(r), r))
    rel_flat, rel_off = _encode_words(rels, pres.ngens)
    sub_flat, sub_off = _encode_words([free_reduce(w) for w in subgroup], pres.ngens)
    n = _tc_main(rel_flat, rel_off, sub_flat, sub_off, 2 * pres.ngens, max_cosets)
    return None if n < 0 else int(n)
