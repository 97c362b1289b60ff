"""The weak order on a finite Coxeter group."""

from __future__ import annotations

import os
from functools import lru_cache

from .coxeter import (CoxeterDiagram, GroupElement, RootModel, Word, build_diagram,
                      generate_roots, iter_bits)
from .errors import CodecError, SizeCapExceeded
from .lattice import JoinIrreducible, Lattice

DEFAULT_CAP = 10 ** 6


def size_cap() -> int:
    return int(os.environ.get("COXLAT_SIZE_CAP", DEFAULT_CAP))


class WeakOrderLattice(Lattice):
    """Right weak order: w is covered by ws when l(ws) > l(w); covers are labelled by s."""

    def __init__(self, diagram: CoxeterDiagram, model: RootModel, invs, words, up):
        self.diagram = diagram
        self.model = model
        self.invs = invs
        self.words = words
        self.index_of_inv = {inv: i for i, inv in enumerate(invs)}
        super().__init__(up, [diagram.word_str(w) for w in words])

    @property
    def label(self) -> str:
        return self.diagram.label

    def element(self, i: int) -> GroupElement:
        return GroupElement(self.invs[i], self.words[i])

    def length(self, i: int) -> int:
        return len(self.words[i])

    def index_of_word(self, word) -> int:
        if isinstance(word, str) or (word and isinstance(word[0], str)):
            word = self.diagram.parse_word(word)
        return self.index_of_inv[self.model.inv_of_word(tuple(word))]

    def index_of_reduced(self, word) -> int:
        """Like index_of_word, but insist that the word is reduced."""
        w = self.diagram.parse_word(word) if isinstance(word, str) else tuple(word)
        i = self.index_of_word(w)
        if len(self.words[i]) != len(w):
            raise CodecError(f"{self.diagram.word_str(w)} is not a reduced word")
        return i

    def cover_reflection(self, lo: int, hi: int) -> int:
        return (self.invs[lo] ^ self.invs[hi]).bit_length() - 1

    def support(self, i: int) -> frozenset[int]:
        return frozenset(self.words[i])

    def join_irreducibles(self) -> list[JoinIrreducible]:
        if "ji" not in self.cache:
            out = []
            for i in range(self.n):
                if len(self.down[i]) == 1:
                    lo = self.down[i][0][0]
                    out.append(JoinIrreducible(i, lo, self.cover_reflection(lo, i), len(set(self.words[i]))))
            self.cache["ji"] = out
        return self.cache["ji"]

    def antipode(self) -> list[int]:
        """The map w -> w w0, which reverses the order."""
        if "alpha" not in self.cache:
            full = self.model.full
            self.cache["alpha"] = [self.index_of_inv[full ^ inv] for inv in self.invs]
        return self.cache["alpha"]

    def parabolic_elements(self, J) -> list[int]:
        jm = set(J)
        return [i for i in range(self.n) if set(self.words[i]) <= jm]

    def right_descents(self, i: int) -> list[int]:
        ups = {lab for _, lab in self.up[i]}
        return [s for s in range(self.diagram.rank) if s not in ups]


def enumerate_weak_order(diagram, cap: int | None = None, model: RootModel | None = None) -> WeakOrderLattice:
    """Breadth-first enumeration of the weak order by inversion-set bitsets."""
    diagram = build_diagram(diagram)
    cap = size_cap() if cap is None else cap
    expected = diagram.group_order()
    if expected > cap:
        raise SizeCapExceeded(
            f"{diagram.label or 'group'} has {expected} elements, above the cap {cap} "
            "(set COXLAT_SIZE_CAP to raise it)")
    model = model or generate_roots(diagram)
    N = model.n_pos
    rank = diagram.rank
    simple, tables = model.simple, model.tables
    invs = [0]
    words: list[Word] = [()]
    perms = [model.identity_perm()]
    index = {0: 0}
    up: list[list] = [[]]
    i = 0
    while i < len(invs):
        perm, inv, word = perms[i], invs[i], words[i]
        for s in range(rank):
            beta = perm[simple[s]]
            if beta < N:
                new = inv | (1 << beta)
                j = index.get(new)
                if j is None:
                    j = len(invs)
                    index[new] = j
                    invs.append(new)
                    words.append(word + (s,))
                    t = tables[s]
                    perms.append([perm[k] for k in t])
                    up.append([])
                up[i].append((j, s))
        perms[i] = None
        i += 1
    if len(invs) != expected:
        raise SizeCapExceeded(f"enumeration found {len(invs)} elements, expected {expected}")
    return WeakOrderLattice(diagram, model, invs, words, up)


@lru_cache(maxsize=32)
def weak_order(label: str) -> WeakOrderLattice:
    """Cached enumeration keyed by a type label."""
    return enumerate_weak_order(build_diagram(label))
