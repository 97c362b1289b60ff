"""Sortable elements and Cambrian congruences."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

import numpy as np

from .congruence import Congruence, congruence_from_labels, generated_by, homogeneous_degree, quotient
from .coxeter import alt_word
from .errors import CodecError, VerificationError
from .homs import LatticeHom
from .lattice import Lattice, isomorphic
from .weak import WeakOrderLattice


def parse_coxeter_element(L: WeakOrderLattice, c) -> tuple[int, ...]:
    order = L.diagram.parse_word(c) if isinstance(c, str) else tuple(c)
    if sorted(order) != list(range(L.diagram.rank)):
        raise CodecError("a Coxeter element uses every generator exactly once")
    return order


def precedes(order, r: int, s: int) -> bool:
    return order.index(r) < order.index(s)


def sorting_blocks(L: WeakOrderLattice, w: int, c) -> list[tuple[int, ...]]:
    """Blocks of the c-sorting word: the leftmost reduced subword of c c c ..."""
    order = parse_coxeter_element(L, c)
    model = L.model
    inv = L.invs[w]
    blocks = []
    while inv:
        block = []
        for s in order:
            if inv >> model.simple[s] & 1:
                block.append(s)
                inv = model.left_multiply(s, inv)
        blocks.append(tuple(block))
    return blocks


def sorting_word(L: WeakOrderLattice, w: int, c) -> str:
    blocks = sorting_blocks(L, w, c)
    if not blocks:
        return "1"
    return "|".join("".join(L.diagram.names[s] for s in b) for b in blocks)


def is_sortable(L: WeakOrderLattice, w: int, c) -> bool:
    blocks = [set(b) for b in sorting_blocks(L, w, c)]
    return all(b2 <= b1 for b1, b2 in zip(blocks, blocks[1:]))


def sortable_elements(L: WeakOrderLattice, c) -> list[int]:
    return [w for w in range(L.n) if is_sortable(L, w, c)]


def cambrian_generators(L: WeakOrderLattice, c) -> list[int]:
    """alt_k(s, r) for every edge with r before s in c, k = 2..m-1."""
    order = parse_coxeter_element(L, c)
    gens = []
    for r, s in L.diagram.edges():
        if not precedes(order, r, s):
            r, s = s, r
        for k in range(2, L.diagram.m(r, s)):
            gens.append(L.index_of_reduced(alt_word(s, r, k)))
    return gens


def cambrian_congruence(L: WeakOrderLattice, c) -> Congruence:
    return generated_by(L, cambrian_generators(L, c))


@dataclass
class Cambrian:
    weak: WeakOrderLattice
    order: tuple[int, ...]
    congruence: Congruence
    sortables: list[int]
    lattice: Lattice  # the sortables as an induced subposet

    @property
    def n(self) -> int:
        return len(self.sortables)


def cambrian_lattice(L: WeakOrderLattice, c, check: bool = True) -> Cambrian:
    """Theta_c, its bottom elements (which must be the c-sortables) and Camb(W, c)."""
    order = parse_coxeter_element(L, c)
    theta = cambrian_congruence(L, order)
    sort = sortable_elements(L, order)
    if check and sorted(theta.class_bottom) != sort:
        raise VerificationError("bottom elements of the Cambrian congruence are not the sortables")
    sub = L.subposet(sort)
    if check:
        Q = quotient(L, theta).lattice
        if isomorphic(sub, Q) is None:
            raise VerificationError("sortable subposet is not isomorphic to the Cambrian quotient")
        pos = {e: k for k, e in enumerate(sort)}
        for a in sort:
            for b in sort:
                if L.meet(a, b) not in pos or L.join(a, b) not in pos:
                    raise VerificationError("sortables are not a sublattice")
    return Cambrian(L, order, theta, sort, sub)


def cambrian_word_str(L: WeakOrderLattice, order) -> str:
    return L.diagram.word_str(order)


@dataclass
class RestrictedHom:
    map: np.ndarray  # sortable position in source -> sortable position in target
    source: Cambrian
    target: Cambrian
    generators: list[int]  # weak-order indices generating the restricted congruence


def restrict_hom(h: LatticeHom, c) -> RestrictedHom:
    """Restrict a compressive hom W -> W' to Camb(W, c) -> Camb(W', c').

    c' lists the images of the generators in the order of c, dropping those
    sent to the bottom.  Images of c-sortables must be c'-sortable and the
    restriction must be onto.
    """
    L, T = h.domain, h.codomain
    order = parse_coxeter_element(L, c)
    t_atoms = {j: lab for j, lab in T.up[T.bottom]}
    l_atoms = {lab: j for j, lab in L.up[L.bottom]}
    order2 = [t_atoms[h(l_atoms[s])] for s in order if h(l_atoms[s]) != T.bottom]
    src = cambrian_lattice(L, order)
    dst = cambrian_lattice(T, tuple(order2))
    dpos = {e: k for k, e in enumerate(dst.sortables)}
    images = []
    for w in src.sortables:
        x = h(w)
        if x not in dpos:
            raise VerificationError(f"image of {L.names[w]} is not c'-sortable")
        images.append(dpos[x])
    f = np.array(images, dtype=np.int64)
    if len(set(images)) != dst.n:
        raise VerificationError("restricted map is not surjective")
    fib = congruence_from_labels(src.lattice, f)
    gens = [src.sortables[j] for j in homogeneous_degree(src.lattice, fib, degrees=False).generators]
    return RestrictedHom(f, src, dst, gens)


def classify_cambrian_compressive(L: WeakOrderLattice, T: WeakOrderLattice, c) -> list[tuple[int, ...]]:
    """Choices of alternating elements on the c-forward side giving Camb(W,c) -> Camb(W',c').

    For an edge r-s with r before s in c, the Cambrian congruence already
    contracts alt_k(s, r); a compressive map must also contract m - m'
    elements alt_k(r, s).  Each surviving choice is returned (as element
    indices of L) after checking the quotient is isomorphic to Camb(W', c').
    """
    order = parse_coxeter_element(L, c)
    src = cambrian_lattice(L, order)
    dst = cambrian_lattice(T, order)
    sub = src.lattice
    spos = {e: k for k, e in enumerate(src.sortables)}
    per_edge = []
    for r, s in L.diagram.edges():
        if not precedes(order, r, s):
            r, s = s, r
        m, m2 = L.diagram.m(r, s), T.diagram.m(r, s)
        forward = [L.index_of_reduced(alt_word(r, s, k)) for k in range(2, m)]
        for x in forward:
            if x not in spos:
                raise VerificationError(f"{L.names[x]} is not c-sortable")
        per_edge.append(list(combinations(forward, m - m2)))
    out = []
    for choice in product(*per_edge):
        gens = [spos[x] for part in choice for x in part]
        theta = generated_by(sub, gens)
        Q = quotient(sub, theta).lattice
        if isomorphic(Q, dst.lattice) is not None:
            out.append(tuple(x for part in choice for x in part))
    return out


def all_coxeter_elements(L: WeakOrderLattice) -> list[tuple[int, ...]]:
    """One linear order per orientation of the diagram's edges."""
    seen, out = set(), []
    for order in permutations(range(L.diagram.rank)):
        key = tuple(precedes(order, r, s) for r, s in L.diagram.edges())
        if key not in seen:
            seen.add(key)
            out.append(order)
    return out
