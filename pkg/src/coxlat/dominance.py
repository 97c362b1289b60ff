"""Cartan matrices, dominance, and the homomorphisms dominance induces.

Convention: s_i(alpha_j) = alpha_j - a_ij alpha_i.  Co-roots are the roots
of the transposed matrix in the basis of simple co-roots.  In B_n and C_n the
index 0 sits at the end carrying the double bond; alpha_0 is short in B_n and
long in C_n.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coxeter import CoxeterDiagram, model_from_matrix, roots_from_matrix
from .errors import DiagramError, VerificationError
from .homs import LatticeHom
from .weak import WeakOrderLattice, enumerate_weak_order

Cartan = tuple[tuple[int, ...], ...]


def _blank(n):
    return [[2 if i == j else 0 for j in range(n)] for i in range(n)]


def cartan_matrix(label: str) -> Cartan:
    fam, n = label[0].upper(), int(label[1:])
    a = _blank(n)

    def bond(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if fam == "A":
        for i in range(n - 1):
            bond(i, i + 1)
    elif fam in "BC":
        bond(0, 1, -2, -1) if fam == "B" else bond(0, 1, -1, -2)
        for i in range(1, n - 1):
            bond(i, i + 1)
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif fam == "G" and n == 2:
        bond(0, 1, -1, -3)
    elif fam == "F" and n == 4:
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    else:
        raise DiagramError(f"no Cartan matrix for {label}")
    return tuple(tuple(r) for r in a)


def transpose(a: Cartan) -> Cartan:
    return tuple(zip(*a))


def erase_edges(a: Cartan, E) -> Cartan:
    rows = [list(r) for r in a]
    for i, j in E:
        rows[i][j] = rows[j][i] = 0
    return tuple(tuple(r) for r in rows)


def cartan_edges(a: Cartan) -> list[tuple[int, int]]:
    n = len(a)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0]


def coxeter_diagram_of(a: Cartan, names=None) -> CoxeterDiagram:
    n = len(a)
    orders = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and a[i][j] != 0:
                orders[i][j] = {1: 3, 2: 4, 3: 6}[a[i][j] * a[j][i]]
    return CoxeterDiagram(tuple(map(tuple, orders)), tuple(names or (f"s{i}" for i in range(n))), "")


def dominates(a: Cartan, a2: Cartan) -> bool:
    """|a_ij| >= |a'_ij| entrywise (both matrices on the same index set)."""
    n = len(a)
    return len(a2) == n and all(abs(a[i][j]) >= abs(a2[i][j]) for i in range(n) for j in range(n))


def finite_roots(a: Cartan) -> set[tuple]:
    return set(roots_from_matrix(a))


@dataclass
class Containment:
    dominates: bool
    roots_contained: bool
    coroots_contained: bool
    root_difference: int
    coroot_difference: int

    @property
    def ok(self) -> bool:
        return self.dominates and self.roots_contained and self.coroots_contained


def containment_check(a: Cartan, a2: Cartan) -> Containment:
    r, r2 = finite_roots(a), finite_roots(a2)
    c, c2 = finite_roots(transpose(a)), finite_roots(transpose(a2))
    return Containment(dominates(a, a2), r2 <= r, c2 <= c, len(r - r2), len(c - c2))


def coroot_lattice(a: Cartan, names=None) -> WeakOrderLattice:
    """Weak order whose positive-root indices are the co-roots of ``a``."""
    model = model_from_matrix(transpose(a))
    return enumerate_weak_order(coxeter_diagram_of(a, names), model=model)


def induced_hom(a: Cartan, a2: Cartan, names=None) -> LatticeHom:
    """eta(w) has inversion set inv(w) cut down to reflections whose co-root lies in Phi^v(A')."""
    if not dominates(a, a2):
        raise VerificationError("A does not dominate A'")
    W, W2 = coroot_lattice(a, names), coroot_lattice(a2, names)
    pos2 = {r: k for k, r in enumerate(W2.model.roots)}
    translate = {k: pos2[r] for k, r in enumerate(W.model.roots) if r in pos2}
    if len(translate) != W2.model.n_pos:
        raise VerificationError("co-roots of A' are not contained in those of A")
    keep = sum(1 << k for k in translate)
    memo = {}
    out = np.empty(W.n, dtype=np.int64)
    for i, inv in enumerate(W.invs):
        key = inv & keep
        if key not in memo:
            new = 0
            for k, k2 in translate.items():
                if key >> k & 1:
                    new |= 1 << k2
            j = W2.index_of_inv.get(new)
            if j is None:
                raise VerificationError(f"{W.names[i]}: cut-down inversion set is not one of W'")
            memo[key] = j
        out[i] = memo[key]
    return LatticeHom(W, W2, out, "induced")


def translate_partition(h: LatticeHom, L: WeakOrderLattice) -> np.ndarray:
    """Fibre labels of h carried to another enumeration L of the same group, via reduced words."""
    labels = np.empty(L.n, dtype=np.int64)
    for i, w in enumerate(h.domain.words):
        labels[L.index_of_word(w)] = h.map[i]
    return labels


def cambrian_refinement_check(a: Cartan, a2: Cartan, order) -> bool:
    """The induced hom restricts to Cambrian lattices, and the contracted sortable
    join-irreducibles are exactly those whose cover co-root lies outside Phi^v(A')."""
    from .cambrian import restrict_hom
    from .congruence import congruence_from_labels
    h = induced_hom(a, a2)
    r = restrict_hom(h, order)
    W = h.domain
    coroots2 = finite_roots(transpose(a2))
    fib = congruence_from_labels(r.source.lattice, r.map)
    ok = True
    for j in r.source.lattice.join_irreducibles():
        w = r.source.sortables[j.element]
        # the cover j_* < j in the sublattice may span several weak-order covers; use w's unique lower cover
        wl = W.down[w][0][0]
        outside = W.model.roots[W.cover_reflection(wl, w)] not in coroots2
        ok &= bool(fib.contracts(j.element)) == outside
    return ok


def is_order_ideal(a: Cartan, a2: Cartan) -> bool:
    """Is Phi+(A') a down-set of the root poset of Phi+(A)?  (beta <= gamma iff gamma - beta >= 0)"""
    r, r2 = finite_roots(a), finite_roots(a2)
    for gamma in r2:
        for beta in r:
            if beta not in r2 and all(g >= b for g, b in zip(gamma, beta)):
                return False
    return True
