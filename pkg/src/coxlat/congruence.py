"""Lattice congruences of finite lattices.

Two closures are provided.  ``closure_generic`` is a union-find closure
under translation by meets and joins; it works on any lattice and serves as
the oracle.  ``closure_polygonal`` propagates edge contractions through the
polygons of the Hasse diagram, which is enough for polygonal lattices such
as weak orders and their quotients, and is much faster.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .coxeter import iter_bits
from .errors import LatticeStructureError
from .lattice import Lattice


@dataclass(eq=False)
class Congruence:
    lattice: Lattice
    class_of: np.ndarray  # class ids ordered by the index of the bottom element
    class_bottom: list[int]
    class_top: list[int]

    @property
    def n_classes(self) -> int:
        return len(self.class_bottom)

    def __eq__(self, other):
        return (isinstance(other, Congruence) and other.lattice is self.lattice
                and np.array_equal(self.class_of, other.class_of))

    def __hash__(self):
        return hash(self.class_of.tobytes())

    def same(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def classes(self) -> list[list[int]]:
        out = [[] for _ in range(self.n_classes)]
        for i, c in enumerate(self.class_of):
            out[c].append(i)
        return out

    def contracted_ji(self) -> frozenset[int]:
        L = self.lattice
        return frozenset(j.element for j in L.join_irreducibles() if self.class_of[j.element] == self.class_of[j.lower])

    def contracts(self, j: int) -> bool:
        lo = self.lattice.down[j][0][0]
        return bool(self.class_of[j] == self.class_of[lo])

    def refines(self, other: "Congruence") -> bool:
        """True when every class of self lies in a class of other."""
        return all(other.class_of[i] == other.class_of[self.class_bottom[c]]
                   for i, c in enumerate(self.class_of))

    def bottoms(self) -> list[int]:
        return list(self.class_bottom)


def congruence_from_labels(L: Lattice, labels, audit: bool = True) -> Congruence:
    """Canonicalise an arbitrary labelling of elements into a Congruence."""
    labels = np.asarray(labels)
    first = {}
    for i, lab in enumerate(labels.tolist()):
        if lab not in first:
            first[lab] = i
    order = sorted(first.values())
    cid = {labels[i].item() if hasattr(labels[i], "item") else labels[i]: k for k, i in enumerate(order)}
    class_of = np.array([cid[lab] for lab in labels.tolist()], dtype=np.int64)
    bottoms = order
    tops = [0] * len(order)
    for i, c in enumerate(class_of.tolist()):
        tops[c] = i
    theta = Congruence(L, class_of, bottoms, tops)
    if audit:
        audit_congruence(theta)
    return theta


def audit_congruence(theta: Congruence) -> None:
    """Raise unless classes are intervals and both projections are order-preserving."""
    L = theta.lattice
    members = [0] * theta.n_classes
    for i, c in enumerate(theta.class_of.tolist()):
        members[c] |= 1 << i
    for c in range(theta.n_classes):
        b, t = theta.class_bottom[c], theta.class_top[c]
        if members[c] != L.upset[b] & L.downset[t]:
            raise LatticeStructureError(f"class of {L.names[b]} is not an interval")
    cls = theta.class_of
    bot, top = theta.class_bottom, theta.class_top
    for x, y, _ in L.covers():
        cx, cy = cls[x], cls[y]
        if cx != cy and not (L.leq(bot[cx], bot[cy]) and L.leq(top[cx], top[cy])):
            raise LatticeStructureError(f"relation is not compatible at {L.names[x]} < {L.names[y]}")


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def closure_generic(L: Lattice, pairs, audit: bool = True) -> Congruence:
    """Smallest congruence identifying each pair, by union-find closure.

    Every successful union (a, b) is queued; processing it unions a^z with
    b^z and avz with bvz for every z.  Since each class is connected by the
    queued pairs, this gives compatibility with all meets and joins.
    """
    n = L.n
    uf = _UnionFind(n)
    small = n <= 1500
    if small:
        M, J = L.meet_table(), L.join_table()
    queue = deque()
    for a, b in pairs:
        if uf.union(a, b):
            queue.append((a, b))
    while queue:
        a, b = queue.popleft()
        if small:
            ma, mb, ja, jb = M[a].tolist(), M[b].tolist(), J[a].tolist(), J[b].tolist()
            for z in range(n):
                if ma[z] != mb[z] and uf.union(ma[z], mb[z]):
                    queue.append((ma[z], mb[z]))
                if ja[z] != jb[z] and uf.union(ja[z], jb[z]):
                    queue.append((ja[z], jb[z]))
        else:
            for z in range(n):
                for x, y in ((L.meet(a, z), L.meet(b, z)), (L.join(a, z), L.join(b, z))):
                    if x != y and uf.union(x, y):
                        queue.append((x, y))
    return congruence_from_labels(L, [uf.find(i) for i in range(n)], audit=audit)


class _PolygonIndex:
    """Edge numbering plus, for each edge, the edges it forces in each polygon."""

    def __init__(self, L: Lattice):
        self.edges = [(i, j) for i, j, _ in L.covers()]
        self.edge_id = {e: k for k, e in enumerate(self.edges)}
        forced = [[] for _ in self.edges]
        eid = self.edge_id
        for p in L.polygons():
            left = [eid[e] for e in p.chain_edges("left")]
            right = [eid[e] for e in p.chain_edges("right")]
            sides = left[1:-1] + right[1:-1]
            # bottom-left is parallel to top-right and vice versa
            forced[left[0]].append([right[-1]] + sides)
            forced[right[0]].append([left[-1]] + sides)
            forced[left[-1]].append([right[0]] + sides)
            forced[right[-1]].append([left[0]] + sides)
        self.forced = forced
        self.lo = np.array([e[0] for e in self.edges], dtype=np.int64)
        self.hi = np.array([e[1] for e in self.edges], dtype=np.int64)


def _polygon_index(L: Lattice) -> _PolygonIndex:
    if "polyindex" not in L.cache:
        L.cache["polyindex"] = _PolygonIndex(L)
    return L.cache["polyindex"]


def pairs_to_edges(L: Lattice, pairs) -> list[tuple[int, int]]:
    """Edges inside [x^y, xvy] for each pair; a congruence identifying x,y contracts them all."""
    out = []
    for x, y in pairs:
        lo, hi = L.meet(x, y), L.join(x, y)
        members = L.upset[lo] & L.downset[hi]
        for a in iter_bits(members):
            for b, _ in L.up[a]:
                if members >> b & 1:
                    out.append((a, b))
    return out


def closure_polygonal(L: Lattice, seed_edges, audit: bool = True) -> Congruence:
    """Contract the seed edges and propagate through polygons until stable."""
    idx = _polygon_index(L)
    E = len(idx.edges)
    contracted = np.zeros(E, dtype=bool)
    stack = []
    for e in seed_edges:
        k = idx.edge_id.get(tuple(e))
        if k is None:
            raise LatticeStructureError(f"{e} is not a cover")
        if not contracted[k]:
            contracted[k] = True
            stack.append(k)
    forced = idx.forced
    while True:
        while stack:
            k = stack.pop()
            for group in forced[k]:
                for f in group:
                    if not contracted[f]:
                        contracted[f] = True
                        stack.append(f)
        # saturate: edges inside a component are contracted too
        sel = contracted
        g = coo_matrix((np.ones(int(sel.sum())), (idx.lo[sel], idx.hi[sel])), shape=(L.n, L.n))
        _, labels = connected_components(g, directed=False)
        extra = np.nonzero((labels[idx.lo] == labels[idx.hi]) & ~contracted)[0]
        if len(extra) == 0:
            break
        contracted[extra] = True
        stack.extend(extra.tolist())
    return congruence_from_labels(L, labels, audit=audit)


def generated_by(L: Lattice, generators, audit: bool = True) -> Congruence:
    """Congruence generated by contracting each join-irreducible j to j_*."""
    edges = []
    for j in generators:
        if len(L.down[j]) != 1:
            raise LatticeStructureError(f"{L.names[j]} is not join-irreducible")
        edges.append((L.down[j][0][0], j))
    return closure_polygonal(L, edges, audit=audit)


def cg(L: Lattice, j: int) -> Congruence:
    """The congruence generated by contracting one join-irreducible (memoised)."""
    memo = L.cache.setdefault("cg", {})
    if j not in memo:
        memo[j] = generated_by(L, [j], audit=False)
    return memo[j]


def trivial_congruence(L: Lattice) -> Congruence:
    return congruence_from_labels(L, np.arange(L.n), audit=False)


@dataclass
class ForcingPoset:
    """Join-irreducibles ordered by forcing: j' <= j iff cg(j) contracts j'."""

    elements: list[int]
    below: dict[int, frozenset[int]]  # includes the element itself

    def leq(self, a: int, b: int) -> bool:
        return a in self.below[b]

    def strict_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for b in self.elements for a in self.below[b] if a != b]

    def ideal(self, gens) -> frozenset[int]:
        out = set()
        for g in gens:
            out |= self.below[g]
        return frozenset(out)

    def maximal(self, subset) -> list[int]:
        subset = set(subset)
        return sorted(j for j in subset if not any(j != k and j in self.below[k] for k in subset))


def forcing_poset(L: Lattice) -> ForcingPoset:
    if "forcing" not in L.cache:
        jis = [j.element for j in L.join_irreducibles()]
        below = {j: cg(L, j).contracted_ji() for j in jis}
        for a in jis:
            for b in below[a]:
                if b != a and a in below[b]:
                    raise LatticeStructureError("forcing relation is not antisymmetric")
        L.cache["forcing"] = ForcingPoset(jis, below)
    return L.cache["forcing"]


@dataclass
class Quotient:
    lattice: Lattice
    natural_map: np.ndarray
    congruence: Congruence


def quotient(L: Lattice, theta: Congruence, check: bool = True) -> Quotient:
    """The quotient lattice; class ids follow the bottom elements' order in L."""
    cls = theta.class_of
    up = [dict() for _ in range(theta.n_classes)]
    for x, y, lab in L.covers():
        cx, cy = int(cls[x]), int(cls[y])
        if cx != cy and cy not in up[cx]:
            up[cx][cy] = lab
    Q = Lattice([sorted(u.items()) for u in up], [L.names[b] for b in theta.class_bottom])
    if check and Q.n <= 2000:
        bots = theta.class_bottom
        for a in range(Q.n):
            for b in range(Q.n):
                if Q.leq(a, b) != L.leq(bots[a], bots[b]):
                    raise LatticeStructureError("quotient is not isomorphic to the bottom-element subposet")
    return Quotient(Q, cls.copy(), theta)


def antipodal(L, theta: Congruence) -> Congruence:
    """x = y mod alpha(Theta) iff x w0 = y w0 mod Theta."""
    alpha = L.antipode()
    return congruence_from_labels(L, theta.class_of[np.array(alpha)], audit=False)


@dataclass
class Homogeneity:
    degree: int | None
    generators: list[int]
    degrees: list[int]


def homogeneous_degree(L, theta: Congruence, degrees: bool = True) -> Homogeneity:
    """Degrees of the minimal generating antichain of contracted join-irreducibles."""
    contracted = theta.contracted_ji()
    gens = sorted(j for j in contracted
                  if not any(k != j and j in cg(L, k).contracted_ji() for k in contracted))
    if not degrees:
        return Homogeneity(None, gens, [])
    degs = sorted(len(set(L.words[j])) for j in gens)
    deg = degs[0] if degs and len(set(degs)) == 1 else None
    return Homogeneity(deg, gens, degs)
