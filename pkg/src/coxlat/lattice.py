"""Finite lattices given by their Hasse diagrams.

Elements are ``0..n-1`` in a linear extension.  Down-sets and up-sets are
kept as int bitsets, so a meet is the top bit of an intersection of
down-sets and a join is the low bit of an intersection of up-sets.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .coxeter import iter_bits
from .errors import LatticeStructureError


@dataclass(frozen=True)
class JoinIrreducible:
    element: int
    lower: int
    cover_reflection: int | None = None  # positive-root index, weak orders only
    degree: int | None = None


@dataclass(frozen=True)
class Polygon:
    bottom: int
    top: int
    left: tuple[int, ...]  # interior of the left chain, bottom to top
    right: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.left) + len(self.right) + 2

    def chain_edges(self, side: str) -> list[tuple[int, int]]:
        chain = (self.bottom,) + (self.left if side == "left" else self.right) + (self.top,)
        return list(zip(chain, chain[1:]))


class Lattice:
    """A finite lattice.  ``up[i]`` lists ``(j, label)`` for each cover i < j."""

    def __init__(self, up, names=None):
        n = len(up)
        self.n = n
        self.up = [list(u) for u in up]
        self.down = [[] for _ in range(n)]
        for i, u in enumerate(self.up):
            for j, lab in u:
                if j <= i:
                    raise LatticeStructureError("element indices must form a linear extension")
                self.down[j].append((i, lab))
        self.names = list(names) if names is not None else [str(i) for i in range(n)]
        rank = [0] * n
        downset = [0] * n
        for i in range(n):
            d = 1 << i
            for x, _ in self.down[i]:
                d |= downset[x]
                if rank[x] + 1 > rank[i]:
                    rank[i] = rank[x] + 1
            downset[i] = d
        upset = [0] * n
        for i in range(n - 1, -1, -1):
            u = 1 << i
            for y, _ in self.up[i]:
                u |= upset[y]
            upset[i] = u
        self.rank = rank
        self.downset = downset
        self.upset = upset
        bottoms = [i for i in range(n) if not self.down[i]]
        tops = [i for i in range(n) if not self.up[i]]
        if len(bottoms) != 1 or len(tops) != 1:
            raise LatticeStructureError("a lattice needs a unique bottom and top")
        self.bottom, self.top = bottoms[0], tops[0]
        self._meet_table = None
        self._join_table = None
        self._polygons = None
        self.cache: dict = {}

    def __len__(self):
        return self.n

    # -- order
    def leq(self, u: int, v: int) -> bool:
        return bool(self.downset[v] >> u & 1)

    def meet(self, u: int, v: int) -> int:
        b = self.downset[u] & self.downset[v]
        m = b.bit_length() - 1
        if m < 0 or self.downset[m] != b:
            raise LatticeStructureError(f"meet of {u} and {v} is not unique")
        return m

    def join(self, u: int, v: int) -> int:
        b = self.upset[u] & self.upset[v]
        if not b:
            raise LatticeStructureError(f"join of {u} and {v} does not exist")
        j = (b & -b).bit_length() - 1
        if self.upset[j] != b:
            raise LatticeStructureError(f"join of {u} and {v} is not unique")
        return j

    def interval(self, x: int, z: int) -> list[int]:
        return list(iter_bits(self.upset[x] & self.downset[z]))

    def covers(self):
        """Yield the edges ``(lower, upper, label)`` of the Hasse diagram."""
        for i, u in enumerate(self.up):
            for j, lab in u:
                yield i, j, lab

    def n_edges(self) -> int:
        return sum(len(u) for u in self.up)

    def meet_table(self) -> np.ndarray:
        if self._meet_table is None:
            self._meet_table = self._table(self.downset, top_bit=True)
        return self._meet_table

    def join_table(self) -> np.ndarray:
        if self._join_table is None:
            self._join_table = self._table(self.upset, top_bit=False)
        return self._join_table

    def _table(self, sets, top_bit):
        n = self.n
        t = np.empty((n, n), dtype=np.int32)
        for u in range(n):
            su = sets[u]
            row = t[u]
            for v in range(u, n):
                b = su & sets[v]
                if top_bit:
                    r = b.bit_length() - 1
                else:
                    r = (b & -b).bit_length() - 1
                if r < 0 or sets[r] != b:
                    raise LatticeStructureError(f"{'meet' if top_bit else 'join'} of {u},{v} not unique")
                row[v] = r
                t[v, u] = r
        return t

    # -- structure
    def join_irreducibles(self) -> list[JoinIrreducible]:
        return [JoinIrreducible(i, self.down[i][0][0]) for i in range(self.n) if len(self.down[i]) == 1]

    def atoms(self) -> list[int]:
        return [j for j, _ in self.up[self.bottom]]

    def polygons(self) -> list[Polygon]:
        """Intervals [x, y1 v y2] over pairs of up-covers of x that are cycles."""
        if self._polygons is not None:
            return self._polygons
        out = []
        for x in range(self.n):
            ups = [y for y, _ in self.up[x]]
            for y1, y2 in combinations(ups, 2):
                z = self.join(y1, y2)
                members = self.upset[x] & self.downset[z]
                poly = self._cycle(x, z, y1, y2, members)
                if poly is not None:
                    out.append(poly)
        self._polygons = out
        return out

    def _cycle(self, x, z, y1, y2, members):
        chains = []
        for y in (y1, y2):
            chain = []
            cur = y
            while cur != z:
                nxt = [v for v, _ in self.up[cur] if members >> v & 1]
                if len(nxt) != 1:
                    return None
                chain.append(cur)
                cur = nxt[0]
            chains.append(tuple(chain))
        if len(chains[0]) + len(chains[1]) + 2 != members.bit_count():
            return None
        return Polygon(x, z, chains[0], chains[1])

    def check_lattice(self) -> None:
        """Exhaustively confirm that every pair has a unique meet and join."""
        self.meet_table()
        self.join_table()

    def subposet(self, elements) -> "Lattice":
        """The induced subposet on ``elements`` (must itself be a lattice)."""
        elements = sorted(elements)
        pos = {e: k for k, e in enumerate(elements)}
        mask = sum(1 << e for e in elements)
        up = [[] for _ in elements]
        for k, e in enumerate(elements):
            above = (self.upset[e] & mask) & ~(1 << e)
            cand = list(iter_bits(above))
            for c in cand:
                # c covers e in the subposet if nothing of the subset lies strictly between
                between = above & self.downset[c] & ~(1 << c)
                if not between:
                    up[k].append((pos[c], None))
        return Lattice(up, [self.names[e] for e in elements])


def lattice_from_leq(n: int, leq, names=None) -> Lattice:
    """Build a lattice from an order relation given as a predicate on indices."""
    above = [[j for j in range(n) if j != i and leq(i, j)] for i in range(n)]
    order = sorted(range(n), key=lambda i: -len(above[i]))
    pos = {e: k for k, e in enumerate(order)}
    up = [[] for _ in range(n)]
    for i in range(n):
        ab = set(above[i])
        for j in above[i]:
            if not any(k in ab and leq(k, j) and k != j for k in above[i] if k != j):
                up[pos[i]].append((pos[j], None))
    return Lattice(up, [names[e] for e in order] if names else None)


# ------------------------------------------------------------- isomorphism

def _refine(n_total, out_adj, in_adj, colors):
    """Colour refinement on a directed graph, returning the stable colouring."""
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in out_adj[v])),
             tuple(sorted(colors[u] for u in in_adj[v])))
            for v in range(n_total)
        ]
        palette = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(palette) == len(set(colors)):
            return new
        colors = new


def digraph_isomorphism(n1, edges1, n2, edges2, colors1=None, colors2=None):
    """Find a bijection V1 -> V2 mapping the edge set onto the edge set, or None.

    Colour refinement on the disjoint union with individualisation and
    backtracking; every returned map is checked edge by edge.
    """
    if n1 != n2 or len(edges1) != len(edges2):
        return None
    n = n1
    out_adj = [[] for _ in range(2 * n)]
    in_adj = [[] for _ in range(2 * n)]
    for a, b in edges1:
        out_adj[a].append(b)
        in_adj[b].append(a)
    for a, b in edges2:
        out_adj[n + a].append(n + b)
        in_adj[n + b].append(n + a)
    c1 = list(colors1) if colors1 is not None else [0] * n
    c2 = list(colors2) if colors2 is not None else [0] * n
    palette = {c: k for k, c in enumerate(sorted(set(c1) | set(c2), key=repr))}
    start = [palette[c] for c in c1] + [palette[c] for c in c2]
    target = set(edges2)

    def balanced(col):
        return Counter(col[:n]) == Counter(col[n:])

    def search(col):
        col = _refine(2 * n, out_adj, in_adj, col)
        if not balanced(col):
            return None
        classes = {}
        for v in range(2 * n):
            classes.setdefault(col[v], []).append(v)
        open_classes = [c for c, vs in classes.items() if len(vs) > 2]
        if not open_classes:
            f = [0] * n
            for c, vs in classes.items():
                f[vs[0]] = vs[1] - n
            if all((f[a], f[b]) in target for a, b in edges1):
                return f
            return None
        best = min(open_classes, key=lambda c: len(classes[c]))
        vs = classes[best]
        v = vs[0]
        fresh = max(col) + 1
        for w in (u for u in vs if u >= n):
            trial = list(col)
            trial[v] = fresh
            trial[w] = fresh
            res = search(trial)
            if res is not None:
                return res
        return None

    return search(start)


def _lattice_colors(L: Lattice):
    return [(L.rank[i], len(L.up[i]), len(L.down[i])) for i in range(L.n)]


def isomorphic(L1: Lattice, L2: Lattice, pinned: dict | None = None):
    """An order isomorphism L1 -> L2 as a list, or None.

    ``pinned`` optionally fixes images of some elements (for example atoms),
    which restricts the search to isomorphisms extending that partial map.
    """
    if mismatch_certificate(L1, L2) is not None:
        return None
    c1 = _lattice_colors(L1)
    c2 = _lattice_colors(L2)
    if pinned:
        for k, (a, b) in enumerate(sorted(pinned.items())):
            c1[a] = ("pin", k)
            c2[b] = ("pin", k)
    e1 = [(i, j) for i, j, _ in L1.covers()]
    e2 = [(i, j) for i, j, _ in L2.covers()]
    return digraph_isomorphism(L1.n, e1, L2.n, e2, c1, c2)


def mismatch_certificate(L1: Lattice, L2: Lattice) -> str | None:
    """A cheap invariant that differs between the two lattices, if any."""
    if L1.n != L2.n:
        return f"sizes differ: {L1.n} vs {L2.n}"
    if L1.n_edges() != L2.n_edges():
        return f"cover counts differ: {L1.n_edges()} vs {L2.n_edges()}"
    h1, h2 = Counter(_lattice_colors(L1)), Counter(_lattice_colors(L2))
    if h1 != h2:
        diff = (h1 - h2) or (h2 - h1)
        return f"(rank, up-degree, down-degree) profiles differ at {sorted(diff)[:3]}"
    j1, j2 = len(L1.join_irreducibles()), len(L2.join_irreducibles())
    if j1 != j2:
        return f"join-irreducible counts differ: {j1} vs {j2}"
    return None


def posets_isomorphic(n1, less1, n2, less2):
    """Isomorphism of posets given by strict-order edge lists (any generating set)."""
    def hasse(n, rel):
        above = [set() for _ in range(n)]
        for a, b in rel:
            above[a].add(b)
        # transitive closure then reduction
        changed = True
        while changed:
            changed = False
            for a in range(n):
                extra = set()
                for b in above[a]:
                    extra |= above[b] - above[a]
                if extra:
                    above[a] |= extra
                    changed = True
        edges = []
        for a in range(n):
            for b in above[a]:
                if not any(b in above[c] for c in above[a]):
                    edges.append((a, b))
        return edges, [(len(above[a]), sum(a in above[x] for x in range(n))) for a in range(n)]

    e1, c1 = hasse(n1, less1)
    e2, c2 = hasse(n2, less2)
    if Counter(c1) != Counter(c2):
        return None
    return digraph_isomorphism(n1, e1, n2, e2, c1, c2)
