"""Finite Coxeter systems: diagrams, root systems and group elements.

Group elements are stored by their (left) inversion sets, encoded as Python
int bitsets over the indices of the positive roots.  A root model carries,
for every simple reflection, a permutation table of all 2N roots (index k+N
stands for the negative of root k), so multiplication and descents never
need floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property

from .errors import CodecError, DiagramError, UnsupportedRingError
from .golden import PHI, sign

Word = tuple[int, ...]


def iter_bits(b: int):
    """Yield the indices of the set bits of ``b`` in increasing order."""
    while b:
        low = b & -b
        yield low.bit_length() - 1
        b ^= low


# ---------------------------------------------------------------- diagrams

_DEGREES_EXCEPTIONAL = {
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ("F", 4): (2, 6, 8, 12),
    ("H", 3): (2, 6, 10),
    ("H", 4): (2, 12, 20, 30),
}


@dataclass(frozen=True)
class ComponentType:
    family: str  # one of A B D E F H I
    rank: int
    m: int = 0  # only for I2(m)

    @property
    def label(self) -> str:
        if self.family == "I":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    def degrees(self) -> tuple[int, ...]:
        f, n = self.family, self.rank
        if f == "A":
            return tuple(range(2, n + 2))
        if f == "B":
            return tuple(range(2, 2 * n + 1, 2))
        if f == "D":
            return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
        if f == "I":
            return (2, self.m)
        return _DEGREES_EXCEPTIONAL[(f, n)]


@dataclass(frozen=True)
class CoxeterDiagram:
    """A Coxeter matrix together with generator names."""

    orders: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]
    label: str = ""

    def __post_init__(self):
        _check_matrix(self.orders, self.names)

    @property
    def rank(self) -> int:
        return len(self.names)

    def m(self, i: int, j: int) -> int:
        return self.orders[i][j]

    def edges(self) -> list[tuple[int, int]]:
        n = self.rank
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.orders[i][j] > 2]

    def components(self) -> list[tuple[int, ...]]:
        n = self.rank
        seen, comps = set(), []
        for start in range(n):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in range(n):
                    if u not in seen and self.orders[v][u] > 2:
                        seen.add(u)
                        stack.append(u)
            comps.append(tuple(sorted(comp)))
        return comps

    @cached_property
    def component_types(self) -> list[ComponentType]:
        return [classify_component(self.orders, c, self.names) for c in self.components()]

    def degrees(self) -> tuple[int, ...]:
        return tuple(d for t in self.component_types for d in t.degrees())

    def group_order(self) -> int:
        return math.prod(self.degrees())

    def n_reflections(self) -> int:
        return sum(d - 1 for d in self.degrees())

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise CodecError(f"unknown generator {name!r}; generators are {list(self.names)}") from None

    def restrict(self, J) -> "CoxeterDiagram":
        """The standard parabolic sub-diagram on the generator indices ``J``."""
        J = sorted(J)
        orders = tuple(tuple(self.orders[i][j] for j in J) for i in J)
        return CoxeterDiagram(orders, tuple(self.names[i] for i in J), "")

    def erase(self, E) -> "CoxeterDiagram":
        """The diagram with the edges in ``E`` deleted (orders set to 2)."""
        rows = [list(r) for r in self.orders]
        for i, j in E:
            if rows[i][j] <= 2:
                raise DiagramError(f"{self.names[i]}-{self.names[j]} is not an edge")
            rows[i][j] = rows[j][i] = 2
        return CoxeterDiagram(tuple(tuple(r) for r in rows), self.names, "")

    def parse_word(self, text) -> Word:
        """Parse ``"s0s1s0"``, ``"qrq"`` or ``"s0,s1"`` into generator indices."""
        if not isinstance(text, str):
            return tuple(self.index(x) if isinstance(x, str) else int(x) for x in text)
        text = text.strip()
        if text in ("", "1", "e"):
            return ()
        if "," in text:
            return tuple(self.index(t.strip()) for t in text.split(",") if t.strip())
        names = sorted(self.names, key=len, reverse=True)
        out, pos = [], 0
        while pos < len(text):
            for nm in names:
                if text.startswith(nm, pos):
                    # avoid reading s1 as a prefix of s10
                    nxt = pos + len(nm)
                    if nm[-1].isdigit() and nxt < len(text) and text[nxt].isdigit():
                        continue
                    out.append(self.names.index(nm))
                    pos = nxt
                    break
            else:
                raise CodecError(f"cannot parse word {text!r} over generators {list(self.names)}")
        return tuple(out)

    def word_str(self, word: Word, sep: str = "") -> str:
        if not word:
            return "1"
        return sep.join(self.names[i] for i in word)


def _check_matrix(orders, names):
    n = len(orders)
    if len(names) != n or len(set(names)) != n:
        raise DiagramError("generator names must be distinct and match the matrix size")
    for i in range(n):
        if len(orders[i]) != n:
            raise DiagramError("Coxeter matrix must be square")
        if orders[i][i] != 1:
            raise DiagramError(f"diagonal entry at {names[i]} must be 1")
        for j in range(n):
            if i != j:
                v = orders[i][j]
                if v != orders[j][i]:
                    raise DiagramError(f"matrix not symmetric at {names[i]},{names[j]}")
                if not isinstance(v, int) or v < 2:
                    raise DiagramError(
                        f"component containing {names[i]},{names[j]} is not of finite type (m={v})")


def classify_component(orders, comp, names=None) -> ComponentType:
    """Identify a connected finite Coxeter diagram, or raise naming the component."""
    names = names or [f"s{i}" for i in range(len(orders))]
    label = "{" + ",".join(names[i] for i in comp) + "}"
    k = len(comp)
    if k == 1:
        return ComponentType("A", 1)
    if k == 2:
        m = orders[comp[0]][comp[1]]
        if m == 3:
            return ComponentType("A", 2)
        if m == 4:
            return ComponentType("B", 2)
        return ComponentType("I", 2, m)

    def fail(why):
        raise DiagramError(f"component {label} is not of finite type ({why})")

    adj = {v: [u for u in comp if u != v and orders[v][u] > 2] for v in comp}
    n_edges = sum(len(a) for a in adj.values()) // 2
    if n_edges != k - 1:
        fail("diagram contains a cycle")
    labels = [orders[u][v] for u in comp for v in comp if u < v and orders[u][v] > 2]
    big = [x for x in labels if x > 3]
    deg = {v: len(adj[v]) for v in comp}
    branch = [v for v in comp if deg[v] >= 3]
    if branch:
        if big or len(branch) > 1 or deg[branch[0]] > 3:
            fail("branched diagram with a label > 3 or several branch points")
        b = branch[0]
        arms = []
        for u in adj[b]:
            length, prev, cur = 1, b, u
            while deg[cur] == 2:
                nxt = [x for x in adj[cur] if x != prev][0]
                prev, cur = cur, nxt
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return ComponentType("D", k)
        if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            return ComponentType("E", k)
        fail(f"branch arms {arms}")
    if not big:
        return ComponentType("A", k)
    if len(big) > 1:
        fail("more than one label > 3")
    # walk the path from one end
    end = [v for v in comp if deg[v] == 1][0]
    path, prev = [end], None
    while len(path) < k:
        nxt = [x for x in adj[path[-1]] if x != prev][0]
        prev = path[-1]
        path.append(nxt)
    path_labels = [orders[path[i]][path[i + 1]] for i in range(k - 1)]
    pos = next(i for i, x in enumerate(path_labels) if x > 3)
    at_end = pos in (0, k - 2)
    m = path_labels[pos]
    if m == 4 and at_end:
        return ComponentType("B", k)
    if m == 4 and k == 4:
        return ComponentType("F", 4)
    if m == 5 and at_end and k in (3, 4):
        return ComponentType("H", k)
    fail(f"label {m} on a path of length {k}")


def _matrix(n, edges):
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, j, m in edges:
        rows[i][j] = rows[j][i] = m
    return tuple(tuple(r) for r in rows)


def _standard(family: str, n: int, m: int = 0) -> CoxeterDiagram:
    if family == "A":
        return CoxeterDiagram(_matrix(n, [(i, i + 1, 3) for i in range(n - 1)]),
                              tuple(f"s{i + 1}" for i in range(n)), f"A{n}")
    if family in "BC":
        if n < 2:
            raise DiagramError(f"{family}{n} needs rank at least 2")
        edges = [(0, 1, 4)] + [(i, i + 1, 3) for i in range(1, n - 1)]
        return CoxeterDiagram(_matrix(n, edges), tuple(f"s{i}" for i in range(n)), f"{family}{n}")
    if family == "D":
        if n < 4:
            raise DiagramError("D_n needs rank at least 4")
        edges = [(i, i + 1, 3) for i in range(n - 2)] + [(n - 3, n - 1, 3)]
        return CoxeterDiagram(_matrix(n, edges), tuple(f"s{i + 1}" for i in range(n)), f"D{n}")
    if family == "E":
        if n not in (6, 7, 8):
            raise DiagramError(f"E{n} is not a finite type")
        # Bourbaki: 1-3-4-5-...-n with 2 attached to 4
        edges = [(0, 2, 3), (1, 3, 3)] + [(i, i + 1, 3) for i in range(2, n - 1)]
        return CoxeterDiagram(_matrix(n, edges), tuple(f"s{i + 1}" for i in range(n)), f"E{n}")
    if family == "F":
        if n != 4:
            raise DiagramError(f"F{n} is not a finite type")
        return CoxeterDiagram(_matrix(4, [(0, 1, 3), (1, 2, 4), (2, 3, 3)]), ("p", "q", "r", "s"), "F4")
    if family == "G":
        if n != 2:
            raise DiagramError(f"G{n} is not a finite type")
        return CoxeterDiagram(_matrix(2, [(0, 1, 6)]), ("s1", "s2"), "G2")
    if family == "H":
        if n not in (3, 4):
            raise DiagramError(f"H{n} is not a finite type")
        edges = [(0, 1, 5)] + [(i, i + 1, 3) for i in range(1, n - 1)]
        return CoxeterDiagram(_matrix(n, edges), ("q", "r", "s", "t")[:n], f"H{n}")
    if family == "I":
        if m < 2:
            raise DiagramError(f"I2({m}) is not a finite type")
        return CoxeterDiagram(_matrix(2, [(0, 1, m)]), ("r", "s"), f"I2({m})")
    raise DiagramError(f"unknown family {family!r}")


_LABEL = re.compile(r"^\s*([A-Ia-i])\s*(\d+)\s*(?:[:(]\s*(\d+)\s*\)?)?\s*$")


def build_diagram(desc) -> CoxeterDiagram:
    """Build a diagram from a type label (``"B3"``, ``"I2:7"``, ``"A2xA1"``) or a matrix."""
    if isinstance(desc, CoxeterDiagram):
        return desc
    if not isinstance(desc, str):
        orders = tuple(tuple(int(x) for x in row) for row in desc)
        d = CoxeterDiagram(orders, tuple(f"s{i + 1}" for i in range(len(orders))), "")
        _ = d.component_types  # validates finiteness
        return d
    parts = re.split(r"\s*[x*×]\s*", desc.strip())
    if len(parts) > 1:
        return product_diagram([build_diagram(p) for p in parts])
    mt = _LABEL.match(desc)
    if not mt:
        raise DiagramError(f"cannot parse Coxeter type {desc!r}")
    fam, n, m = mt.group(1).upper(), int(mt.group(2)), mt.group(3)
    if fam == "I":
        if n != 2 or m is None:
            raise DiagramError("dihedral types are written I2:m")
        return _standard("I", 2, int(m))
    if n < 1:
        raise DiagramError("rank must be positive")
    d = _standard(fam, n)
    _ = d.component_types
    return d


def product_diagram(diagrams) -> CoxeterDiagram:
    n = sum(d.rank for d in diagrams)
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    names, off = [], 0
    clash = len({x for d in diagrams for x in d.names}) < sum(d.rank for d in diagrams)
    for c, d in enumerate(diagrams):
        for i in range(d.rank):
            for j in range(d.rank):
                rows[off + i][off + j] = d.orders[i][j]
            names.append(f"{d.names[i]}_{c + 1}" if clash else d.names[i])
        off += d.rank
    label = "x".join(d.label for d in diagrams) if all(d.label for d in diagrams) else ""
    return CoxeterDiagram(tuple(tuple(r) for r in rows), tuple(names), label)


# ------------------------------------------------------------- root models

@dataclass
class RootModel:
    """Positive roots plus the action of each simple reflection on all 2N roots."""

    rank: int
    n_pos: int
    simple: tuple[int, ...]
    tables: tuple[tuple[int, ...], ...]
    supports: tuple[int, ...]  # generator bitmask of each positive root
    roots: list | None = None  # coordinates in the simple-root basis, if known
    ring: str = "integers"
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def full(self) -> int:
        return (1 << self.n_pos) - 1

    def neg(self, k: int) -> int:
        return k + self.n_pos if k < self.n_pos else k - self.n_pos

    def identity_perm(self) -> list[int]:
        return list(range(2 * self.n_pos))

    def perm_of_word(self, word: Word) -> list[int]:
        perm = self.identity_perm()
        for s in word:
            perm = [perm[t] for t in self.tables[s]]
        return perm

    def inv_of_word(self, word: Word) -> int:
        """Inversion set of the product of ``word`` (need not be reduced)."""
        N = self.n_pos
        inv, perm = 0, self.identity_perm()
        for s in word:
            beta = perm[self.simple[s]]
            if beta < N:
                inv |= 1 << beta
            else:
                inv &= ~(1 << (beta - N))
            perm = [perm[t] for t in self.tables[s]]
        return inv

    def element(self, word: Word) -> "GroupElement":
        inv = self.inv_of_word(word)
        if inv.bit_count() == len(word):
            return GroupElement(inv, tuple(word))
        return GroupElement(inv, self.reduced_word(inv))

    def apply_to_set(self, s: int, bits: int) -> int:
        out = 0
        t = self.tables[s]
        for k in iter_bits(bits):
            out |= 1 << t[k]
        return out

    def reduced_word(self, inv: int) -> Word:
        """A reduced word for the element with inversion set ``inv``, peeling left descents."""
        word = []
        while inv:
            for i, a in enumerate(self.simple):
                if inv >> a & 1:
                    break
            else:
                raise CodecError("bitset is not an inversion set")
            word.append(i)
            inv = self.apply_to_set(i, inv & ~(1 << a))
            if inv >> self.n_pos:
                raise CodecError("bitset is not an inversion set")
        return tuple(word)

    def left_descents(self, inv: int) -> list[int]:
        return [i for i, a in enumerate(self.simple) if inv >> a & 1]

    def left_multiply(self, s: int, inv: int) -> int:
        """Inversion set of s*w from that of w."""
        a = self.simple[s]
        if inv >> a & 1:
            return self.apply_to_set(s, inv & ~(1 << a))
        return self.apply_to_set(s, inv) | (1 << a)

    def parabolic_mask(self, J) -> int:
        """Bitset of positive roots whose support lies in the generator set J."""
        key = ("mask", frozenset(J))
        if key not in self._cache:
            jm = sum(1 << j for j in J)
            self._cache[key] = sum(1 << k for k, sup in enumerate(self.supports) if sup & ~jm == 0)
        return self._cache[key]

    def reflection_word(self, k: int) -> Word:
        """A palindromic word u s_i u^-1 for the reflection through positive root ``k``."""
        key = "refl"
        if key not in self._cache:
            from collections import deque
            seen = {a: ((), i) for i, a in enumerate(self.simple)}
            q = deque(self.simple)
            while q:
                r = q.popleft()
                u, i = seen[r]
                for j in range(self.rank):
                    t = self.tables[j][r]
                    if t < self.n_pos and t not in seen:
                        seen[t] = ((j,) + u, i)
                        q.append(t)
            self._cache[key] = {r: u + (i,) + tuple(reversed(u)) for r, (u, i) in seen.items()}
        return self._cache[key][k]


def _cartan_like(orders) -> list[list]:
    """Entries a_ij with a_ij * a_ji = 4 cos^2(pi/m) in Z or Z[phi]."""
    n = len(orders)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m = orders[i][j]
            if m == 2:
                continue
            if m == 3:
                a[i][j] = a[j][i] = -1
            elif m == 4:
                a[i][j], a[j][i] = -2, -1
            elif m == 6:
                a[i][j], a[j][i] = -3, -1
            elif m == 5:
                a[i][j] = a[j][i] = -PHI
            else:
                raise UnsupportedRingError(
                    f"m={m} needs 2cos(pi/{m}), which is outside Z and Z[phi]")
    return a


def roots_from_matrix(a) -> list[tuple]:
    """Positive roots for s_i(alpha_j) = alpha_j - a_ij alpha_i, as coordinate tuples."""
    n = len(a)
    zero = 0
    simple = [tuple(1 if k == i else zero for k in range(n)) for i in range(n)]
    roots = list(simple)
    index = {r: i for i, r in enumerate(roots)}
    pos = 0
    while pos < len(roots):
        beta = roots[pos]
        pos += 1
        for i in range(n):
            g = reflect(a, i, beta)
            if _is_positive(g) and g not in index:
                index[g] = len(roots)
                roots.append(g)
                if len(roots) > 10000:
                    raise UnsupportedRingError("root system is not finite")
    return roots


def reflect(a, i, beta):
    c = 0
    for j, b in enumerate(beta):
        if b != 0 and a[i][j] != 0:
            c = c + a[i][j] * b
    if c == 0:
        return beta
    return tuple(b - c if k == i else b for k, b in enumerate(beta))


def _is_positive(beta) -> bool:
    for b in beta:
        s = sign(b)
        if s:
            return s > 0
    return False


def model_from_matrix(a, ring: str = "integers") -> RootModel:
    roots = roots_from_matrix(a)
    n = len(a)
    N = len(roots)
    index = {r: k for k, r in enumerate(roots)}
    tables = []
    for i in range(n):
        t = [0] * (2 * N)
        for k, beta in enumerate(roots):
            if k == i:
                img = N + i
            else:
                img = index[reflect(a, i, beta)]
            t[k] = img
            t[k + N] = img + N if img < N else img - N
        tables.append(tuple(t))
    supports = tuple(sum(1 << j for j, b in enumerate(r) if b != 0) for r in roots)
    return RootModel(n, N, tuple(range(n)), tuple(tables), supports, roots, ring)


def dihedral_model(m: int) -> RootModel:
    """Combinatorial model of I2(m): 2m roots at angles k*pi/m, simple roots at 0 and m-1."""
    N = m
    tables = []
    for a in (0, m - 1):
        tables.append(tuple((2 * a + m - k) % (2 * m) for k in range(2 * m)))
    supports = tuple(1 if k == 0 else 2 if k == m - 1 else 3 for k in range(m))
    return RootModel(2, N, (0, m - 1), tuple(tables), supports, None, "dihedral")


def product_model(models: list[RootModel], comps: list[tuple[int, ...]], rank: int) -> RootModel:
    """Glue component models; ``comps[c]`` lists the global generator indices of model c."""
    N = sum(md.n_pos for md in models)
    simple = [0] * rank
    tables = [None] * rank
    supports = []
    offsets = []
    off = 0
    for md in models:
        offsets.append(off)
        off += md.n_pos
    for md, comp, o in zip(models, comps, offsets):
        for k in range(md.n_pos):
            supports.append(sum(1 << comp[j] for j in iter_bits(md.supports[k])))

    def glob(c, k):
        md = models[c]
        return offsets[c] + k if k < md.n_pos else N + offsets[c] + k - md.n_pos

    for c, (md, comp) in enumerate(zip(models, comps)):
        for li, gi in enumerate(comp):
            simple[gi] = offsets[c] + md.simple[li]
            t = list(range(2 * N))
            for k in range(2 * md.n_pos):
                t[glob(c, k)] = glob(c, md.tables[li][k])
            tables[gi] = tuple(t)
    rings = {md.ring for md in models}
    ring = rings.pop() if len(rings) == 1 else "mixed"
    return RootModel(rank, N, tuple(simple), tuple(tables), tuple(supports), None, ring)


def generate_roots(diagram: CoxeterDiagram) -> RootModel:
    """Root model for a diagram, exact over Z, Z[phi] or the dihedral combinatorial model."""
    comps = diagram.components()
    if len(comps) == 1:
        return _component_model(diagram, comps[0])
    models = [_component_model(diagram, c) for c in comps]
    return product_model(models, comps, diagram.rank)


def _component_model(diagram, comp) -> RootModel:
    orders = [[diagram.orders[i][j] for j in comp] for i in comp]
    ms = {orders[i][j] for i in range(len(comp)) for j in range(len(comp)) if i != j}
    if ms - {2, 3, 4, 5, 6}:
        m = max(ms)
        return dihedral_model(m)
    ring = "golden" if 5 in ms else "integers"
    return model_from_matrix(_cartan_like(orders), ring)


def coordinate_roots(diagram: CoxeterDiagram) -> list[tuple]:
    """Positive roots as coordinates; raises for dihedral types with m outside 2..6."""
    for t in diagram.component_types:
        if t.family == "I" and t.m not in range(2, 7):
            raise UnsupportedRingError(f"{t.label}: 2cos(pi/{t.m}) is outside Z and Z[phi]")
    return roots_from_matrix(_cartan_like(diagram.orders))


# ----------------------------------------------------------- group elements

@dataclass(frozen=True)
class GroupElement:
    inv: int
    word: Word = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def support(self) -> frozenset[int]:
        return frozenset(self.word)


def support(w: GroupElement) -> frozenset[int]:
    return w.support()


def parabolic_factor(model: RootModel, w: GroupElement, J) -> tuple[GroupElement, GroupElement]:
    """Factor w = w_J * (^J w) with w_J in W_J, using inv(w_J) = inv(w) cap roots(W_J)."""
    inv_j = w.inv & model.parabolic_mask(J)
    wj = GroupElement(inv_j, model.reduced_word(inv_j))
    rest = model.element(tuple(reversed(wj.word)) + w.word)
    if wj.length + rest.length != w.length:
        raise CodecError("parabolic factorization is not length-additive")
    return wj, rest


def alt_word(first: int, second: int, k: int) -> Word:
    """The alternating word first*second*first... of length k."""
    return tuple(first if i % 2 == 0 else second for i in range(k))
