"""Signed-subset model of the join-irreducibles of B_n and their shard arrows.

A signed subset A of {+-1..+-n} (never containing both i and -i) with
m = min A and M = -m if |A| = n, else the largest element of [n] not in |A|,
names the join-irreducible whose one-line notation lists [n] minus |A| in
increasing order followed by A in increasing order.  It exists iff M > m.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from graphlib import CycleError, TopologicalSorter
from itertools import product

from .errors import CodecError
from .perms import index_of_perm, one_line_table


@dataclass(frozen=True)
class SignedSubset:
    entries: frozenset[int]
    n: int

    @staticmethod
    def of(entries, n: int) -> "SignedSubset":
        e = frozenset(entries)
        if any(-x in e for x in e) or any(not 1 <= abs(x) <= n for x in e):
            raise CodecError(f"{sorted(e)} is not a signed subset of +-[{n}]")
        return SignedSubset(e, n)

    @cached_property
    def m(self) -> int:
        return min(self.entries)

    @cached_property
    def M(self) -> int:
        absA = {abs(x) for x in self.entries}
        if len(absA) == self.n:
            return -self.m
        return max(set(range(1, self.n + 1)) - absA)

    def is_valid(self) -> bool:
        return bool(self.entries) and self.M > self.m

    def one_line(self) -> tuple[int, ...]:
        absA = {abs(x) for x in self.entries}
        rest = sorted(set(range(1, self.n + 1)) - absA)
        return tuple(rest + sorted(self.entries))

    def cover_reflection(self) -> dict[int, int]:
        """The reflection t with j = t j_*, as a map on +-[n] (fixed points omitted)."""
        m, M = self.m, self.M
        if m == -M:
            return {m: M, M: m}
        return {M: m, m: M, -m: -M, -M: -m}

    def complement(self) -> frozenset[int]:
        universe = {x for i in range(1, self.n + 1) for x in (i, -i)}
        return frozenset(universe - self.entries)

    def __str__(self):
        return "{" + ",".join(str(x) for x in sorted(self.entries)) + "}"


def all_signed_subsets(n: int) -> list[SignedSubset]:
    """Every valid signed subset, i.e. one per join-irreducible of B_n."""
    out = []
    for choice in product((0, 1, -1), repeat=n):
        e = {s * (i + 1) for i, s in enumerate(choice) if s}
        A = SignedSubset(frozenset(e), n)
        if A.is_valid():
            out.append(A)
    return out


def ji_of_signed_subset(L, A: SignedSubset) -> int:
    return index_of_perm(L, A.one_line())


def signed_subset_of_ji(L, j: int) -> SignedSubset:
    """Read the signed subset off the one-line notation of a join-irreducible."""
    p = one_line_table(L)[j]
    n = len(p)
    if p[0] < 0:
        A = SignedSubset.of(p, n)
    else:
        d = next(i for i in range(n - 1) if p[i] > p[i + 1])
        A = SignedSubset.of(p[d + 1:], n)
    if A.one_line() != p:
        raise CodecError(f"element {L.names[j]} is not join-irreducible")
    return A


def subset_model_a(entries, n: int) -> tuple[int, ...] | None:
    """Type A analogue on S_n: complement then A, valid iff max(A^c) > min(A)."""
    A = sorted(entries)
    comp = sorted(set(range(1, n + 1)) - set(A))
    if not A or not comp or comp[-1] < A[0]:
        return None
    return tuple(comp + A)


# ------------------------------------------------------------------- arrows

def _open(lo, hi, S):
    return {x for x in S if lo < x < hi}


def _f(a, A2: SignedSubset) -> bool:
    S2 = A2.entries
    m2, M2 = A2.m, A2.M
    comp2 = A2.complement()
    if a in S2:
        return True
    if a in comp2 and a not in (-M2, -m2) and -a not in _open(m2, M2, S2):
        return True
    if a in (-M2, -m2):
        both = S2 | {-x for x in S2}
        outside = {x for x in comp2 if x not in both}
        if not (_open(m2, M2, outside) & _open(-M2, -m2, outside)):
            return True
    return False


def bshard_arrow(A1: SignedSubset, A2: SignedSubset) -> bool:
    """Whether the shard of A1 arrows the shard of A2 (A1 != A2)."""
    if A1 == A2:
        return False
    m1, M1, m2, M2 = A1.m, A1.M, A2.m, A2.M
    S1, S2 = A1.entries, A2.entries
    r1 = _open(m1, M1, S1) == _open(m1, M1, S2)
    neg_comp2 = {-x for x in A2.complement()}
    r2 = _open(m1, M1, S1) == _open(m1, M1, neg_comp2)
    if -m1 == M1 < M2 == -m2 and r1:
        return True
    if -m2 == M2 == M1 > m1 > 0 and r1:
        return True
    if M2 == M1 > m1 > m2 != -M2 and r1 and _f(m1, A2):
        return True
    if M2 > M1 > m1 == m2 != -M2 and r1 and _f(M1, A2):
        return True
    if -m2 == M1 > m1 > -M2 != m2 and r2 and _f(-m1, A2):
        return True
    if -m2 > M1 > m1 == -M2 != m2 and r2 and _f(-M1, A2):
        return True
    return False


def shard_digraph(n: int) -> dict[SignedSubset, list[SignedSubset]]:
    subsets = all_signed_subsets(n)
    return {a: [b for b in subsets if bshard_arrow(a, b)] for a in subsets}


def is_acyclic(graph) -> bool:
    try:
        tuple(TopologicalSorter({k: v for k, v in graph.items()}).static_order())
        return True
    except CycleError:
        return False


def transitive_below(graph) -> dict:
    """For each node, the set of nodes reachable from it (itself included)."""
    out = {}
    for start in graph:
        seen, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for u in graph[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        out[start] = frozenset(seen)
    return out


# ------------------------------------------------- finest removed-set predicates

def simion_removed(A: SignedSubset) -> bool:
    return A.m < 0 and A.m != -A.M


def nonhom_removed(A: SignedSubset) -> bool:
    return A.m < -1 and A.M > 1


def delta_removed(A: SignedSubset) -> bool:
    return A.m < -1 and (A.m != -A.M or -1 in A.entries)


def epsilon_removed(A: SignedSubset) -> bool:
    """delta's predicate transported by the antipodal map on shards."""
    m, M = A.m, A.M
    if m < -1 and M > 1 and m != -M:
        return True
    if m == -1 and M > 1:
        return True
    return m == -M and m < -1 and -1 not in A.entries


REMOVED = {"sigma": simion_removed, "nu": nonhom_removed, "delta": delta_removed, "epsilon": epsilon_removed}
