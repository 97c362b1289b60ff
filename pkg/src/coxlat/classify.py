"""Classification of compressive (and general surjective) homomorphisms between weak orders.

A compressive hom W -> W' (same generators, m'(r,s) <= m(r,s)) is pinned
down by its restrictions to rank-two parabolics, where it must contract
m - m' of the elements alt_k(r,s) and m - m' of the alt_k(s,r).  For each
such assignment we add whatever the proper parabolics force (recursively),
take the generated congruence, and if the quotient is still too large we
search ideals of the forcing poset made of full-support join-irreducibles.
Each candidate is accepted only if the quotient is isomorphic to W' with
atoms matched to atoms.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations, permutations, product

import numpy as np

from .congruence import Congruence, forcing_poset, generated_by, homogeneous_degree, quotient
from .coxeter import CoxeterDiagram, alt_word
from .errors import VerificationError
from .homs import LatticeHom, dihedral_alts, eta_parabolic, hom_from_congruence
from .lattice import isomorphic, posets_isomorphic
from .weak import WeakOrderLattice, enumerate_weak_order, weak_order

SEARCH_LIMIT = 5000  # lattices larger than this are not searched beyond generated congruences


@dataclass
class ClassifiedHom:
    assignment: tuple[str, ...]  # chosen alternating elements, as words
    congruence: Congruence
    hom: LatticeHom
    generators: list[str] = field(default_factory=list)
    degree: int | None = None
    searched: bool = False

    def as_dict(self) -> dict:
        return {
            "assignment": list(self.assignment),
            "generators": self.generators,
            "degree": self.degree,
            "classes": self.congruence.n_classes,
            "search_used": self.searched,
        }


def _check_pair(L: WeakOrderLattice, T: WeakOrderLattice):
    if L.diagram.rank != T.diagram.rank:
        raise VerificationError("compressive homs need the same number of generators")
    n = L.diagram.rank
    for i in range(n):
        for j in range(i + 1, n):
            if T.diagram.m(i, j) > L.diagram.m(i, j):
                raise VerificationError(
                    f"m'({T.diagram.names[i]},{T.diagram.names[j]}) exceeds m; no compressive hom")


def dihedral_assignments(L: WeakOrderLattice, T: WeakOrderLattice):
    """All choices of m - m' alternating elements on each side of each edge."""
    per_edge = []
    for r, s in L.diagram.edges():
        k = L.diagram.m(r, s) - T.diagram.m(r, s)
        left, right = dihedral_alts(L, r, s)
        per_edge.append([a + b for a in combinations(left, k) for b in combinations(right, k)])
    for choice in product(*per_edge):
        yield tuple(x for part in choice for x in part)


@lru_cache(maxsize=64)
def lattice_of(diagram: CoxeterDiagram) -> WeakOrderLattice:
    return enumerate_weak_order(diagram)


def _translate(L_sub: WeakOrderLattice, K, L: WeakOrderLattice, elements):
    return [L.index_of_word(tuple(K[s] for s in L_sub.words[e])) for e in elements]


def _restrict_assignment(L, K, L_sub, assignment):
    Kset = set(K)
    pos = {g: k for k, g in enumerate(K)}
    out = []
    for x in assignment:
        if set(L.words[x]) <= Kset:
            out.append(L_sub.index_of_word(tuple(pos[s] for s in L.words[x])))
    return tuple(out)


def resolve(L: WeakOrderLattice, T: WeakOrderLattice, assignment, search: bool = True, _depth=0):
    """Congruences with the given dihedral assignment whose quotient is T (atoms pinned)."""
    n = L.diagram.rank
    gens = list(assignment)
    searched = False
    if n >= 3:
        for drop in range(n):
            K = tuple(i for i in range(n) if i != drop)
            L_sub = lattice_of(L.diagram.restrict(K))
            T_sub = lattice_of(T.diagram.restrict(K))
            sub_assign = _restrict_assignment(L, K, L_sub, assignment)
            found, sub_searched = resolve(L_sub, T_sub, sub_assign, search, _depth + 1)
            searched |= sub_searched
            if not found:
                return [], searched
            if len(found) > 1:
                raise VerificationError("parabolic restriction is not unique")
            theta_k = found[0]
            extra = sorted(theta_k.contracted_ji())
            gens += _translate(L_sub, K, L, extra)
    theta = generated_by(L, gens)
    if theta.n_classes < T.n:
        return [], searched
    if theta.n_classes == T.n:
        h = hom_from_congruence(L, theta, T)
        return ([theta] if h is not None else []), searched
    if not search or L.n > SEARCH_LIMIT:
        return [], searched
    return _search(L, T, theta), True


def _search(L, T, theta):
    F = forcing_poset(L)
    FT = forcing_poset(T)
    contracted = theta.contracted_ji()
    R = [j for j in F.elements if j not in contracted]
    k = len(R) - len(FT.elements)
    if k <= 0:
        return []
    full = set(range(L.diagram.rank))
    Rset = set(R)
    lower = {j: (F.below[j] & Rset) - {j} for j in R}
    cands = [j for j in R if set(L.words[j]) == full and all(set(L.words[x]) == full for x in lower[j])]
    cands.sort(key=lambda j: (len(lower[j]), j))
    t_pairs = FT.strict_pairs()
    t_pos = {e: i for i, e in enumerate(FT.elements)}
    t_rel = [(t_pos[a], t_pos[b]) for a, b in t_pairs]
    results = []

    def accept(D):
        rest = [j for j in R if j not in D]
        pos = {e: i for i, e in enumerate(rest)}
        rel = [(pos[a], pos[b]) for b in rest for a in F.below[b] if a != b and a in pos]
        if posets_isomorphic(len(rest), rel, len(FT.elements), t_rel) is None:
            return
        gens = sorted(contracted | set(D))
        th = generated_by(L, gens)
        if th.n_classes == T.n and hom_from_congruence(L, th, T) is not None:
            if th not in results:
                results.append(th)

    def grow(D, start):
        if len(D) == k:
            accept(D)
            return
        for idx in range(start, len(cands)):
            e = cands[idx]
            if lower[e] <= D:
                D.add(e)
                grow(D, idx + 1)
                D.remove(e)

    grow(set(), 0)
    return results


def classify_compressive(L, T, search: bool = True) -> list[ClassifiedHom]:
    """Every compressive hom L -> T, one per successful dihedral assignment."""
    L = weak_order(L) if isinstance(L, str) else L
    T = weak_order(T) if isinstance(T, str) else T
    _check_pair(L, T)
    out = []
    for assignment in dihedral_assignments(L, T):
        found, searched = resolve(L, T, assignment, search)
        if len(found) > 1:
            raise VerificationError("more than one hom for a single dihedral assignment")
        for theta in found:
            h = hom_from_congruence(L, theta, T)
            h.kind = "compressive"
            rec = ClassifiedHom(tuple(L.names[x] for x in assignment), theta, h, searched=searched)
            if L.n <= SEARCH_LIMIT:
                hg = homogeneous_degree(L, theta)
                rec.generators = [L.names[g] for g in hg.generators]
                rec.degree = hg.degree
            out.append(rec)
    return out


def _relabelled_target(T: WeakOrderLattice, J, f) -> CoxeterDiagram:
    orders = tuple(tuple(1 if a == b else T.diagram.m(f[a], f[b]) for b in J) for a in J)
    return CoxeterDiagram(orders, tuple(T.diagram.names[f[a]] for a in J), "")


def classify_surjective(L, T, search: bool = True) -> list[LatticeHom]:
    """All surjective homs L -> T: delete generators, biject onto T's, then compress."""
    L = weak_order(L) if isinstance(L, str) else L
    T = weak_order(T) if isinstance(T, str) else T
    n, n2 = L.diagram.rank, T.diagram.rank
    seen, out = set(), []
    for J in combinations(range(n), n2):
        for image in permutations(range(n2)):
            f = dict(zip(J, image))
            if any(T.diagram.m(f[a], f[b]) > L.diagram.m(a, b) for a, b in combinations(J, 2)):
                continue
            par = eta_parabolic(L, J)
            LJ = par.codomain
            TJ = lattice_of(_relabelled_target(T, J, f))
            to_T = np.array([T.index_of_word(tuple(f[J[s]] for s in w)) for w in TJ.words])
            for rec in classify_compressive(LJ, TJ, search):
                m = to_T[rec.hom.map[par.map]]
                key = m.tobytes()
                if key not in seen:
                    seen.add(key)
                    out.append(LatticeHom(L, T, m, "surjective", {"J": J, "image": image}))
    return out


# ------------------------------------------------------------ worked cases

def load_cases() -> list[dict]:
    text = resources.files("coxlat").joinpath("data/paper_cases.json").read_text()
    return json.loads(text)["cases"]


@dataclass
class CaseResult:
    case_id: str
    ok: bool
    detail: str
    seconds: float


def verify_case(case: dict) -> CaseResult:
    """Rebuild one documented hom from its generator list and check the quotient."""
    t0 = time.perf_counter()
    L, T = weak_order(case["source"]), weak_order(case["target"])
    try:
        if "initial" in case:
            th0 = generated_by(L, [L.index_of_reduced(w) for w in case["initial"]])
            if th0.n_classes != case["initial_size"]:
                return CaseResult(case["id"], False, f"initial quotient has {th0.n_classes} elements",
                                  time.perf_counter() - t0)
        theta = generated_by(L, [L.index_of_reduced(w) for w in case["generators"]])
        Q = quotient(L, theta).lattice
        expect = case["expect"]
        if expect == "isomorphic":
            ok = hom_from_congruence(L, theta, T) is not None
            detail = f"{theta.n_classes} classes, quotient {'is' if ok else 'is NOT'} {T.label}"
        else:
            size_ok = case.get("size") is None or theta.n_classes == case["size"]
            ok = size_ok and isomorphic(Q, T) is None
            detail = f"{theta.n_classes} classes, not isomorphic to {T.label}"
    except VerificationError as exc:
        ok, detail = False, str(exc)
    return CaseResult(case["id"], ok, detail, time.perf_counter() - t0)


def verify_suite(suite: str) -> list[CaseResult]:
    return [verify_case(c) for c in load_cases() if c["suite"] == suite]


def compressive_census(L, T) -> dict:
    """Summary used by the CLI report."""
    recs = classify_compressive(L, T)
    return {
        "source": (weak_order(L) if isinstance(L, str) else L).label,
        "target": (weak_order(T) if isinstance(T, str) else T).label,
        "count": len(recs),
        "homs": [r.as_dict() for r in recs],
    }


def alt_elements(L: WeakOrderLattice, r: int, s: int) -> list[str]:
    m = L.diagram.m(r, s)
    return [L.diagram.word_str(alt_word(r, s, k)) for k in range(2, m)]
