"""Surjective lattice homomorphisms between weak orders."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .congruence import Congruence, congruence_from_labels, generated_by, quotient
from .coxeter import alt_word, parabolic_factor
from .errors import CodecError, VerificationError
from .lattice import isomorphic
from .perms import format_one_line, index_of_perm, one_line_table, parse_one_line, perm_decode, perm_encode
from .weak import WeakOrderLattice, enumerate_weak_order, weak_order


@dataclass
class LatticeHom:
    domain: WeakOrderLattice
    codomain: object
    map: np.ndarray
    kind: str = ""
    params: dict = field(default_factory=dict)

    def __call__(self, i: int) -> int:
        return int(self.map[i])

    def fibers(self) -> Congruence:
        return congruence_from_labels(self.domain, self.map, audit=False)

    def is_surjective(self) -> bool:
        return len(set(self.map.tolist())) == self.codomain.n

    def is_compressive(self) -> bool:
        atoms = self.domain.atoms()
        images = [int(self.map[a]) for a in atoms]
        return self.is_surjective() and sorted(images) == sorted(self.codomain.atoms())


@dataclass
class HomCertificate:
    ok: bool
    pairs_checked: int
    counterexample: tuple | None = None


def verify_hom(h: LatticeHom, samples: int | None = None, seed: int = 0) -> HomCertificate:
    """Check meet and join preservation, exhaustively or on random pairs."""
    D, C, f = h.domain, h.codomain, h.map
    if samples is None:
        Md, Jd = D.meet_table(), D.join_table()
        Mc, Jc = C.meet_table(), C.join_table()
        fm = f[Md]
        bad = np.argwhere(fm != Mc[f[:, None], f[None, :]])
        if len(bad):
            x, y = bad[0]
            return HomCertificate(False, D.n ** 2, (int(x), int(y), "meet"))
        bad = np.argwhere(f[Jd] != Jc[f[:, None], f[None, :]])
        if len(bad):
            x, y = bad[0]
            return HomCertificate(False, D.n ** 2, (int(x), int(y), "join"))
        return HomCertificate(True, D.n ** 2)
    rng = np.random.default_rng(seed)
    xs = rng.integers(0, D.n, samples).tolist()
    ys = rng.integers(0, D.n, samples).tolist()
    fl = f.tolist()
    Mc, Jc = C.meet_table(), C.join_table()
    ds, us = D.downset, D.upset
    for x, y in zip(xs, ys):
        m = (ds[x] & ds[y]).bit_length() - 1
        b = us[x] & us[y]
        j = (b & -b).bit_length() - 1
        fx, fy = fl[x], fl[y]
        if fl[m] != Mc[fx, fy]:
            return HomCertificate(False, samples, (x, y, "meet"))
        if fl[j] != Jc[fx, fy]:
            return HomCertificate(False, samples, (x, y, "join"))
    return HomCertificate(True, samples)


def compose(g: LatticeHom, h: LatticeHom) -> LatticeHom:
    return LatticeHom(h.domain, g.codomain, g.map[h.map], f"{g.kind}*{h.kind}")


# ------------------------------------------------------- parabolic and erasing

def _component_word(word, comp):
    keep = set(comp)
    return tuple(s for s in word if s in keep)


def eta_parabolic(L: WeakOrderLattice, J) -> LatticeHom:
    """w -> w_J onto the weak order of the standard parabolic W_J."""
    J = sorted(J)
    target = enumerate_weak_order(L.diagram.restrict(J))
    pos = {g: k for k, g in enumerate(J)}
    mask = L.model.parabolic_mask(J)
    memo = {}
    out = np.empty(L.n, dtype=np.int64)
    for i, inv in enumerate(L.invs):
        key = inv & mask
        if key not in memo:
            word = L.model.reduced_word(key)
            memo[key] = target.index_of_word(tuple(pos[s] for s in word))
        out[i] = memo[key]
    return LatticeHom(L, target, out, "parabolic", {"J": tuple(J)})


def eta_edge_erasing(L: WeakOrderLattice, E) -> LatticeHom:
    """Projection onto the product of parabolics over the components left after erasing E."""
    erased = L.diagram.erase(E)
    target = enumerate_weak_order(erased)
    comps = erased.components()
    masks = [L.model.parabolic_mask(c) for c in comps]
    memo = {}
    out = np.empty(L.n, dtype=np.int64)
    for i, inv in enumerate(L.invs):
        key = tuple(inv & m for m in masks)
        if key not in memo:
            word = tuple(s for part in key for s in L.model.reduced_word(part))
            memo[key] = target.index_of_word(word)
        out[i] = memo[key]
    return LatticeHom(L, target, out, "edge-erasing", {"E": tuple(map(tuple, E))})


def _factor_strings(diagram, wJ_word, comps):
    parts = []
    for comp in comps:
        sub = diagram.restrict(comp)
        pos = {g: k for k, g in enumerate(comp)}
        parts.append(perm_encode(sub, tuple(pos[s] for s in _component_word(wJ_word, comp))))
    return tuple(parts)


def parabolic_strings(diagram, perm_text: str, J) -> tuple[str, ...]:
    """One-line notation of each component factor of w_J (no enumeration needed)."""
    from .coxeter import generate_roots
    model = generate_roots(diagram)
    w = model.element(perm_decode(diagram, perm_text))
    wj, _ = parabolic_factor(model, w, J)
    comps = diagram.restrict(sorted(J)).components()
    J = sorted(J)
    comps = [tuple(J[k] for k in c) for c in comps]
    return _factor_strings(diagram, wj.word, comps)


def edge_erasing_strings(diagram, perm_text: str, E) -> tuple[str, ...]:
    from .coxeter import generate_roots
    model = generate_roots(diagram)
    w = model.element(perm_decode(diagram, perm_text))
    comps = diagram.erase(E).components()
    word = ()
    for c in comps:
        word += model.reduced_word(w.inv & model.parabolic_mask(c))
    return _factor_strings(diagram, word, comps)


# ------------------------------------------------------ signed-permutation maps

def sigma_map(pi):
    seq = [-x for x in reversed(pi)] + [0] + list(pi)
    return tuple(x + 1 for x in seq if x >= 0)


def nu_map(pi):
    seq = [-x for x in reversed(pi)] + list(pi)
    return tuple((0 if x == -1 else x) + 1 for x in seq if x >= -1)


def delta_map(pi):
    return sigma_map(pi) if 1 in pi else nu_map(pi)


def epsilon_map(pi):
    return nu_map(pi) if 1 in pi else sigma_map(pi)


SIGNED_MAPS = {"sigma": sigma_map, "nu": nu_map, "delta": delta_map, "epsilon": epsilon_map}

# generators of the fibre congruences, as words in s0..s_{n-1}
FIBER_GENERATORS = {
    "sigma": ["s0s1", "s1s0s1"],
    "nu": ["s0s1s0", "s1s0", "s1s0s1s2", "s2s1s0s1s2"],
    "delta": ["s0s1s0", "s1s0s1"],
    "epsilon": ["s0s1", "s1s0"],
}


def apply_signed(name: str, text: str) -> str:
    pi = parse_one_line(text)
    n = len(pi)
    if sorted(abs(x) for x in pi) != list(range(1, n + 1)):
        raise CodecError(f"{text} is not a signed permutation")
    return format_one_line(SIGNED_MAPS[name](pi))


def eta_signed(name: str, n: int) -> LatticeHom:
    """One of the maps sigma, nu, delta, epsilon from B_n onto S_{n+1}."""
    B, A = weak_order(f"B{n}"), weak_order(f"A{n}")
    f = SIGNED_MAPS[name]
    out = np.array([index_of_perm(A, f(p)) for p in one_line_table(B)], dtype=np.int64)
    return LatticeHom(B, A, out, name, {"n": n})


def fiber_generators(L: WeakOrderLattice, name: str) -> list[int]:
    """Generators of the fibre congruence; those using absent generators are dropped (n=2)."""
    out = []
    for w in FIBER_GENERATORS[name]:
        try:
            word = L.diagram.parse_word(w)
        except CodecError:
            continue
        out.append(L.index_of_reduced(word))
    return out


def eta_sigma(n):
    return eta_signed("sigma", n)


def eta_nu(n):
    return eta_signed("nu", n)


def eta_delta(n):
    return eta_signed("delta", n)


def eta_epsilon(n):
    return eta_signed("epsilon", n)


# ------------------------------------------------------------ from congruences

def hom_from_congruence(L: WeakOrderLattice, theta: Congruence, target, pin_atoms=True):
    """The hom L -> target with fibres theta, if L/theta is isomorphic to target.

    With ``pin_atoms`` the isomorphism must send the class of each atom s to
    the atom of target labelled by the same generator index.
    """
    Q = quotient(L, theta).lattice
    pinned = None
    if pin_atoms:
        t_atom = {lab: j for j, lab in target.up[target.bottom]}
        pinned = {}
        for j, lab in L.up[L.bottom]:
            c = int(theta.class_of[j])
            if c == int(theta.class_of[L.bottom]):
                continue
            if lab not in t_atom:
                return None
            pinned[c] = t_atom[lab]
    iso = isomorphic(Q, target, pinned)
    if iso is None:
        return None
    f = np.array(iso, dtype=np.int64)[theta.class_of]
    return LatticeHom(L, target, f, "quotient")


def dihedral_alts(L: WeakOrderLattice, r: int, s: int) -> tuple[list[int], list[int]]:
    """The join-irreducibles alt_k(r,s) and alt_k(s,r), k = 2..m-1."""
    m = L.diagram.m(r, s)
    a = [L.index_of_reduced(alt_word(r, s, k)) for k in range(2, m)]
    b = [L.index_of_reduced(alt_word(s, r, k)) for k in range(2, m)]
    return a, b


def dihedral_homs(m: int, m2: int) -> list[LatticeHom]:
    """All compressive homs I2(m) -> I2(m2): choose m-m2 alternating elements on each side."""
    L = enumerate_weak_order(f"I2:{m}")
    T = enumerate_weak_order(f"I2:{m2}")
    left, right = dihedral_alts(L, 0, 1)
    out = []
    for A in combinations(left, m - m2):
        for B in combinations(right, m - m2):
            theta = generated_by(L, list(A) + list(B))
            h = hom_from_congruence(L, theta, T)
            if h is None:
                raise VerificationError(f"dihedral choice {A},{B} does not give I2({m2})")
            h.kind = "dihedral"
            h.params = {"contracted": [L.names[x] for x in A + B]}
            out.append(h)
    if len(out) != comb(m - 2, m - m2) ** 2:
        raise VerificationError("dihedral hom count disagrees with the binomial formula")
    return out


def factor_check_parabolic(h: LatticeHom) -> bool:
    """Check h = h|W_J o eta_J with J the generators not sent to the bottom."""
    L = h.domain
    bot = h.codomain.bottom
    atoms = {lab: j for j, lab in L.up[L.bottom]}
    J = [s for s, j in atoms.items() if h(j) != bot]
    images = {h(j) for j in atoms.values()}
    if not images <= set(h.codomain.atoms()) | {bot}:
        return False
    mask = L.model.parabolic_mask(J)
    for i, inv in enumerate(L.invs):
        if h(i) != h(L.index_of_inv[inv & mask]):
            return False
    inner = L.parabolic_elements(J)
    ims = {h(i) for i in inner}
    return len(ims) == h.codomain.n and len({h(atoms[s]) for s in J}) == len(J)
