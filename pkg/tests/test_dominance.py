from itertools import chain, combinations

import pytest

from coxlat.congruence import congruence_from_labels
from coxlat.dominance import (
    cambrian_refinement_check,
    cartan_edges,
    cartan_matrix,
    containment_check,
    coroot_lattice,
    dominates,
    erase_edges,
    finite_roots,
    induced_hom,
    is_order_ideal,
    translate_partition,
    transpose,
)
from coxlat.errors import DiagramError, VerificationError
from coxlat.homs import eta_signed, verify_hom

CARTAN_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"]


def test_dominance_basics():
    assert dominates(cartan_matrix("B3"), cartan_matrix("A3"))
    assert not dominates(cartan_matrix("A3"), cartan_matrix("B3"))
    assert dominates(cartan_matrix("F4"), cartan_matrix("F4"))
    with pytest.raises(DiagramError):
        cartan_matrix("H3")


def test_positive_root_counts():
    assert finite_roots(cartan_matrix("A2")) == {(1, 0), (0, 1), (1, 1)}
    assert len(finite_roots(cartan_matrix("B3"))) == 9
    assert len(finite_roots(cartan_matrix("G2"))) == 6


@pytest.mark.parametrize("big,small,diff", [
    ("B2", "A2", 1), ("B3", "A3", 3), ("C3", "A3", 3), ("G2", "A2", 3), ("F4", "A4", 14), ("B4", "A4", 6),
])
def test_containment(big, small, diff):
    a, a2 = cartan_matrix(big), cartan_matrix(small)
    assert dominates(a, a2)
    c = containment_check(a, a2)
    assert c.ok
    assert c.root_difference == c.coroot_difference == diff


def test_f4_and_b4_are_incomparable():
    f4, b4 = cartan_matrix("F4"), cartan_matrix("B4")
    assert not dominates(f4, b4) and not dominates(b4, f4)


@pytest.mark.parametrize("label", CARTAN_TYPES)
def test_every_edge_erasure_is_contained(label):
    a = cartan_matrix(label)
    edges = cartan_edges(a)
    for E in chain.from_iterable(combinations(edges, k) for k in range(len(edges) + 1)):
        assert containment_check(a, erase_edges(a, E)).ok


@pytest.mark.parametrize("label", CARTAN_TYPES)
def test_erased_roots_form_an_order_ideal(label):
    a = cartan_matrix(label)
    edges = cartan_edges(a)
    for E in chain.from_iterable(combinations(edges, k) for k in range(1, len(edges) + 1)):
        assert is_order_ideal(a, erase_edges(a, E))


def test_order_ideal_for_dominated_types():
    for big, small in (("B3", "A3"), ("C3", "A3"), ("G2", "A2"), ("F4", "A4")):
        assert is_order_ideal(cartan_matrix(big), cartan_matrix(small))


def test_transposed_b_is_c():
    assert transpose(cartan_matrix("B3")) == cartan_matrix("C3")


def test_coroots_of_f4():
    W = coroot_lattice(cartan_matrix("F4"))
    assert W.model.n_pos == 24 and W.n == 1152


@pytest.mark.parametrize("big,name", [("C3", "sigma"), ("B3", "nu")])
def test_induced_hom_matches_signed_map(big, name):
    h = induced_hom(cartan_matrix(big), cartan_matrix("A3"))
    assert verify_hom(h).ok and h.is_surjective()
    ref = eta_signed(name, 3)
    labels = translate_partition(h, ref.domain)
    assert congruence_from_labels(ref.domain, labels, audit=False) == ref.fibers()


def test_induced_hom_requires_dominance():
    with pytest.raises(VerificationError):
        induced_hom(cartan_matrix("A3"), cartan_matrix("B3"))


def test_g2_to_a2_contracts_three_per_cambrian_lattice():
    h = induced_hom(cartan_matrix("G2"), cartan_matrix("A2"))
    assert len(h.fibers().contracted_ji()) == 6
    from coxlat.cambrian import restrict_hom
    for order in ((0, 1), (1, 0)):
        r = restrict_hom(h, order)
        assert r.source.n - r.target.n == 3


@pytest.mark.parametrize("big", ["B3", "C3", "G2"])
def test_cambrian_refinement(big):
    from coxlat.cambrian import all_coxeter_elements
    a = cartan_matrix(big)
    small = cartan_matrix("A" + big[1])
    W = coroot_lattice(a)
    for order in all_coxeter_elements(W):
        assert cambrian_refinement_check(a, small, order)
