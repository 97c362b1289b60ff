import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxlat.coxeter import (
    build_diagram,
    coordinate_roots,
    dihedral_model,
    generate_roots,
    parabolic_factor,
    roots_from_matrix,
)
from coxlat.errors import CodecError, DiagramError, UnsupportedRingError
from coxlat.golden import PHI, Golden


@pytest.mark.parametrize("label,order,roots", [
    ("A1", 2, 1), ("A3", 24, 6), ("B3", 48, 9), ("D4", 192, 12), ("H3", 120, 15),
    ("F4", 1152, 24), ("G2", 12, 6), ("I2:7", 14, 7), ("A2xA1", 12, 4), ("E6", 51840, 36),
])
def test_root_counts_match_degrees(label, order, roots):
    d = build_diagram(label)
    model = generate_roots(d)
    assert d.group_order() == order
    assert model.n_pos == roots == d.n_reflections()


def test_generator_names():
    assert build_diagram("B3").names == ("s0", "s1", "s2")
    assert build_diagram("A3").names == ("s1", "s2", "s3")
    assert build_diagram("H3").names == ("q", "r", "s")
    assert build_diagram("F4").names == ("p", "q", "r", "s")
    assert build_diagram("I2:5").names == ("r", "s")


def test_matrix_input_and_restriction():
    d = build_diagram([[1, 4, 2], [4, 1, 3], [2, 3, 1]])
    assert d.component_types[0].label == "B3"
    sub = d.restrict([1, 2])
    assert sub.component_types[0].family == "A"
    assert sub.names == ("s2", "s3")


@pytest.mark.parametrize("bad", [
    [[1, 3, 3], [3, 1, 3], [3, 3, 1]],        # affine A2
    [[1, 4, 2], [4, 1, 4], [2, 4, 1]],        # affine C2
    [[1, 3], [2, 1]],                         # not symmetric
])
def test_infinite_or_malformed_diagrams_rejected(bad):
    with pytest.raises(DiagramError):
        build_diagram(bad)


def test_unparseable_label():
    with pytest.raises(DiagramError):
        build_diagram("Z4")


def test_parse_word_and_erase():
    d = build_diagram("B3")
    assert d.parse_word("s0s1s0") == (0, 1, 0)
    assert d.parse_word("s0,s2") == (0, 2)
    with pytest.raises(CodecError):
        d.parse_word("s7")
    e = d.erase([(0, 1)])
    assert len(e.components()) == 2
    with pytest.raises(DiagramError):
        d.erase([(0, 2)])


def test_dihedral_model_has_2m_roots():
    for m in range(2, 10):
        model = dihedral_model(m)
        assert model.n_pos == m
        # s_r s_s has order m on roots
        perm = model.perm_of_word((0, 1) * m)
        assert perm == model.identity_perm()
        assert model.perm_of_word((0, 1)) != model.identity_perm()


def test_coordinate_roots_rings():
    assert len(coordinate_roots(build_diagram("H3"))) == 15
    assert len(coordinate_roots(build_diagram("G2"))) == 6
    with pytest.raises(UnsupportedRingError):
        coordinate_roots(build_diagram("I2:7"))


def test_golden_arithmetic():
    assert PHI * PHI == PHI + 1
    assert (PHI - 2).sign() == -1
    assert (PHI - 1).sign() == 1
    assert Golden(3, -2).sign() == -1  # 3 - 2*1.618...
    x = Golden(-5, 3)
    assert x.sign() == (1 if float(x) > 0 else -1)


def test_roots_are_positive_or_negative():
    for r in roots_from_matrix([[2, -1], [-3, 2]]):
        assert all(c >= 0 for c in r)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=14))
def test_inversion_set_size_is_length(word):
    model = generate_roots(build_diagram("H3"))
    w = model.element(tuple(word))
    assert w.inv.bit_count() == len(w.word)
    assert model.inv_of_word(w.word) == w.inv
    assert len(w.word) <= len(word) and (len(word) - len(w.word)) % 2 == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=16), st.sets(st.integers(0, 3)))
def test_parabolic_factor_is_length_additive(word, J):
    model = generate_roots(build_diagram("B4"))
    w = model.element(tuple(word))
    wj, rest = parabolic_factor(model, w, J)
    assert set(wj.word) <= J
    assert wj.length + rest.length == w.length
    # ^J w has no left descents in J
    assert not set(model.left_descents(rest.inv)) & J


def test_reflection_word_is_palindromic():
    model = generate_roots(build_diagram("F4"))
    for k in range(model.n_pos):
        word = model.reflection_word(k)
        assert word == tuple(reversed(word))
        assert model.inv_of_word(word) >> k & 1


def test_group_order_formula_d_and_b():
    for n in range(2, 7):
        assert build_diagram(f"B{n}").group_order() == 2 ** n * math.factorial(n)
    for n in range(4, 7):
        assert build_diagram(f"D{n}").group_order() == 2 ** (n - 1) * math.factorial(n)
