import pytest

from coxlat.errors import CodecError, SizeCapExceeded
from coxlat.weak import enumerate_weak_order, size_cap, weak_order


@pytest.mark.parametrize("label,n,ji", [("A4", 120, 26), ("B4", 384, 76), ("F4", 1152, 236), ("I2:6", 12, 10)])
def test_sizes_and_join_irreducibles(label, n, ji):
    L = weak_order(label)
    assert L.n == n
    assert len(L.join_irreducibles()) == ji


def test_dihedral_join_irreducibles():
    for m in range(2, 9):
        assert len(weak_order(f"I2:{m}").join_irreducibles()) == 2 * (m - 1)


def test_rank_is_length_and_top_is_longest():
    L = weak_order("B3")
    assert all(L.rank[i] == L.length(i) == L.invs[i].bit_count() for i in range(L.n))
    assert L.length(L.top) == 9


def test_antipode_reverses_order():
    L = weak_order("A3")
    a = L.antipode()
    assert sorted(a) == list(range(L.n))
    for i, j, _ in L.covers():
        assert L.leq(a[j], a[i])


def test_cover_reflection_is_new_inversion():
    L = weak_order("H3")
    for i, j, s in L.covers():
        k = L.cover_reflection(i, j)
        assert L.invs[j] == L.invs[i] | (1 << k)


def test_index_of_reduced_rejects_non_reduced():
    L = weak_order("A3")
    assert L.index_of_word("s1s1") == L.bottom
    with pytest.raises(CodecError):
        L.index_of_reduced("s1s1")


def test_size_cap(monkeypatch):
    monkeypatch.setenv("COXLAT_SIZE_CAP", "100")
    assert size_cap() == 100
    with pytest.raises(SizeCapExceeded):
        enumerate_weak_order("B4")


def test_reducible_weak_order_is_product():
    L = weak_order("A2xA1")
    assert L.n == 12
    # hexagon x 2-chain: two hexagons, plus one square per hexagon edge
    sizes = sorted(p.size for p in L.polygons())
    assert sizes == [4] * 6 + [6] * 2
