import pytest

from metawhit.rootdata import RootDatum


@pytest.mark.parametrize(
    "name,order",
    [("A1", 2), ("A2", 6), ("A3", 24), ("A4", 120), ("B2", 8), ("C2", 8), ("G2", 12), ("D4", 192), ("B4", 384)],
)
def test_weyl_group_orders(name, order):
    assert len(RootDatum(name).weyl_elements()) == order


def test_unknown_type_rejected():
    with pytest.raises(ValueError):
        RootDatum("E8")


def test_positive_coroots_a2_b2():
    assert RootDatum("A2").positive_coroots() == [(0, 1), (1, 0), (1, 1)]
    assert RootDatum("B2").positive_coroots() == [(0, 1), (1, 0), (1, 1), (2, 1)]


def test_reflections_and_pairing():
    d = RootDatum("A2")
    assert d.reflect(0, (1, 0)) == (-1, 0)
    assert d.reflect(0, (0, 1)) == (1, 1)
    assert d.pairing(0, (2, -1)) == 5
    assert d.is_dominant((1, 1))
    assert d.is_dominant((0, 0))
    # a single simple coroot is not dominant in A2: it pairs to -1 with the
    # other simple root
    assert not d.is_dominant((1, 0))
    assert not d.is_dominant((-1, 2))


def test_braid_relation_a2():
    d = RootDatum("A2")
    assert d.weyl_word((0, 1, 0)) == d.weyl_word((1, 0, 1))
    assert d.weyl_word((0, 0)) == d.weyl_word(())


def test_longest_element():
    d = RootDatum("A2")
    w0 = d.longest_element()
    assert w0.length == 3
    assert w0.act((1, 0)) == (0, -1)
    assert d.inversions(w0) == d.positive_coroots()
    assert d.mul(w0, w0).length == 0


def test_inversion_counts_match_length():
    d = RootDatum("B2")
    for w in d.weyl_elements():
        assert len(d.inversions(w)) == w.length


def test_inverse_and_mul():
    d = RootDatum("A3")
    for w in d.weyl_elements()[:12]:
        assert d.mul(w, d.inv(w)).length == 0
        assert d.inv(w).length == w.length


def test_coroot_orbits():
    b2 = RootDatum("B2")
    assert b2.coroot_orbit_rep((1, 1)) == 0
    assert b2.coroot_orbit_rep((2, 1)) == 1
    a2 = RootDatum("A2")
    assert a2.coroot_orbit_rep((1, 1)) == 0
