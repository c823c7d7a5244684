import pytest

from bgauge.algebra import Family, Kind
from bgauge.families import FAMILIES, get_family, recompute_degree


def test_every_family_is_registered():
    assert set(FAMILIES) == set(Family)


def test_sphere_family_degrees_at_p5_n2():
    a = get_family(Family.A)
    b = get_family(Family.B)
    c = get_family(Family.C)
    assert a.degree(2, 5, 1, 0) == 17
    assert a.degree(2, 5, 1, 1) == 89
    assert a.degree(2, 5, 2, 0) == 97
    assert b.degree(2, 5, 1, 1) == 88
    assert c.degree(2, 5, 0) == 2
    assert c.degree(2, 5, 1) == 18


def test_double_loop_family_degrees():
    abar = get_family(Family.ABAR)
    bbar = get_family(Family.BBAR)
    assert [abar.degree(2, 3, k) for k in range(3)] == [3, 11, 35]
    assert [bbar.degree(2, 3, k) for k in range(1, 3)] == [10, 34]


def test_generators_respect_index_minimums_and_truncation():
    gens = get_family(Family.A).generators(2, 5, 100)
    assert [(g.indices, g.degree) for g in gens] == [((1, 0), 17), ((1, 1), 89), ((2, 0), 97)]
    assert all(g.kind is Kind.EXTERIOR for g in gens)

    # B starts at j = 1, so nothing lies below degree 88 for n=2, p=5
    assert get_family(Family.B).generators(2, 5, 87) == []
    assert [g.degree for g in get_family(Family.C).generators(2, 5, 100)] == [2, 18, 98]


def test_type_entry_families():
    x_bg = get_family(Family.X_BG)
    x_g = get_family(Family.X_G)
    assert x_bg.generators(3, 7, 100, slot=2)[0].label == "x_bg[i=2,n=3]"
    assert x_bg.degree(3, 7) == 6
    assert x_g.degree(3, 7) == 5
    assert x_g.generators(3, 7, 4) == []
    assert get_family(Family.LOOP).generators(4, 5, 100)[0].label == "loop[n=4]"


@pytest.mark.parametrize("family", list(Family))
def test_recompute_degree_matches_listed_degree(family):
    rule = get_family(family)
    for g in rule.generators(3, 7, 400):
        assert recompute_degree(g, 7) == g.degree
        assert (g.degree % 2 == 1) == (g.kind is Kind.EXTERIOR)
