"""End-to-end properties of the homology computations, checked exactly."""

import random

import pytest
from sympy import primerange

from bgauge.algebra import Kind, connectivity, poincare
from bgauge.calculator import GaugeCalculator
from bgauge.catalog import (
    Regime,
    anick_t,
    bgk_homology,
    classifying_space_bg,
    group_g,
    loops3_g3,
    mh_odd,
    su2_mod3_bgk,
    verdict,
)
from bgauge.explorer import check_verdict_consistency
from bgauge.families import recompute_degree
from bgauge.groups import catalog_groups, catalog_names, dimension_check, lookup
from bgauge.oracle import monomial_count_oracle
from bgauge.series import exterior_factor, mul

MATRIX = [("SU(2)", 5), ("SU(3)", 7), ("Sp(2)", 11), ("G2", 11)]


@pytest.mark.parametrize("name, p", MATRIX)
@pytest.mark.parametrize("k", [1, 2])
def test_bgk_series_is_the_product_of_its_factors(name, p, k):
    group = lookup(name)
    n = 150
    expected = mul(poincare(loops3_g3(group, p, n)), poincare(classifying_space_bg(group, p, n)))
    assert poincare(bgk_homology(group, p, k, n)) == expected


@pytest.mark.parametrize("name, p", MATRIX)
def test_oracle_agrees_on_the_matrix(name, p):
    group = lookup(name)
    n = 60
    for pres in (
        bgk_homology(group, p, 1, n),
        loops3_g3(group, p, n),
        classifying_space_bg(group, p, n),
    ):
        series = poincare(pres)
        for d in range(n + 1):
            assert monomial_count_oracle(pres, d) == series[d], (pres.tag, d)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_oracle_agrees_on_the_anick_space(p):
    pres = anick_t(p, 60)
    series = poincare(pres)
    assert [monomial_count_oracle(pres, d) for d in range(61)] == list(series)


def test_su2_mod3_quotient_times_the_bottom_class_is_the_anick_space():
    n = 120
    quotient = poincare(su2_mod3_bgk(1, n))
    assert mul(quotient, exterior_factor(3, n)) == poincare(anick_t(3, n))
    assert quotient[3] == 0
    assert poincare(anick_t(3, n))[3] == 1


def test_verdict_matrix():
    v = verdict(lookup("SU(2)"), 5, 7)
    assert v.regime is Regime.FULL_THEOREM
    v = verdict(lookup("SU(2)"), 3, 1)
    assert v.regime is Regime.SU2_MOD3 and v.su2_boundary_order == 12
    v = verdict(lookup("SU(4)"), 5, 1)
    assert v.regime is Regime.P_REGULAR_ONLY and not v.boundary_null
    assert verdict(lookup("SU(2)"), 2, 1).regime is Regime.PRIME_TWO
    assert verdict(lookup("SU(3)"), 7, 7).regime is Regime.P_DIVIDES_K
    assert verdict(lookup("E8"), 13, 1).regime is Regime.NOT_P_REGULAR


def test_regimes_are_consistent_over_the_catalog():
    for group in catalog_groups(max_rank=4):
        for p in primerange(2, 24):
            for k in (1, 2, p, -1):
                v = verdict(group, p, k)
                assert check_verdict_consistency(v) == [], (group.display_name, p, k)


def test_random_presentations_pass_parity_and_degree_checks():
    rng = random.Random(1234)
    groups = catalog_groups()
    primes = list(primerange(3, 50))
    for _ in range(40):
        group = rng.choice(groups)
        regular = [p for p in primes if group.top <= p]
        if not regular:
            continue
        p = rng.choice(regular)
        n = rng.randint(0, 300)
        for pres in (loops3_g3(group, p, n), classifying_space_bg(group, p, n), group_g(group, p, n)):
            for g in pres.generators:
                assert g.degree <= n
                assert (g.degree % 2 == 1) == (g.kind is Kind.EXTERIOR)
                assert recompute_degree(g, p) == g.degree


@pytest.mark.parametrize("p", list(primerange(3, 50)))
def test_anick_space_bottom_degree(p):
    assert connectivity(anick_t(p, 2 * p)) == 2 * p - 3


def test_dimensions_of_named_groups():
    for name in catalog_names(max_su=12, max_sp=8, max_spin=16):
        assert dimension_check(lookup(name)), name
    for name in ("Spin(3)", "Spin(5)", "Spin(6)"):
        assert dimension_check(lookup(name)), name


@pytest.mark.parametrize("name, p", MATRIX)
def test_mh_odd_classes_are_exterior_generators(name, p):
    group = lookup(name)
    loops = loops3_g3(group, p, 150)
    for d in mh_odd(group, p):
        assert d % 2 == 1
        matches = [g for g in loops.generators if g.degree == d and g.kind is Kind.EXTERIOR]
        assert len(matches) == 1, (name, p, d)
    assert mh_odd(lookup("SU(2)"), p) == [2 * p - 3]


@pytest.mark.parametrize(
    "name, p, chern",
    [
        ("SU(3)", 7, [1, 2, 4, 5, -1]),
        ("SU(2)", 5, [1, 2, 4, -1]),
        ("SU(2)", 3, [1, 2, -1]),
    ],
)
def test_bgk_does_not_depend_on_the_chern_class(name, p, chern):
    documents = [
        GaugeCalculator(lookup(name), p, k, 60).compute_document() for k in chern
    ]
    dumps = {
        "".join(space.model_dump_json() for space in doc.spaces.values())
        for doc in documents
    }
    assert len(dumps) == 1
