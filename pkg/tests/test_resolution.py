from itertools import permutations

import pytest

from matroidres.corpus import five_point_matroid, ordering_matroid
from matroidres.errors import HeightTooSmall, IsMinimumGenerator, NotABasis, NotSquarefree, SearchBoundExceeded
from matroidres.homology import hochster_betti
from matroidres.matroid import fano, uniform
from matroidres.monomials import Monomial, MonomialIdeal, height, sf_power
from matroidres.resolution import (
    circuit_axiom_violation,
    colon_ideal_CN,
    colon_matroid,
    contraction_order,
    default_basis,
    linear_quotients_check,
    mapping_cone_betti,
    matroidal_check,
    minimality_violations,
    regularity_and_level,
    theorem_B_check,
)
from matroidres.symbolic import cover_ideal, sf_ell
from matroidres.verify import ordering_choices

x = Monomial.of


def test_ordering_example():
    order = contraction_order(ordering_matroid(), (1, 2, 3))
    assert order.ordered_gens == (x(3, 4, 5), x(2, 3), x(2, 4, 5), x(1, 2), x(1, 3), x(1, 4, 5))
    assert order.index(x(2, 4, 5)) == 1 and order.index(x(3, 4, 5)) == 2
    assert [g for g in order.ordered_gens if order.index(g) == 2] == [x(3, 4, 5)]


def test_minimum_is_unique_top_index(corpus):
    for _, m in corpus.matroids:
        for order in ordering_choices(m, seed=5):
            top = len(order.ordered_basis) - 1
            assert [g for g in order.ordered_gens if order.index(g) == top] == [order.minimum]


def test_filtration_is_decreasing(corpus):
    for _, m in corpus.matroids[:20]:
        order = contraction_order(m, default_basis(m))
        ideals = order.filtration_ideals
        assert ideals[-1].is_zero
        for a, b in zip(ideals, ideals[1:]):
            assert b.gen_set <= a.gen_set


def test_not_a_basis():
    with pytest.raises(NotABasis):
        contraction_order(uniform(2, 3), (1,))
    with pytest.raises(NotABasis):
        contraction_order(fano(), (1, 2, 4))


def test_seeded_tie_break_is_reproducible():
    f = fano()
    a = contraction_order(f, (1, 2, 3), "seed:11").ordered_gens
    assert a == contraction_order(f, (1, 2, 3), "seed:11").ordered_gens


def test_colon_examples():
    u = uniform(2, 3)
    order = contraction_order(u, (1, 2))
    assert order.ordered_gens == (x(2, 3), x(1, 2), x(1, 3))
    assert colon_ideal_CN(order, x(1, 3)) == MonomialIdeal((x(2),))
    assert colon_ideal_CN(order, x(1, 2)) == MonomialIdeal((x(3),))
    assert cover_ideal(colon_matroid(order, x(1, 3))) == MonomialIdeal((x(2),))
    with pytest.raises(IsMinimumGenerator):
        colon_ideal_CN(order, x(2, 3))
    order = contraction_order(uniform(3, 4), (4, 3, 2))
    assert order.ordered_gens[:4] == (x(1, 2), x(1, 3), x(2, 3), x(1, 4))
    assert colon_ideal_CN(order, x(1, 4)) == MonomialIdeal.from_supports([{2}, {3}])


def test_every_colon_is_matroidal(corpus):
    for _, m in corpus.matroids:
        order = contraction_order(m, default_basis(m))
        for g in order.ordered_gens[1:]:
            c = colon_ideal_CN(order, g)
            assert circuit_axiom_violation(c.supports) is None
            if height(c) >= 2:
                assert matroidal_check(c).matroidal


def test_mapping_cone_examples():
    u = uniform(2, 3)
    t = mapping_cone_betti(contraction_order(u, (1, 2)))
    assert t.multiset(1) == {x(1, 2): 1, x(1, 3): 1, x(2, 3): 1}
    assert t.multiset(2) == {x(1, 2, 3): 2}
    order = contraction_order(uniform(3, 4), (4, 3, 2))
    t = mapping_cone_betti(order, x(1, 4))
    assert t.multiset(2) == {x(1, 2, 3): 2, x(1, 2, 4): 1, x(1, 3, 4): 1}
    prefix = MonomialIdeal.from_supports([{1, 2}, {1, 3}, {2, 3}, {1, 4}])
    assert t == hochster_betti(prefix)
    assert "x2*x3*x4" not in {str(m) for m in t.support(2)}


def test_first_row_is_generators(corpus):
    for _, m in corpus.matroids:
        t = mapping_cone_betti(contraction_order(m, default_basis(m)))
        assert t.multiset(1) == {g: 1 for g in cover_ideal(m).gens}


def test_minimality_shifts_are_sf_generators(corpus):
    for _, m in corpus.matroids:
        for order in ordering_choices(m, seed=2):
            assert minimality_violations(order) == []


def test_theorem_B_examples():
    for m in (uniform(2, 3), five_point_matroid(), fano()):
        rep = theorem_B_check(m)
        assert rep["passed"] and len(rep["rows"]) == m.rank_
    assert theorem_B_check(uniform(2, 3))["rows"][1]["sf_gens"] == 1


def test_shift_composition(corpus):
    # the h-th shifts of SF_a(J) are G(SF_{a+h-1}(J))
    for _, m in corpus.matroids[:30]:
        for a in range(1, m.rank_ + 1):
            t = hochster_betti(sf_ell(m, a))
            for h in range(1, m.rank_ - a + 2):
                assert t.support(h) == sf_ell(m, a + h - 1).gen_set
            for b in range(1, 3):
                assert sf_power(sf_ell(m, a), b) == sf_ell(m, a + b - 1)


def test_matroidal_check_examples():
    assert matroidal_check(cover_ideal(uniform(2, 3))).matroidal
    v = matroidal_check(MonomialIdeal.from_supports([{1, 2}, {1, 3}, {3, 4}, {4, 5}, {2, 3, 5}]))
    assert not v.matroidal and v.pair == (x(1, 2), x(1, 3))
    assert v.lcm == x(1, 2, 3) and v.prime == (1, 4, 5)
    v = matroidal_check(MonomialIdeal.from_supports([{1, 2}, {1, 3}, {2, 3}, {1, 4}]))
    assert not v.matroidal and v.circuit_axioms is False
    with pytest.raises(HeightTooSmall):
        matroidal_check(MonomialIdeal.from_supports([{1, 2}, {1, 3}]))
    with pytest.raises(NotSquarefree):
        matroidal_check(MonomialIdeal((Monomial.from_dict({1: 2, 2: 1}),)))


def test_regularity_examples():
    assert regularity_and_level(uniform(2, 3)) == (1, 2)
    assert regularity_and_level(five_point_matroid())[0] == 2
    assert regularity_and_level(fano())[0] == 4


def test_linear_quotients_examples():
    j = cover_ideal(uniform(2, 3))
    assert linear_quotients_check(j, "given-order", [x(1, 2), x(1, 3), x(2, 3)])[0]
    assert linear_quotients_check(cover_ideal(fano()), "search-all") == (False, None)
    assert linear_quotients_check(MonomialIdeal((x(1, 2),)), "search-all")[0]
    assert linear_quotients_check(MonomialIdeal((x(1, 2),)))[0]


def test_fano_fails_every_permutation():
    j = cover_ideal(fano())
    assert all(not linear_quotients_check(j, "given-order", p)[0] for p in permutations(j.gens))


def test_search_witness_is_valid():
    for r, n in ((2, 4), (3, 5), (2, 6)):
        j = cover_ideal(uniform(r, n))
        ok, order = linear_quotients_check(j, "search-all")
        assert ok and linear_quotients_check(j, "given-order", order)[0]


def test_search_bound():
    j = MonomialIdeal.from_supports([{i, i + 1} for i in range(1, 20)])
    with pytest.raises(SearchBoundExceeded):
        linear_quotients_check(j, "search-all", max_generators=16)
