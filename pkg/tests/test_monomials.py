import pytest

from matroidres.errors import ZeroIdeal
from matroidres.matroid import uniform
from matroidres.monomials import (
    Monomial,
    MonomialIdeal,
    height,
    ideal_minimalize,
    min_primes,
    mono_ops,
    sf_part,
    sf_power,
    standard_form,
)
from matroidres.symbolic import cover_ideal, sf_ell, stanley_reisner_ideal, symbolic_power

x = Monomial.of


def test_standard_form_examples():
    assert standard_form(Monomial.from_dict({1: 2, 2: 2, 3: 1})).parts == (x(1, 2, 3), x(1, 2))
    assert standard_form(x(1, 2, 3)).parts == (x(1, 2, 3),)
    assert standard_form(Monomial.from_dict({1: 2, 2: 2})).parts == (x(1, 2), x(1, 2))


def test_mono_ops_examples():
    assert mono_ops(x(1, 2), x(1, 3), "lcm") == x(1, 2, 3)
    assert mono_ops(x(2, 3), x(1, 3), "colon") == x(2)
    assert mono_ops(x(1, 2), x(1, 2, 4), "divides") is True
    assert mono_ops(x(1, 2), x(1, 3), "gcd") == x(1)


def test_minimalize_examples():
    assert ideal_minimalize([x(1, 2), x(1, 2, 3)]).gens == (x(1, 2),)
    sq = Monomial.from_dict
    raw = [x(1, 2, 3), sq({1: 2, 2: 2}), sq({1: 2, 3: 2}), sq({2: 2, 3: 2}), sq({1: 2, 2: 2, 3: 1})]
    assert set(ideal_minimalize(raw).gens) == set(raw[:4])
    assert ideal_minimalize([]).is_zero


def test_colon_examples():
    assert MonomialIdeal((x(1, 2),)).colon(x(3)) == MonomialIdeal((x(1, 2),))
    j = cover_ideal(uniform(2, 3))
    assert j.colon(x(3)) == MonomialIdeal.from_supports([{1}, {2}])
    assert MonomialIdeal.from_supports([{2, 3}, {1, 2}]).colon(x(1, 3)) == MonomialIdeal((x(2),))


def test_colon_by_ideal_is_intersection():
    i = MonomialIdeal.from_supports([{1, 2}, {2, 3}])
    by = MonomialIdeal.from_supports([{1}, {3}])
    assert i.colon(by) == i.colon(x(1)).intersect(i.colon(x(3)))


def test_restrict_examples():
    assert cover_ideal(uniform(2, 4)).restrict({1, 2}).is_zero
    five = MonomialIdeal.from_supports([{1, 4}, {1, 3, 5}, {1, 2, 5}, {2, 3}, {2, 4, 5}, {3, 4, 5}])
    assert five.restrict({2, 3, 4, 5}) == MonomialIdeal.from_supports([{2, 3}, {2, 4, 5}, {3, 4, 5}])
    assert five.restrict({1, 2, 3, 4, 5}) == five


def test_cover_and_sr_ideal_examples():
    assert cover_ideal(uniform(2, 3)) == MonomialIdeal.from_supports([{1, 2}, {1, 3}, {2, 3}])
    assert stanley_reisner_ideal(uniform(2, 3)) == MonomialIdeal((x(1, 2, 3),))


def test_height_and_min_primes():
    j = cover_ideal(uniform(2, 3))
    assert min_primes(j) == [frozenset(s) for s in ({1, 2}, {1, 3}, {2, 3})]
    bad = MonomialIdeal.from_supports([{1, 2}, {1, 3}, {3, 4}, {4, 5}, {2, 3, 5}])
    assert height(bad) == 3
    # brute-force hitting-set enumeration finds six minimal primes
    assert set(min_primes(bad)) == {frozenset(s) for s in
                                    ({1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5})}
    with pytest.raises(ZeroIdeal):
        min_primes(MonomialIdeal(()))


def test_symbolic_power_examples():
    sq = Monomial.from_dict
    i = symbolic_power(uniform(2, 3), 2)
    assert set(i.gens) == {x(1, 2, 3), sq({1: 2, 2: 2}), sq({1: 2, 3: 2}), sq({2: 2, 3: 2})}
    assert symbolic_power(uniform(2, 4), 1) == cover_ideal(uniform(2, 4))
    assert x(1, 2, 3) in symbolic_power(uniform(3, 4), 2).gen_set


def test_sf_examples():
    assert sf_part(symbolic_power(uniform(2, 3), 2)) == MonomialIdeal((x(1, 2, 3),))
    assert sf_ell(uniform(2, 3), 3).is_zero
    assert sf_ell(uniform(3, 4), 2) == MonomialIdeal.from_supports(
        [{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}])


def test_sf_part_drops_non_squarefree():
    assert sf_part(MonomialIdeal((Monomial.from_dict({1: 2}),))).is_zero


def test_sf_power_matches_truncation(corpus):
    for _, m in corpus.matroids:
        j = cover_ideal(m)
        for a in range(1, m.rank_ + 2):
            assert sf_power(j, a) == sf_ell(m, a)


def test_text_rendering():
    assert Monomial.from_dict({1: 1, 2: 2}).to_text() == "x1*x2^2"
    assert Monomial(()).to_text() == "1"
    assert MonomialIdeal(()).to_text() == "0"
