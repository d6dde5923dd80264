import pytest

from matroidres.covers import Cover, enumerate_basic_covers
from matroidres.errors import NotAGenerator, NotBasicCover
from matroidres.errors import DecompositionFailure
from matroidres.focal import (
    cofocal_matroid,
    focal_cover_ideal,
    focal_identity_report,
    focal_heights,
    focal_ideal_decomposition,
    focal_matroid,
    focal_vertex_cover,
    focal_exchange_violations,
)
from matroidres.matroid import fano, uniform
from matroidres.monomials import Monomial, MonomialIdeal
from matroidres.symbolic import cover_ideal, sf_ell

x = Monomial.of


def test_focal_matroid_u23():
    u = uniform(2, 3)
    dec = focal_matroid(u, Cover.from_vector((1, 0, 1), 1))
    assert dec.focal.bases == {frozenset({1, 2}), frozenset({2, 3})}
    assert dec.zero_part.bases == {frozenset({2})}
    assert dec.positive_part.bases == {frozenset({1}), frozenset({3})}


def test_focal_matroid_constant_cover_keeps_everything():
    u = uniform(2, 3)
    assert focal_matroid(u, Cover.from_vector((1, 1, 1), 2)).focal == u


def test_non_basic_cover_rejected():
    with pytest.raises(NotBasicCover):
        focal_matroid(uniform(2, 3), Cover.from_vector((2, 1, 1), 2))


def test_cofocal_examples():
    z = cofocal_matroid(uniform(2, 3), Cover.from_vector((1, 0, 1), 1))
    assert z.ground == {2} and z.bases == {frozenset({2})}
    assert cover_ideal(z) == MonomialIdeal((x(2),))
    # bases of U_{3,4} meeting {3,4} once, restricted to {1,2}
    z = cofocal_matroid(uniform(3, 4), Cover(x(3, 4), 1))
    assert z.bases == {frozenset({1, 2})}
    z = cofocal_matroid(uniform(2, 3), Cover(x(1, 2, 3), 2))
    assert z.ground == frozenset() and z.bases == {frozenset()}


def test_focal_cover_ideal_examples():
    u = uniform(2, 3)
    assert focal_cover_ideal(u, x(1, 2), 1) == MonomialIdeal.from_supports([{3}, {1, 2}])
    with pytest.raises(NotAGenerator):
        focal_cover_ideal(u, x(1), 1)


def test_focal_identity_with_sf2(corpus):
    for _, m in corpus.matroids:
        j, sf2 = cover_ideal(m), sf_ell(m, 2)
        for n in j.gens:
            focal = focal_matroid(m, Cover(n, 1)).focal
            assert cover_ideal(focal) == sf2.colon(n) + MonomialIdeal((n,))


def test_focal_heights_fano():
    f = fano()
    for n in cover_ideal(f).gens:
        h = focal_heights(f, n)
        assert h["focal"] == 3 and h["positive"] == 1 and h["zero"] == 2


def test_decomposition_examples():
    u = uniform(2, 3)
    parts = focal_ideal_decomposition(u, x(1, 2))
    assert parts == [(frozenset({3}), MonomialIdeal((x(3),))), (frozenset({1, 2}), MonomialIdeal((x(1, 2),)))]
    parts = focal_ideal_decomposition(u, x(1, 2, 3))
    assert parts[0][0] == frozenset() and parts[0][1].is_zero


def test_focal_exchange_and_vertex_cover_on_fano():
    f = fano()
    for ell in (1, 2):
        for c in enumerate_basic_covers(f, ell):
            assert focal_exchange_violations(f, c) == []
            assert focal_vertex_cover(f, c) == (True, True)


def test_focal_power_identity_fails_at_k2_on_u23():
    # x3^2 covers both focal bases of x1*x2 twice, but x1*x2*x3^2 has weight 2 on {1,2}
    u = uniform(2, 3)
    rep = focal_identity_report(u, x(1, 2), 2)
    assert not rep["equal"]
    assert rep["only_in_focal_power"] == [Monomial.from_dict({3: 2})]
    assert rep["colon_inside_focal_power"]
    with pytest.raises(DecompositionFailure):
        focal_cover_ideal(u, x(1, 2), 2)


def test_focal_power_identity_k1_and_inclusion_k2(corpus):
    from matroidres.symbolic import symbolic_power

    for _, m in corpus.matroids[:25]:
        for n in symbolic_power(m, 2).gens:
            assert focal_identity_report(m, n, 1)["equal"]
            assert focal_identity_report(m, n, 2)["colon_inside_focal_power"]
