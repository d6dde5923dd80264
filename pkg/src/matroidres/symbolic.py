"""Cover ideals of matroids, their symbolic powers and squarefree parts."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .covers import Cover, enumerate_basic_covers, is_basic_cover
from .errors import LoopPresent, NotAGenerator, NotASubPartition
from .matroid import Matroid
from .monomials import ONE, Monomial, MonomialIdeal, ZERO_IDEAL, standard_form


@lru_cache(maxsize=None)
def cover_ideal(m: Matroid) -> MonomialIdeal:
    """J(M), generated by the monomials of the cocircuits."""
    return MonomialIdeal.from_supports(m.cocircuits)


@lru_cache(maxsize=None)
def stanley_reisner_ideal(m: Matroid) -> MonomialIdeal:
    return MonomialIdeal.from_supports(m.circuits)


@lru_cache(maxsize=None)
def sf_ell(m: Matroid, a: int) -> MonomialIdeal:
    """SF_a(J(M)) as the cover ideal of the truncation to rank r - a + 1."""
    if a < 1:
        raise ValueError("squarefree level must be positive")
    target = m.rank_ - a + 1
    if target < 0:
        return ZERO_IDEAL
    return cover_ideal(m.truncate(target))


def symbolic_power(m: Matroid, ell: int, method: str = "covers") -> MonomialIdeal:
    if m.loops:
        raise LoopPresent(f"loops {sorted(m.loops)} present; extend from the smaller ring")
    if ell < 1:
        raise ValueError("symbolic power exponent must be positive")
    if method == "covers":
        return _by_covers(m, ell)
    if method == "structure":
        return _by_structure(m, ell)
    if method == "both":
        a, b = _by_covers(m, ell), _by_structure(m, ell)
        if a != b:
            raise AssertionError(f"cover and structure methods disagree for l={ell}")
        return a
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def _by_covers(m: Matroid, ell: int) -> MonomialIdeal:
    # basic covers are already pairwise incomparable
    gens = [c.gamma for c in enumerate_basic_covers(m, ell)]
    return MonomialIdeal(tuple(sorted(gens, key=Monomial.sort_key)))


@lru_cache(maxsize=None)
def _by_structure(m: Matroid, ell: int) -> MonomialIdeal:
    height = m.rank_
    layers = {c: sf_ell(m, c).gens for c in range(1, height + 1)}
    found: set[Monomial] = set()

    def rec(prefix: Monomial, outer: frozenset | None, remaining: int):
        if remaining == 0:
            found.add(prefix)
            return
        for c in range(1, min(height, remaining) + 1):
            for g in layers[c]:
                if outer is not None and not g.support <= outer:
                    continue
                rec(prefix * g, g.support, remaining - c)

    rec(ONE, None, ell)
    return MonomialIdeal.from_gens(found)


def symbolic_level(m: Matroid, mono: Monomial) -> int:
    """Largest ``l`` with ``mono`` in J(M)^(l): the minimum basis weight."""
    return min(mono.weight(b) for b in m.bases)


def _squarefree_type(m: Matroid, part: Monomial) -> int | None:
    for c in range(1, m.rank_ + 1):
        if part in sf_ell(m, c).gen_set:
            return c
    return None


def symbolic_type(m: Matroid, mono: Monomial) -> tuple:
    """Partition ``(c_1, ..., c_s)`` with part ``M_i`` in G(SF_{c_i}(J))."""
    ell = symbolic_level(m, mono)
    if ell < 1 or not is_basic_cover(m, Cover(mono, ell)):
        raise NotAGenerator(f"{mono} is not a minimal generator of any symbolic power")
    parts = standard_form(mono).parts
    ctype = tuple(_squarefree_type(m, p) for p in parts)
    if None in ctype or sum(ctype) != ell:
        raise AssertionError(f"standard form of {mono} has no consistent symbolic type")
    return ctype


def divisor_of_type(m: Matroid, mono: Monomial, ctype) -> Monomial:
    """A generator of J^(sum c) of type ``c`` dividing ``mono`` partwise.

    Among all valid witnesses the one with lexicographically smallest
    exponent vector (over the sorted ground set) is returned.
    """
    parts = standard_form(mono).parts
    ctype = tuple(ctype)
    heights = [symbolic_level(m, p) for p in parts]
    if (not ctype or len(ctype) > len(parts) or any(c < 1 for c in ctype)
            or any(a < b for a, b in zip(ctype, ctype[1:]))
            or any(c > h for c, h in zip(ctype, heights))):
        raise NotASubPartition(f"{ctype} is not a sub-partition of {tuple(heights)}")
    ell = sum(ctype)
    choices = []
    for c, p in zip(ctype, parts):
        choices.append([g for g in sf_ell(m, c).gens if g.divides(p)])
    verts = sorted(m.ground)
    best = None
    for combo in product(*choices):
        if any(not b.support <= a.support for a, b in zip(combo, combo[1:])):
            continue
        cand = ONE
        for g in combo:
            cand = cand * g
        if not is_basic_cover(m, Cover(cand, ell)):
            continue
        if best is None or cand.vector(verts) < best.vector(verts):
            best = cand
    if best is None:
        raise AssertionError(f"no divisor of type {ctype} found for {mono}")
    return best
