"""Focal and cofocal matroids of basic covers.

For a basic ``l``-cover ``gamma`` of a matroid M, the focal matroid keeps the
bases on which ``gamma`` has weight exactly ``l``.  It splits as a direct sum
over the level sets of ``gamma``; the summand off the support of ``gamma`` is
the cofocal matroid, whose cover ideal is the colon ideal met by the
iterated mapping cone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .covers import Cover, is_basic_cover
from .errors import DecompositionFailure, NotAGenerator, NotBasicCover
from .matroid import Matroid, exchange_violation
from .monomials import (
    ONE,
    Monomial,
    MonomialIdeal,
    ZERO_IDEAL,
    height,
    sf_power,
    standard_form,
)
from .symbolic import cover_ideal, symbolic_level, symbolic_power, symbolic_type


@dataclass(frozen=True)
class FocalDecomposition:
    focal: Matroid
    zero_part: Matroid
    positive_part: Matroid
    level_blocks: tuple  # A_i = gamma^{-1}(i), i = 0..max


def _as_cover(m: Matroid, cover) -> Cover:
    if isinstance(cover, Monomial):
        cover = Cover(cover, symbolic_level(m, cover))
    if not is_basic_cover(m, cover):
        raise NotBasicCover(f"{cover.gamma} is not a basic {cover.level}-cover")
    return cover


def focal_bases(m: Matroid, cover: Cover) -> frozenset:
    return frozenset(b for b in m.bases if cover.weight(b) == cover.level)


def direct_sum_bases(parts) -> frozenset:
    out = {frozenset()}
    for p in parts:
        out = {a | b for a in out for b in p.bases}
    return frozenset(out)


def focal_matroid(m: Matroid, cover) -> FocalDecomposition:
    cover = _as_cover(m, cover)
    bases = focal_bases(m, cover)
    bad = exchange_violation(bases)
    if bad is not None:
        raise DecompositionFailure(f"focal bases violate exchange at {bad}")
    focal = Matroid(m.ground, bases, m.labels)
    top = max((cover(v) for v in m.ground), default=0)
    blocks = tuple(cover.level_block(i, m.ground) for i in range(top + 1))
    if direct_sum_bases(focal.restrict(a) for a in blocks) != focal.bases:
        raise DecompositionFailure("focal matroid is not the sum of its level-block restrictions")
    supp = cover.support
    return FocalDecomposition(
        focal=focal,
        zero_part=focal.restrict(m.ground - supp),
        positive_part=focal.restrict(supp),
        level_blocks=blocks,
    )


def cofocal_matroid(m: Matroid, cover) -> Matroid:
    """M(gamma) restricted off supp(gamma), checked against every contraction M(gamma)/H."""
    cover = _as_cover(m, cover)
    dec = focal_matroid(m, cover)
    zero = dec.zero_part
    supp = sorted(cover.support)
    for k in range(len(supp) + 1):
        for h in combinations(supp, k):
            if cover.weight(h) != cover.level or not dec.focal.is_independent(h):
                continue
            # contraction leaves supp - H as loops; bases agree with the restriction
            if dec.focal.contract(h).bases != zero.bases:
                raise DecompositionFailure(f"M(gamma)/{list(h)} differs from the cofocal matroid")
    if all(cover(v) <= 1 for v in supp):
        if m.restrict(m.ground - cover.support).bases != zero.bases:
            raise DecompositionFailure("squarefree cover: cofocal matroid differs from M restricted")
    return zero


def _require_generator(m: Matroid, mono: Monomial) -> int:
    ell = symbolic_level(m, mono)
    if ell < 1 or not is_basic_cover(m, Cover(mono, ell)):
        raise NotAGenerator(f"{mono} is not a minimal generator of a symbolic power")
    return ell


def focal_identity_report(m: Matroid, mono: Monomial, k: int = 1) -> dict:
    """Compare J(M(gamma_N))^(k) with J^(l+k) : N without raising.

    The inclusion ``J^(l+k) : N  <=  J(M(gamma_N))^(k)`` always holds since
    the focal bases are bases of M.  ``shared_generators`` tests whether
    ``L*N`` lies in both G(J(M(gamma_N))^(l+k)) and G(J^(l+k)) for every
    generator L of the left side.
    """
    ell = _require_generator(m, mono)
    focal = focal_matroid(m, Cover(mono, ell)).focal
    lhs = symbolic_power(focal, k)
    rhs = symbolic_power(m, ell + k).colon(mono)
    big = symbolic_power(m, ell + k).gen_set
    big_focal = symbolic_power(focal, ell + k).gen_set
    unshared = [g for g in lhs.gens if g * mono not in big or g * mono not in big_focal]
    return {
        "level": ell,
        "focal_power": lhs,
        "colon": rhs,
        "equal": lhs == rhs,
        "colon_inside_focal_power": rhs.is_subideal(lhs),
        "only_in_focal_power": [g for g in lhs.gens if g not in rhs],
        "shared_generators": not unshared,
        "unshared": unshared,
    }


def focal_cover_ideal(m: Matroid, mono: Monomial, k: int = 1) -> MonomialIdeal:
    """J(M(gamma_N))^(k), checked to equal J^(l+k) : N.

    The check is exact; it is known to hold for k = 1 and can fail for
    k >= 2 (see ``focal_identity_report``), in which case this raises.
    """
    rep = focal_identity_report(m, mono, k)
    if not rep["equal"]:
        raise DecompositionFailure(f"J(M(gamma))^({k}) != J^({rep['level'] + k}) : {mono}")
    if not rep["shared_generators"]:
        raise DecompositionFailure(f"{rep['unshared'][0]}*{mono} is not a shared minimal generator")
    return rep["focal_power"]


def _ideal_height(i: MonomialIdeal) -> int:
    return 0 if i.is_zero else height(i)


def focal_heights(m: Matroid, mono: Monomial) -> dict:
    """Heights of J(M(gamma)), J(M'(gamma)), J(M(gamma)^0) next to r(M) and c_1."""
    ell = _require_generator(m, mono)
    dec = focal_matroid(m, Cover(mono, ell))
    c1 = symbolic_type(m, mono)[0]
    return {
        "focal": _ideal_height(cover_ideal(dec.focal)),
        "positive": _ideal_height(cover_ideal(dec.positive_part)),
        "zero": _ideal_height(cover_ideal(dec.zero_part)),
        "rank": m.rank_,
        "c1": c1,
    }


def focal_ideal_decomposition(m: Matroid, mono: Monomial) -> list:
    """The summands ``SF_{c_i+1}(J|supp N_{i-1}) : N_i`` with their blocks.

    Squarefree parts are computed from minimal primes of the restricted
    ideal, independently of the truncation route.  Both stated equalities
    are checked before returning.
    """
    ell = _require_generator(m, mono)
    ctype = symbolic_type(m, mono)
    parts = standard_form(mono).parts
    j = cover_ideal(m)
    layers = (Monomial.from_support(m.ground),) + parts + (ONE,)
    levels = ctype + (0,)
    focal = focal_matroid(m, Cover(mono, ell)).focal
    out = []
    total = ZERO_IDEAL
    for i in range(1, len(parts) + 2):
        outer, inner = layers[i - 1], layers[i]
        summand = sf_power(j.restrict(outer.support), levels[i - 1] + 1).colon(inner)
        block = outer.support - inner.support
        if summand != cover_ideal(focal.restrict(block)):
            raise DecompositionFailure(f"summand on block {sorted(block)} is not J(M(gamma)|A)")
        out.append((block, summand))
        total = total + summand
    if total != cover_ideal(focal):
        raise DecompositionFailure("summands do not add up to J(M(gamma))")
    return out


def focal_exchange_violations(m: Matroid, cover) -> list:
    """Exhaustively test the exchange restrictions around focal bases.

    Returns human-readable descriptions of every failure (empty when all
    four statements hold).
    """
    cover = _as_cover(m, cover)
    supp = cover.support
    bases = m.bases
    focal = focal_bases(m, cover)
    problems = []

    def w(s):
        return cover.weight(s)

    for f in sorted(focal, key=sorted):
        for g in sorted(bases, key=sorted):
            fg, gf = sorted(f - g), sorted(g - f)
            g_focal = g in focal
            # (1) and (3): multi-element exchanges
            for k in range(1, len(fg) + 1):
                for a in combinations(fg, k):
                    a = frozenset(a)
                    found = False
                    for b in combinations(gf, k):
                        b = frozenset(b)
                        if (f - a) | b not in bases:
                            continue
                        found = True
                        if w(a) > w(b):
                            problems.append(f"(1) weight drop F={sorted(f)} A={sorted(a)} B={sorted(b)}")
                        if a <= supp and not b <= supp:
                            problems.append(f"(1) support leak F={sorted(f)} A={sorted(a)} B={sorted(b)}")
                        if g_focal and (g - b) | a in bases:
                            if w(a) != w(b) or (a <= supp) != (b <= supp):
                                problems.append(f"(3) F={sorted(f)} G={sorted(g)} A={sorted(a)} B={sorted(b)}")
                    if not found:
                        problems.append(f"(1) no exchange for F={sorted(f)} A={sorted(a)}")
            # (2) and (4): single exchanges and bijective exchanges
            swap = {(i, j) for i in fg for j in gf if (f - {i}) | {j} in bases}
            for i, j in swap:
                if w([i]) > w([j]):
                    problems.append(f"(2) F={sorted(f)} i={i} j={j}")
            bijections = [p for p in permutations(gf) if all((i, j) in swap for i, j in zip(fg, p))]
            if fg and not bijections:
                problems.append(f"(2) no bijective exchange F={sorted(f)} G={sorted(g)}")
            if g_focal:
                for p in bijections:
                    if any(cover(i) != cover(j) for i, j in zip(fg, p)):
                        problems.append(f"(4) F={sorted(f)} G={sorted(g)} sigma={p}")
    return problems


def focal_vertex_cover(m: Matroid, cover) -> tuple:
    """(support covered by focal bases, every non-loop covered by focal bases)."""
    cover = _as_cover(m, cover)
    covered = frozenset().union(*focal_bases(m, cover))
    return cover.support <= covered, (m.ground - m.loops) <= covered
