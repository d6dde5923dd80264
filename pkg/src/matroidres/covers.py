"""Integer covers of matroids and simplicial complexes.

An ``l``-cover assigns a non-negative weight to each vertex so that every
facet (basis) has total weight at least ``l``.  Basic covers are the
pointwise-minimal ones; they correspond to minimal generators of the
``l``-th symbolic power of the cover ideal through ``gamma -> N_gamma``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import LoopPresent
from .matroid import Matroid
from .monomials import Monomial


@dataclass(frozen=True)
class Cover:
    gamma: Monomial
    level: int

    @classmethod
    def from_vector(cls, vec: Iterable[int], level: int, start: int = 1) -> "Cover":
        return cls(Monomial.from_vector(vec, start), level)

    @classmethod
    def from_dict(cls, d, level: int) -> "Cover":
        return cls(Monomial.from_dict(d), level)

    @property
    def monomial(self) -> Monomial:
        return self.gamma

    @property
    def support(self) -> frozenset:
        return self.gamma.support

    def __call__(self, v: int) -> int:
        return self.gamma.exponent(v)

    def weight(self, face: Iterable[int]) -> int:
        return self.gamma.weight(face)

    def vector(self, variables: Iterable[int]) -> tuple:
        return self.gamma.vector(variables)

    def level_block(self, value: int, ground: Iterable[int]) -> frozenset:
        return frozenset(v for v in ground if self(v) == value)


def is_cover(facets: Iterable[Iterable[int]], cover: Cover) -> bool:
    return all(cover.weight(f) >= cover.level for f in facets)


def is_basic_cover_of_facets(facets, cover: Cover) -> bool:
    facets = [frozenset(f) for f in facets]
    if not is_cover(facets, cover):
        return False
    tight = [f for f in facets if cover.weight(f) == cover.level]
    return all(any(v in f for f in tight) for v in cover.support)


def is_basic_cover(m: Matroid, cover: Cover) -> bool:
    if not cover.support <= m.ground:
        return False
    return is_basic_cover_of_facets(m.bases, cover)


def focal_complex(facets: Iterable[Iterable[int]], cover: Cover) -> list:
    """Facets on which the cover attains exactly its level (sorted)."""
    return sorted(
        (tuple(sorted(f)) for f in facets if cover.weight(f) == cover.level)
    )


def enumerate_basic_covers(m: Matroid, level: int) -> list:
    """All basic ``level``-covers of a loopless matroid.

    Depth-first over the vertices with two prunings: a positive value at a
    vertex can never exceed the largest remaining deficit among the bases
    through it, and a vertex with positive value is abandoned as soon as
    every basis through it is already overfull.
    """
    if m.loops:
        raise LoopPresent(f"loops {sorted(m.loops)} present; extend from the smaller ring")
    verts = sorted(m.ground)
    pos = {v: i for i, v in enumerate(verts)}
    bases = [sorted(pos[v] for v in b) for b in m.bases]
    nb = len(bases)
    containing = [[] for _ in verts]
    for bi, b in enumerate(bases):
        for i in b:
            containing[i].append(bi)
    last = [b[-1] if b else -1 for b in bases]
    if any(not b for b in bases):
        # rank zero: only the zero cover, and only for level <= 0
        return [] if level > 0 else [Cover(Monomial(()), level)]

    n = len(verts)
    partial = [0] * nb
    gamma = [0] * n
    out: list[Cover] = []

    def overfull(j):
        return all(partial[b] > level for b in containing[j])

    def rec(i):
        if i == n:
            for j in range(n):
                if gamma[j] and not any(partial[b] == level for b in containing[j]):
                    return
            out.append(Cover(Monomial.from_dict(
                {verts[j]: gamma[j] for j in range(n)}), level))
            return
        cap = max(level - partial[b] for b in containing[i])
        for val in range(0, max(cap, 0) + 1):
            gamma[i] = val
            for b in containing[i]:
                partial[b] += val
            ok = all(last[b] != i or partial[b] >= level for b in containing[i])
            if ok:
                ok = not any(gamma[j] and overfull(j) for j in range(i + 1))
            if ok:
                rec(i + 1)
            for b in containing[i]:
                partial[b] -= val
        gamma[i] = 0

    rec(0)
    assert all(c(v) <= level for c in out for v in c.support), "cover exceeds level bound"
    return sorted(out, key=lambda c: c.gamma.sort_key())
