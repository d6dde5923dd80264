"""Independent ground truth for Betti numbers and symbolic powers.

Betti numbers of squarefree ideals come from Hochster's formula, using
reduced simplicial homology over the rationals computed by exact integer
elimination.  Symbolic powers are recomputed by scanning the full box of
integer weightings.  Nothing here calls the mapping-cone or cover code.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

import numpy as np

from .betti import BettiTable
from .errors import NotSquarefree, SizeBoundExceeded, TooFewGenerators
from .matroid import Matroid
from .monomials import Monomial, MonomialIdeal, minimal_elements

DEFAULT_VERTEX_BOUND = 16
DEFAULT_BOX_BOUND = 20_000_000


def exact_rank(rows) -> int:
    """Rank over Q of an integer matrix, by fraction-free row reduction."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        pc = p[col]
        for i in range(rank + 1, len(rows)):
            a = rows[i][col]
            if not a:
                continue
            r = [pc * x - a * y for x, y in zip(rows[i], p)]
            g = 0
            for x in r:
                g = gcd(g, x)
            if g > 1:
                r = [x // g for x in r]
            rows[i] = r
        rank += 1
        if rank == len(rows):
            break
    return rank


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple  # sorted tuples, pairwise incomparable; () is the void complex

    @classmethod
    def from_facets(cls, facets, n=None) -> "SimplicialComplex":
        sets = [frozenset(f) for f in facets]
        maximal = {s for s in sets if not any(s < t for t in sets)}
        verts = frozenset().union(*maximal) if maximal else frozenset()
        n = max(verts, default=0) if n is None else n
        return cls(n, tuple(sorted(tuple(sorted(s)) for s in maximal)))

    @property
    def is_void(self) -> bool:
        return not self.facets

    def faces(self) -> set:
        out = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(combinations(f, k))
        return out


@dataclass(frozen=True)
class ChainComplexRanks:
    ranks: dict  # d -> dim of reduced homology in dimension d (d >= -1)
    face_counts: dict = field(default_factory=dict)

    def __getitem__(self, d: int) -> int:
        return self.ranks.get(d, 0)

    def euler_from_faces(self) -> int:
        return sum((-1) ** d * c for d, c in self.face_counts.items())

    def euler_from_homology(self) -> int:
        return sum((-1) ** d * c for d, c in self.ranks.items())


def _vertex_bound() -> int:
    return int(os.environ.get("MR_MAX_HOCHSTER_VERTICES", DEFAULT_VERTEX_BOUND))


def _homology_of_faces(faces) -> ChainComplexRanks:
    by_dim: dict[int, list] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    if not by_dim:
        return ChainComplexRanks({}, {})
    for d in by_dim:
        by_dim[d].sort()
    top = max(by_dim)
    index = {d: {f: i for i, f in enumerate(fs)} for d, fs in by_dim.items()}
    bd_rank = {}
    for d in range(0, top + 1):
        lower = index.get(d - 1, {})
        cols = by_dim.get(d, [])
        if not cols or not lower:
            bd_rank[d] = 0
            continue
        mat = [[0] * len(cols) for _ in lower]
        for j, f in enumerate(cols):
            for k in range(len(f)):
                face = f[:k] + f[k + 1:]
                mat[lower[face]][j] = -1 if k % 2 else 1
        bd_rank[d] = exact_rank(mat)
    ranks = {}
    for d in range(-1, top + 1):
        dim_c = len(by_dim.get(d, []))
        h = dim_c - bd_rank.get(d, 0) - bd_rank.get(d + 1, 0)
        if h:
            ranks[d] = h
    counts = {d: len(fs) for d, fs in by_dim.items()}
    return ChainComplexRanks(ranks, counts)


def reduced_homology(delta: SimplicialComplex, bound: int | None = None) -> ChainComplexRanks:
    bound = _vertex_bound() if bound is None else bound
    if delta.n > bound:
        raise SizeBoundExceeded(f"{delta.n} vertices exceeds the bound {bound}")
    return _homology_of_faces(delta.faces())


def _unions(supports) -> set:
    out = {frozenset()}
    for s in supports:
        out |= {u | s for u in out}
    out.discard(frozenset())
    return out


def hochster_betti(i: MonomialIdeal, bound: int | None = None) -> BettiTable:
    """Multigraded Betti numbers of R/I over a field of characteristic zero.

    ``beta_{h,sigma} = dim H~_{|sigma|-h-1}(Delta|sigma)`` where Delta is the
    complex whose minimal non-faces are the generator supports.  Only
    ``sigma`` that are unions of generator supports can contribute.
    """
    if not i.is_squarefree:
        raise NotSquarefree("Hochster's formula needs a squarefree ideal")
    bound = _vertex_bound() if bound is None else bound
    if len(i.msupp) > bound:
        raise SizeBoundExceeded(f"{len(i.msupp)} vertices exceeds the bound {bound}")
    supports = [g.support for g in i.gens]
    if any(not s for s in supports):
        return BettiTable.from_counts({(1, Monomial(())): 1})
    counts: Counter = Counter()
    for sigma in _unions(supports):
        inside = [s for s in supports if s <= sigma]
        verts = sorted(sigma)
        faces = []
        for k in range(len(verts) + 1):
            for c in combinations(verts, k):
                cs = frozenset(c)
                if not any(s <= cs for s in inside):
                    faces.append(c)
        hom = _homology_of_faces(faces)
        mono = Monomial.from_support(sigma)
        for d, dim in hom.ranks.items():
            counts[(len(sigma) - d - 1, mono)] += dim
    return BettiTable.from_counts(counts)


def lcm2_shifts(i: MonomialIdeal) -> tuple:
    """Minimal pairwise LCMs of generators (second Taylor module, minimised)."""
    if len(i.gens) < 2:
        raise TooFewGenerators("need at least two generators")
    return minimal_elements(a.lcm(b) for a, b in combinations(i.gens, 2))


def brute_symbolic(m: Matroid, ell: int, bound: int | None = None,
                   cap: int | None = None) -> MonomialIdeal:
    """J(M)^(ell) by scanning every weighting in ``[0, cap]^n`` (``cap`` defaults to ``ell``).

    Keeps the weightings that reach ``ell`` on every basis and cannot be
    lowered at any single vertex while staying a cover.
    """
    bound = DEFAULT_BOX_BOUND if bound is None else bound
    cap = ell if cap is None else cap
    verts = sorted(m.ground)
    n = len(verts)
    if (cap + 1) ** n > bound:
        raise SizeBoundExceeded(f"{cap + 1}^{n} weightings exceeds the bound {bound}")
    inc = np.zeros((n, len(m.bases)), dtype=np.int32)
    for j, b in enumerate(sorted(m.bases, key=sorted)):
        for v in b:
            inc[verts.index(v), j] = 1
    if n == 0:
        return MonomialIdeal(())
    tail = np.indices((cap + 1,) * (n - 1), dtype=np.int32).reshape(n - 1, -1).T
    found = []
    for first in range(cap + 1):
        x = np.hstack([np.full((tail.shape[0], 1), first, dtype=np.int32), tail])
        w = x @ inc
        covers = (w >= ell).all(axis=1)
        x, w = x[covers], w[covers]
        minimal = np.ones(len(x), dtype=bool)
        for k in range(n):
            lowered_is_cover = ((w - inc[k]) >= ell).all(axis=1) & (x[:, k] > 0)
            minimal &= ~lowered_is_cover
        for row in x[minimal]:
            found.append(Monomial.from_dict({verts[k]: int(e) for k, e in enumerate(row)}))
    return MonomialIdeal(tuple(sorted(found, key=Monomial.sort_key)))
