"""Matroids given by explicit basis lists.

A matroid lives on a finite ground set of positive integers (the vertex ids
used as variable indices of the polynomial ring).  Human-readable labels are
kept alongside but never take part in equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .errors import (
    ContractDependentSet,
    EmptyBasisSet,
    ExchangeAxiomViolation,
    MatroidResError,
    UnequalBasisSizes,
)

FANO_LINES = (
    (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3),
)


def _subsets(items, k=None):
    items = sorted(items)
    sizes = range(len(items) + 1) if k is None else [k]
    for size in sizes:
        for c in combinations(items, size):
            yield frozenset(c)


def exchange_violation(bases):
    """Return a triple ``(B1, B2, x)`` breaking basis exchange, or None."""
    bases = set(bases)
    ordered = sorted(bases, key=lambda b: sorted(b))
    for b1 in ordered:
        for b2 in ordered:
            if b1 == b2:
                continue
            for x in sorted(b1 - b2):
                rest = b1 - {x}
                if not any(rest | {y} in bases for y in b2 - b1):
                    return b1, b2, x
    return None


@dataclass(frozen=True)
class Matroid:
    ground: frozenset
    bases: frozenset
    labels: Mapping[int, str] = field(default=None, compare=False, hash=False, repr=False)

    @classmethod
    def from_bases(cls, bases: Iterable[Iterable[int]], ground=None, labels=None,
                   check=True) -> "Matroid":
        bases = frozenset(frozenset(b) for b in bases)
        if not bases:
            raise EmptyBasisSet("a matroid needs at least one basis")
        if len({len(b) for b in bases}) != 1:
            raise UnequalBasisSizes("bases must all have the same size")
        union = frozenset().union(*bases)
        ground = union if ground is None else frozenset(ground)
        if not union <= ground:
            raise MatroidResError("bases use vertices outside the ground set")
        if check:
            bad = exchange_violation(bases)
            if bad is not None:
                raise ExchangeAxiomViolation(*bad)
        return cls(ground, bases, _restrict_labels(labels, ground))

    # -- basic data -------------------------------------------------------

    @cached_property
    def rank_(self) -> int:
        return len(next(iter(self.bases)))

    @property
    def n(self) -> int:
        return len(self.ground)

    def label(self, v: int) -> str:
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)

    def sorted_bases(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(b)) for b in self.bases)

    def rank(self, s: Iterable[int] = None) -> int:
        if s is None:
            return self.rank_
        s = frozenset(s)
        return max(len(b & s) for b in self.bases)

    def is_independent(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        return any(s <= b for b in self.bases)

    @cached_property
    def independents(self) -> frozenset:
        out = set()
        for b in self.bases:
            out.update(_subsets(b))
        return frozenset(out)

    @cached_property
    def loops(self) -> frozenset:
        covered = frozenset().union(*self.bases)
        return self.ground - covered

    @cached_property
    def coloops(self) -> frozenset:
        return frozenset.intersection(*self.bases) if self.bases else frozenset()

    @cached_property
    def circuits(self) -> frozenset:
        indep = self.independents
        found = []
        for k in range(1, self.n + 1):
            for s in _subsets(self.ground, k):
                if s in indep:
                    continue
                if any(c <= s for c in found):
                    continue
                found.append(s)
        return frozenset(found)

    @cached_property
    def cocircuits(self) -> frozenset:
        return self.dual().circuits

    @cached_property
    def hyperplanes(self) -> frozenset:
        return frozenset(self.ground - c for c in self.cocircuits)

    def is_uniform(self) -> bool:
        return len(self.bases) == sum(1 for _ in combinations(self.ground, self.rank_))

    # -- constructions ----------------------------------------------------

    def dual(self) -> "Matroid":
        return Matroid(self.ground, frozenset(self.ground - b for b in self.bases),
                       self.labels)

    def restrict(self, a: Iterable[int]) -> "Matroid":
        a = frozenset(a) & self.ground
        k = self.rank(a)
        bases = {b & a for b in self.bases if len(b & a) == k}
        return Matroid(a, frozenset(bases), _restrict_labels(self.labels, a))

    def delete(self, a: Iterable[int]) -> "Matroid":
        return self.restrict(self.ground - frozenset(a))

    def contract(self, a: Iterable[int]) -> "Matroid":
        a = frozenset(a)
        if not a <= self.ground or not self.is_independent(a):
            raise ContractDependentSet(f"cannot contract non-independent set {sorted(a)}")
        rest = self.ground - a
        bases = frozenset(b - a for b in self.bases if a <= b)
        return Matroid(rest, bases, _restrict_labels(self.labels, rest))

    def truncate(self, k: int) -> "Matroid":
        if not 0 <= k <= self.rank_:
            raise MatroidResError(f"truncation rank {k} outside [0, {self.rank_}]")
        bases = frozenset(s for s in self.independents if len(s) == k)
        return Matroid(self.ground, bases, self.labels)

    def relabel(self, labels: Mapping[int, str]) -> "Matroid":
        return Matroid(self.ground, self.bases, _restrict_labels(labels, self.ground))

    def __str__(self) -> str:
        def fmt(s):
            return "{" + ",".join(self.label(v) for v in sorted(s)) + "}"
        return f"Matroid(rank={self.rank_}, ground={fmt(self.ground)}, bases={len(self.bases)})"


def _restrict_labels(labels, ground):
    if not labels:
        return None
    return {v: labels[v] for v in sorted(ground) if v in labels}


# -- named matroids -------------------------------------------------------

def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise MatroidResError(f"U_{{{r},{n}}} needs 0 <= r <= n")
    ground = frozenset(range(1, n + 1))
    return Matroid(ground, frozenset(_subsets(ground, r)))


def fano() -> Matroid:
    ground = frozenset(range(1, 8))
    lines = {frozenset(line) for line in FANO_LINES}
    bases = frozenset(s for s in _subsets(ground, 3) if s not in lines)
    return Matroid(ground, bases)


def direct_sum(a: Matroid, b: Matroid) -> Matroid:
    """Direct sum; ``b`` is shifted past ``a`` when the ground sets overlap."""
    shift = 0
    if a.ground & b.ground:
        shift = max(a.ground, default=0)
    moved = {v: v + shift for v in b.ground}
    ground = a.ground | frozenset(moved.values())
    bases = frozenset(x | frozenset(moved[v] for v in y) for x in a.bases for y in b.bases)
    labels = None
    if a.labels or b.labels:
        labels = {v: a.label(v) for v in a.ground}
        labels.update({moved[v]: b.label(v) for v in b.ground})
    return Matroid(ground, bases, labels)


def from_cocircuits(cocircuits: Iterable[Iterable[int]], ground=None) -> Matroid:
    """The matroid whose cocircuits are the given sets.

    Bases are the minimal transversals of the cocircuits; the result is
    checked against the exchange axiom.
    """
    cocircuits = [frozenset(c) for c in cocircuits]
    union = frozenset().union(*cocircuits) if cocircuits else frozenset()
    ground = union if ground is None else frozenset(ground)
    transversals = minimal_transversals(cocircuits, ground)
    m = Matroid.from_bases(transversals, ground=ground)
    if m.cocircuits != frozenset(cocircuits):
        raise MatroidResError("given sets are not the cocircuits of any matroid")
    return m


def minimal_transversals(sets, ground) -> list[frozenset]:
    """All inclusion-minimal subsets of ``ground`` meeting every set."""
    sets = [frozenset(s) for s in sets]
    found: list[frozenset] = []
    for s in _subsets(ground):
        if any(t <= s for t in found):
            continue
        if all(s & c for c in sets):
            found.append(s)
    return found


# -- functional surface ---------------------------------------------------

def minor(m: Matroid, kind: str, arg) -> Matroid:
    if kind == "delete":
        return m.delete(arg)
    if kind == "restrict":
        return m.restrict(arg)
    if kind == "contract":
        return m.contract(arg)
    if kind == "truncate":
        return m.truncate(arg)
    raise MatroidResError(f"unknown minor kind {kind!r}")


def derived_sets(m: Matroid, kind: str) -> frozenset:
    if kind == "loops":
        return frozenset(frozenset([v]) for v in m.loops)
    if kind in ("circuits", "cocircuits", "hyperplanes", "independents"):
        return getattr(m, kind)
    raise MatroidResError(f"unknown set system {kind!r}")
