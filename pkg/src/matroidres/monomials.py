"""Monomials and monomial ideals.

Monomials are stored sparsely as sorted ``(variable, exponent)`` pairs, so
they do not depend on the size of the ambient ring.  Ideals always carry
their unique minimal generating set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .errors import NotSquarefree, ZeroIdeal


@dataclass(frozen=True)
class Monomial:
    exps: tuple  # sorted ((var, exp), ...) with exp > 0

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "Monomial":
        return cls(tuple(sorted((int(v), int(e)) for v, e in d.items() if e)))

    @classmethod
    def of(cls, *variables: int) -> "Monomial":
        """Product of the given variables (repeats raise the exponent)."""
        d: dict[int, int] = {}
        for v in variables:
            d[v] = d.get(v, 0) + 1
        return cls.from_dict(d)

    @classmethod
    def from_support(cls, s: Iterable[int]) -> "Monomial":
        return cls(tuple((v, 1) for v in sorted(set(s))))

    @classmethod
    def from_vector(cls, vec: Iterable[int], start: int = 1) -> "Monomial":
        return cls.from_dict({i: e for i, e in enumerate(vec, start)})

    @cached_property
    def as_dict(self) -> dict:
        return dict(self.exps)

    @cached_property
    def support(self) -> frozenset:
        return frozenset(v for v, _ in self.exps)

    @cached_property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def is_one(self) -> bool:
        return not self.exps

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def exponent(self, v: int) -> int:
        return self.as_dict.get(v, 0)

    def vector(self, variables: Iterable[int]) -> tuple:
        return tuple(self.exponent(v) for v in variables)

    def weight(self, face: Iterable[int]) -> int:
        """Order of the monomial at the prime of ``face``."""
        d = self.as_dict
        return sum(d.get(v, 0) for v in face)

    def __mul__(self, other: "Monomial") -> "Monomial":
        d = dict(self.as_dict)
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return Monomial.from_dict(d)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(tuple((v, e * k) for v, e in self.exps))

    def divides(self, other: "Monomial") -> bool:
        d = other.as_dict
        return all(d.get(v, 0) >= e for v, e in self.exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        d = dict(self.as_dict)
        for v, e in other.exps:
            if e > d.get(v, 0):
                d[v] = e
        return Monomial.from_dict(d)

    def gcd(self, other: "Monomial") -> "Monomial":
        d = other.as_dict
        return Monomial.from_dict({v: min(e, d.get(v, 0)) for v, e in self.exps})

    def colon(self, other: "Monomial") -> "Monomial":
        """``self : other``, exponents ``max(a_i - b_i, 0)``."""
        d = other.as_dict
        return Monomial.from_dict({v: max(e - d.get(v, 0), 0) for v, e in self.exps})

    def sort_key(self):
        return (self.degree, self.exps)

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def standard_form(self) -> "StandardForm":
        return standard_form(self)

    def to_text(self, names: Mapping[int, str] | None = None) -> str:
        if not self.exps:
            return "1"
        parts = []
        for v, e in self.exps:
            name = names[v] if names and v in names else f"x{v}"
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    __repr__ = __str__


ONE = Monomial(())


@dataclass(frozen=True)
class StandardForm:
    parts: tuple  # squarefree Monomials with nested supports

    def product(self) -> Monomial:
        out = ONE
        for p in self.parts:
            out = out * p
        return out

    def padded(self, s: int) -> tuple:
        return self.parts + (ONE,) * (s - len(self.parts))

    def __len__(self) -> int:
        return len(self.parts)


def standard_form(m: Monomial) -> StandardForm:
    """Level-set factorisation: part ``i`` is the product of ``x_j`` with exponent >= i."""
    top = max((e for _, e in m.exps), default=0)
    return StandardForm(tuple(
        Monomial.from_support(v for v, e in m.exps if e >= i) for i in range(1, top + 1)
    ))


def mono_ops(a: Monomial, b: Monomial, kind: str):
    if kind == "lcm":
        return a.lcm(b)
    if kind == "gcd":
        return a.gcd(b)
    if kind == "colon":
        return a.colon(b)
    if kind == "divides":
        return a.divides(b)
    raise ValueError(f"unknown monomial operation {kind!r}")


def minimal_elements(monos: Iterable[Monomial]) -> tuple:
    """Divisibility-minimal elements, sorted canonically."""
    cands = sorted(set(monos), key=Monomial.sort_key)
    kept: list[Monomial] = []
    for m in cands:
        supp = m.support
        if not any(k.support <= supp and k.divides(m) for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    gens: tuple  # minimal, canonically sorted

    @classmethod
    def from_gens(cls, raw: Iterable[Monomial]) -> "MonomialIdeal":
        return cls(minimal_elements(raw))

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]]) -> "MonomialIdeal":
        return cls.from_gens(Monomial.from_support(s) for s in supports)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    @cached_property
    def msupp(self) -> frozenset:
        return frozenset().union(*(g.support for g in self.gens)) if self.gens else frozenset()

    @cached_property
    def gen_set(self) -> frozenset:
        return frozenset(self.gens)

    @cached_property
    def supports(self) -> tuple:
        return tuple(g.support for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    __contains__ = contains

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal.from_gens(self.gens + other.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal.from_gens(a * b for a in self.gens for b in other.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal.from_gens(a.lcm(b) for a in self.gens for b in other.gens)

    def colon(self, by) -> "MonomialIdeal":
        return ideal_colon(self, by)

    def restrict(self, a: Iterable[int]) -> "MonomialIdeal":
        return ideal_restrict(self, a)

    def is_subideal(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def to_text(self, names=None) -> str:
        if self.is_zero:
            return "0"
        return ", ".join(g.to_text(names) for g in self.gens)

    def __str__(self) -> str:
        return f"({self.to_text()})"

    __repr__ = __str__


ZERO_IDEAL = MonomialIdeal(())
UNIT_IDEAL = MonomialIdeal((ONE,))


def ideal_minimalize(raw: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal.from_gens(raw)


def ideal_colon(i: MonomialIdeal, by) -> MonomialIdeal:
    if isinstance(by, Monomial):
        return MonomialIdeal.from_gens(g.colon(by) for g in i.gens)
    if by.is_zero:
        return UNIT_IDEAL
    out = None
    for b in by.gens:
        part = ideal_colon(i, b)
        out = part if out is None else out.intersect(part)
    return out


def ideal_restrict(i: MonomialIdeal, a: Iterable[int]) -> MonomialIdeal:
    a = frozenset(a)
    return MonomialIdeal(tuple(g for g in i.gens if g.support <= a))


def sf_part(i: MonomialIdeal) -> MonomialIdeal:
    """Squarefree part: a squarefree monomial lies in ``i`` only through a squarefree generator."""
    return MonomialIdeal(tuple(g for g in i.gens if g.is_squarefree))


# -- squarefree ideals: primes, height, symbolic squarefree parts ----------

def _require_squarefree(i: MonomialIdeal) -> None:
    if not i.is_squarefree:
        raise NotSquarefree("operation needs a squarefree monomial ideal")


def min_primes(i: MonomialIdeal) -> list:
    """Minimal primes of a squarefree ideal, as vertex sets (sorted)."""
    if i.is_zero:
        raise ZeroIdeal("the zero ideal has no minimal primes of positive height")
    supports = [g.support for g in i.gens]
    if any(not s for s in supports):
        return []
    ground = sorted(i.msupp)
    found: list[frozenset] = []
    for k in range(1, len(ground) + 1):
        for c in combinations(ground, k):
            s = frozenset(c)
            if any(t <= s for t in found):
                continue
            if all(s & t for t in supports):
                found.append(s)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def height(i: MonomialIdeal) -> int:
    primes = min_primes(i)
    if not primes:
        raise ZeroIdeal("the unit ideal has no height")
    return min(len(p) for p in primes)


ht = height


def sf_power(i: MonomialIdeal, a: int) -> MonomialIdeal:
    """Squarefree part of the ``a``-th symbolic power of a squarefree ideal.

    Generated by the minimal ``x_S`` meeting every minimal prime in at least
    ``a`` vertices.  Works for any squarefree ideal, matroidal or not.
    """
    _require_squarefree(i)
    if i.is_zero:
        return ZERO_IDEAL
    primes = min_primes(i)
    ground = sorted(i.msupp)
    found: list[frozenset] = []
    for k in range(a, len(ground) + 1):
        for c in combinations(ground, k):
            s = frozenset(c)
            if any(t <= s for t in found):
                continue
            if all(len(s & p) >= a for p in primes):
                found.append(s)
    return MonomialIdeal.from_supports(found)


def prime_order(m: Monomial, prime: Iterable[int]) -> int:
    return m.weight(prime)
