"""Multigraded Betti tables of R/I."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .monomials import Monomial


@dataclass(frozen=True)
class BettiTable:
    """Multiplicities keyed by (homological degree h >= 1, multidegree)."""

    entries: tuple  # sorted ((h, Monomial, multiplicity), ...)

    @classmethod
    def from_counts(cls, counts: Mapping) -> "BettiTable":
        rows = [(h, m, c) for (h, m), c in counts.items() if c]
        rows.sort(key=lambda t: (t[0], t[1].sort_key()))
        return cls(tuple(rows))

    @classmethod
    def from_shifts(cls, shifts: Mapping[int, Iterable[Monomial]]) -> "BettiTable":
        counts: Counter = Counter()
        for h, monos in shifts.items():
            for m in monos:
                counts[(h, m)] += 1
        return cls.from_counts(counts)

    def as_dict(self) -> dict:
        return {(h, m): c for h, m, c in self.entries}

    @property
    def max_h(self) -> int:
        return max((h for h, _, _ in self.entries), default=0)

    def support(self, h: int) -> frozenset:
        return frozenset(m for hh, m, _ in self.entries if hh == h)

    def multiset(self, h: int) -> Counter:
        return Counter({m: c for hh, m, c in self.entries if hh == h})

    def beta(self, h: int, m: Monomial) -> int:
        return self.as_dict().get((h, m), 0)

    def graded(self) -> dict:
        """Coarse table: (h, total degree) -> multiplicity."""
        out: Counter = Counter()
        for h, m, c in self.entries:
            out[(h, m.degree)] += c
        return dict(out)

    def total(self, h: int) -> int:
        return sum(c for hh, _, c in self.entries if hh == h)

    def regularity(self) -> int:
        return max((m.degree - h for h, m, _ in self.entries), default=0)

    def restricted_to(self, support: frozenset) -> "BettiTable":
        return BettiTable(tuple(e for e in self.entries if e[1].support <= support))

    def difference(self, other: "BettiTable") -> list:
        """Entries where the two tables disagree, as (h, mono, self, other)."""
        a, b = self.as_dict(), other.as_dict()
        keys = sorted(set(a) | set(b), key=lambda k: (k[0], k[1].sort_key()))
        return [(h, m, a.get((h, m), 0), b.get((h, m), 0))
                for h, m in keys if a.get((h, m), 0) != b.get((h, m), 0)]
