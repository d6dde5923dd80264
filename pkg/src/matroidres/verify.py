"""Corpus-wide verification of minimality (A), degree support (B) and the
LCM_2 characterisation (C), collected into a machine-readable report."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .corpus import Corpus
from .errors import DecompositionFailure
from .homology import hochster_betti, lcm2_shifts
from .matroid import Matroid
from .monomials import MonomialIdeal
from .resolution import (
    circuit_axiom_violation,
    contraction_order,
    default_basis,
    mapping_cone_betti,
    matroidal_check,
    theorem_A_check,
    theorem_B_check,
)
from .symbolic import cover_ideal

THEOREMS = ("A", "B", "C")
TRUNCATION_GENS = ((1, 2), (1, 3), (2, 3), (1, 4))


def ordering_choices(m: Matroid, seed: int = 0) -> list:
    """Three orderings: lex on the smallest basis, a seeded shuffle along the
    reversed basis, and canonical order along the largest basis."""
    first = default_basis(m)
    last = max(tuple(sorted(b)) for b in m.bases)
    return [
        contraction_order(m, first, "lex"),
        contraction_order(m, tuple(reversed(first)), f"seed:{seed}"),
        contraction_order(m, tuple(reversed(last)), "input-order"),
    ]


@dataclass
class VerificationReport:
    corpus: str
    seed: int
    results: dict = field(default_factory=dict)  # theorem -> {"passed", "checked", "failures"}
    notes: dict = field(default_factory=dict)
    timing: dict | None = None

    @property
    def passed(self) -> bool:
        return all(r["passed"] for r in self.results.values())

    def to_doc(self) -> dict:
        doc = {"corpus": self.corpus, "seed": self.seed, "passed": self.passed,
               "theorems": self.results, "notes": self.notes}
        if self.timing is not None:
            doc["timing_seconds"] = self.timing
        return doc


def _check_A(corpus: Corpus, seed: int, oracles: dict) -> dict:
    failures = []
    for name, m in corpus.matroids:
        rep = theorem_A_check(m, ordering_choices(m, seed), oracles[name])
        for r in rep["orderings"]:
            if r["differences"]:
                failures.append({"matroid": name, "basis": r["basis"], "differences": r["differences"]})
    return {"passed": not failures, "checked": len(corpus.matroids), "failures": failures}


def _check_B(corpus: Corpus, seed: int, oracles: dict) -> dict:
    failures = []
    for name, m in corpus.matroids:
        for order in ordering_choices(m, seed):
            rep = theorem_B_check(m, order, oracles[name])
            bad = [r["h"] for r in rep["rows"] if not (r["cone_matches"] and r["oracle_matches"])]
            if bad or rep["extra_degrees"]:
                failures.append({"matroid": name, "basis": list(order.ordered_basis),
                                 "degrees": bad, "extra": rep["extra_degrees"]})
    return {"passed": not failures, "checked": len(corpus.matroids), "failures": failures}


def _check_C(corpus: Corpus) -> dict:
    failures, checked = [], 0
    for name, m in corpus.matroids:
        if m.rank_ < 2:
            continue
        checked += 1
        try:
            verdict = matroidal_check(cover_ideal(m))
        except DecompositionFailure as exc:
            failures.append({"input": name, "error": str(exc)})
            continue
        if not verdict.matroidal:
            failures.append({"input": name, "expected": True, "pair": [str(g) for g in verdict.pair]})
    witnesses = []
    for name, ideal in corpus.ideals:
        checked += 1
        try:
            verdict = matroidal_check(ideal)
        except DecompositionFailure as exc:
            failures.append({"input": name, "error": str(exc)})
            continue
        if verdict.matroidal or circuit_axiom_violation(ideal.supports) is None:
            failures.append({"input": name, "expected": False})
        else:
            witnesses.append({"input": name, "pair": [str(g) for g in verdict.pair],
                              "lcm": str(verdict.lcm), "prime": list(verdict.prime)})
    return {"passed": not failures, "checked": checked, "failures": failures, "witnesses": witnesses}


def truncation_note() -> dict:
    """h=2 shifts of the prefix (x1x2, x1x3, x2x3, x1x4) of J(U_{3,4}) ordered along (4,3,2)."""
    from .matroid import uniform

    m = uniform(3, 4)
    order = contraction_order(m, (4, 3, 2))
    prefix = MonomialIdeal.from_supports(TRUNCATION_GENS)
    upto = order.ordered_gens[len(TRUNCATION_GENS) - 1]
    table = mapping_cone_betti(order, upto)
    h2 = sorted((str(x), c) for x, c in table.multiset(2).items())
    lcms = sorted(str(x) for x in lcm2_shifts(prefix))
    return {
        "prefix": [str(g) for g in order.ordered_gens[:len(TRUNCATION_GENS)]],
        "h2_cone": h2,
        "h2_oracle": sorted((str(x), c) for x, c in hochster_betti(prefix).multiset(2).items()),
        "pairwise_lcms": lcms,
        "x2*x3*x4_is_pairwise_lcm": "x2*x3*x4" in lcms,
    }


def run_verification(corpus: Corpus, theorems=THEOREMS, seed: int = 0,
                     timing: bool = False) -> VerificationReport:
    start = time.perf_counter()
    report = VerificationReport(corpus.name, seed)
    oracles = {}
    if {"A", "B"} & set(theorems):
        oracles = {name: hochster_betti(cover_ideal(m)) for name, m in corpus.matroids}
    for t in theorems:
        if t == "A":
            report.results["A"] = _check_A(corpus, seed, oracles)
        elif t == "B":
            report.results["B"] = _check_B(corpus, seed, oracles)
        elif t == "C":
            report.results["C"] = _check_C(corpus)
        else:
            raise ValueError(f"unknown theorem {t!r}")
    report.notes["truncation"] = truncation_note()
    if timing:
        report.timing = round(time.perf_counter() - start, 3)
    return report
