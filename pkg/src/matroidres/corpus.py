"""The bundled test corpus: named matroids, seeded random matroids and
seeded random non-matroidal squarefree ideals.

Random matroids are column matroids of small random integer matrices, so
they satisfy the axioms by construction; loops are rejected.  The generated
corpus is frozen in ``data/corpus.json`` and regenerating it with the same
seeds must give the same file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from itertools import combinations

import numpy as np

from .formats import ideal_from_doc, ideal_to_doc, matroid_to_doc, parse_matroid_expr
from .homology import exact_rank
from .matroid import Matroid, fano, from_cocircuits, uniform
from .monomials import MonomialIdeal, height
from .resolution import circuit_axiom_violation

MATROID_SEED = 20240611
IDEAL_SEED = 7031
RANDOM_MATROIDS = 20
RANDOM_IDEALS = 24

FIVE_POINT_BASES = ["abc", "abd", "abe", "acd", "ace", "bcd", "bde", "cde"]
ORDERING_COCIRCUITS = [{1, 2}, {1, 3}, {1, 4, 5}, {2, 3}, {2, 4, 5}, {3, 4, 5}]
NON_MATROIDAL_HEIGHT3 = [{1, 2}, {1, 3}, {3, 4}, {4, 5}, {2, 3, 5}]
NON_MATROIDAL_SMALL = [{1, 2}, {1, 3}, {2, 3}, {1, 4}]


def five_point_matroid() -> Matroid:
    labels = "abcde"
    ids = {c: k + 1 for k, c in enumerate(labels)}
    return Matroid.from_bases([[ids[c] for c in b] for b in FIVE_POINT_BASES],
                              ground=range(1, 6), labels={k + 1: c for k, c in enumerate(labels)})


def ordering_matroid() -> Matroid:
    return from_cocircuits(ORDERING_COCIRCUITS, ground=range(1, 6))


def named_matroids() -> dict:
    out = {}
    for n in range(2, 7):
        for r in range(1, n):
            out[f"U{r},{n}"] = uniform(r, n)
    five, ordm, fan = five_point_matroid(), ordering_matroid(), fano()
    out.update({
        "fano": fan,
        "fano-dual": fan.dual(),
        "fano/1": fan.contract({1}),
        "fano-dual/1": fan.dual().contract({1}),
        "five-point": five,
        "five-point-dual": five.dual(),
        "five-point/a": five.contract({1}),
        "ordering": ordm,
        "ordering-dual": ordm.dual(),
        "ordering/1": ordm.contract({1}),
    })
    return out


def column_matroid(matrix) -> Matroid:
    a = np.asarray(matrix, dtype=np.int64)
    r, n = a.shape
    rank = exact_rank(a.tolist())
    bases = [frozenset(c + 1 for c in cols) for cols in combinations(range(n), rank)
             if exact_rank(a[:, cols].T.tolist()) == rank]
    return Matroid.from_bases(bases, ground=range(1, n + 1))


def random_matroids(seed: int = MATROID_SEED, count: int = RANDOM_MATROIDS) -> list:
    rng = np.random.default_rng(seed)
    found, seen = [], set()
    while len(found) < count:
        n = int(rng.integers(4, 8))
        r = int(rng.integers(2, min(4, n - 1) + 1))
        m = column_matroid(rng.integers(-1, 2, size=(r, n)))
        if m.loops or m.rank_ < 2 or m.bases in seen:
            continue
        seen.add(m.bases)
        found.append(m)
    return found


def random_nonmatroidal_ideals(seed: int = IDEAL_SEED, count: int = RANDOM_IDEALS) -> list:
    rng = np.random.default_rng(seed)
    found, seen = [], set()
    while len(found) < count:
        n = int(rng.integers(4, 7))
        t = int(rng.integers(3, 7))
        supports = []
        for _ in range(t):
            size = int(rng.integers(2, 4))
            supports.append(sorted(int(v) + 1 for v in rng.choice(n, size=size, replace=False)))
        ideal = MonomialIdeal.from_supports(supports)
        if len(ideal.gens) < 2 or height(ideal) < 2 or ideal.gens in seen:
            continue
        if circuit_axiom_violation(ideal.supports) is None:
            continue
        seen.add(ideal.gens)
        found.append(ideal)
    return found


def build_corpus_doc() -> dict:
    matroids = [{"name": k, "matroid": matroid_to_doc(m)} for k, m in named_matroids().items()]
    matroids += [{"name": f"random-{k:02d}", "matroid": matroid_to_doc(m)}
                 for k, m in enumerate(random_matroids())]
    ideals = [{"name": "height-3-example", "ideal": ideal_to_doc(MonomialIdeal.from_supports(NON_MATROIDAL_HEIGHT3))},
              {"name": "four-generator-example", "ideal": ideal_to_doc(MonomialIdeal.from_supports(NON_MATROIDAL_SMALL))}]
    ideals += [{"name": f"random-ideal-{k:02d}", "ideal": ideal_to_doc(i)}
               for k, i in enumerate(random_nonmatroidal_ideals())]
    return {"seeds": {"matroids": MATROID_SEED, "ideals": IDEAL_SEED},
            "matroids": matroids, "non_matroidal_ideals": ideals}


@dataclass(frozen=True)
class Corpus:
    name: str
    matroids: tuple  # (name, Matroid)
    ideals: tuple  # (name, MonomialIdeal), all non-matroidal

    def get(self, name: str) -> Matroid:
        return dict(self.matroids)[name]


def corpus_from_doc(doc: dict, name: str = "corpus") -> Corpus:
    ms = tuple((e["name"], parse_matroid_expr(e["matroid"])) for e in doc["matroids"])
    ids = tuple((e["name"], ideal_from_doc(e["ideal"])) for e in doc.get("non_matroidal_ideals", []))
    return Corpus(name, ms, ids)


def load_corpus(path=None) -> Corpus:
    if path is None:
        text = resources.files("matroidres.data").joinpath("corpus.json").read_text()
        return corpus_from_doc(json.loads(text), "bundled")
    with open(path) as fh:
        return corpus_from_doc(json.load(fh), str(path))
