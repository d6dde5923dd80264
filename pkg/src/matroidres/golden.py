"""Reproductions of the worked examples, serialised as canonical JSON.

Each entry is recomputed from scratch; ``write_golden`` stores them and the
test suite checks that recomputation reproduces the stored bytes.
"""

from __future__ import annotations

from pathlib import Path

from .corpus import NON_MATROIDAL_HEIGHT3, five_point_matroid, ordering_matroid
from .covers import Cover, focal_complex, is_basic_cover_of_facets
from .focal import focal_matroid
from .formats import dumps
from .homology import hochster_betti
from .matroid import uniform
from .monomials import Monomial, MonomialIdeal, height, min_primes, sf_part, sf_power
from .resolution import contraction_order, matroidal_check
from .symbolic import cover_ideal, sf_ell, symbolic_power
from .verify import truncation_note

SEVEN_VERTEX_FACETS = ((1, 2, 3), (2, 4, 5), (3, 6, 7))
XYZ = {1: "x", 2: "y", 3: "z"}


def _gens(i: MonomialIdeal, names=None) -> list:
    return [g.to_text(names) for g in i.gens]


def symbolic_square_example() -> dict:
    m = uniform(2, 3)
    i = symbolic_power(m, 2)
    return {
        "gens": _gens(i, XYZ),
        "associated_primes": [sorted(XYZ[v] for v in p) for p in min_primes(cover_ideal(m))],
        "height": height(i),
        "squarefree_part": _gens(sf_part(i), XYZ),
        "msupp": sorted(XYZ[v] for v in i.msupp),
        "support_of_x2y2": sorted(XYZ[v] for v in Monomial.of(1, 1, 2, 2).support),
    }


def restriction_examples() -> dict:
    j24 = cover_ideal(uniform(2, 4))
    a = frozenset({1, 2})
    j23 = cover_ideal(uniform(2, 3))
    x3 = Monomial.of(3)
    m = five_point_matroid()
    names = m.labels
    j = cover_ideal(m)
    contracted = m.contract({1})
    return {
        "U24_restricted_ideal": _gens(j24.restrict(a)),
        "U24_restricted_matroid_ideal": _gens(cover_ideal(uniform(2, 4).restrict(a))),
        "U23_restrict_then_colon": _gens(j23.restrict(a).colon(x3)),
        "U23_colon_then_restrict": _gens(j23.colon(x3).restrict(a)),
        "five_point_ideal": sorted(_gens(j, names)),
        "five_point_restricted": sorted(_gens(j.restrict(frozenset({2, 3, 4, 5})), names)),
        "five_point_contracted_bases": ["".join(names[v] for v in b) for b in contracted.sorted_bases()],
        "five_point_contracted_ideal": sorted(_gens(cover_ideal(contracted), names)),
    }


def ordering_example() -> dict:
    m = ordering_matroid()
    order = contraction_order(m, (1, 2, 3))
    return {
        "ideal": _gens(cover_ideal(m)),
        "order": [str(g) for g in order.ordered_gens],
        "blocks": [[str(g) for g in b] for b in order.blocks],
        "indices": {str(g): order.index(g) for g in order.ordered_gens},
    }


def focal_identity_example() -> dict:
    out = {}
    for name, m in (("U2,3", uniform(2, 3)), ("ordering", ordering_matroid()),
                    ("five-point", five_point_matroid())):
        j, sf2 = cover_ideal(m), sf_ell(m, 2)
        rows = []
        for n in j.gens:
            focal = focal_matroid(m, Cover(n, 1)).focal
            lhs = cover_ideal(focal)
            rhs = sf2.colon(n) + MonomialIdeal((n,))
            rows.append({"N": str(n), "focal_cover_ideal": _gens(lhs), "sf2_colon_plus_N": _gens(rhs),
                         "equal": lhs == rhs})
        out[name] = rows
    return out


def seven_vertex_example() -> dict:
    gamma = Cover.from_vector((0, 1, 1, 0, 0, 0, 0), 1)
    focal = focal_complex(SEVEN_VERTEX_FACETS, gamma)
    covered = sorted(set().union(*map(set, focal)))
    return {
        "basic_1_cover": is_basic_cover_of_facets(SEVEN_VERTEX_FACETS, gamma),
        "focal_complex": [list(f) for f in focal],
        "vertex_1_covered": 1 in covered,
        "support_covered": sorted(gamma.support) == sorted(set(gamma.support) & set(covered)),
    }


def height_three_example() -> dict:
    j = MonomialIdeal.from_supports(NON_MATROIDAL_HEIGHT3)
    table = hochster_betti(j)
    verdict = matroidal_check(j)
    return {
        "ideal": _gens(j),
        "height": height(j),
        "minimal_primes": [sorted(p) for p in min_primes(j)],
        "projective_dimension": table.max_h,
        "top_shifts": sorted(str(x) for x in table.support(3)),
        "sf3": _gens(sf_power(j, 3)),
        "matroidal": verdict.matroidal,
        "witness_pair": [str(g) for g in verdict.pair],
        "witness_lcm": str(verdict.lcm),
        "witness_prime": list(verdict.prime),
    }


def golden_examples() -> dict:
    return {
        "symbolic-square": symbolic_square_example(),
        "restrictions": restriction_examples(),
        "ordering": ordering_example(),
        "focal-identity": focal_identity_example(),
        "seven-vertex-cover": seven_vertex_example(),
        "height-three-nonmatroidal": height_three_example(),
        "truncation": truncation_note(),
    }


def write_golden(directory) -> list:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, doc in golden_examples().items():
        path = directory / f"{name}.json"
        path.write_text(dumps(doc))
        paths.append(path)
    return paths
