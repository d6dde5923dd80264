import json

import pytest

from matroidres.betti import BettiTable
from matroidres.corpus import five_point_matroid
from matroidres.errors import ExchangeAxiomViolation, SchemaError
from matroidres.formats import (
    betti_from_doc,
    betti_text,
    betti_to_doc,
    dumps,
    ideal_from_doc,
    ideal_to_doc,
    load_ideal,
    matroid_to_doc,
    parse_ideal_text,
    parse_matroid_expr,
    parse_monomial,
)
from matroidres.homology import hochster_betti
from matroidres.matroid import fano, uniform
from matroidres.monomials import Monomial, MonomialIdeal
from matroidres.symbolic import cover_ideal, symbolic_power

FIVE = {"op": "bases", "labels": list("abcde"),
        "bases": [list(b) for b in ["abc", "abd", "abe", "acd", "ace", "bcd", "bde", "cde"]]}


def test_parse_examples():
    assert parse_matroid_expr('{"op":"uniform","r":2,"n":3}') == uniform(2, 3)
    m = parse_matroid_expr({"op": "contract", "of": FIVE, "set": ["a"]})
    assert m == five_point_matroid().contract({1})
    assert m.label(2) == "b"
    assert parse_matroid_expr({"op": "dual", "of": {"op": "uniform", "r": 2, "n": 4}}) == uniform(2, 4)


def test_other_ops():
    assert parse_matroid_expr({"op": "fano"}) == fano()
    assert parse_matroid_expr({"op": "truncate", "of": {"op": "fano"}, "rank": 2}) == fano().truncate(2)
    assert parse_matroid_expr({"op": "delete", "of": {"op": "uniform", "r": 2, "n": 4}, "set": [4]}) == uniform(2, 3)
    assert parse_matroid_expr({"op": "restrict", "of": {"op": "uniform", "r": 2, "n": 4},
                               "set": [1, 2]}).bases == {frozenset({1, 2})}
    s = parse_matroid_expr({"op": "direct_sum", "parts": [{"op": "uniform", "r": 1, "n": 2}] * 2})
    assert len(s.bases) == 4


@pytest.mark.parametrize("doc, pointer", [
    ({"op": "uniform", "r": 2}, "/"),
    ({"op": "dual", "of": {"op": "nope"}}, "/of/op"),
    ({"op": "contract", "of": FIVE, "set": ["z"]}, "/set/0"),
    ({"op": "bases", "bases": [[1, 2]], "extra": 1}, "/"),
    ({"op": "uniform", "r": 5, "n": 3}, "/r"),
])
def test_schema_errors_carry_pointer(doc, pointer):
    with pytest.raises(SchemaError) as info:
        parse_matroid_expr(doc)
    assert info.value.pointer == pointer


def test_invalid_json_and_axiom_errors():
    with pytest.raises(SchemaError):
        parse_matroid_expr("{not json")
    with pytest.raises(ExchangeAxiomViolation):
        parse_matroid_expr({"op": "bases", "bases": [[1, 2], [3, 4]]})


def test_matroid_round_trip(corpus):
    for _, m in corpus.matroids:
        back = parse_matroid_expr(dumps(matroid_to_doc(m)))
        assert back == m and (back.labels or None) == (m.labels or None)


def test_ideal_text_and_json_round_trip():
    i = parse_ideal_text("x1*x2, x1*x3^2, x1*x2*x4")
    assert i == MonomialIdeal((Monomial.of(1, 2), Monomial.from_dict({1: 1, 3: 2})))
    assert parse_ideal_text(i.to_text()) == i
    assert ideal_from_doc(json.loads(dumps(ideal_to_doc(i)))) == i
    assert load_ideal(dumps(ideal_to_doc(i))) == i
    assert parse_ideal_text("0").is_zero
    names = {"a": 1, "d": 4}
    assert parse_monomial("a*d", names) == Monomial.of(1, 4)


def test_labelled_ideal_round_trip():
    m = five_point_matroid()
    j = symbolic_power(m, 2)
    inv = {v: k for k, v in m.labels.items()}
    assert parse_ideal_text(j.to_text(m.labels), inv) == j
    assert ideal_from_doc(ideal_to_doc(j, m.labels), inv) == j


def test_bad_ideal_text():
    with pytest.raises(SchemaError):
        parse_ideal_text("x1*+x2")
    with pytest.raises(SchemaError):
        parse_ideal_text("y1*x2")


def test_betti_round_trip(corpus):
    for _, m in corpus.matroids[:10]:
        t = hochster_betti(cover_ideal(m))
        assert betti_from_doc(json.loads(dumps(betti_to_doc(t)))) == t


def test_betti_text_table():
    t = hochster_betti(cover_ideal(uniform(2, 3)))
    assert betti_text(t) == "h\\deg  2  3\n    1  3  .\n    2  .  2\n"
    assert betti_text(BettiTable(())) == "(empty)\n"


def test_docs_schemas_match_packaged_copies():
    from pathlib import Path

    import matroidres

    docs = Path(__file__).parent.parent / "docs"
    data = Path(matroidres.__file__).parent / "data"
    for name in ("matroid", "ideal", "betti"):
        assert (docs / f"{name}.schema.json").read_text() == (data / f"{name}.schema.json").read_text()
