"""JSON and text formats for matroids, monomials, ideals and Betti tables."""

from __future__ import annotations

import json
import re
from importlib import resources

import jsonschema

from .betti import BettiTable
from .errors import SchemaError
from .matroid import Matroid, direct_sum, fano, uniform
from .monomials import Monomial, MonomialIdeal

_SCHEMA_CACHE: dict = {}


def load_schema(name: str) -> dict:
    if name not in _SCHEMA_CACHE:
        text = resources.files("matroidres.data").joinpath(f"{name}.schema.json").read_text()
        _SCHEMA_CACHE[name] = json.loads(text)
    return _SCHEMA_CACHE[name]


def _pointer(path) -> str:
    return "/" + "/".join(str(p) for p in path) if path else "/"


def _validate(doc, name: str) -> None:
    validator = jsonschema.Draft7Validator(load_schema(name))
    errors = sorted(validator.iter_errors(doc), key=lambda e: (len(e.absolute_path), list(map(str, e.absolute_path))))
    if errors:
        # report the deepest error, it names the offending node most precisely
        err = max(errors, key=lambda e: len(e.absolute_path))
        raise SchemaError(err.message, _pointer(err.absolute_path))


# -- matroid expressions ---------------------------------------------------

def parse_matroid_expr(text_or_doc) -> Matroid:
    """Evaluate a JSON matroid expression (a string or an already-parsed object)."""
    if isinstance(text_or_doc, (str, bytes)):
        try:
            doc = json.loads(text_or_doc)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc.msg}") from exc
    else:
        doc = text_or_doc
    _validate(doc, "matroid")
    return _evaluate(doc, [])


def _resolve_set(m: Matroid, items, path) -> frozenset:
    by_label = {}
    if m.labels:
        by_label = {lab: v for v, lab in m.labels.items()}
    out = set()
    for k, item in enumerate(items):
        if isinstance(item, str):
            if item not in by_label:
                raise SchemaError(f"unknown vertex label {item!r}", _pointer(path + [k]))
            out.add(by_label[item])
        else:
            if item not in m.ground:
                raise SchemaError(f"vertex {item} not in the ground set", _pointer(path + [k]))
            out.add(item)
    return frozenset(out)


def _evaluate(doc, path) -> Matroid:
    op = doc["op"]
    if op == "uniform":
        if doc["r"] > doc["n"]:
            raise SchemaError("rank exceeds ground set size", _pointer(path + ["r"]))
        return uniform(doc["r"], doc["n"])
    if op == "fano":
        return fano()
    if op == "bases":
        return _from_bases_doc(doc, path)
    if op == "direct_sum":
        parts = [_evaluate(p, path + ["parts", k]) for k, p in enumerate(doc["parts"])]
        out = parts[0]
        for p in parts[1:]:
            out = direct_sum(out, p)
        return out
    inner = _evaluate(doc["of"], path + ["of"])
    if op == "dual":
        return inner.dual()
    if op == "truncate":
        if doc["rank"] > inner.rank_:
            raise SchemaError("target rank exceeds the rank", _pointer(path + ["rank"]))
        return inner.truncate(doc["rank"])
    s = _resolve_set(inner, doc["set"], path + ["set"])
    if op == "delete":
        return inner.delete(s)
    if op == "restrict":
        return inner.restrict(s)
    return inner.contract(s)


def _from_bases_doc(doc, path) -> Matroid:
    labels = doc.get("labels")
    ground = doc.get("ground")
    if labels is not None:
        ids = ground if ground is not None else list(range(1, len(labels) + 1))
        if len(ids) != len(labels) or len(set(labels)) != len(labels):
            raise SchemaError("labels must be distinct and aligned with the ground set",
                              _pointer(path + ["labels"]))
        index = dict(zip(labels, ids))
        names = dict(zip(ids, labels))
    else:
        index, names = {}, None
    bases = []
    for k, b in enumerate(doc["bases"]):
        members = []
        for t, item in enumerate(b):
            if isinstance(item, str):
                if item not in index:
                    raise SchemaError(f"unknown vertex label {item!r}", _pointer(path + ["bases", k, t]))
                members.append(index[item])
            else:
                members.append(item)
        bases.append(members)
    if ground is None and labels is not None:
        ground = list(range(1, len(labels) + 1))
    return Matroid.from_bases(bases, ground=ground, labels=names)


def matroid_to_doc(m: Matroid) -> dict:
    doc = {"op": "bases", "ground": sorted(m.ground), "bases": [list(b) for b in m.sorted_bases()]}
    if m.labels:
        doc["labels"] = [m.label(v) for v in sorted(m.ground)]
    return doc


# -- monomials and ideals --------------------------------------------------

_TERM = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(\d+))?\s*$")
_XVAR = re.compile(r"^x(\d+)$")


def _var_id(name: str, names: dict | None) -> int:
    if names and name in names:
        return names[name]
    hit = _XVAR.match(name)
    if hit is None or int(hit.group(1)) < 1:
        raise SchemaError(f"unknown variable {name!r}")
    return int(hit.group(1))


def parse_monomial(text: str, names: dict | None = None) -> Monomial:
    """Parse ``x1*x2^2`` (or label names if ``names`` maps label -> id)."""
    text = text.strip()
    if text == "1":
        return Monomial(())
    exps: dict = {}
    for factor in text.split("*"):
        hit = _TERM.match(factor)
        if hit is None:
            raise SchemaError(f"cannot parse monomial factor {factor!r}")
        v = _var_id(hit.group(1), names)
        exps[v] = exps.get(v, 0) + int(hit.group(2) or 1)
    return Monomial.from_dict(exps)


def parse_ideal_text(text: str, names: dict | None = None) -> MonomialIdeal:
    """Terse ideal form: ``x1*x2, x1*x3`` (``0`` is the zero ideal)."""
    text = text.strip().strip("()").strip()
    if text in ("", "0"):
        return MonomialIdeal(())
    return MonomialIdeal.from_gens(parse_monomial(t, names) for t in text.split(","))


def monomial_to_doc(m: Monomial, names=None) -> dict:
    return {(names[v] if names and v in names else f"x{v}"): e for v, e in m.exps}


def monomial_from_doc(doc: dict, names: dict | None = None) -> Monomial:
    return Monomial.from_dict({_var_id(k, names): int(e) for k, e in doc.items()})


def ideal_to_doc(i: MonomialIdeal, names=None) -> dict:
    return {"gens": [monomial_to_doc(g, names) for g in i.gens]}


def ideal_from_doc(doc, names: dict | None = None) -> MonomialIdeal:
    _validate(doc, "ideal")
    return MonomialIdeal.from_gens(monomial_from_doc(g, names) for g in doc["gens"])


def load_ideal(text: str, names: dict | None = None) -> MonomialIdeal:
    """Ideal from either the JSON form or the terse text form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc.msg}") from exc
        return ideal_from_doc(doc, names)
    return parse_ideal_text(stripped, names)


# -- Betti tables ----------------------------------------------------------

def betti_to_doc(t: BettiTable, names=None) -> dict:
    return {
        "entries": [{"h": h, "multidegree": monomial_to_doc(m, names), "multiplicity": c}
                    for h, m, c in t.entries],
    }


def betti_from_doc(doc, names: dict | None = None) -> BettiTable:
    _validate(doc, "betti")
    counts = {}
    for e in doc["entries"]:
        key = (e["h"], monomial_from_doc(e["multidegree"], names))
        counts[key] = counts.get(key, 0) + e["multiplicity"]
    return BettiTable.from_counts(counts)


def betti_text(t: BettiTable) -> str:
    """Aligned table: one row per homological degree, one column per total degree."""
    graded = t.graded()
    if not graded:
        return "(empty)\n"
    hs = sorted({h for h, _ in graded})
    degs = sorted({d for _, d in graded})
    head = ["h\\deg"] + [str(d) for d in degs]
    rows = [[str(h)] + [str(graded.get((h, d), "")) or "." for d in degs] for h in hs]
    widths = [max(len(r[k]) for r in [head] + rows) for k in range(len(head))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in [head] + rows]
    return "\n".join(lines) + "\n"


def dumps(doc) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
