"""Command-line interface.

Matroid arguments are JSON matroid expressions, given inline or as a file
path (``-`` reads stdin).  Exit codes: 0 success, 1 verification failure,
2 input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .corpus import load_corpus
from .errors import DecompositionFailure, MatroidResError
from .focal import focal_heights, focal_ideal_decomposition, focal_matroid
from .formats import (
    betti_text,
    betti_to_doc,
    dumps,
    ideal_to_doc,
    load_ideal,
    parse_matroid_expr,
    parse_monomial,
)
from .homology import hochster_betti
from .matroid import Matroid
from .resolution import (
    contraction_order,
    default_basis,
    linear_quotients_check,
    mapping_cone_betti,
    matroidal_check,
    regularity_and_level,
)
from .symbolic import (
    cover_ideal,
    sf_ell,
    stanley_reisner_ideal,
    symbolic_level,
    symbolic_power,
    symbolic_type,
)

DEFAULT_MAX_GROUND = 12
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_arg(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    if value.lstrip().startswith(("{", "[")):
        return value
    path = Path(value)
    if not path.exists():
        # terse ideals like "x1*x2, x1*x3" are passed inline
        return value
    return path.read_text()


def _load_matroid(value: str) -> Matroid:
    m = parse_matroid_expr(_read_arg(value))
    cap = int(os.environ.get("MR_MAX_GROUND_SET", DEFAULT_MAX_GROUND))
    if len(m.ground) > cap:
        raise InputError(f"ground set has {len(m.ground)} elements, limit is {cap} (MR_MAX_GROUND_SET)")
    return m


def _names(m: Matroid):
    return dict(m.labels) if m.labels else None


def _inverse(names):
    return {lab: v for v, lab in names.items()} if names else None


def _sets(m: Matroid, sets) -> list:
    return ["".join(m.label(v) for v in sorted(s)) if m.labels else sorted(s)
            for s in sorted(sets, key=lambda s: (len(s), sorted(s)))]


def _emit(args, doc: dict, text: str) -> None:
    sys.stdout.write(dumps(doc) if args.json else text)


def _ideal_out(args, title: str, ideal, names) -> None:
    _emit(args, {title: ideal_to_doc(ideal, names)["gens"]},
          f"{title}: {ideal.to_text(names)}\n")


# -- commands --------------------------------------------------------------

def cmd_show(args) -> int:
    m = _load_matroid(args.matroid)
    doc = {"rank": m.rank_, "ground": [m.label(v) if m.labels else v for v in sorted(m.ground)]}
    for kind in ("bases", "circuits", "cocircuits", "hyperplanes"):
        doc[kind] = _sets(m, getattr(m, kind))
    doc["loops"] = _sets(m, [{v} for v in m.loops])
    text = "".join(f"{k}: {v}\n" for k, v in doc.items())
    _emit(args, doc, text)
    return EXIT_OK


def cmd_cover_ideal(args) -> int:
    m = _load_matroid(args.matroid)
    _ideal_out(args, "cover_ideal", cover_ideal(m), _names(m))
    return EXIT_OK


def cmd_sr_ideal(args) -> int:
    m = _load_matroid(args.matroid)
    _ideal_out(args, "stanley_reisner_ideal", stanley_reisner_ideal(m), _names(m))
    return EXIT_OK


def cmd_symbolic(args) -> int:
    m = _load_matroid(args.matroid)
    _ideal_out(args, f"symbolic_power_{args.ell}", symbolic_power(m, args.ell, args.method), _names(m))
    return EXIT_OK


def cmd_sf(args) -> int:
    m = _load_matroid(args.matroid)
    _ideal_out(args, f"sf_{args.ell}", sf_ell(m, args.ell), _names(m))
    return EXIT_OK


def cmd_focal(args) -> int:
    m = _load_matroid(args.matroid)
    names = _names(m)
    mono = parse_monomial(args.gen, _inverse(names))
    ell = symbolic_level(m, mono)
    ctype = symbolic_type(m, mono)
    from .covers import Cover

    dec = focal_matroid(m, Cover(mono, ell))
    focal_j = cover_ideal(dec.focal)
    parts = focal_ideal_decomposition(m, mono)
    doc = {
        "generator": mono.to_text(names),
        "level": ell,
        "symbolic_type": list(ctype),
        "focal_bases": _sets(m, dec.focal.bases),
        "zero_part_bases": _sets(m, dec.zero_part.bases),
        "positive_part_bases": _sets(m, dec.positive_part.bases),
        "focal_cover_ideal": ideal_to_doc(focal_j, names)["gens"],
        "heights": focal_heights(m, mono),
        "decomposition": [{"block": _sets(m, [b])[0] if b else [], "ideal": ideal_to_doc(i, names)["gens"]}
                          for b, i in parts],
    }
    shown = dict(doc, focal_cover_ideal=focal_j.to_text(names),
                 decomposition=[f"{d['block']}: {i.to_text(names)}" for d, (_, i) in zip(doc["decomposition"], parts)])
    text = "".join(f"{k}: {v}\n" for k, v in shown.items())
    _emit(args, doc, text)
    return EXIT_OK


def _parse_basis(m: Matroid, text: str | None) -> tuple:
    if not text:
        return default_basis(m)
    inv = _inverse(_names(m)) or {}
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        out.append(inv[tok] if tok in inv else int(tok))
    return tuple(out)


def _order(m: Matroid, args):
    return contraction_order(m, _parse_basis(m, args.basis), args.tie)


def cmd_order(args) -> int:
    m = _load_matroid(args.matroid)
    names = _names(m)
    order = _order(m, args)
    rows = [{"position": k, "index": order.index(g), "generator": g.to_text(names)}
            for k, g in enumerate(order.ordered_gens)]
    text = "".join(f"{r['position']:>3}  i={r['index']}  {r['generator']}\n" for r in rows)
    _emit(args, {"basis": list(order.ordered_basis), "order": rows}, text)
    return EXIT_OK


def cmd_betti(args) -> int:
    m = _load_matroid(args.matroid)
    names = _names(m)
    tables = {}
    if args.engine in ("cones", "both"):
        tables["cones"] = mapping_cone_betti(_order(m, args))
    if args.engine in ("hochster", "both"):
        tables["hochster"] = hochster_betti(cover_ideal(m))
    status = EXIT_OK
    doc = {k: betti_to_doc(t, names) for k, t in tables.items()}
    text = "".join(f"[{k}]\n{betti_text(t)}" for k, t in tables.items())
    if args.engine == "both":
        diff = tables["cones"].difference(tables["hochster"])
        doc["identical"] = not diff
        text += "engines agree\n" if not diff else f"engines differ at {len(diff)} entries\n"
        if diff:
            status = EXIT_FAIL
    _emit(args, doc, text)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "betti.json").write_text(dumps(doc))
        from .figures import plot_betti

        for k, t in tables.items():
            plot_betti(t, out / f"betti-{k}.png", title=f"{k}: rank {m.rank_}, n={len(m.ground)}")
    return status


def cmd_check_matroidal(args) -> int:
    ideal = load_ideal(_read_arg(args.ideal))
    verdict = matroidal_check(ideal)
    doc = {"matroidal": verdict.matroidal, "circuit_axioms": verdict.circuit_axioms}
    if verdict.matroidal:
        text = "C-matroidal\n"
    else:
        doc.update(pair=[str(g) for g in verdict.pair], lcm=str(verdict.lcm), prime=list(verdict.prime))
        text = (f"NOT C-matroidal\nwitness pair: {verdict.pair[0]}, {verdict.pair[1]}\n"
                f"lcm: {verdict.lcm}\nminimal prime with order 1: {{{', '.join(map(str, verdict.prime))}}}\n")
    _emit(args, doc, text)
    return EXIT_OK if verdict.matroidal else EXIT_FAIL


def cmd_linear_quotients(args) -> int:
    names = None
    if args.ideal:
        ideal = load_ideal(_read_arg(args.ideal))
    else:
        if not args.matroid:
            raise InputError("give a matroid or --ideal")
        m = _load_matroid(args.matroid)
        names = _names(m)
        ideal = symbolic_power(m, args.ell) if args.ell > 1 else cover_ideal(m)
    if args.search:
        ok, order = linear_quotients_check(ideal, "search-all", max_generators=args.max_gens)
    else:
        given = None
        if args.order:
            given = [parse_monomial(t, _inverse(names)) for t in args.order.split(",")]
            if sorted(given, key=lambda g: g.sort_key()) != list(ideal.gens):
                raise InputError("--order must list every minimal generator exactly once")
        ok, order = linear_quotients_check(ideal, "given-order", given)
    doc = {"linear_quotients": ok, "order": [g.to_text(names) for g in order] if order else None}
    text = f"linear quotients: {'yes' if ok else 'no'}\n"
    if order:
        text += "order: " + ", ".join(g.to_text(names) for g in order) + "\n"
    _emit(args, doc, text)
    return EXIT_OK


def cmd_reg(args) -> int:
    m = _load_matroid(args.matroid)
    reg, top = regularity_and_level(m)
    _emit(args, {"regularity": reg, "top_betti_total": top},
          f"regularity: {reg}\ntop Betti total: {top}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_verification

    corpus = load_corpus(args.corpus)
    theorems = tuple(t.strip().upper() for t in args.theorems.split(",") if t.strip())
    for t in theorems:
        if t not in ("A", "B", "C"):
            raise InputError(f"unknown theorem {t!r}")
    report = run_verification(corpus, theorems, seed=args.seed, timing=args.timing)
    doc = report.to_doc()
    text = "".join(f"theorem {t}: {'pass' if r['passed'] else 'FAIL'} ({r['checked']} inputs)\n"
                   for t, r in doc["theorems"].items())
    _emit(args, doc, text)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(dumps(doc))
        from .figures import plot_verification

        plot_verification(doc, out / "verification.png")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_golden(args) -> int:
    from .golden import write_golden

    paths = write_golden(args.out_dir)
    _emit(args, {"written": [str(p) for p in paths]}, "".join(f"{p}\n" for p in paths))
    return EXIT_OK


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matroidres", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = p.add_subparsers(dest="command", required=True)

    def with_matroid(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("matroid", help="matroid expression: inline JSON, file path or -")
        sp.set_defaults(func=func)
        return sp

    with_matroid("show", cmd_show, "rank, bases, circuits, cocircuits, hyperplanes, loops")
    with_matroid("cover-ideal", cmd_cover_ideal, "cover ideal J(M)")
    with_matroid("sr-ideal", cmd_sr_ideal, "Stanley-Reisner ideal of M")
    sp = with_matroid("symbolic", cmd_symbolic, "symbolic power of J(M)")
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--method", choices=["covers", "structure", "both"], default="covers")
    sp = with_matroid("sf", cmd_sf, "squarefree part SF_ell(J(M))")
    sp.add_argument("--ell", type=int, required=True)
    sp = with_matroid("focal", cmd_focal, "focal and cofocal matroids of a generator")
    sp.add_argument("--gen", required=True, help="minimal generator, e.g. x1*x2^2")
    for name, func, help_text in (("order", cmd_order, "contraction ordering of G(J)"),
                                  ("betti", cmd_betti, "multigraded Betti table of R/J")):
        sp = with_matroid(name, func, help_text)
        sp.add_argument("--basis", help="ordered basis, comma separated (default: smallest basis)")
        sp.add_argument("--tie", default="lex", help="lex, input-order or seed:N")
    sp.add_argument("--engine", choices=["cones", "hochster", "both"], default="cones")
    sp.add_argument("--out-dir", help="also write betti.json and heatmaps here")
    sp = sub.add_parser("check-matroidal", help="LCM_2 test for a squarefree ideal")
    sp.add_argument("ideal", help="ideal file (JSON or terse text) or inline text")
    sp.set_defaults(func=cmd_check_matroidal)
    sp = sub.add_parser("linear-quotients", help="linear quotients of J(M)^(ell) or of an ideal")
    sp.add_argument("matroid", nargs="?")
    sp.add_argument("--ideal")
    sp.add_argument("--ell", type=int, default=1)
    sp.add_argument("--search", action="store_true", help="search all orders")
    sp.add_argument("--order", help="comma-separated generator order to test")
    sp.add_argument("--max-gens", type=int, default=16)
    sp.set_defaults(func=cmd_linear_quotients)
    with_matroid("reg", cmd_reg, "regularity and top Betti total of R/J")
    sp = sub.add_parser("verify", help="check theorems A, B, C over a corpus")
    sp.add_argument("--theorems", default="A,B,C")
    sp.add_argument("--corpus", help="corpus JSON (default: bundled corpus)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--timing", action="store_true")
    sp.add_argument("--out-dir", help="write report.json and verification.png here")
    sp.set_defaults(func=cmd_verify)
    sp = sub.add_parser("golden", help="write the worked-example reproductions")
    sp.add_argument("--out-dir", required=True)
    sp.set_defaults(func=cmd_golden)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DecompositionFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (MatroidResError, InputError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
