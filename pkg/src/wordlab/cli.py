"""``wordlab`` command line.

Exit status: 0 verdict true / report complete, 1 verdict false, 2 usage or
validation error, 3 enumeration budget or order cap refused the run.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from . import __version__, backend
from .catalog import STANDARD_CATALOG, canonical_name, catalog_group, predicted_order, resolve_group
from .characters import (
    CharacterTableError,
    character_table,
    character_table_document,
    galois_check,
)
from .conciseness import (
    NotMultilinearCommutator,
    corollary_check,
    fam_bound_check,
    lemma_concise_report,
)
from .group import DEFAULT_ORDER_CAP, GroupError, SizeLimitError
from .rationality import (
    class_union,
    power_closed,
    rational_on,
    weakly_rational_by_definition,
    weakly_rational_on,
)
from .words import (
    BudgetExceeded,
    WordSyntaxError,
    evaluate_word,
    parse_word,
    value_counts,
    verbal_subgroup,
    word_image,
)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_REFUSED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, group=True, word=False):
    if group:
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--group", help="catalog name, e.g. S4, D4, Q8, PSL(2,7)")
        src.add_argument("--gens-file", help="generator file, one permutation per line in cycle notation")
    if word:
        p.add_argument("--word", required=True, help='group word, e.g. "[x1^2,x2]^3"')
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--budget", type=int, default=None, help="max word evaluations (default 1e8 or $WORDLAB_BUDGET)")
    p.add_argument("--jobs", type=int, default=1, help="parallel enumeration blocks")
    p.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP, help="max group order")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed time from the document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wordlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"wordlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    grp = sub.add_parser("group", help="group information").add_subparsers(dest="action", required=True)
    info = grp.add_parser("info", help="order, exponent and conjugacy classes")
    info.add_argument("spec", nargs="?", help="catalog name")
    info.add_argument("--gens-file")
    info.add_argument("--format", choices=("json", "table"), default="json")
    info.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP)
    info.add_argument("--no-timing", action="store_true")
    lst = grp.add_parser("list", help="the standard catalog")
    lst.add_argument("--format", choices=("json", "table"), default="json")
    lst.add_argument("--no-timing", action="store_true")

    wrd = sub.add_parser("word", help="evaluate words").add_subparsers(dest="action", required=True)
    ev = wrd.add_parser("eval", help="value at one assignment")
    _common(ev, word=True)
    ev.add_argument("--assign", action="append", default=[], metavar="x1=ELEMENT",
                    help="element as index or cycle notation; repeat per variable")
    _common(wrd.add_parser("image", help="all word values with solution counts"), word=True)
    _common(wrd.add_parser("verbal", help="verbal subgroup"), word=True)

    rat = sub.add_parser("rational", help="weak or full rationality on one group")
    _common(rat, word=True)
    rat.add_argument("--mode", choices=("weak", "full"), default="full")

    ch = sub.add_parser("chartab", help="character table (Dixon)")
    _common(ch)
    ch.add_argument("--lift", action="store_true", help="include complex values (default)")
    ch.add_argument("--mod-p", action="store_true", help="include the mod-p table")

    ver = sub.add_parser("verify", help="verification workflows").add_subparsers(dest="action", required=True)
    ra = ver.add_parser("ra", help="triple counts of (D, C) and their power images")
    _common(ra)
    ra.add_argument("--D", help="class name, e.g. 5A")
    ra.add_argument("--C", help="class name, e.g. 5B")
    ra.add_argument("--e", type=int, help="exponent prime to |G|")
    ra.add_argument("--all", action="store_true", help="every class pair and every e prime to |G| up to exp(G)")
    cor = ver.add_parser("corollary", help="rationality of [...[x1^n1,x2]^n2,...,xk]^nk over groups")
    cor.add_argument("--exponents", required=True, help="comma separated, e.g. 2,1,3")
    cor.add_argument("--groups", default=None, help="comma separated catalog names (default: standard catalog)")
    cor.add_argument("--format", choices=("json", "table"), default="json")
    cor.add_argument("--budget", type=int, default=None)
    cor.add_argument("--jobs", type=int, default=1)
    cor.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP)
    cor.add_argument("--no-timing", action="store_true")
    con = ver.add_parser("concise", help="inequalities bounding |w(G)| by the number of values")
    _common(con, word=True)
    con.add_argument("--fam", action="store_true", help="also compare |w(G)| with (m-1)^(m-1)")

    chk = sub.add_parser("check", help="set checks").add_subparsers(dest="action", required=True)
    pc = chk.add_parser("power-closed", help="closure of a union of classes under coprime powers")
    _common(pc)
    pc.add_argument("--class-union", required=True, help="comma separated class names, e.g. 1A,3A")
    return parser


def _group(args):
    return resolve_group(getattr(args, "group", None), getattr(args, "gens_file", None), cap=args.cap)


def _elements(G, idx):
    return [{"index": int(g), "cycles": G.cycle_string(int(g))} for g in idx]


# --- handlers: each returns (kind, payload, ok, table lines) ---------------

def cmd_group_info(args):
    if (args.spec is None) == (args.gens_file is None):
        raise UsageError("give exactly one of a catalog name or --gens-file")
    G = resolve_group(args.spec, args.gens_file, cap=args.cap)
    T = G.classes
    payload = {
        "group": G.name,
        "order": G.order,
        "degree": G.degree,
        "exponent": G.exponent,
        "abelian": G.is_abelian,
        "generators": [G.cycle_string(g) for g in G.generators],
        "classes": [
            {"name": T.names[k], "rep": G.cycle_string(T.rep[k]), "size": T.sizes[k],
             "element_order": T.rep_orders[k], "inverse": T.names[T.inverse_class[k]]}
            for k in range(len(T))
        ],
    }
    lines = [f"{G.name}: order {G.order}, degree {G.degree}, exponent {G.exponent}"]
    lines += [f"  {c['name']:<5} size {c['size']:>4}  rep {c['rep']}" for c in payload["classes"]]
    return "group_info", payload, True, lines


def cmd_group_list(args):
    rows = [{"name": n, "order": predicted_order(n)} for n in STANDARD_CATALOG]
    lines = [f"{r['name']:<10} {r['order']:>5}" for r in rows]
    return "group_list", {"groups": rows}, True, lines


def _parse_assignment(G, w, items):
    a = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"bad --assign {item!r}; expected NAME=ELEMENT")
        name, value = item.split("=", 1)
        a[name.strip()] = G.parse_element(value)
    missing = [v for v in w.variables if v not in a]
    if missing:
        raise UsageError(f"no binding for {', '.join(missing)}")
    return a


def cmd_word_eval(args):
    G = _group(args)
    w = parse_word(args.word)
    a = _parse_assignment(G, w, args.assign)
    g = evaluate_word(G, w, a)
    payload = {"group": G.name, "word": w.text,
               "assignment": {k: a[k] for k in w.variables},
               "value": {"index": g, "cycles": G.cycle_string(g)}}
    return "word_eval", payload, True, [f"{w.text} = {G.cycle_string(g)}  (index {g})"]


def cmd_word_image(args):
    G = _group(args)
    w = parse_word(args.word)
    counts = value_counts(G, w, args.budget, args.jobs)
    image = word_image(G, w, args.budget, args.jobs)
    payload = {
        "group": G.name, "word": w.text, "m": len(image),
        "assignments": G.order ** w.arity,
        "values": [dict(e, count=int(counts[e["index"]])) for e in _elements(G, image)],
    }
    lines = [f"{w.text} on {G.name}: {len(image)} values"]
    lines += [f"  {e['cycles']:<24} {e['count']}" for e in payload["values"]]
    return "word_image", payload, True, lines


def cmd_word_verbal(args):
    G = _group(args)
    w = parse_word(args.word)
    W = verbal_subgroup(G, w, args.budget, args.jobs)
    m = len(word_image(G, w, args.budget, args.jobs))
    payload = {"group": G.name, "word": w.text, "m": m, "order": W.order,
               "index": W.index, "normal": W.is_normal(), "members": _elements(G, W.members)}
    return "verbal_subgroup", payload, True, [f"w(G) for {w.text} on {G.name}: order {W.order}, index {W.index}, m = {m}"]


def cmd_rational(args):
    G = _group(args)
    w = parse_word(args.word)
    if args.mode == "weak":
        v = weakly_rational_on(G, w, args.budget, args.jobs)
        d = weakly_rational_by_definition(G, w, args.budget, args.jobs)
        payload = v.to_dict()
        payload["definition_check"] = d.to_dict()
        if d.holds != v.holds:
            raise AssertionError(f"weak rationality checks disagree on {G.name}, {w.text}")
    else:
        v = rational_on(G, w, args.budget, args.jobs)
        payload = v.to_dict()
    payload["scope"] = "this group only"
    line = f"{args.mode} rationality of {w.text} on {G.name}: {'holds' if v.holds else 'FAILS'}"
    if v.witness:
        line += f"  witness g={G.cycle_string(v.witness.g)} e={v.witness.e}"
    return "rationality", payload, v.holds, [line]


def cmd_chartab(args):
    G = _group(args)
    doc = character_table_document(G, lift=args.lift or not args.mod_p, mod_p=args.mod_p)
    names = [c["name"] for c in doc["classes"]]
    lines = ["      " + "".join(f"{n:>16}" for n in names)]
    if "values" in doc:
        for i, row in enumerate(doc["values"]):
            cells = "".join(f"{_fmt_complex(v):>16}" for v in row)
            lines.append(f"chi{i:<3}" + cells)
    if "mod_p" in doc:
        lines.append(f"mod {doc['mod_p']['prime']}:")
        for i, row in enumerate(doc["mod_p"]["table"]):
            lines.append(f"chi{i:<3}" + "".join(f"{x:>16}" for x in row))
    return "character_table", doc, True, lines


def _fmt_complex(v):
    re_, im = v["re"], v["im"]
    if abs(im) < 1e-9:
        return f"{re_:.4g}"
    return f"{re_:.3g}{im:+.3g}i"


def cmd_verify_ra(args):
    G = _group(args)
    T = G.classes
    ct = character_table(G)
    if args.all:
        es = [e for e in range(1, G.exponent + 1) if math.gcd(e, G.order) == 1]
        reports = [galois_check(G, D, C, e, ct) for D in range(len(T)) for C in range(len(T)) for e in es]
        ok = all(r.holds for r in reports)
        payload = {"group": G.name, "checked": len(reports), "holds": ok,
                   "reports": [r.to_dict() for r in reports]}
        bad = [r for r in reports if not r.holds]
        lines = [f"{G.name}: {len(reports)} (D, C, e) triples, {len(bad)} failures"]
        lines += [f"  FAIL {r.D} {r.C} e={r.e}: {r.N_brute} vs {r.N_brute_e}" for r in bad]
        return "triple_count_sweep", payload, ok, lines
    if args.D is None or args.C is None or args.e is None:
        raise UsageError("verify ra needs --D, --C and --e (or --all)")
    r = galois_check(G, T.lookup(args.D), T.lookup(args.C), args.e, ct)
    lines = [
        f"N({r.D},{r.C})   brute {r.N_brute:>8}  formula {r.N_formula:.6f}",
        f"N({r.D_e},{r.C_e})   brute {r.N_brute_e:>8}  formula {r.N_formula_e:.6f}   "
        f"(e = {r.e}, acting as {r.e_effective})",
        "PASS" if r.holds else "FAIL",
    ]
    return "triple_count", r.to_dict(), r.holds, lines


def cmd_verify_corollary(args):
    try:
        exps = [int(x) for x in args.exponents.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --exponents {args.exponents!r}") from None
    names = [g.strip() for g in args.groups.split(",")] if args.groups else list(STANDARD_CATALOG)
    groups = []
    for n in names:
        canonical_name(n)  # validate before any work
        if predicted_order(n) > args.cap:
            raise SizeLimitError(f"{n} exceeds order cap {args.cap}")
        groups.append(catalog_group(n, cap=args.cap))
    rep = corollary_check(exps, groups, args.budget, args.jobs)
    lines = [f"{rep.word}:"]
    for v in rep.verdicts:
        lines.append(f"  {v.group:<10} m={v.m:<4} {'PASS' if v.holds else 'FAIL'}")
    for g, why in rep.skipped:
        lines.append(f"  {g:<10} skipped: {why}")
    return "corollary", rep.to_dict(), rep.holds, lines


def cmd_verify_concise(args):
    G = _group(args)
    w = parse_word(args.word)
    rep = lemma_concise_report(G, w, args.budget, args.jobs)
    payload = rep.to_dict()
    ok = rep.passed
    lines = rep.table_lines()
    if args.fam:
        fam = fam_bound_check(G, w, args.budget, args.jobs)
        payload["fam_bound"] = fam.to_dict()
        ok = ok and fam.holds
        lines.append(f"  {'|w(G)| <= (m-1)^(m-1)':<34} {fam.order_W:>12} <= {fam.bound:<12} "
                     f"{'PASS' if fam.holds else 'FAIL'}")
    return "concise", payload, ok, lines


def cmd_power_closed(args):
    G = _group(args)
    names = [n.strip() for n in args.class_union.split(",") if n.strip()]
    S = class_union(G, names)
    r = power_closed(G, S, labels=[G.classes.names[G.classes.lookup(n)] for n in names])
    lines = [f"{G.name} {'+'.join(r.labels)} ({r.size} elements): power closed {r.power_closed}, "
             f"conjugation closed {r.conjugation_closed}, contains 1 {r.contains_identity}"]
    if r.witness:
        lines.append(f"  witness s={G.cycle_string(r.witness.g)} e={r.witness.e}")
    return "power_closed", r.to_dict(), r.power_closed, lines


HANDLERS = {
    ("group", "info"): cmd_group_info,
    ("group", "list"): cmd_group_list,
    ("word", "eval"): cmd_word_eval,
    ("word", "image"): cmd_word_image,
    ("word", "verbal"): cmd_word_verbal,
    ("rational", None): cmd_rational,
    ("chartab", None): cmd_chartab,
    ("verify", "ra"): cmd_verify_ra,
    ("verify", "corollary"): cmd_verify_corollary,
    ("verify", "concise"): cmd_verify_concise,
    ("check", "power-closed"): cmd_power_closed,
}


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handler = HANDLERS[(args.command, getattr(args, "action", None))]
    t0 = time.perf_counter()
    try:
        kind, payload, ok, lines = handler(args)
    except BudgetExceeded as exc:
        print(f"wordlab: refused: {exc}", file=err)
        return EXIT_REFUSED
    except SizeLimitError as exc:
        print(f"wordlab: refused: {exc}", file=err)
        return EXIT_REFUSED
    except (UsageError, GroupError, WordSyntaxError, NotMultilinearCommutator, KeyError, ValueError) as exc:
        print(f"wordlab: error: {exc}", file=err)
        return EXIT_USAGE
    except CharacterTableError as exc:
        print(f"wordlab: internal error: {exc}", file=err)
        return EXIT_USAGE
    if args.format == "table":
        print("\n".join(lines), file=out)
    else:
        doc = {"tool": "wordlab", "version": __version__, "backend": backend.NAME,
               "command": argv, "kind": kind, "payload": payload}
        if not args.no_timing:
            doc["elapsed_s"] = round(time.perf_counter() - t0, 6)
        print(dumps(doc), file=out)
    return EXIT_OK if ok else EXIT_FALSE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
