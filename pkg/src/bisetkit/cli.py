"""Command-line front end.

Results go to stdout (optionally as JSON), progress and errors to stderr.
Exit codes: 0 success, 1 computational assertion failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cache as _cache
from . import catalog as _catalog
from .acceptance import run_all
from .bisets import (
    BurnsideElement,
    bouc_decompose,
    compose_bisets,
    element_of,
    goursat_data,
    recompose,
)
from .characters import lin_kernel
from .dress import (
    DressElement,
    counterexample_check,
    dress_compose,
    no_bridge_check,
    triple_subgroup,
)
from .errors import BisetkitError, FoundBridge
from .green import crc_product_span, get_backend, ideal_span, seeds_kRQ
from .groups import (
    FiniteGroup,
    automorphisms,
    canonical_subgroup_rep,
    closure,
    conjugacy_classes,
    make_group,
    product_group,
    subgroup_classes,
    subgroups,
)


def resolve_group(name: str) -> FiniteGroup:
    """Accepts catalog names, Cn / Dn shorthands, and prod(A,B) compositions."""
    name = name.strip()
    if name.startswith("prod(") and name.endswith(")"):
        inner = name[5:-1]
        parts, depth, start = [], 0, 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                parts.append(inner[start:i])
                start = i + 1
        parts.append(inner[start:])
        if len(parts) < 2:
            raise BisetkitError(f"prod needs at least two factors: {name!r}")
        return product_group(*[resolve_group(p) for p in parts])
    try:
        return _catalog.group_by_name(name)
    except BisetkitError:
        pass
    if name.startswith("C") and name[1:].isdigit():
        return make_group("cyclic", int(name[1:]))
    if name.startswith("D") and name[1:].isdigit():
        return make_group("dihedral", int(name[1:]))
    raise BisetkitError(f"unknown group name {name!r}")


def _parse_generators(text: str) -> list[tuple[int, ...]]:
    """Parse '1,0,2;0,1,1' into component tuples."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            out.append(tuple(int(x) for x in chunk.split(",")))
    return out


def _element_to_json(x: BurnsideElement) -> dict:
    return {
        "left": x.left.label,
        "right": x.right.label,
        "terms": [{"num": v.numerator, "den": v.denominator, "class": list(k)}
                  for k, v in sorted(x.coeffs.items())],
    }


def _element_from_json(doc: dict) -> BurnsideElement:
    left = resolve_group(doc["left"])
    right = resolve_group(doc["right"])
    p = product_group(left, right)
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for term in doc["terms"]:
        members = canonical_subgroup_rep(p, tuple(int(x) for x in term["class"]))
        c = Fraction(int(term["num"]), int(term.get("den", 1)))
        if c:
            coeffs[members] = coeffs.get(members, Fraction(0)) + c
    return BurnsideElement(left, right, {k: v for k, v in coeffs.items() if v})


def _dress_to_json(x: DressElement) -> dict:
    return {
        "g": x.g.label, "k": x.k.label, "c": x.c.label,
        "terms": [{"num": v.numerator, "den": v.denominator, "class": list(kk)}
                  for kk, v in sorted(x.coeffs.items())],
    }


def _emit(args, doc: dict, human: str) -> None:
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        print(human)


def cmd_group(args) -> int:
    g = resolve_group(args.name)
    if args.what == "info":
        classes = conjugacy_classes(g)
        orders: dict[int, int] = {}
        for a in range(g.order):
            o = g.element_order(a)
            orders[o] = orders.get(o, 0) + 1
        doc = {"label": g.label, "order": g.order, "abelian": g.is_abelian,
               "exponent": g.exponent, "conjugacy_classes": len(classes),
               "element_orders": {str(k): v for k, v in sorted(orders.items())}}
        _emit(args, doc, "\n".join(f"{k}: {v}" for k, v in doc.items()))
    elif args.what == "subgroups":
        subs = subgroups(g, bound=args.order_bound)
        cls = subgroup_classes(g, bound=args.order_bound)
        doc = {"label": g.label, "subgroups": len(subs), "classes": len(cls),
               "by_class": [{"order": c.representative.order,
                             "representative": list(c.representative.members),
                             "size": c.size} for c in cls]}
        lines = [f"{len(subs)} subgroups in {len(cls)} conjugacy classes"]
        for c in cls:
            lines.append(f"  order {c.representative.order:3d}  "
                         f"class size {c.size:3d}  rep {list(c.representative.members)}")
        _emit(args, doc, "\n".join(lines))
    else:  # auts
        auts, inner, out_order = automorphisms(g, bound=args.order_bound)
        doc = {"label": g.label, "aut_order": len(auts),
               "inn_order": len(inner), "out_order": out_order}
        _emit(args, doc,
              f"|Aut| = {len(auts)}, |Inn| = {len(inner)}, |Out| = {out_order}")
    return 0


def cmd_compose(args) -> int:
    with open(args.left, encoding="utf-8") as fh:
        x = _element_from_json(json.load(fh))
    with open(args.right, encoding="utf-8") as fh:
        y = _element_from_json(json.load(fh))
    mid = resolve_group(args.mid)
    if x.right.label != mid.label or y.left.label != mid.label:
        raise BisetkitError(
            f"middle group {mid.label} does not match elements "
            f"({x.right.label} / {y.left.label})")
    # re-anchor both elements on shared group objects
    x = _element_from_json(_element_to_json(x))
    y = _element_from_json(_element_to_json(y))
    result = compose_bisets(x, y)
    _emit(args, _element_to_json(result), repr(result))
    return 0


def cmd_bouc(args) -> int:
    h = resolve_group(args.left)
    g = resolve_group(args.right)
    p = product_group(h, g)
    gens = []
    for t in _parse_generators(args.subgroup):
        if len(t) == 2:
            gens.append(p.encode(t))
        elif len(t) == 1:
            gens.append(t[0])  # already a product index
        else:
            raise BisetkitError(f"subgroup generator {t} is not a pair")
    members = closure(p, gens)
    rep = canonical_subgroup_rep(p, members)
    from .bisets import BisetClass
    cls = BisetClass(h, g, rep)
    gd = goursat_data(h, g, rep)
    word = bouc_decompose(cls)
    ok = recompose(word) == element_of(cls)
    doc = {
        "left": h.label, "right": g.label,
        "class_representative": list(rep),
        "goursat": {"D": list(gd.d.members), "C": list(gd.c.members),
                    "B": list(gd.b.members), "A": list(gd.a.members),
                    "f_images": list(gd.f.images)},
        "word": [{"left": w.left.label, "right": w.right.label,
                  "stabilizer": list(w.rep)} for w in word],
        "roundtrip": ok,
    }
    lines = [f"class of {list(rep)} <= {h.label} x {g.label}",
             f"goursat D={list(gd.d.members)} C={list(gd.c.members)} "
             f"B={list(gd.b.members)} A={list(gd.a.members)}"]
    for tag, w in zip(("Ind", "Inf", "Iso", "Def", "Res"), word):
        lines.append(f"  {tag}: ({w.left.label}, {w.right.label}) / {list(w.rep)}")
    lines.append(f"roundtrip: {'ok' if ok else 'MISMATCH'}")
    _emit(args, doc, "\n".join(lines))
    return 0 if ok else 1


def cmd_ahat(args) -> int:
    if args.backend == "rbc" and not args.c:
        print("usage error: --backend rbc requires --c", file=sys.stderr)
        return 2
    h = resolve_group(args.group)
    c = resolve_group(args.c) if args.c else None
    backend = get_backend(args.backend, c)
    report = ideal_span(backend, h)
    doc = report.to_json_dict()
    human = (f"backend {report.backend}, group {report.group}: "
             f"ambient {report.ambient_dim}, ideal {report.ideal_dim}, "
             f"quotient {report.quotient_dim}")
    _emit(args, doc, human)
    return 0


def cmd_lin_kernel(args) -> int:
    g = resolve_group(args.name)
    basis = lin_kernel(g)
    labels = [list(c.representative.members) for c in subgroup_classes(g)]
    doc = {"group": g.label, "kernel_dim": len(basis),
           "class_reps": labels,
           "vectors": [[str(x) for x in v] for v in basis]}
    lines = [f"kernel of lin on B({g.label}): dimension {len(basis)}"]
    for v in basis:
        lines.append("  " + " ".join(str(x) for x in v))
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_seeds(args) -> int:
    seeds = seeds_kRQ(args.max_m)
    counts = {m: 0 for m in range(1, args.max_m + 1)}
    for s in seeds:
        counts[s.m] += 1
    doc = {"max_m": args.max_m,
           "counts": {str(m): counts[m] for m in counts},
           "seeds": [{"m": s.m, "character_values":
                      {str(u): k for u, k in s.character.values}}
                     for s in seeds]}
    lines = [f"{'m':>3} {'seeds':>6}"]
    for m in range(1, args.max_m + 1):
        lines.append(f"{m:>3} {counts[m]:>6}")
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_crc_check(args) -> int:
    g = resolve_group(args.g)
    k = resolve_group(args.k)
    rep = crc_product_span(g, k)
    doc = {"g": g.label, "k": k.label, "product_rank": rep["product_rank"],
           "target_dim": rep["target_dim"], "match": rep["match"]}
    _emit(args, doc, f"rank {rep['product_rank']} of {rep['target_dim']}: "
          f"{'match' if rep['match'] else 'MISMATCH'}")
    return 0 if rep["match"] else 1


def cmd_dress_compose(args) -> int:
    g = resolve_group(args.g)
    l = resolve_group(args.l)
    k = resolve_group(args.k)
    c = resolve_group(args.c)
    p_glc = product_group(g, l, c)
    p_lkc = product_group(l, k, c)
    e_members = closure(p_glc, [p_glc.encode(t) for t in _parse_generators(args.e)])
    d_members = closure(p_lkc, [p_lkc.encode(t) for t in _parse_generators(args.d)])
    e = triple_subgroup(g, l, c, e_members)
    d = triple_subgroup(l, k, c, d_members)
    x = DressElement(g, l, c, {e.canonical_rep(): Fraction(1)})
    y = DressElement(l, k, c, {d.canonical_rep(): Fraction(1)})
    result = dress_compose(x, y)
    _emit(args, _dress_to_json(result), repr(result))
    return 0


def cmd_no_bridge(args) -> int:
    g = resolve_group(args.g)
    h = resolve_group(args.h)
    c = resolve_group(args.c)
    report = no_bridge_check(g, h, c)
    _emit(args, report,
          f"scanned {report['sections_scanned']} sections; "
          f"bridges: {len(report['bridges'])}; "
          f"{'passed' if report['passed'] else 'bridge exists'}")
    return 0


def cmd_counterexample(args) -> int:
    transcript = counterexample_check()
    if args.json:
        print(json.dumps(transcript, sort_keys=True))
    else:
        for key in ("groups", "T", "tau", "order4_candidates"):
            print(f"{key}: {json.dumps(transcript[key], sort_keys=True)}")
        print(f"admissible kernels at bound 7: "
              f"{transcript['admissible_kernels_bound7']}")
        print(transcript["verdict"])
    return 0


def cmd_accept(args) -> int:
    selected = [int(x) for x in args.only.split(",")] if args.only else None
    results = run_all(selected=selected)
    if args.json:
        stripped = []
        for r in results:
            r = dict(r)
            r.pop("seconds", None)
            r.pop("transcript", None)
            stripped.append(_json_safe(r))
        print(json.dumps(stripped, sort_keys=True))
    return 0 if all(r["passed"] for r in results) else 1


def _json_safe(x):
    if isinstance(x, dict):
        return {str(k): _json_safe(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_safe(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (int, str, bool, float)) or x is None:
        return x
    return str(x)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bisetkit",
        description="Double Burnside ring and Green biset functor computations")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    parser.add_argument("--cache-dir", default=None,
                        help="subgroup lattice cache directory "
                             "(default: $BISETKIT_CACHE or ./.bisetkit-cache)")
    parser.add_argument("--order-bound", type=int, default=256,
                        help="largest group order the lattice code will touch")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="inspect a single group")
    p.add_argument("what", choices=["info", "subgroups", "auts"])
    p.add_argument("name")
    p.set_defaults(fn=cmd_group)

    p = sub.add_parser("compose", help="compose two biset elements from JSON files")
    p.add_argument("--left", required=True, help="JSON file, element of RB(H,G)")
    p.add_argument("--mid", required=True, help="middle group name")
    p.add_argument("--right", required=True, help="JSON file, element of RB(G,K)")
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("bouc", help="Bouc decomposition of a transitive biset")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("subgroup", help="generators 'h,g;h,g;...' as component pairs")
    p.set_defaults(fn=cmd_bouc)

    p = sub.add_parser("ahat", help="quotient algebra dimensions")
    p.add_argument("--backend", required=True, choices=["rb", "rq", "crc", "rbc"])
    p.add_argument("--group", required=True)
    p.add_argument("--c", default=None, help="shift group for the rbc backend")
    p.set_defaults(fn=cmd_ahat)

    p = sub.add_parser("lin-kernel", help="kernel of linearization on B(G)")
    p.add_argument("name")
    p.set_defaults(fn=cmd_lin_kernel)

    p = sub.add_parser("seeds", help="primitive-character seed counts")
    p.add_argument("--max-m", type=int, required=True)
    p.set_defaults(fn=cmd_seeds)

    p = sub.add_parser("crc-check", help="complex product span rank check")
    p.add_argument("g")
    p.add_argument("k")
    p.set_defaults(fn=cmd_crc_check)

    p = sub.add_parser("dress-compose", help="compose two transitive shifted classes")
    p.add_argument("g")
    p.add_argument("l")
    p.add_argument("k")
    p.add_argument("c")
    p.add_argument("--e", required=True,
                   help="generators of E <= GxLxC: 'g,l,c;g,l,c;...'")
    p.add_argument("--d", required=True,
                   help="generators of D <= LxKxC: 'l,k,c;...'")
    p.set_defaults(fn=cmd_dress_compose)

    p = sub.add_parser("no-bridge", help="scan for bridging subgroups")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("c")
    p.set_defaults(fn=cmd_no_bridge)

    p = sub.add_parser("counterexample", help="run the Q8/D8/C4 construction")
    p.set_defaults(fn=cmd_counterexample)

    p = sub.add_parser("accept", help="run the acceptance suite")
    p.add_argument("--only", default=None,
                   help="comma-separated criterion numbers")
    p.set_defaults(fn=cmd_accept)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_dir is not None:
        _cache.set_cache_dir(args.cache_dir)
    try:
        return args.fn(args)
    except FoundBridge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BisetkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"assertion failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
