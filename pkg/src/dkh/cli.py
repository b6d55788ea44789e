"""Command-line front end.

Exit codes: 0 success, 1 domain error (invalid diagram, inapplicable move
site, unsupported configuration), 2 usage error.  All diagnostics go to
stderr; results go to stdout.  Output ordering is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus
from .algebra import PERTURBED, PLAIN, assemble_complex
from .diagram import CohomologyClass, SurfaceDiagram, nonzero_classes, parse_diagram
from .errors import DKHError
from .homology import (format_c2, homology_perturbed, homology_plain,
                       rows_to_json_obj, rows_to_tsv, table_rows)
from .moves import apply_r1, apply_r2, apply_r3
from .obstruct import ascent_report, elementary_rank, is_totally_nontrivial
from .smoothing import build_cube

_VARIANTS = {"dkh": PLAIN, "trh": PERTURBED}


def _load(path: str) -> SurfaceDiagram:
    with open(path, encoding="utf-8") as fh:
        return parse_diagram(fh.read())


def _gammas(spec: str | None, genus: int) -> list[CohomologyClass]:
    if spec is None or spec == "":
        return [CohomologyClass((0,) * (2 * genus))]
    if spec == "all":
        return list(nonzero_classes(genus))
    try:
        bits = tuple(int(b) for b in spec.split(",")) if spec else ()
    except ValueError:
        raise DKHError(f"bad gamma {spec!r}: expected comma-separated bits")
    if len(bits) != 2 * genus:
        raise DKHError(
            f"gamma length {len(bits)} != 2*genus = {2 * genus}")
    return [CohomologyClass(bits)]


def _gamma_str(g: CohomologyClass) -> str:
    return ",".join(map(str, g.bits))


# -- verbs ----------------------------------------------------------------

def _cmd_compute(args) -> int:
    d = _load(args.diagram)
    variant = _VARIANTS[args.variant]
    results = []
    for gamma in _gammas(args.gamma, d.genus):
        cube = build_cube(d, gamma)
        cx = assemble_complex(cube, variant)
        if args.dump_differential:
            _dump_differential(cx)
        table = homology_plain(cx) if variant == PLAIN else homology_perturbed(cx)
        results.append((gamma, table_rows(table)))
    if args.format == "json":
        obj = {"schema": 1, "command": "compute", "variant": args.variant,
               "results": [{"gamma": _gamma_str(g), "rows": rows_to_json_obj(r)}
                           for g, r in results]}
        print(json.dumps(obj, indent=1))
    elif args.format == "tsv":
        out = ["gamma\ti\tj\tc\tdim"]
        for g, rows in results:
            gs = _gamma_str(g)
            out += [f"{gs}\t{i}\t{j}\t{format_c2(c2)}\t{dim}"
                    for i, j, c2, dim in rows]
        print("\n".join(out))
    else:
        for g, rows in results:
            print(f"# gamma = {_gamma_str(g) or '(genus 0)'}")
            print(rows_to_tsv(rows), end="")
    return 0


def _dump_differential(cx) -> None:
    print(f"# differential ({cx.variant})", file=sys.stderr)
    for i in cx.degrees:
        cols = cx.differential[i]
        entries = [(src, row, coeff) for src, col in enumerate(cols)
                   for row, coeff in sorted(col.items())]
        print(f"# d_{i}: {cx.dims[i]} -> {cx.dims.get(i + 1, 0)}, "
              f"{len(entries)} entries", file=sys.stderr)
        for src, row, coeff in entries:
            print(f"#   ({row},{src}) = {coeff}", file=sys.stderr)


def _cmd_tnt(args) -> int:
    d = _load(args.diagram)
    res = is_totally_nontrivial(d)
    if args.format == "json":
        obj = {"schema": 1, "command": "tnt", "overall": res.overall,
               "warning": res.warning,
               "per_gamma": [
                   {"gamma": _gamma_str(CohomologyClass(v.gamma)),
                    "witness": (None if v.witness is None else
                                {"i": v.witness[0], "j": v.witness[1],
                                 "c": format_c2(v.witness[2])}),
                    "collapsed": v.collapsed}
                   for v in res.verdicts]}
        print(json.dumps(obj, indent=1))
    else:
        for v in res.verdicts:
            gs = ",".join(map(str, v.gamma))
            if v.witness is None:
                print(f"gamma {gs}: collapsed (2c = j on every generator)")
            else:
                i, j, c2 = v.witness
                print(f"gamma {gs}: witness at (i, j, c) = "
                      f"({i}, {j}, {format_c2(c2)})")
        if res.warning:
            print(f"warning: {res.warning}", file=sys.stderr)
        print(f"totally nontrivial: {'yes' if res.overall else 'no'}")
    return 0


def _cmd_rank(args) -> int:
    print(elementary_rank(_load(args.diagram)))
    return 0


def _cmd_report(args) -> int:
    d1, d2 = _load(args.diagram1), _load(args.diagram2)
    rep = ascent_report(d1, d2, tuple(args.assume or ()))
    if args.format == "json":
        print(json.dumps(rep.to_obj(), indent=1))
    else:
        print(f"genus pair: {rep.genus_pair[0]} -> {rep.genus_pair[1]}")
        print(f"elementary rank: {rep.elementary_rank}")
        print(f"totally nontrivial: {'yes' if rep.tnt.overall else 'no'}"
              + (f" ({rep.tnt.warning})" if rep.tnt.warning else ""))
        if rep.assumptions:
            print(f"assumptions: {', '.join(rep.assumptions)}")
        print(f"conclusion: {rep.conclusion}")
    return 0


def _cmd_moves(args) -> int:
    d = _load(args.diagram)
    try:
        site = json.loads(args.site)
    except json.JSONDecodeError as e:
        raise DKHError(f"bad site JSON: {e}")
    if args.move == "r1":
        out = apply_r1(d, site, args.chirality)
    elif args.move == "r2":
        out = apply_r2(d, site)
    else:
        out = apply_r3(d, site)
    print(out.serialize())
    return 0


def _cmd_corpus(args) -> int:
    if args.action == "list":
        for row in corpus.corpus_list():
            mark = " (placeholder: supply encoding)" if row["placeholder"] else ""
            print(f"{row['name']}{mark}")
        return 0
    print(corpus.corpus_get(args.name).serialize())
    return 0


def _cmd_dump_cube(args) -> int:
    d = _load(args.diagram)
    for gamma in _gammas(args.gamma, d.genus):
        cube = build_cube(d, gamma)
        print(f"# cube for gamma = {_gamma_str(gamma) or '(genus 0)'}")
        for r in sorted(cube.vertices):
            s = cube.vertices[r]
            desc = " ".join(
                f"{{{','.join(map(str, c.arcs))}}}"
                f"[{''.join(map(str, c.z2_class))}]{'*' if c.dotted else ''}"
                for c in s.circles)
            bits = "".join(map(str, r))
            print(f"vertex {bits} height {s.height}: {desc}")
        for e in cube.edges:
            print(f"edge {''.join(map(str, e.source))} -> "
                  f"{''.join(map(str, e.target))}: {e.kind} sign {e.sign:+d}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dkh",
        description="Homology of links in thickened surfaces: plain (dkh) "
                    "and perturbed/filtered (trh) variants, plus concordance "
                    "obstruction reports.")
    sub = p.add_subparsers(dest="verb", required=True)

    fmt = dict(choices=("text", "json", "tsv"), default="text")

    c = sub.add_parser("compute", help="graded homology table of a diagram")
    c.add_argument("diagram")
    c.add_argument("--variant", choices=tuple(_VARIANTS), default="dkh")
    c.add_argument("--gamma", default=None,
                   help="comma-separated bits, or 'all' (default: zero class)")
    c.add_argument("--format", **fmt)
    c.add_argument("--dump-differential", action="store_true")
    c.set_defaults(func=_cmd_compute)

    t = sub.add_parser("tnt", help="totally-nontrivial test over all "
                                   "nonzero classes")
    t.add_argument("diagram")
    t.add_argument("--format", **fmt)
    t.set_defaults(func=_cmd_tnt)

    r = sub.add_parser("rank", help="rank of the span of component classes")
    r.add_argument("diagram")
    r.set_defaults(func=_cmd_rank)

    rep = sub.add_parser("report", help="ascent-concordance obstruction report")
    rep.add_argument("diagram1")
    rep.add_argument("diagram2")
    rep.add_argument("--assume", action="append",
                     help="e.g. not_pseudostrict (user-asserted; not verified)")
    rep.add_argument("--format", **fmt)
    rep.set_defaults(func=_cmd_report)

    m = sub.add_parser("moves", help="apply a Reidemeister move")
    m.add_argument("diagram")
    m.add_argument("move", choices=("r1", "r2", "r3"))
    m.add_argument("--site", required=True, help="JSON site description")
    m.add_argument("--chirality", type=int, default=1, choices=(1, -1))
    m.set_defaults(func=_cmd_moves)

    co = sub.add_parser("corpus", help="bundled example diagrams")
    cosub = co.add_subparsers(dest="action", required=True)
    cl = cosub.add_parser("list")
    cl.set_defaults(func=_cmd_corpus, action="list")
    cg = cosub.add_parser("get")
    cg.add_argument("name")
    cg.set_defaults(func=_cmd_corpus, action="get")

    dc = sub.add_parser("dump-cube", help="text adjacency table of the cube")
    dc.add_argument("diagram")
    dc.add_argument("--gamma", default=None)
    dc.set_defaults(func=_cmd_dump_cube)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DKHError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
