"""Command-line entry point: ``unicis <subcommand> ...``.

Exit codes: 0 success / all checked claims hold, 1 counterexample found,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict

from . import transforms as tf
from .constructions import ConstructionError, build, construction_params
from .count import (
    OracleCapError,
    count_cis,
    count_cis_oracle,
    count_cis_rooted,
    count_cis_rooted_oracle,
    count_cis_unicyclic,
)
from .enumeration import OBJECTIVES, EnumerationQuery, enumerate_unicyclic_coded, find_extremizers
from .graph import (
    Graph,
    GraphError,
    ParseError,
    canonical_hex,
    decompose_unicyclic,
    format_edgelist,
    parse_graph,
)
from .verification import (
    verify_closed_form_differences,
    verify_main_theorem,
    verify_structural_properties,
    wiener_correlation_report,
)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- parts files


def parse_parts(text: str) -> tuple[dict[str, Graph], dict[str, int]]:
    """Read a transform parts description.

    ``graph NAME N`` opens an edge list (following ``u v`` lines) for a part
    with N vertices; ``let NAME = VALUE`` binds an anchor vertex or integer.
    ``#`` starts a comment line.
    """
    graphs: dict[str, Graph] = {}
    values: dict[str, int] = {}
    current: tuple[str, int, list, int] | None = None

    def close():
        if current is not None:
            name, n, edges, lineno = current
            try:
                graphs[name] = Graph.from_edges(n, edges)
            except GraphError as exc:
                raise ParseError(lineno, f"graph {name}: {exc}") from None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "graph":
            close()
            if len(toks) != 3 or not toks[2].isdigit():
                raise ParseError(lineno, "expected 'graph NAME N'")
            current = (toks[1], int(toks[2]), [], lineno)
        elif toks[0] == "let":
            close()
            current = None
            if len(toks) != 4 or toks[2] != "=":
                raise ParseError(lineno, "expected 'let NAME = VALUE'")
            try:
                values[toks[1]] = int(toks[3])
            except ValueError:
                raise ParseError(lineno, "value must be an integer") from None
        else:
            if current is None or len(toks) != 2:
                raise ParseError(lineno, "edge line outside a graph section")
            try:
                current[2].append((int(toks[0]), int(toks[1])))
            except ValueError:
                raise ParseError(lineno, "non-integer vertex") from None
    close()
    return graphs, values


LEMMA_PARTS = {
    "merge": (("G1", "G2"), ("u1", "u2")),
    "single-branch": (("L", "M", "R"), ("l", "u", "v", "r")),
    "girth-reduce": (("G",), ("pivot",)),
    "path-shift": (("A", "B"), ("u", "v", "n1", "n2")),
    "leaf-move": (("H",), ("x", "y")),
    "path-balance": (("H",), ("u", "v", "n1", "n2")),
}


def run_transform(lemma: str, graphs: dict[str, Graph], values: dict[str, int]) -> dict:
    if lemma not in LEMMA_PARTS:
        raise UsageError(f"unknown lemma {lemma!r}; choose from {', '.join(LEMMA_PARTS)}")
    need_g, need_v = LEMMA_PARTS[lemma]
    missing = [x for x in need_g if x not in graphs] + [x for x in need_v if x not in values]
    if missing:
        raise UsageError(f"parts file lacks: {', '.join(missing)}")
    g, v = graphs, values
    if lemma == "merge":
        merged, value = tf.merge_count(g["G1"], v["u1"], g["G2"], v["u2"])
        return {"lemma": lemma, "after": [_graph_json(merged)], "N": str(value)}
    if lemma == "single-branch":
        out = tf.single_branch_variants(g["L"], v["l"], g["M"], v["u"], v["v"], g["R"], v["r"])
    elif lemma == "girth-reduce":
        d = decompose_unicyclic(g["G"])
        if v["pivot"] not in d.cycle:
            raise UsageError("pivot must be a cycle vertex")
        out = tf.girth_reduce(d, d.cycle.index(v["pivot"]))
    elif lemma == "path-shift":
        out = tf.path_shift(g["A"], v["u"], g["B"], v["v"], v["n1"], v["n2"])
    elif lemma == "leaf-move":
        out = tf.leaf_move(g["H"], v["x"], v["y"])
    else:
        out = tf.path_balance(g["H"], v["u"], v["v"], v["n1"], v["n2"])
    details = {k: (str(x) if isinstance(x, int) and not isinstance(x, bool) else x)
               for k, x in out.details.items()}
    if "f" in details:
        details["f"] = [str(x) for x in details["f"]]
    return {
        "lemma": out.lemma,
        "before": _graph_json(out.before),
        "after": [
            {**_graph_json(a), "predicted_delta": str(dl), "cut_preserved": cp}
            for a, dl, cp in zip(out.after, out.predicted_delta, out.cut_preserved)
        ],
        "details": details,
    }


# ---------------------------------------------------------------- helpers


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def _read_graph(args) -> Graph:
    if args.edges is not None:
        text = args.edges.replace(";", "\n").replace("/", "\n")
    else:
        try:
            if args.infile == "-":
                text = sys.stdin.read()
            else:
                with open(args.infile) as fh:
                    text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.infile}: {exc}") from None
    return parse_graph(text)


def _emit(args, text: str) -> None:
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _workers(args) -> int:
    return args.workers if args.workers is not None else int(os.environ.get("UNICIS_WORKERS", "1"))


# ---------------------------------------------------------------- subcommands


def cmd_construct(args) -> int:
    params = construction_params(args.family, args.n, args.c)
    g = build(params)
    if args.emit == "canonical":
        _emit(args, canonical_hex(g) + "\n")
    elif args.format == "json":
        _emit(args, _json({"family": params.family, "n": g.n, "c": params.c,
                           "params": {k: v for k, v in asdict(params).items()
                                      if k not in ("family", "n", "c") and v is not None},
                           "edges": [list(e) for e in g.edges()], "canonical": canonical_hex(g)}))
    else:
        _emit(args, format_edgelist(g))
    return 0


def cmd_count(args) -> int:
    g = _read_graph(args)
    anchors = tuple(args.root or ())
    method = args.method
    if method == "oracle":
        value = (count_cis_rooted_oracle(g, anchors, args.oracle_cap) if anchors
                 else count_cis_oracle(g, args.oracle_cap))
    elif method == "decomposition":
        if anchors:
            raise UsageError("--method decomposition counts N(G) only; use auto for rooted counts")
        value = count_cis_unicyclic(decompose_unicyclic(g))
    else:
        value = count_cis_rooted(g, anchors) if anchors else count_cis(g)
    if args.format == "json":
        _emit(args, _json({"n": g.n, "m": g.m, "method": method, "anchors": list(anchors),
                           "value": str(value)}))
    elif args.format == "csv":
        _emit(args, _csv([["n", "m", "anchors", "value"],
                          [g.n, g.m, " ".join(map(str, anchors)), str(value)]]))
    else:
        _emit(args, f"{value}\n")
    return 0


def cmd_decompose(args) -> int:
    g = _read_graph(args)
    d = decompose_unicyclic(g)
    trees = [{"root": t.root, "size": t.size, "edges": [list(e) for e in t.edges()], "code": t.code()}
             for t in d.trees]
    doc = {"n": g.n, "girth": d.girth, "cycle": list(d.cycle), "trees": trees,
           "canonical": canonical_hex(g)}
    if args.format == "json":
        _emit(args, _json(doc))
    else:
        lines = [f"girth {d.girth}", "cycle " + " ".join(map(str, d.cycle))]
        lines += [f"tree {t['root']} size {t['size']} {t['code']}" for t in trees]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_canonical(args) -> int:
    _emit(args, canonical_hex(_read_graph(args)) + "\n")
    return 0


def cmd_enumerate(args) -> int:
    q = EnumerationQuery(args.n, args.c, args.girth_min, args.girth_max)
    items = enumerate_unicyclic_coded(q, _workers(args))
    if args.format == "json":
        _emit(args, _json({"n": args.n, "c": args.c, "count": len(items),
                           "graphs": [{"code": code.hex(), "edges": [list(e) for e in g.edges()]}
                                      for code, g in items]}))
    elif args.format == "csv":
        rows = [["code", "n", "m", "edges"]]
        rows += [[code.hex(), g.n, g.m, " ".join(f"{u}-{v}" for u, v in g.edges())] for code, g in items]
        _emit(args, _csv(rows))
    else:
        lines = [" ".join([code.hex(), str(g.n), str(g.m)] + [f"{u} {v}" for u, v in g.edges()])
                 for code, g in items]
        _emit(args, "".join(line + "\n" for line in lines))
    return 0


def cmd_extremize(args) -> int:
    rep = find_extremizers(args.n, args.c, args.objective, _workers(args))
    if args.format == "csv":
        _emit(args, _csv([["n", "c", "objective", "value", "code"]]
                         + [[rep.n, rep.c, rep.objective, str(rep.value), code] for code in rep.optimizers]))
    else:
        _emit(args, _json(rep.to_json()))
    return 0


def cmd_transform(args) -> int:
    try:
        with open(args.spec) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.spec}: {exc}") from None
    graphs, values = parse_parts(text)
    doc = run_transform(args.lemma, graphs, values)
    if args.format == "json":
        _emit(args, _json(doc))
    else:
        out = []
        if "before" in doc:
            out += ["# before", format_edgelist(Graph.from_edges(doc["before"]["n"], doc["before"]["edges"]))]
        for i, a in enumerate(doc["after"]):
            out.append(f"# after {i + 1}")
            out.append(format_edgelist(Graph.from_edges(a["n"], a["edges"])))
            if "predicted_delta" in a:
                out.append(f"# predicted delta {a['predicted_delta']}, cut preserved {a['cut_preserved']}\n")
        if "N" in doc:
            out.append(f"# N {doc['N']}\n")
        _emit(args, "".join(out))
    return 0


def cmd_verify(args) -> int:
    w = _workers(args)
    if args.check == "theorem":
        rep = verify_main_theorem(args.n_min, args.n_max, w, args.time_budget, args.timing)
    elif args.check == "identities":
        rep = verify_closed_form_differences(args.m_max)
    elif args.check == "structure":
        rep = verify_structural_properties(args.n, args.c, w)
    elif args.check == "wiener":
        rep = wiener_correlation_report(args.n, args.c, w)
    else:
        reports = [tf.lemma_suite(name, args.trials, args.seed) for name in tf.LEMMAS]
        rep = {"kind": "lemmas", "trials": args.trials, "seed": args.seed,
               "ok": all(r.ok for r in reports), "lemmas": [asdict(r) for r in reports]}
    if args.format == "csv" and args.check == "identities":
        rows = [["identity", "m", "n", "c", "N_delta", "N_omega", "difference", "expected", "ok"]]
        rows += [[r["identity"], r["m"], r.get("n", ""), r.get("c", ""), r.get("N_delta", ""),
                  r.get("N_omega", ""), r.get("difference", ""), r.get("expected", ""), r.get("ok", "skipped")]
                 for r in rep["rows"]]
        _emit(args, _csv(rows))
    else:
        _emit(args, _json(rep))
    return 0 if rep["ok"] else 1


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--format", choices=("edgelist", "json", "csv"), default=None,
                        help="output format (default depends on the subcommand)")
    common.add_argument("--oracle-cap", type=int,
                        default=int(os.environ.get("UNICIS_ORACLE_CAP", "20")))
    common.add_argument("--workers", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)

    graph_in = argparse.ArgumentParser(add_help=False)
    src = graph_in.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="infile", help="edge-list file ('-' for stdin)")
    src.add_argument("--edges", help="inline edge list, lines separated by ';' or '/'")

    p = argparse.ArgumentParser(prog="unicis", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("construct", parents=[common], help="build Delta or Omega")
    s.add_argument("--family", choices=("delta", "omega"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--emit", choices=("edgelist", "canonical"), default="edgelist")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("count", parents=[common, graph_in], help="count connected induced subgraphs")
    s.add_argument("--method", choices=("auto", "oracle", "decomposition"), default="auto")
    s.add_argument("--root", type=int, action="append", help="anchor vertex (repeat for a pair)")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("decompose", parents=[common, graph_in], help="cycle + rooted trees")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("canonical", parents=[common, graph_in], help="canonical code (hex)")
    s.set_defaults(func=cmd_canonical)

    s = sub.add_parser("enumerate", parents=[common], help="unicyclic graphs up to isomorphism")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--c", type=int)
    s.add_argument("--girth-min", type=int, default=3)
    s.add_argument("--girth-max", type=int)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("extremize", parents=[common], help="exhaustive optimum over U(n,c)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--objective", choices=OBJECTIVES, default="max-N")
    s.set_defaults(func=cmd_extremize)

    s = sub.add_parser("transform", parents=[common], help="apply a rewrite to a parts file")
    s.add_argument("--lemma", choices=tuple(LEMMA_PARTS), required=True)
    s.add_argument("--spec", required=True, help="parts description file")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("verify", help="verification harness")
    vsub = s.add_subparsers(dest="check", required=True)
    v = vsub.add_parser("theorem", parents=[common])
    v.add_argument("--n-min", type=int, default=5)
    v.add_argument("--n-max", type=int, default=12)
    v.add_argument("--time-budget", type=float)
    v.add_argument("--timing", action="store_true", help="include wall-clock timings")
    v = vsub.add_parser("identities", parents=[common])
    v.add_argument("--m-max", type=int, default=25)
    v = vsub.add_parser("structure", parents=[common])
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--c", type=int, required=True)
    v = vsub.add_parser("wiener", parents=[common])
    v.add_argument("--n", type=int, default=13)
    v.add_argument("--c", type=int, default=8)
    v = vsub.add_parser("lemmas", parents=[common])
    v.add_argument("--trials", type=int, default=500)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParseError, OracleCapError, ConstructionError, GraphError) as exc:
        print(f"unicis: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
