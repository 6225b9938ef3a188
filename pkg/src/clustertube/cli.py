"""Command-line surface.

Exit codes: 0 success, 1 a verification check failed (a mathematical
claim was falsified), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import RankMismatchError, StructuralError, TheoremViolationError
from .mutation import build_exchange_graph, cartan_counterpart, exchange
from .polygon import triangulation_of
from .rigid import MaximalRigid, enumerate_maximal_rigid
from .tube import TubeObject, ext_dim_cluster, hom_dim_cluster, hom_dim_tube
from .verify import run_suite


def parse_object(text: str, n: int) -> TubeObject:
    """Parse "a,b" (whitespace-insensitive)."""
    parts = [p.strip() for p in text.strip().split(",")]
    if len(parts) != 2:
        raise ValueError(f"expected 'a,b', got {text!r}")
    return TubeObject(int(parts[0]), int(parts[1]), n)


def parse_object_list(text: str, n: int) -> tuple[TubeObject, ...]:
    """Parse "a1,b1;a2,b2;..."."""
    chunks = [c for c in (p.strip() for p in text.strip().split(";")) if c]
    return tuple(parse_object(c, n) for c in chunks)


def _fmt_object(x: TubeObject) -> str:
    return f"{x.a},{x.b}"


def _fmt_objects(xs) -> str:
    return ";".join(_fmt_object(x) for x in xs)


def _print_matrix(order, rows, out) -> None:
    print(f"order: {_fmt_objects(order)}", file=out)
    for row in rows:
        print(" ".join(str(v) for v in row), file=out)


def cmd_hom(args, out) -> int:
    x = parse_object(args.src, args.rank)
    y = parse_object(args.dst, args.rank)
    print(
        json.dumps(
            {
                "tube": hom_dim_tube(x, y),
                "cluster": hom_dim_cluster(x, y),
                "ext": ext_dim_cluster(x, y),
            }
        ),
        file=out,
    )
    return 0


def cmd_enumerate(args, out) -> int:
    objects = enumerate_maximal_rigid(args.rank)
    if args.format == "json":
        payload = {
            "rank": args.rank,
            "objects": [[[x.a, x.b] for x in t.summands] for t in objects],
        }
        print(json.dumps(payload), file=out)
    else:
        for t in objects:
            print(_fmt_objects(t.summands), file=out)
    return 0


def _graph_dot(graph) -> str:
    nodes = sorted(graph.nodes, key=lambda t: [(x.a, -x.b) for x in t.summands])
    index = {t: i for i, t in enumerate(nodes)}
    lines = ["graph exchange {"]
    for t in nodes:
        lines.append(f'  n{index[t]} [label="{_fmt_objects(t.summands)}"];')
    seen = set()
    for t, k, t2 in graph.edges:
        key = frozenset((t, t2))
        if key in seen:
            continue
        seen.add(key)
        label = _fmt_object(t.summands[k])
        lines.append(f'  n{index[t]} -- n{index[t2]} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _graph_json(graph) -> str:
    nodes = sorted(graph.nodes, key=lambda t: [(x.a, -x.b) for x in t.summands])
    index = {t: i for i, t in enumerate(nodes)}
    node_payload = []
    for t in nodes:
        mat = graph.nodes[t]
        node_payload.append(
            {
                "object": [[x.a, x.b] for x in t.summands],
                "order": [[x.a, x.b] for x in mat.order],
                "matrix": [v for row in mat.entries for v in row],
            }
        )
    edges = sorted((index[t], k, index[t2]) for t, k, t2 in graph.edges)
    return json.dumps(
        {"rank": graph.n, "nodes": node_payload, "edges": [list(e) for e in edges]}
    )


def cmd_exchange_graph(args, out) -> int:
    graph = build_exchange_graph(args.rank)
    text = _graph_dot(graph) if args.format == "dot" else _graph_json(graph) + "\n"
    if args.out is None:
        out.write(text)
    else:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise StructuralError(f"cannot write {args.out}: {exc}") from exc
    return 0


def cmd_bmatrix(args, out) -> int:
    t = MaximalRigid(args.rank, parse_object_list(args.object, args.rank))
    mat = build_exchange_graph(args.rank).b_matrix(t)
    _print_matrix(mat.order, mat.entries, out)
    if args.cartan:
        print("cartan:", file=out)
        for row in cartan_counterpart(mat):
            print(" ".join(str(v) for v in row), file=out)
    return 0


def cmd_mutate(args, out) -> int:
    t = MaximalRigid(args.rank, parse_object_list(args.object, args.rank))
    at = parse_object(args.at, args.rank)
    if at not in t.summands:
        raise StructuralError(f"{_fmt_object(at)} is not a summand of the object")
    graph = build_exchange_graph(args.rank)
    t2, _ = exchange(t, t.summands.index(at))
    mat2 = graph.b_matrix(t2)
    print(f"object: {_fmt_objects(t2.summands)}", file=out)
    _print_matrix(mat2.order, mat2.entries, out)
    return 0


def cmd_polygon(args, out) -> int:
    t = MaximalRigid(args.rank, parse_object_list(args.object, args.rank))
    tri = triangulation_of(t)
    payload = {
        "rank": args.rank,
        "pairs": [
            [[d.p, d.q] for d in pair.diagonals] for pair in tri.sorted_pairs()
        ],
    }
    print(json.dumps(payload), file=out)
    return 0


def cmd_verify(args, out) -> int:
    report = run_suite(args.suite, args.rank)
    for line in report.lines():
        print(line, file=out)
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clustertube",
        description="Cluster-tube combinatorics and its type B polygon model.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--rank", type=int, required=True, help="tube rank n >= 2")
        p.set_defaults(func=func)
        return p

    p = add("hom", cmd_hom, help="Hom/Ext dimensions between two indecomposables")
    p.add_argument("--from", dest="src", required=True, metavar="A,B")
    p.add_argument("--to", dest="dst", required=True, metavar="A,B")

    p = add("enumerate", cmd_enumerate, help="list all maximal rigid objects")
    p.add_argument("--format", choices=("json", "table"), default="json")

    p = add("exchange-graph", cmd_exchange_graph, help="export the exchange graph")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out", default=None, help="output path (stdout if omitted)")

    p = add("bmatrix", cmd_bmatrix, help="B-matrix of a maximal rigid object")
    p.add_argument("--object", required=True, metavar="A,B;A,B;...")
    p.add_argument("--cartan", action="store_true", help="also print the Cartan counterpart")

    p = add("mutate", cmd_mutate, help="exchange a summand and mutate the matrix")
    p.add_argument("--object", required=True, metavar="A,B;A,B;...")
    p.add_argument("--at", required=True, metavar="A,B")

    p = add("polygon", cmd_polygon, help="centrally symmetric triangulation of an object")
    p.add_argument("--object", required=True, metavar="A,B;A,B;...")

    p = add("verify", cmd_verify, help="run a verification suite")
    p.add_argument(
        "--suite",
        choices=("all", "hom", "counts", "mutation", "polygon", "no-ct"),
        default="all",
    )

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.rank < 2:
            raise ValueError(f"rank must be >= 2, got {args.rank}")
        return args.func(args, sys.stdout)
    except TheoremViolationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except (ValueError, RankMismatchError, StructuralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
