"""Command-line entry point: ``safeset {compute,table,construct,verify,oracle,graph}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .alpha import alpha, closed_form, safe_number
from .construct import construct_half_cut, construct_min
from .errors import SafeSetError
from .graph import Graph, VertexSet
from .oracle import default_cap, min_safe_set, oracle_full
from .product import ProductGraph, build_product
from .verify import component_projection, is_vertex_cut, verify


class UsageError(Exception):
    pass


def _pair(text: str) -> tuple[int, int]:
    try:
        m, n = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected M,N but got {text!r}") from None
    return m, n


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: malformed JSON ({e.msg} at line {e.lineno})") from None


def _load_set(path: str, order: int, product: ProductGraph | None) -> VertexSet:
    """Accept a bare list or an object with a ``vertices`` list (as ``construct`` writes)."""
    data = _load_json(path)
    if isinstance(data, dict):
        data = data.get("vertices")
    if not isinstance(data, list):
        raise UsageError(f"{path}: expected a list of vertices")
    if data and all(isinstance(v, list) for v in data):
        if product is None:
            raise UsageError("[i, j] coordinates need --product M,N")
        return product.vertex_set(tuple(v) for v in data)
    return VertexSet.of(order, data)


def _graph_from_args(args) -> tuple[Graph, ProductGraph | None]:
    sources = [x for x in ("graph", "product", "path", "cycle", "star") if getattr(args, x, None) is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --graph, --product, --path, --cycle, --star")
    (src,) = sources
    if src == "graph":
        return Graph.from_json(_load_json(args.graph)), None
    if src == "product":
        p = build_product(*args.product)
        return p.graph, p
    return getattr(Graph, src)(getattr(args, src)), None


def _emit(obj, fmt: str, text: str) -> None:
    print(json.dumps(obj) if fmt == "json" else text)


def cmd_compute(args) -> int:
    m, n = args.m, args.n
    value = safe_number(m, n)
    out = {"m": m, "n": n, "s": value, "cs": value}
    lo, hi = min(m, n), max(m, n)
    if lo >= 3:
        res = alpha(lo, hi)
        out.update(res.to_json())
        out["method"] = "alpha"
        detail = f"  argmin {res.argmin.to_json()}  nu {[res.nu1, res.nu2]}"
    else:
        out.update(value=closed_form(lo, hi), argmin=None, nu=None, clamp_active=None, method="closed_form")
        detail = "  (closed form)"
    _emit(out, args.format, f"s(K{m} x K{n}) = cs(K{m} x K{n}) = {value}{detail}")
    return 0


def cmd_table(args) -> int:
    top = args.max
    if top < 1:
        raise UsageError("--max must be >= 1")
    grid = [[safe_number(m, n) if n >= m else None for n in range(1, top + 1)] for m in range(1, top + 1)]
    if args.format == "json":
        print(json.dumps({"max": top, "rows": grid}))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m\\n", *range(1, top + 1)])
        for m, row in enumerate(grid, 1):
            w.writerow([m, *("" if v is None else v for v in row)])
        sys.stdout.write(buf.getvalue())
    else:
        width = max(3, len(str(grid[-1][-1])) + 1)
        print("m\\n".rjust(4) + "".join(str(n).rjust(width) for n in range(1, top + 1)))
        for m, row in enumerate(grid, 1):
            print(str(m).rjust(4) + "".join(("" if v is None else str(v)).rjust(width) for v in row))
    return 0


def cmd_construct(args) -> int:
    m, n = min(args.m, args.n), max(args.m, args.n)
    res = construct_half_cut(m, n) if args.half_cut else construct_min(m, n)
    cells = " ".join(f"({i},{j})" for i, j in res.vertices)
    _emit(res.to_json(), args.format, f"{res.recipe}, size {res.size}: {cells}")
    return 0


def cmd_verify(args) -> int:
    g, p = _graph_from_args(args)
    s = _load_set(args.set, g.order, p)
    report = verify(g, s)
    out = report.to_json(p)
    if p is not None and s.complement():
        proj = component_projection(p, s)
        out["vertex_cut"] = is_vertex_cut(g, s)
        out["projection"] = {"pi1": [sorted(r) for r in proj.pi1], "pi2": [sorted(c) for c in proj.pi2]}
    verdict = "connected safe set" if report.is_connected_safe else "safe set" if report.is_safe else "NOT a safe set"
    _emit(out, args.format, f"{verdict}; violations: {out['violations']}")
    return 0 if report.is_safe else 1


def cmd_oracle(args) -> int:
    g, _ = _graph_from_args(args)
    cap = args.cap if args.cap is not None else default_cap()
    if args.connected:
        size, witness = min_safe_set(g, True, cap)
        out = {"cs": size, "cs_witness": witness.sorted()}
        text = f"cs = {size}  witness {witness.sorted()}"
    else:
        res = oracle_full(g, cap)
        out = res.to_json()
        text = f"s = {res.s_value}  cs = {res.cs_value}  witnesses {out['s_witness']} / {out['cs_witness']}"
    _emit(out, args.format, text)
    return 0


def cmd_graph(args) -> int:
    g, _ = _graph_from_args(args)
    print(json.dumps(g.to_json()))
    return 0


def _add_sources(sp: argparse.ArgumentParser, with_file: bool = True) -> None:
    if with_file:
        sp.add_argument("--graph", metavar="FILE", help="graph JSON: {\"order\": N, \"edges\": [[u, v], ...]}")
    sp.add_argument("--product", type=_pair, metavar="M,N", help="use K_M x K_N")
    sp.add_argument("--path", type=int, metavar="N")
    sp.add_argument("--cycle", type=int, metavar="N")
    sp.add_argument("--star", type=int, metavar="N", help="K_{1,N}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="safeset", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("compute", help="safe number of K_m x K_n")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("table", help="grid of safe numbers for 1 <= m <= n <= MAX")
    sp.add_argument("--max", type=int, default=10)
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("construct", help="explicit minimum connected safe set")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--half-cut", action="store_true", help="size ceil((mn-1)/2) vertex-cut construction")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="check a vertex set; exit 0 iff safe")
    _add_sources(sp)
    sp.add_argument("--set", required=True, metavar="FILE",
                    help="JSON list of 0-based indices or [i, j] pairs, or construct output")
    sp.add_argument("--format", choices=("text", "json"), default="json")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="brute-force s and cs of a small graph")
    _add_sources(sp)
    sp.add_argument("--connected", action="store_true", help="only the connected minimum")
    sp.add_argument("--cap", type=int, help="max vertex count (default from $SAFESET_ORACLE_CAP or 20)")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("graph", help="print a generated graph as JSON")
    _add_sources(sp, with_file=False)
    sp.set_defaults(func=cmd_graph)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"safeset: error: {e}", file=sys.stderr)
        return 2
    except SafeSetError as e:
        print(f"safeset: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
