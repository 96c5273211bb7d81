"""Command-line front end.

Exit codes: 0 on success, 1 when a cross-check fails, 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from .core import DiagramError, OddPrime, VertexId, vertex_to_hook
from .diagram import Edge, floor_edges, floor_vertices
from .fibo import DEFAULT_BUDGET, m_brute, m_closed, m_recurrence, sequence, vertex_for
from .gfs import gf_coeff, gf_for
from .stats import sign_balance
from .verify import path_origins, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_s_range(text: str) -> range:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected S or A..B, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"need 1 <= A <= B, got {text!r}")
    return range(lo, hi + 1)


def prime_arg(text: str) -> int:
    try:
        return OddPrime(int(text))
    except (ValueError, DiagramError):
        raise argparse.ArgumentTypeError(f"p must be an odd prime, got {text!r}") from None


def vertex_json(v: VertexId) -> dict:
    h = vertex_to_hook(v)
    return {"p": int(v.p), "floor": v.floor, "k": v.class_k, "pos": v.pos, "size": h.size, "leg": h.leg}


def edge_json(e: Edge) -> dict:
    return {
        "upper": str(e.upper),
        "lower": str(e.lower),
        "block": {"idx": e.block.idx, "m": e.block.horiz, "n": e.block.vert},
    }


def cmd_diagram(args, out: TextIO) -> int:
    if args.max_floor < 1:
        raise UsageError("max-floor must be >= 1")
    if args.format == "bfile":
        raise UsageError("bfile output is only for sequences")
    p = args.p
    verts = [v for f in range(1, args.max_floor + 1) for v in floor_vertices(p, f)]
    edges = [e for f in range(2, args.max_floor + 1) for e in floor_edges(p, f)]
    if args.format == "json":
        doc = {
            "p": int(p),
            "max_floor": args.max_floor,
            "vertices": [vertex_json(v) for v in verts],
            "edges": [edge_json(e) for e in edges],
        }
        json.dump(doc, out, indent=1)
        out.write("\n")
    elif args.format == "dot":
        out.write("digraph bratteli {\n  rankdir=TB;\n")
        for v in verts:
            h = vertex_to_hook(v)
            out.write(f'  "{v}" [label="({h.size},{h.leg})\\n{v}"];\n')
        for e in edges:
            b = e.block
            out.write(f'  "{e.upper}" -> "{e.lower}" [label="B{b.idx}({b.horiz},{b.vert})"];\n')
        out.write("}\n")
    else:
        out.write("floor\tk\tpos\tsize\tleg\n")
        for v in verts:
            h = vertex_to_hook(v)
            out.write(f"{v.floor}\t{v.class_k}\t{v.pos}\t{h.size}\t{h.leg}\n")
        out.write(f"# {len(verts)} vertices, {len(edges)} edges\n")
    return EXIT_OK


def _fib_values(v: VertexId, method: str, budget: int, workers: int) -> dict[str, int]:
    vals = {}
    if method in ("brute", "all"):
        vals["brute"] = m_brute(v, budget=budget, workers=workers)
    if method in ("recur", "all"):
        vals["recur"] = m_recurrence(v)
    if method in ("closed", "all"):
        vals["closed"] = m_closed(v)
    return vals


def cmd_fib(args, out: TextIO) -> int:
    if args.format == "dot":
        raise UsageError("dot output is only for diagrams")
    rows = []
    agree = True
    for s in args.s:
        v = vertex_for(args.p, args.k, s, args.pos)
        vals = _fib_values(v, args.method, args.budget, args.threads)
        match = len(set(vals.values())) == 1
        agree &= match
        rows.append((s, v, vals, match))
    if args.format == "json":
        doc = [
            {"s": s, "vertex": vertex_json(v), "values": vals, "match": match}
            for s, v, vals, match in rows
        ]
        json.dump(doc, out, indent=1)
        out.write("\n")
    elif args.format == "bfile":
        for s, _, vals, _ in rows:
            out.write(f"{s} {next(iter(vals.values()))}\n")
    else:
        names = list(rows[0][2]) if rows else []
        header = ["s"] + names + (["match"] if args.method == "all" else [])
        out.write("\t".join(header) + "\n")
        for s, _, vals, match in rows:
            cells = [str(s)] + [str(vals[n]) for n in names]
            if args.method == "all":
                cells.append("match" if match else "MISMATCH")
            out.write("\t".join(cells) + "\n")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_signbal(args, out: TextIO) -> int:
    if args.max_floor < 1:
        raise UsageError("max-floor must be >= 1")
    checked, bad = 0, 0
    for v in path_origins(args.p, args.max_floor):
        checked += 1
        bal = sign_balance(v)
        if bal != 0:
            bad += 1
            out.write(f"nonzero sign balance {bal} at {v}\n")
    out.write(f"checked {checked} vertices, {bad} with nonzero balance\n")
    return EXIT_OK if bad == 0 else EXIT_FAIL


def cmd_verify(args, out: TextIO) -> int:
    if args.max_floor < 1:
        raise UsageError("max-floor must be >= 1")
    results = run_all(args.p, args.max_floor, budget=args.budget, workers=args.threads)
    report = {
        "p": int(args.p),
        "max_floor": args.max_floor,
        "suites": [r.as_dict() for r in results],
        "ok": all(r.failures == 0 for r in results),
    }
    json.dump(report, out, indent=1)
    out.write("\n")
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_gf(args, out: TextIO) -> int:
    if args.terms < 1:
        raise UsageError("terms must be >= 1")
    p, k, l = args.p, args.k, args.pos
    g = gf_for(p, k, l)
    closed = sequence(p, k, l, range(k + 2, k + 2 + args.terms))
    out.write(f"# p={p} k={k} pos={l} scale={g.scale} A={g.A} C={g.C} D={g.D}\n")
    out.write("n\ts\tcoeff\tclosed\tmatch\n")
    ok = True
    for n, want in enumerate(closed):
        got = gf_coeff(g, n)
        ok &= got == want
        out.write(f"{n}\t{n + k + 2}\t{got}\t{want}\t{'match' if got == want else 'MISMATCH'}\n")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pbratteli", description="Hook-partition Bratteli diagram toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("diagram", help="export vertices and edges")
    d.add_argument("--p", type=prime_arg, required=True)
    d.add_argument("--max-floor", type=int, required=True)
    d.add_argument("--format", choices=["json", "table", "dot", "bfile"], default="json")
    d.set_defaults(func=cmd_diagram)

    f = sub.add_parser("fib", help="p^(k)-Fibonacci numbers")
    f.add_argument("--p", type=prime_arg, required=True)
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--pos", type=int, default=0)
    f.add_argument("--s", type=parse_s_range, required=True, help="S or A..B")
    f.add_argument("--method", choices=["brute", "recur", "closed", "all"], default="closed")
    f.add_argument("--format", choices=["json", "table", "dot", "bfile"], default="table")
    f.add_argument("--threads", type=int, default=1, help="brute-force worker processes, 0 = one per CPU")
    f.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest path count brute force will enumerate")
    f.set_defaults(func=cmd_fib)

    sb = sub.add_parser("signbal", help="check that every sign balance vanishes")
    sb.add_argument("--p", type=prime_arg, required=True)
    sb.add_argument("--max-floor", type=int, required=True)
    sb.set_defaults(func=cmd_signbal)

    v = sub.add_parser("verify", help="run every self-check suite")
    v.add_argument("--p", type=prime_arg, required=True)
    v.add_argument("--max-floor", type=int, required=True)
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    v.add_argument("--threads", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gf", help="generating-function coefficients")
    g.add_argument("--p", type=prime_arg, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--pos", type=int, default=0)
    g.add_argument("--terms", type=int, default=10)
    g.set_defaults(func=cmd_gf)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "threads", 1) < 0:
        print("error: threads must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, DiagramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
