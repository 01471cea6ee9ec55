"""Command line: ``hfree-mis {exact,approx,gen,verify,bench}``.

Graphs are read as 0-based edge lists (``n m`` header) or DIMACS ``.col``.
Randomized subcommands take ``--seed``; its default comes from the
``HFREE_MIS_SEED`` environment variable, else 0.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import approx
from .bench import AlgoSpec, run_algorithm, run_config_file
from .exact import DEFAULT_BUDGET, max_clique, max_independent_set, verify_independent
from .generators import BlowupParams, blowup, gap_instance, intersect, make_rng, triangle_free_process
from .graph import ParseError, read_graph, write_graph
from .patterns import pattern_by_name

SEED_ENV = "HFREE_MIS_SEED"


def _default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "0"))


def _load_graph_or_pattern(spec: str):
    if Path(spec).is_file():
        return read_graph(spec)
    return pattern_by_name(spec).graph


def _fmt_set(vertices) -> str:
    return " ".join(str(v) for v in vertices)


def cmd_exact(args) -> int:
    g = read_graph(args.input)
    res = (max_clique if args.clique else max_independent_set)(g, args.budget)
    print(f"{'omega' if args.clique else 'alpha'} {res.value}")
    print(f"set {_fmt_set(res.best)}")
    if res.timed_out:
        print(f"timeout after {res.nodes_explored} nodes (value is a lower bound)")
    return 0


def cmd_approx(args) -> int:
    g = read_graph(args.input)
    params = []
    if args.t is not None:
        params.append(("t", str(args.t)))
    if args.pattern:
        params.append(("pattern", args.pattern))
    if args.eps is not None:
        params.append(("eps", str(args.eps)))
    if args.mode:
        params.append(("mode", args.mode))
    sol = run_algorithm(g, AlgoSpec(args.algo, tuple(params)), args.seed)
    print(f"size {sol.size}")
    print(f"certificate {sol.tag}")
    print(f"set {_fmt_set(sol.vertices)}")
    return 0


def cmd_gen(args) -> int:
    report: dict = {"kind": args.kind, "seed": args.seed}
    if args.kind == "process":
        if args.n is None:
            raise SystemExit("gen --kind process needs --n")
        g = triangle_free_process(args.n, args.seed)
        report.update(n=g.n, m=g.m)
    else:
        if args.base is None:
            raise SystemExit(f"gen --kind {args.kind} needs --base")
        h = _load_graph_or_pattern(args.base)
        if args.kind == "blowup":
            g = blowup(h, args.s, args.p, args.seed)
            report.update(base_n=h.n, s=args.s, p=args.p, n=g.n, m=g.m)
        elif args.kind == "gap":
            g, report = gap_instance(h, BlowupParams(args.s, args.p, args.gamma, args.seed))
        else:
            rng = make_rng(args.seed)
            big = blowup(h, args.s, args.p, rng)
            other = read_graph(args.other) if args.other else triangle_free_process(big.n, rng)
            g = intersect(big, other)
            report.update(base_n=h.n, s=args.s, p=args.p, n=g.n, m_blowup=big.m, m_other=other.m, m=g.m)
    write_graph(g, args.out)
    with open(f"{args.out}.report.jsonl", "w", encoding="utf-8") as f:
        f.write(json.dumps(report, sort_keys=True) + "\n")
    print(f"wrote {args.out} (n={g.n}, m={g.m})")
    return 0


def _read_set(path) -> list[int]:
    with open(path, encoding="utf-8") as f:
        tokens = f.read().split()
    if tokens and tokens[0] == "set":
        tokens = tokens[1:]
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"{path}: {exc}") from None


def cmd_verify(args) -> int:
    g = read_graph(args.input)
    ok = verify_independent(g, _read_set(args.set))
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_bench(args) -> int:
    seeds = [args.seed] if args.seed is not None else None
    records = run_config_file(args.config, args.out, seeds)
    print(f"{len(records)} records")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hfree-mis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact independence (or clique) number")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--clique", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("approx", help="run one approximation algorithm")
    p.add_argument("--algo", required=True, choices=["ramsey", "eh", "peel", "greedy", "ls", "subst"])
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--pattern")
    p.add_argument("--eps", type=float)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--mode", choices=["faithful", "retry"])
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--kind", required=True, choices=["blowup", "process", "gap", "intersect"])
    p.add_argument("--base", help="edge-list file or pattern name")
    p.add_argument("--other", help="graph to intersect with (default: triangle-free process)")
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--p", type=float, default=1.0)
    p.add_argument("--gamma", type=int, default=3)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check that a vertex set is independent")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--set", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run a trial config and write CSV")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.add_argument("--seed", type=int, help="run only this seed")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ParseError, ValueError, KeyError, approx.ContractViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
