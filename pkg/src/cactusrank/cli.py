"""Command line interface.

Commands: rank, oracle, reduce, rrcheck, check, bes, gen.  Results go to
stdout, diagnostics to stderr.  Exit codes: 0 ok, 1 check-style failure,
2 parse or usage error, 3 invalid graph (loop, bad id, wrong divisor length,
disconnected), 4 not a cactus, 5 oracle guard exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .blocks import BlockKind, NotCactusError, _raw_scheme, build_bes, is_cactus
from .engine import rank, rank_fast_path
from .generate import GeneratorParams, generate
from .graph import GraphError, canonical_divisor, genus
from .oracle import OracleLimitError, oracle_rank, q_reduce
from .problemfile import ParseError, parse_file, serialize


def _cmd_rank(args) -> int:
    g, f = parse_file(args.file, check_connected=False)
    if args.fast_path_only:
        _raw_scheme(g)  # cactus / connectivity gate, raises with exit 4 / 3
        value = rank_fast_path(g, f)
        if value is None:
            print("fast path not applicable (degree inside the band)", file=sys.stderr)
            return 1
        print(value)
        return 0
    res = rank(g, f, trace=args.trace)
    if args.trace:
        for s in res.trace:
            if s.kind == "base":
                print(f"base {s.branch} deg {s.degree_after} root {s.attach}",
                      file=sys.stderr)
            else:
                good = f" {s.goodness}" if s.goodness else ""
                br = f" take={s.branch}" if s.branch else ""
                print(f"block {s.index} {s.kind} attach {s.attach}{good} "
                      f"adjust {s.adjustment} deg {s.degree_after}{br}",
                      file=sys.stderr)
    print(res.rank)
    return 0


def _cmd_oracle(args) -> int:
    g, f = parse_file(args.file, check_connected=False)
    print(oracle_rank(g, f, max_vertices=args.max_n, max_rank=args.max_r))
    return 0


def _cmd_reduce(args) -> int:
    g, f = parse_file(args.file, check_connected=False)
    red = q_reduce(g, f, args.base)
    print("d " + " ".join(map(str, red.values)))
    return 0


def _cmd_rrcheck(args) -> int:
    g, f = parse_file(args.file, check_connected=False)
    if is_cactus(g):
        fn = lambda gg, ff: rank(gg, ff).rank
    else:
        fn = lambda gg, ff: oracle_rank(gg, ff)
    k = canonical_divisor(g)
    lhs = fn(g, f) - fn(g, k - f)
    rhs = f.degree - genus(g) + 1
    if lhs == rhs:
        print("OK")
        return 0
    print(f"FAIL lhs={lhs} rhs={rhs}")
    return 1


def _cmd_check(args) -> int:
    g, _ = parse_file(args.file, check_connected=False)
    print("cactus" if is_cactus(g) else "not-cactus")
    return 0


def _cmd_bes(args) -> int:
    g, _ = parse_file(args.file, check_connected=False)
    scheme = build_bes(g)
    for i, step in enumerate(scheme.steps, 1):
        kind = "edge" if step.block.kind is BlockKind.EDGE else "cycle"
        vs = " ".join(map(str, step.block.vertices))
        print(f"step {i} block {kind} [{vs}] attach {step.attach}")
    print(f"root {scheme.root}")
    return 0


def _cmd_gen(args) -> int:
    try:
        params = GeneratorParams(
            vertices=args.vertices,
            cycles=args.cycles,
            max_cycle_len=args.max_cycle_len,
            divisor_degree=args.divisor_degree,
            seed=args.seed,
        )
    except ValueError as e:
        print(f"gen: {e}", file=sys.stderr)
        return 2
    g, f = generate(params)
    sys.stdout.write(serialize(g, f))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cactusrank",
        description="Divisor rank on cactus graphs, with a brute-force oracle.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("rank", help="fast rank of the divisor in FILE")
    r.add_argument("file")
    r.add_argument("--trace", action="store_true",
                   help="print per-block decisions to stderr")
    r.add_argument("--fast-path-only", action="store_true",
                   help="answer by degree shortcuts alone, exit 1 if none apply")
    r.set_defaults(func=_cmd_rank)

    o = sub.add_parser("oracle", help="brute-force rank (small instances)")
    o.add_argument("file")
    o.add_argument("--max-n", type=int, default=12, help="vertex guard (default 12)")
    o.add_argument("--max-r", type=int, default=8, help="rank search guard (default 8)")
    o.set_defaults(func=_cmd_oracle)

    q = sub.add_parser("reduce", help="print the q-reduced divisor")
    q.add_argument("file")
    q.add_argument("--base", type=int, default=0, help="base vertex q (default 0)")
    q.set_defaults(func=_cmd_reduce)

    rr = sub.add_parser("rrcheck", help="check the rank duality identity")
    rr.add_argument("file")
    rr.set_defaults(func=_cmd_rrcheck)

    c = sub.add_parser("check", help="print cactus / not-cactus")
    c.add_argument("file")
    c.set_defaults(func=_cmd_check)

    b = sub.add_parser("bes", help="print the block elimination scheme")
    b.add_argument("file")
    b.set_defaults(func=_cmd_bes)

    gn = sub.add_parser("gen", help="emit a random cactus problem file")
    gn.add_argument("--vertices", type=int, required=True)
    gn.add_argument("--cycles", type=int, default=0)
    gn.add_argument("--max-cycle-len", type=int, default=8)
    gn.add_argument("--divisor-degree", type=int, default=0)
    gn.add_argument("--seed", type=int, default=0)
    gn.set_defaults(func=_cmd_gen)
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except NotCactusError as e:
        print(f"not a cactus: edge {e.edge} lies on a second cycle", file=sys.stderr)
        return 4
    except OracleLimitError as e:
        print(f"oracle guard: {e}", file=sys.stderr)
        return 5
    except GraphError as e:
        print(f"invalid graph: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"cannot read input: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
