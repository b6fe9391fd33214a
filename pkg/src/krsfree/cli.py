"""Command line front end.

Subcommands: construct, count, extract, oracle, certify, bounds.
Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 capacity error,
4 internal bound violation (count only; should never happen).

All floats are printed with 12 significant digits and reruns with the same
arguments are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .deletion import (
    deletion_params,
    reports_to_csv,
    run_trials,
    summary_to_json,
)
from .extremal import (
    CapacityError,
    build_construction,
    kst_certificate,
    theorem_upper_bound,
)
from .hypergraph import (
    EdgeSubset,
    Hypergraph,
    PartitionSpec,
    read_hypergraph,
    read_partition,
    write_hypergraph,
    write_partition,
)
from .oracle import PatternSpec, max_free_subgraph
from .patterns import (
    copy_count_upper_bound,
    copy_count_upper_bound_relaxed,
    count_copies,
    count_matchings,
    pattern_exponent,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_CAPACITY = 3
EXIT_BOUND_VIOLATION = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the contract here is status 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="PATH", help="hypergraph file ('k n m' header)")
    p.add_argument("--parts", metavar="PATH", help="partition file (k lines of vertices)")
    p.add_argument("--construct", action="store_true", help="build the tight host instead of reading one")
    p.add_argument("--k", type=int, help="uniformity for --construct")
    p.add_argument("--r", type=int, help="pattern side r")
    p.add_argument("--s", type=int, help="biclique second side s (graphs)")
    p.add_argument("--n", type=int, help="base size n for --construct")


def _load_host(args: argparse.Namespace) -> tuple[Hypergraph, PartitionSpec | None]:
    if args.construct:
        if args.input:
            raise UsageError("give either --input or --construct, not both")
        if args.k is None or args.r is None or args.n is None:
            raise UsageError("--construct needs --k, --r and --n")
        if args.n < 1:
            raise UsageError("--n must be >= 1")
        if args.r < 2 or args.k < 2:
            raise UsageError("--construct needs --r >= 2 and --k >= 2")
        g, spec, _cspec = build_construction(args.n, args.r, args.k)
        return g, spec
    if not args.input:
        raise UsageError("need --input PATH or --construct")
    g = read_hypergraph(args.input)
    spec = read_partition(args.parts) if args.parts else None
    return g, spec


def _require_r(args: argparse.Namespace) -> int:
    if args.r is None or args.r < 2:
        raise UsageError("need --r >= 2")
    return args.r


def cmd_construct(args: argparse.Namespace) -> int:
    if args.n is None or args.k is None or args.r is None:
        raise UsageError("construct needs --k, --r and --n")
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.r < 2 or args.k < 2:
        raise UsageError("need --r >= 2 and --k >= 2")
    g, spec, cspec = build_construction(args.n, args.r, args.k)
    if args.out:
        write_hypergraph(g, args.out)
        write_partition(spec, args.out + ".parts")
    else:
        sys.stdout.write(f"{g.k} {g.n} {g.m}\n")
    sys.stdout.write(
        "m={m} q={q} parts={parts}\n".format(
            m=cspec.m, q=cspec.q, parts=",".join(str(s) for s in cspec.part_sizes)
        )
    )
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    g, spec = _load_host(args)
    r = _require_r(args)
    copies = count_copies(g, r, spec)
    matchings = count_matchings(g, r)
    bound = copy_count_upper_bound(g.m, r, g.k)
    sys.stdout.write(f"m {g.m}\n")
    sys.stdout.write(f"copies {copies}\n")
    sys.stdout.write(f"matchings {matchings}\n")
    sys.stdout.write(f"copy_bound {bound}\n")
    ok = copies <= bound and matchings <= math.comb(g.m, r)
    if g.k == 2 and g.m >= r:
        relaxed = copy_count_upper_bound_relaxed(g.m, r)
        sys.stdout.write(f"copy_bound_relaxed {relaxed}\n")
        ok = ok and bound <= relaxed
    sys.stdout.write(f"bounds {'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_BOUND_VIOLATION


def cmd_extract(args: argparse.Namespace) -> int:
    g, spec = _load_host(args)
    r = _require_r(args)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.seed < 0:
        raise UsageError("--seed must be >= 0")
    summary = run_trials(
        g,
        r,
        num_trials=args.trials,
        base_seed=args.seed,
        spec=spec,
        edge_choice=args.policy,
        workers=args.jobs,
    )
    if args.out:
        with open(args.out + ".csv", "w", encoding="ascii", newline="") as fh:
            fh.write(reports_to_csv(summary.reports))
        with open(args.out + ".json", "w", encoding="ascii") as fh:
            fh.write(summary_to_json(summary))
    sys.stdout.write(
        "trials {n} mean {mean} min {mn} max {mx} guarantee {g}\n".format(
            n=summary.num_trials,
            mean=_fmt(summary.mean_final_size),
            mn=summary.min_final_size,
            mx=summary.max_final_size,
            g=_fmt(summary.guarantee),
        )
    )
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g, spec = _load_host(args)
    r = _require_r(args)
    if g.k == 2:
        if args.s is not None:
            if args.orientation == "either":
                pattern = PatternSpec.krs_either(r, args.s)
            else:
                pattern = PatternSpec.krs_oriented(r, args.s)
            if spec is None:
                raise UsageError("biclique oracle with --s needs --parts or --construct")
        else:
            pattern = PatternSpec.krr(r)
    else:
        pattern = PatternSpec.multipartite(r, g.k)
    result = max_free_subgraph(g, pattern, spec, budget=args.budget)
    payload = {
        "schema": "v1",
        "m": g.m,
        "optimum": result.optimum,
        "nodes_explored": result.nodes_explored,
        "proof_of_optimality": result.proof_of_optimality,
        "witness_edges": [list(e) for e in sorted(result.witness.edges)],
    }
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    g, spec = _load_host(args)
    if spec is None:
        raise UsageError("certify needs --parts or --construct")
    r = _require_r(args)
    s = args.s if args.s is not None else r
    if args.subgraph:
        sub = read_hypergraph(args.subgraph)
        if sub.k != g.k or sub.n != g.n:
            raise ValueError("subgraph dimensions do not match the host")
        gprime = EdgeSubset(g, sub.edges)
    else:
        gprime = EdgeSubset(g, g.edges)
    report = kst_certificate(gprime, spec, r, s)
    payload = {
        "schema": "v1",
        "r": report.r,
        "s": report.s,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "average_degree": str(report.average_degree),
        "average_degree_float": float(_fmt(float(report.average_degree))),
        "verdict": report.verdict,
    }
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    if args.r is None or args.r < 2:
        raise UsageError("need --r >= 2")
    if args.k is None or args.k < 2:
        raise UsageError("need --k >= 2")
    if args.n is None or args.n < 1:
        raise UsageError("need --n >= 1 (table covers bases 1..n)")
    r, k = args.r, args.k
    s = args.s if args.s is not None else r
    if k == 2 and s < r:
        raise UsageError("need s >= r for the graph bound")
    q = pattern_exponent(r, k)
    rows = ["n,m,guarantee,upper_bound,oracle_optimum,certified"]
    for base in range(1, args.n + 1):
        g, spec, cspec = build_construction(base, r, k)
        guarantee = deletion_params(cspec.m, r, k).guarantee
        upper = theorem_upper_bound(cspec.m, r, s, k) if k == 2 else theorem_upper_bound(cspec.m, r, None, k)
        pattern = PatternSpec.krr(r) if k == 2 else PatternSpec.multipartite(r, k)
        result = max_free_subgraph(g, pattern, spec if k > 2 else None, budget=args.budget)
        rows.append(
            "{n},{m},{lo},{up},{opt},{cert}".format(
                n=base,
                m=cspec.m,
                lo=_fmt(guarantee),
                up=_fmt(upper),
                opt=result.optimum if result.proof_of_optimality else "",
                cert=str(result.proof_of_optimality).lower(),
            )
        )
    out = "\n".join(rows) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(
        prog="krsfree",
        description="Largest biclique-free subgraph toolkit for k-uniform hypergraphs.",
        epilog=(
            "Exit codes: 0 success, 1 usage, 2 I/O or parse, 3 capacity, "
            "4 internal bound violation."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "construct",
        help="build the tight complete multipartite host and write it out",
        description="Build the host with part sizes n^(r^(i-1)) and m = n^q edges.",
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", metavar="PATH", help="write hypergraph here and partition to PATH.parts")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser(
        "count",
        help="count pattern copies and matchings, check the counting bounds",
        description="Counts side-r pattern copies, r-matchings, and verifies copies <= (k!)^r C(m,r) (<= 2 m^r for graphs).",
    )
    _add_input_flags(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser(
        "extract",
        help="run seeded sparsify-then-delete trials",
        description=(
            "Runs --trials extractions with per-trial seeds derived from --seed. "
            "With --out, writes OUT.csv (one row per trial, columns: trial, seed, p, "
            "edges_sampled, copies_found, edges_deleted, final_size, freeness_verified, "
            "generator, policy) and OUT.json (summary, schema v1). Reruns are byte-identical."
        ),
    )
    _add_input_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--policy", choices=["lex", "random", "greedy"], default="lex")
    p.add_argument("--jobs", type=int, default=1, help="worker threads; output is identical for any value")
    p.add_argument("--format", choices=["csv", "json"], default="csv", help="kept for compatibility; both files are written with --out")
    p.add_argument("--out", metavar="PATH", help="output prefix")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser(
        "oracle",
        help="exact maximum pattern-free subgraph (branch and bound)",
        description="Prints an OracleResult as JSON (schema v1). Budget exhaustion clears proof_of_optimality but still exits 0.",
    )
    _add_input_flags(p)
    p.add_argument("--orientation", choices=["proof", "either"], default="proof")
    p.add_argument("--budget", type=int, default=2_000_000)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser(
        "certify",
        help="degree-convexity containment certificate for bipartite subgraphs",
        description="Prints a CertificateReport as JSON (schema v1). --subgraph restricts to an edge subset of the host.",
    )
    _add_input_flags(p)
    p.add_argument("--subgraph", metavar="PATH", help="hypergraph file whose edges form the subgraph")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser(
        "bounds",
        help="guarantee / upper bound / exact optimum table over bases 1..n",
        description="CSV columns: n, m, guarantee, upper_bound, oracle_optimum (blank if uncertified), certified.",
    )
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--s", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=500_000)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except CapacityError as exc:
        sys.stderr.write(f"capacity error: {exc}\n")
        return EXIT_CAPACITY
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO


def run() -> None:
    raise SystemExit(main(sys.argv[1:]))
