"""Command-line front end.

Exit codes: 0 success, 2 invalid instance or input, 3 size limit exceeded,
4 verifier or bound violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import approx, exact, reduction
from .errors import IsolatedVertexError, SizeLimitError, UDGDomError
from .experiments import ExperimentConfig, generate, report_body, run_ratio, summary, worker_count
from .geometry import build_udg, dumps_instance, read_instance, write_instance

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_SIZE = 3
EXIT_VIOLATION = 4


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _config(args) -> ExperimentConfig:
    return ExperimentConfig(
        trials=args.trials,
        n=args.n,
        box_width=args.width,
        box_height=args.height,
        radius=args.radius,
        seed=args.seed,
        exact_limit=args.exact_limit,
        problem=args.problem,
    )


def cmd_generate(args) -> int:
    ps = generate(_config(args))
    _emit(dumps_instance(ps), args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = build_udg(read_instance(args.inp))
    if args.problem == "tds":
        sol = approx.tds_udg_sc(g)
        objective, ok = len(sol), approx.verify_tds(g, sol)
    else:
        sol = approx.trdf_udg_sc(g)
        objective, ok = sol.weight, approx.verify_trdf(g, sol)
    if args.out:
        approx.write_solution(args.out, args.problem, sol)
    print(objective)
    return EXIT_OK if ok else EXIT_VIOLATION


EXACT_SOLVERS = {
    "ds": (exact.exact_min_ds, exact.DS_LIMIT),
    "tds": (exact.exact_min_tds, exact.TDS_LIMIT),
    "rds": (exact.exact_min_rdf, exact.RDF_LIMIT),
    "trds": (exact.exact_min_trdf, exact.TRDF_LIMIT),
}


def cmd_exact(args) -> int:
    g = build_udg(read_instance(args.inp))
    solver, default_limit = EXACT_SOLVERS[args.problem]
    limit = default_limit if args.exact_limit is None else args.exact_limit
    res = solver(g, limit=limit)
    if args.out:
        approx.write_solution(args.out, args.problem, res.witness)
    print(res.objective)
    return EXIT_OK


def cmd_reduce(args) -> int:
    grid = reduction.read_grid(args.grid)
    gadget = reduction.grid_to_gadget(grid, scale2=args.scale2)
    out = Path(args.out)
    write_instance(out, gadget.udg.pointset)
    roles_path = out.with_name(out.stem + ".roles.json")
    roles_path.write_text(json.dumps(reduction.roles_dict(gadget)) + "\n")
    print(f"vertices={gadget.udg.n} n={grid.n} m={grid.m} roles={roles_path}")
    return EXIT_OK


def cmd_ratio(args) -> int:
    config = _config(args)
    rows = run_ratio(config, worker_count())
    body = report_body(rows)
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    _emit(body + f"# generated_at={stamp}\n", args.out)
    s = summary(rows)
    if args.out:
        print(body.splitlines()[-1])
    return EXIT_OK if s["all_verified"] and s["all_within_bound"] else EXIT_VIOLATION


def cmd_verify_claim(args) -> int:
    limit = exact.TRDF_LIMIT if args.exact_limit is None else args.exact_limit
    graphs = reduction.connected_grid_graphs(args.max_n)
    failures = 0
    for grid in graphs:
        r = reduction.claim_report(grid, limit=limit)
        failures += not r.ok
        verts = json.dumps([list(v) for v in grid.vertices])
        status = "PASS" if r.ok else "FAIL"
        print(f"{status} n={grid.n} m={grid.m} gamma={r.gamma} gamma_tR={r.gamma_tr} vertices={verts}")
    print(f"# {len(graphs) - failures}/{len(graphs)} grid graphs pass")
    return EXIT_OK if failures == 0 else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="udgdom",
        description="Total (Roman) domination on unit disk graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def experiment_flags(p, problems, default):
        p.add_argument("--n", type=int, default=12)
        p.add_argument("--width", type=float, default=3.0)
        p.add_argument("--height", type=float, default=3.0)
        p.add_argument("--radius", type=float, default=1.0)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--problem", choices=problems, default=default)
        p.add_argument("--exact-limit", type=int, default=None)
        p.add_argument("--out")

    p = sub.add_parser("generate", help="write a random instance")
    experiment_flags(p, list(EXACT_SOLVERS), "tds")
    p.set_defaults(func=cmd_generate, trials=1)

    p = sub.add_parser("solve", help="run the set-cover approximation")
    p.add_argument("--problem", choices=["tds", "trds"], required=True)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="solve exactly by branch and bound")
    p.add_argument("--problem", choices=list(EXACT_SOLVERS), required=True)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out")
    p.add_argument("--exact-limit", type=int, default=None)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("reduce", help="build the gadget UDG of a grid graph")
    p.add_argument("--grid", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--scale2", action="store_true", help="double coordinates, radius 1")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("ratio", help="measure approximation ratios against exact optima")
    experiment_flags(p, ["tds", "trds"], "tds")
    p.add_argument("--trials", type=int, default=50)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("verify-claim", help="check the reduction on all small grid graphs")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--exact-limit", type=int, default=None)
    p.set_defaults(func=cmd_verify_claim)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except IsolatedVertexError as exc:
        print(f"error: isolated vertices {exc.vertices}", file=sys.stderr)
        return EXIT_INVALID
    except (UDGDomError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
