"""Command-line front end.

Subcommands: gen, analyze, experiment, asymptotic, sachs-check, plot.
Exit codes: 0 success, 1 runtime/numeric failure, 2 usage or validation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import asymptotics
from .bounds import bound_report
from .eigensolver import EigenSolverError
from .experiments import (
    CSV_SCHEMA,
    ExperimentConfig,
    SoundnessError,
    rows_to_csv,
    run_experiment,
    summarize,
)
from .graph import (
    EdgeListParseError,
    GraphError,
    degree_profile,
    load_edge_list,
    save_edge_list,
)
from .plot import PlotError, render_csv_file
from .random_graphs import ba_tree, er_graph, random_weighted_graph
from .spectral import char_poly_from_spectrum, sachs_char_poly, symmetric_eigenvalues

EXIT_RUNTIME = 1
EXIT_USAGE = 2

PAPER_SCALE_N = 2000
PAPER_SCALE_TRIALS = 200

# Equality between energy and a bound is flagged at this absolute-per-vertex slack.
EQUALITY_SLACK_PER_VERTEX = 1e-7

SACHS_CLI_MAX_N = 12


def _emit_json(payload: dict, out_path: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_gen(args) -> int:
    if args.model == "ba":
        g = ba_tree(args.n, args.seed)
    else:
        if args.lam is None:
            raise GraphError("er model requires --lambda")
        g = er_graph(args.n, args.lam, args.seed)
    save_edge_list(g, args.out)
    print(f"wrote {args.out}: n={g.n} edges={g.m}")
    return 0


def cmd_analyze(args) -> int:
    g = load_edge_list(args.path)
    profile = degree_profile(g)
    spec = symmetric_eigenvalues(g)
    report = bound_report(g, profile)
    payload: dict = {
        "schema_version": 1,
        "n": g.n,
        "edges": g.m,
        "energy": spec.energy,
        "energy_per_n": spec.energy / g.n if g.n else 0.0,
        "bounds": report.as_dict(),
        "degree_profile": {
            "leaves": len(profile.leaves),
            "inner": len(profile.inner),
            "isolated": len(profile.isolated),
            "e11": profile.e11,
            "degree_hist": {str(k): v for k, v in sorted(profile.hist_n.items())},
            "leaf_neighbor_hist": {str(k): v for k, v in sorted(profile.hist_n1.items())},
        },
    }
    slack = EQUALITY_SLACK_PER_VERTEX * g.n
    payload["tp_equality"] = (
        report.tp is not None and abs(report.tp - spec.energy) <= slack
    )
    if args.sachs:
        if g.n > SACHS_CLI_MAX_N:
            raise GraphError(f"--sachs capped at n <= {SACHS_CLI_MAX_N}, got n={g.n}")
        payload["sachs_char_poly"] = list(sachs_char_poly(g).coefficients)
    _emit_json(payload, args.out)
    return 0


def cmd_experiment(args) -> int:
    n, trials = args.n, args.trials
    if args.paper_scale:
        n, trials = PAPER_SCALE_N, PAPER_SCALE_TRIALS
        print(
            f"warning: paper-scale run (n={n}, trials={trials}) may take a while",
            file=sys.stderr,
        )
    config = ExperimentConfig(
        model=args.model,
        n=n,
        trials=trials,
        seed=args.seed,
        lam=args.lam,
        threads=args.threads,
    )
    config.validate()
    rows = run_experiment(config)
    csv_text = rows_to_csv(rows)
    with open(args.out, "w") as fh:
        fh.write(csv_text)
    summary = summarize(config, rows)
    _emit_json(summary, args.json)
    print(f"wrote {args.out}: {len(rows)} trials ({CSV_SCHEMA})", file=sys.stderr)
    return 0


def cmd_asymptotic(args) -> int:
    if args.model == "ba":
        terms = args.terms if args.terms is not None else 100001
        s = asymptotics.ba_limit_constant(terms)
        payload = {
            "model": "ba",
            "value": s.value,
            "truncation_bound": s.truncation_bound,
            "terms_used": s.terms_used,
        }
    else:
        if args.lam is None:
            raise GraphError("er model requires --lambda")
        terms = args.terms if args.terms is not None else 40
        s = asymptotics.er_f(args.lam, terms)
        payload = {
            "model": "er",
            "lambda": args.lam,
            "value": s.value,
            "truncation_bound": s.truncation_bound,
            "terms_used": s.terms_used,
            "closed_upper": asymptotics.er_f_closed_upper(args.lam),
            "hypoenergetic": asymptotics.hypoenergetic_check(args.lam),
        }
    _emit_json(payload, args.out)
    return 0


def cmd_sachs_check(args) -> int:
    if args.n > SACHS_CLI_MAX_N:
        raise GraphError(f"sachs-check capped at n <= {SACHS_CLI_MAX_N}, got {args.n}")
    if args.n < 1 or args.trials < 1:
        raise GraphError("sachs-check needs n >= 1 and trials >= 1")
    worst = 0.0
    for trial in range(args.trials):
        wg = random_weighted_graph(args.n, args.seed + trial)
        by_sachs = sachs_char_poly(wg).coefficients
        by_spectrum = char_poly_from_spectrum(symmetric_eigenvalues(wg)).coefficients
        for bs, bl in zip(by_sachs, by_spectrum):
            dev = abs(bs - bl) / max(1.0, abs(bs))
            worst = max(worst, dev)
    ok = worst < 1e-6
    print(f"sachs-check: n={args.n} trials={args.trials} max_deviation={worst:.3e} "
          f"{'PASS' if ok else 'FAIL'}")
    return 0 if ok else EXIT_RUNTIME


def cmd_plot(args) -> int:
    render_csv_file(args.path, args.out)
    print(f"wrote {args.out}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphenergy",
        description="Graph energy, leaf-aware bounds, and random-graph experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random graph as an edge list")
    p.add_argument("--model", choices=("ba", "er"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="energy, bounds and degree profile of a file")
    p.add_argument("path")
    p.add_argument("--sachs", action="store_true",
                   help="include the Sachs characteristic polynomial (n <= 12)")
    p.add_argument("--out", default=None, help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("experiment", help="Monte Carlo energy/bounds experiment")
    p.add_argument("--model", choices=("ba", "er"), required=True)
    p.add_argument("--n", type=int, default=500)
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--json", default=None, help="summary JSON path (default: stdout)")
    p.add_argument("--paper-scale", action="store_true",
                   help="use the publication scale n=2000, trials=200")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("asymptotic", help="evaluate the limit constants")
    p.add_argument("--model", choices=("ba", "er"), required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_asymptotic)

    p = sub.add_parser("sachs-check", help="cross-check Sachs coefficients vs spectra")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sachs_check)

    p = sub.add_parser("plot", help="render an experiment CSV to an SVG scatter")
    p.add_argument("path")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, PlotError, SoundnessError, EigenSolverError, EdgeListParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
