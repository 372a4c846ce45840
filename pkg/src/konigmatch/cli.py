"""Command-line front end.

Exit codes: 0 success, 1 domain errors (non-minimum cover, non-maximal
matching, exceeded budgets, ...), 2 for I/O and parse errors.  Results go
to stdout as JSON with external vertex labels; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io as gio
from .errors import DomainError, InputError
from .experiments import TrialConfig, run_trials
from .graph import procedure_sides
from .konig import is_minimum_cover, konig_cover
from .matching import greedy_maximal_matching, maximum_matching
from .oracle import (
    OracleBudget,
    all_matchings,
    all_maximal_matchings,
    all_minimum_covers,
    hall_condition,
)
from .paths import classify_matching
from .reverse import reverse_konig
from .stars import star_stud
from .verify import corpus_verify

import random


def _emit(data) -> None:
    json.dump(data, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _cmd_match(args) -> int:
    g = gio.load_graph(args.graph)
    if args.maximal:
        order = sorted(g.edges)
        random.Random(args.seed).shuffle(order)
        m = greedy_maximal_matching(g, order)
    else:
        m = maximum_matching(g)
    _emit({"matching": gio.matching_to_json(m), "size": len(m)})
    return 0


def _cmd_cover(args) -> int:
    g = gio.load_graph(args.graph)
    m = gio.load_matching(g, args.matching)
    cover = konig_cover(g, m)
    _emit({
        "cover": gio.vertex_set_to_json(g, cover.vertices),
        "is_cover": cover.is_cover,
        "is_minimal": cover.is_minimal,
        "is_minimum": cover.is_minimum,
    })
    return 0


def _cmd_reverse(args) -> int:
    g = gio.load_graph(args.graph)
    cover = gio.load_vertex_set(g, args.cover)
    result = reverse_konig(g, cover)
    _emit({
        "matching": gio.matching_to_json(result.combined),
        "visit_order": [g.labels[v] for v in result.visit_order],
        "round_trip_cover": gio.vertex_set_to_json(
            g, konig_cover(g, result.combined).vertices),
        "round_trip_ok": True,
    })
    return 0


def _cmd_classify(args) -> int:
    g = gio.load_graph(args.graph)
    m = gio.load_matching(g, args.matching)
    verdict = classify_matching(g, m, args.limit)
    out = {"is_minimum": verdict.is_minimum}
    if verdict.witness is not None:
        path, stranded = verdict.witness
        out["witness"] = {
            "augmenting_path": [g.labels[v] for v in path.vertices],
            "stranded_unsaturated": gio.vertex_set_to_json(g, stranded),
        }
    _emit(out)
    return 0


def _cmd_starstud(args) -> int:
    h = gio.load_graph(args.graph)
    ssg = star_stud(h)
    _emit({
        "graph": gio.graph_to_json_dict(ssg.full),
        "attachment": {
            h.labels[v]: [ssg.full.labels[w] for w in stars]
            for v, stars in sorted(ssg.attachment.items())
        },
    })
    return 0


def _cmd_enumerate(args) -> int:
    g = gio.load_graph(args.graph)
    budget = OracleBudget(max_vertices=args.max_vertices)
    what = args.oracle
    if what == "min-covers":
        covers = all_minimum_covers(g, budget)
        _emit({"minimum_covers": sorted(
            gio.vertex_set_to_json(g, c) for c in covers)})
    elif what == "matchings":
        ms = all_matchings(g, budget)
        _emit({"matchings": sorted(gio.matching_to_json(m) for m in ms),
               "count": len(ms)})
    elif what == "maximal-matchings":
        ms = all_maximal_matchings(g, budget)
        _emit({"maximal_matchings": sorted(
            gio.matching_to_json(m) for m in ms), "count": len(ms)})
    elif what == "hall":
        _emit({"left": hall_condition(g, "left", budget),
               "right": hall_condition(g, "right", budget)})
    return 0


def _cmd_experiment(args) -> int:
    cfg = TrialConfig(n_left=args.nl, n_right=args.nr,
                      edge_probability=args.p, trials=args.trials,
                      rng_seed=args.seed)
    if args.out == "-":
        report = run_trials(cfg, sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            report = run_trials(cfg, fh)
    print(f"trials={report.trials_run} hits={report.minimum_hits} "
          f"hit_rate={report.hit_rate:.4f} "
          f"mean_excess={report.mean_cover_excess:.4f}",
          file=sys.stderr)
    return 0


def _cmd_corpus_verify(args) -> int:
    results = corpus_verify(args.max_vertices, include_stars=not args.no_stars)
    failed = False
    for res in results:
        status = "ok" if res.ok else "FAIL"
        print(f"{res.name}: {res.cases} cases, "
              f"{len(res.violations)} violations [{status}]")
        for violation in res.violations[:10]:
            print(f"  {violation}", file=sys.stderr)
        failed = failed or not res.ok
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="konigmatch",
        description="Bipartite matchings, vertex covers, and the "
                    "procedures mapping between them.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("match", help="compute a matching")
    p.add_argument("--graph", required=True)
    p.add_argument("--maximal", action="store_true",
                   help="greedy maximal under a seeded random edge order "
                        "instead of maximum")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_match)

    p = sub.add_parser("cover", help="apply the cover-from-matching procedure")
    p.add_argument("--graph", required=True)
    p.add_argument("--matching", required=True)
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("reverse",
                       help="recover a matching from a minimum cover")
    p.add_argument("--graph", required=True)
    p.add_argument("--cover", required=True,
                   help="JSON array of vertex labels")
    p.set_defaults(func=_cmd_reverse)

    p = sub.add_parser("classify",
                       help="does this maximal matching give a minimum cover?")
    p.add_argument("--graph", required=True)
    p.add_argument("--matching", required=True)
    p.add_argument("--limit", type=int, default=10 ** 6)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("starstud", help="attach a 3-leaf star to every vertex")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=_cmd_starstud)

    p = sub.add_parser("enumerate", help="brute-force oracle enumerations")
    p.add_argument("--graph", required=True)
    p.add_argument("--oracle", required=True,
                   choices=["min-covers", "matchings", "maximal-matchings",
                            "hall"])
    p.add_argument("--max-vertices", type=int, default=16)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("experiment", help="randomized hit-rate trials")
    p.add_argument("--nl", type=int, required=True)
    p.add_argument("--nr", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("corpus-verify",
                       help="run every invariant sweep over the exhaustive "
                            "small-graph corpus")
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--no-stars", action="store_true")
    p.set_defaults(func=_cmd_corpus_verify)
    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
