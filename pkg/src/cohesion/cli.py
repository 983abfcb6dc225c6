"""Command-line front end.

Every command writes CSV with a header row to stdout (or ``--out``). Exit
status is 0 on success, 1 on usage errors and 2 on unreadable or invalid
data.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from pathlib import Path

from .detection import DetectionConfig, detect_groups, ego_network, find_cohesion_one
from .graph import EdgeListError, Graph, format_edge_list, read_edge_list
from .metrics import clustering, cohesion, conductance, density, weighted_cohesion
from .models import gen_four_groups, gen_gnp, monte_carlo_cohesion, parse_model_specs
from .ratings import log_pearson, rating_bins, read_ratings, spearman
from .triangles import enumerate_triangles, triangle_connectivity_classes

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(x) -> str:
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float) and math.isnan(x):
        return "nan"
    return f"{x:.6f}"


def _writer(out):
    return csv.writer(out, lineterminator="\n")


def _members(g: Graph, s) -> str:
    return ";".join(g.label(u) for u in sorted(s))


def _resolve(g: Graph, labels) -> frozenset[int]:
    try:
        return frozenset(g.node_id(lab) for lab in labels)
    except KeyError as exc:
        raise ValueError(exc.args[0]) from None


def cmd_score(args, out) -> None:
    g = read_edge_list(args.graph)
    if args.set is not None:
        labels = [x for x in args.set.split(",") if x]
    else:
        labels = Path(args.set_file).read_text(encoding="utf-8").split()
    s = _resolve(g, labels)
    score = weighted_cohesion(g, s) if args.weighted else cohesion(g, s)
    w = _writer(out)
    w.writerow(["size", "inbound", "outbound", "density_factor", "isolation_factor",
                "cohesion", "density", "clustering", "conductance"])
    w.writerow([fmt(x) for x in (
        len(s), score.stats.inbound, score.stats.outbound, score.density_factor,
        score.isolation_factor, score.value, density(g, s), clustering(g, s), conductance(g, s),
    )])


def cmd_detect(args, out) -> None:
    g = read_edge_list(args.graph)
    if args.ego is not None:
        (ego,) = _resolve(g, [args.ego])
        g = ego_network(g, ego)
    config = DetectionConfig(args.min_cohesion, args.max_size)
    w = _writer(out)
    w.writerow(["members", "size", "inbound", "outbound", "cohesion"])
    for grp in detect_groups(g, config):
        st = grp.score.stats
        w.writerow([_members(g, grp.members), len(grp.members), st.inbound, st.outbound,
                    fmt(grp.score.value)])


def cmd_cohesion1(args, out) -> None:
    if args.k < 3:
        raise UsageError("--k must be at least 3")
    g = read_edge_list(args.graph)
    s = find_cohesion_one(g, args.k)
    w = _writer(out)
    w.writerow(["members", "size", "cohesion"])
    if s is not None:
        w.writerow([_members(g, s), len(s), fmt(cohesion(g, s).value)])


def cmd_gen(args, out) -> None:
    specs = parse_model_specs(Path(args.spec).read_text(encoding="utf-8"))
    if len(specs) != 1:
        raise ValueError("gen expects exactly one model spec")
    spec = specs[0]
    planted = []
    if spec.kind == "gnp":
        g = gen_gnp(spec, args.trial)
    else:
        g, planted = gen_four_groups(spec, args.trial)
    Path(args.out).write_text(format_edge_list(g), encoding="utf-8")
    if args.planted:
        with open(args.planted, "w", encoding="utf-8", newline="") as fh:
            w = _writer(fh)
            w.writerow(["block", "members"])
            for b, s in enumerate(planted):
                w.writerow([b, _members(g, s)])
    w = _writer(out)
    w.writerow(["nodes", "edges"])
    w.writerow([g.node_count, g.edge_count])


def _model_name(spec) -> str:
    if spec.kind == "gnp":
        return f"gnp:n={spec.n};k={spec.k};p={spec.p}"
    return f"four_groups:n={spec.n};p_in={spec.p_in};p_out={spec.p_out}"


def cmd_validate_models(args, out) -> None:
    specs = parse_model_specs(Path(args.spec).read_text(encoding="utf-8"))
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    w = _writer(out)
    w.writerow(["model", "formula", "sample_mean", "sample_std", "rel_err"])
    for spec in specs:
        res = monte_carlo_cohesion(spec, trials=args.trials)
        w.writerow([_model_name(spec), fmt(res.formula), fmt(res.mean), fmt(res.std),
                    fmt(res.rel_err) if math.isfinite(res.rel_err) else "inf"])


def _load_ratings(args):
    with open(args.ratings, encoding="utf-8", newline="") as fh:
        return read_ratings(fh, args.rating_min, args.rating_max)


def cmd_correlate(args, out) -> None:
    recs = _load_ratings(args)
    c = [r.cohesion for r in recs]
    r = [r.rating for r in recs]
    rho = spearman(c, r)
    lp = log_pearson(c, r)
    w = _writer(out)
    w.writerow(["statistic", "n", "excluded", "coefficient", "p_value"])
    w.writerow(["spearman_cohesion_rating", rho.n, rho.excluded, fmt(rho.coefficient),
                fmt(rho.p_value)])
    w.writerow(["pearson_ln_cohesion_ln_rating", lp.n, lp.excluded, fmt(lp.coefficient),
                fmt(lp.p_value)])


def cmd_bins(args, out) -> None:
    recs = _load_ratings(args)
    w = _writer(out)
    w.writerow(["cohesion_bin", "mean_rating", "count"])
    for start, mean, count in rating_bins(recs, args.bin_width):
        w.writerow([fmt(start), fmt(mean), count])


def cmd_triangles(args, out) -> None:
    g = read_edge_list(args.graph)
    w = _writer(out)
    if args.list:
        w.writerow(["u", "v", "w"])
        for tri in enumerate_triangles(g):
            w.writerow([g.label(x) for x in tri])
        return
    part = triangle_connectivity_classes(g)
    if args.classes:
        w.writerow(["class", "u", "v"])
        for i, cls in enumerate(part.classes):
            for u, v in cls:
                w.writerow([i, g.label(u), g.label(v)])
        for u, v in part.weak_ties:
            w.writerow(["weak", g.label(u), g.label(v)])
        return
    w.writerow(["nodes", "edges", "triangles", "classes", "weak_ties"])
    w.writerow([g.node_count, g.edge_count, len(enumerate_triangles(g)), len(part),
                len(part.weak_ties)])


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cohesion", description="Triangle-based cohesion of node sets.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("score", help="score one node set")
    sp.add_argument("graph")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--set", help="comma-separated node labels")
    grp.add_argument("--set-file", help="file of whitespace-separated node labels")
    sp.add_argument("--weighted", action="store_true", help="use edge weights")
    sp.set_defaults(func=cmd_score)

    sp = sub.add_parser("detect", help="greedy group detection")
    sp.add_argument("graph")
    sp.add_argument("--min-cohesion", type=float, default=0.0)
    sp.add_argument("--max-size", type=int, default=None)
    sp.add_argument("--ego", help="restrict to the ego network of this label")
    sp.set_defaults(func=cmd_detect)

    sp = sub.add_parser("cohesion1", help="find a k-set of cohesion 1")
    sp.add_argument("graph")
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_cohesion1)

    sp = sub.add_parser("gen", help="sample a synthetic graph")
    sp.add_argument("--spec", required=True, help="key=value model spec file")
    sp.add_argument("--out", required=True, help="edge-list output path")
    sp.add_argument("--trial", type=int, default=0)
    sp.add_argument("--planted", help="CSV output path for planted blocks")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("validate-models", help="Monte Carlo check of expected cohesion")
    sp.add_argument("--spec", required=True, help="model specs separated by blank lines")
    sp.add_argument("--trials", type=int, default=50)
    sp.set_defaults(func=cmd_validate_models)

    for name, func, text in (("correlate", cmd_correlate, "rank/log correlation"),
                             ("bins", cmd_bins, "mean rating per cohesion bin")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("ratings", help="CSV with group_id,cohesion,rating")
        sp.add_argument("--rating-min", type=float, default=None)
        sp.add_argument("--rating-max", type=float, default=None)
        if name == "bins":
            sp.add_argument("--bin-width", type=float, default=0.01)
        sp.set_defaults(func=func)

    sp = sub.add_parser("triangles", help="triangle count and connectivity classes")
    sp.add_argument("graph")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--classes", action="store_true", help="list edges per class")
    mode.add_argument("--list", action="store_true", help="list the triangles")
    sp.set_defaults(func=cmd_triangles)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except UsageError as exc:
        print(f"cohesion: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EdgeListError, OSError, ValueError, KeyError) as exc:
        print(f"cohesion: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
