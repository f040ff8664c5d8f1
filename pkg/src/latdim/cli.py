"""Command-line front end.

Three subcommands: ``build`` renders the zero-divisor graph, its
complement and the strong resolving graph of a spec as edge lists and
DOT files; ``sdim`` computes the strong metric dimension by formula,
SR vertex cover and/or brute force and reports agreement; ``verify``
runs the theorem-check battery over a seeded corpus of blow-up specs.

Exit codes: 0 success, 1 verification/computation failure, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import applications as apps
from .blowup import load_blowup_file, parse_blowup_spec
from .errors import LatdimError, MethodInapplicable, ParseError
from .graphs import is_connected, to_dot, to_edge_list
from .lattice import load_lattice_file
from .solvers import (
    BRUTE_FORCE_CAP,
    DimensionReport,
    closed_form_report,
    strong_metric_dimension,
    strong_metric_dimension_bruteforce,
)
from .strong_resolving import strong_resolving_graph
from .verify import run_suite
from .zerodiv import complement_zero_divisor_graph, zero_divisor_graph

KINDS = ("lattice", "blowup", "reduced", "pir", "vspace")


def _load_spec(kind, value):
    """Resolve a spec argument: a path to a spec file, or (for the
    one-line application kinds) an inline spec string."""
    if os.path.exists(value):
        if kind == "lattice":
            return load_lattice_file(value)
        if kind == "blowup":
            return load_blowup_file(value)
        with open(value, "r", encoding="utf-8") as fh:
            return apps.parse_app_spec(kind, fh.read())
    if kind in ("reduced", "pir", "vspace"):
        return apps.parse_app_spec(kind, value)
    raise ParseError(f"spec file not found: {value}")


def _target(kind, spec):
    """The lattice-side graphs and dimension target for a spec.

    Returns (lattice_or_None, target_graph, formula_or_None, graph_id);
    the target is the complement-side graph whose strong metric
    dimension the pipeline studies (the join graph for pir/vspace).
    """
    if kind == "lattice":
        lat = spec
        return lat, complement_zero_divisor_graph(lat), None, "lattice"
    if kind == "blowup":
        from .blowup import build_blowup
        from .solvers import closed_form_sdim_blowup

        lat = build_blowup(spec)
        formula = closed_form_sdim_blowup(spec) if spec.n >= 3 else None
        return lat, complement_zero_divisor_graph(lat), formula, f"blowup(n={spec.n})"
    if kind == "reduced":
        from .lattice import product_of_chains

        lat = product_of_chains(spec.field_sizes)
        n = len(spec.field_sizes)
        formula = apps.reduced_closed_form(spec) if n >= 3 else None
        gid = f"reduced({','.join(map(str, spec.field_sizes))})"
        return lat, complement_zero_divisor_graph(lat), formula, gid
    if kind == "pir":
        lat = apps.pir_ideal_lattice(spec)
        ig, _ = apps.build_intersection_graph(spec)
        gid = f"intersection({','.join(map(str, spec.proper_ideal_counts))})"
        return lat, ig, apps.intersection_closed_form(spec), gid
    if kind == "vspace":
        from .blowup import build_blowup

        lat = build_blowup(apps.component_blowup_spec(spec))
        ig, _ = apps.build_component_graph(spec)
        gid = f"vspace(n={spec.dimension},q={spec.field_size})"
        return lat, ig, apps.component_closed_form(spec), gid
    raise MethodInapplicable(f"unknown kind {kind}")


def _spec_arg(args):
    for kind in KINDS:
        value = getattr(args, kind)
        if value is not None:
            return kind, value
    raise MethodInapplicable("one of --lattice/--blowup/--reduced/--pir/--vspace is required")


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_build(args):
    kind, value = _spec_arg(args)
    spec = _load_spec(kind, value)
    lat, target, _, _ = _target(kind, spec)
    base = os.path.splitext(os.path.basename(value))[0] if os.path.exists(value) else kind
    outdir = args.out
    os.makedirs(outdir, exist_ok=True)

    g = zero_divisor_graph(lat)
    gc = complement_zero_divisor_graph(lat)
    written = []
    for tag, graph in (("zd", g), ("zdc", gc)):
        stem = os.path.join(outdir, f"{base}.{tag}")
        _write(stem + ".edges", to_edge_list(graph))
        _write(stem + ".dot", to_dot(graph, tag))
        written.append(stem)
    if kind in ("pir", "vspace"):
        stem = os.path.join(outdir, f"{base}.app")
        _write(stem + ".edges", to_edge_list(target))
        _write(stem + ".dot", to_dot(target, "app"))
        written.append(stem)
    if target.n and is_connected(target):
        sr = strong_resolving_graph(target)
        stem = os.path.join(outdir, f"{base}.sr")
        _write(stem + ".edges", to_edge_list(sr.graph))
        _write(stem + ".dot", sr.to_dot())
        written.append(stem)
    else:
        print("note: target graph is disconnected or empty; no SR graph written")
    for stem in written:
        print(f"wrote {stem}.edges {stem}.dot")
    return 0


def cmd_sdim(args):
    kind, value = _spec_arg(args)
    spec = _load_spec(kind, value)
    _, target, formula, gid = _target(kind, spec)
    print(f"graph={gid} vertices={target.n}")

    method = args.method
    results = []
    if method in ("formula", "auto"):
        if formula is None:
            if method == "formula":
                raise MethodInapplicable(f"no closed form for kind {kind!r} input")
        else:
            if kind == "blowup":
                results.append(closed_form_report(spec, gid))
            else:
                results.append(DimensionReport(gid, formula, "closed_form"))
    if method in ("sr", "auto"):
        results.append(strong_metric_dimension(target, gid))
    if method in ("brute", "auto"):
        if method == "brute" or target.n <= args.cap:
            sdim = strong_metric_dimension_bruteforce(target, cap=max(args.cap, target.n)
                                                      if method == "brute" else args.cap)
            results.append(DimensionReport(gid, sdim, "brute_force"))

    for rep in results:
        print(rep.to_line())
        for note in rep.notes:
            print(f"note: {note}")
    values = {rep.sdim for rep in results}
    if len(values) > 1:
        print(f"agreement: DISAGREE {sorted(values)}")
        return 1
    print(f"agreement: OK (sdim={values.pop()})")
    return 0


def cmd_verify(args):
    if args.all:
        suite = "all"
    elif args.lemmas:
        suite = "lemmas"
    else:
        suite = "formulas"
    failures = run_suite(
        suite=suite,
        n_max=args.n_max,
        len_max=args.len_max,
        seed=args.seed,
        limit=args.limit,
        inject_fault=args.inject_fault,
    )
    return 1 if failures else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="latdim",
        description="Zero-divisor graphs of finite lattices and their strong metric dimension.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_flags(p):
        grp = p.add_mutually_exclusive_group(required=True)
        grp.add_argument("--lattice", metavar="FILE", help="lattice spec file")
        grp.add_argument("--blowup", metavar="FILE", help="blow-up spec file")
        grp.add_argument("--reduced", metavar="SPEC", help="file or inline 'q=2,2,2'")
        grp.add_argument("--pir", metavar="SPEC", help="file or inline 'n=1,1'")
        grp.add_argument("--vspace", metavar="SPEC", help="file or inline 'n=3 q=2'")

    p_build = sub.add_parser("build", help="write edge-list and DOT files")
    add_spec_flags(p_build)
    p_build.add_argument("--out", default=".", help="output directory")
    p_build.set_defaults(func=cmd_build)

    p_sdim = sub.add_parser("sdim", help="compute the strong metric dimension")
    add_spec_flags(p_sdim)
    p_sdim.add_argument("--method", choices=("auto", "sr", "brute", "formula"),
                        default="auto")
    p_sdim.add_argument("--cap", type=int, default=BRUTE_FORCE_CAP,
                        help="brute-force vertex cap for --method auto")
    p_sdim.set_defaults(func=cmd_sdim)

    p_verify = sub.add_parser("verify", help="run the theorem-check battery")
    suite = p_verify.add_mutually_exclusive_group(required=True)
    suite.add_argument("--all", action="store_true")
    suite.add_argument("--lemmas", action="store_true")
    suite.add_argument("--formulas", action="store_true")
    p_verify.add_argument("--n-max", type=int, default=4, dest="n_max")
    p_verify.add_argument("--len-max", type=int, default=2, dest="len_max")
    p_verify.add_argument("--seed", type=int, default=7)
    p_verify.add_argument("--limit", type=int, default=100,
                          help="sample size for non-exhaustive corpora")
    p_verify.add_argument("--inject-fault", action="store_true",
                          help="testing aid: corrupt one case to exercise the FAIL path")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except MethodInapplicable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LatdimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
