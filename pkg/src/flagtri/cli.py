"""Command-line entry point.

Exit codes: 0 success or check passed, 1 check failed or nothing found,
2 usage or input-format error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .complex import (
    ComplexError,
    SimplicialComplex,
    clique_complex,
    euler_characteristic,
    face_vector,
    format_complex,
    homology_gf2,
    is_closed_flag_3_manifold,
    is_eulerian,
    is_flag,
    is_ghs_gf2,
    parse_complex,
)
from .constructions import (
    ConstructionError,
    GammaNotFound,
    cross_polytope_boundary,
    cycle,
    edge_subdivision,
    figure2a,
    figure2b,
    join_of_cycles_multi,
    realize_gamma,
)
from .fascinating import check_fascinating
from .graph import Graph, GraphError, format_graph, parse_graph
from .joinlike import (
    NotFascinatingError,
    NotJoinlike,
    check_exceptional_degree_bounds,
    detect_joinlike,
    stability_probe,
)
from .search import (
    SearchBudgetExceeded,
    SearchSpec,
    SearchSpecError,
    default_threads,
    enumerate_dense_fascinating,
    load_checkpoint,
    save_checkpoint,
    write_ndjson,
)
from .vectors import (
    FaceVector,
    GammaVector,
    HVector,
    VectorError,
    edge_density_region,
    eulerian_3d_relations,
    f_to_h,
    gamma_to_h,
    h_to_f,
    h_to_gamma,
    is_dehn_sommerville,
    multipartite_edge_bounds,
    parse_vector,
    turan_threshold,
    upper_edge_bound,
)

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _first_tag(text: str) -> str | None:
    for line in text.splitlines():
        if line and not line.startswith("#"):
            return line.split()[0] if line.split() else None
    return None


def _read_object(path: str | None) -> Graph | SimplicialComplex:
    """Graph or facet list, told apart by the first non-comment line."""
    text = _read_input(path)
    tag = _first_tag(text)
    if tag == "n":
        return parse_graph(text)
    if tag in ("dim", "f") or tag is None:
        return parse_complex(text)
    raise UsageError(f"line 1: cannot tell graph from facet input (starts with {tag!r})")


def _as_graph(obj) -> Graph:
    # a skeleton keeps the facet vertex names as labels, so witnesses use them
    return obj if isinstance(obj, Graph) else obj.skeleton_graph()


def _as_complex(obj) -> SimplicialComplex:
    return clique_complex(obj) if isinstance(obj, Graph) else obj


def _emit(out, text: str) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


# -- construct -------------------------------------------------------------------

def cmd_construct(args) -> int:
    kind = args.kind
    p = args.params
    obj: Graph | SimplicialComplex

    def need(count: int, at_least: bool = False):
        if (len(p) < count) if at_least else (len(p) != count):
            raise UsageError(f"construct {kind} expects {'at least ' if at_least else ''}{count} integer argument(s)")

    if kind == "join":
        need(2, at_least=True)
        obj = join_of_cycles_multi(p)
    elif kind == "cycle":
        need(1)
        obj = cycle(p[0])
    elif kind == "crosspoly":
        need(1)
        obj = cross_polytope_boundary(p[0])
    elif kind == "subdivide":
        need(2)
        base = _as_complex(_read_object(args.input))
        obj = edge_subdivision(base, (p[0], p[1]))
    elif kind == "figure2a":
        need(2)
        obj = figure2a(p[0], p[1])
    elif kind == "figure2b":
        need(1)
        obj = figure2b(p[0])
    else:  # realize-gamma
        need(2)
        try:
            cert = realize_gamma(p[0], p[1], budget=args.budget)
        except GammaNotFound as exc:
            print(f"not found: {exc}", file=sys.stderr)
            if args.json:
                _emit(args.output, _dump({"found": False, "explored": exc.explored}) + "\n")
            return 1
        if args.json:
            _emit(args.output, _dump({"found": True, "gamma": list(cert.gamma.entries),
                                      "script": cert.to_script()}) + "\n")
            return 0
        if not (args.graph or args.facets):
            _emit(args.output, cert.to_script())
            return 0
        obj = cert.replay()

    if args.graph:
        _emit(args.output, format_graph(_as_graph(obj)))
    elif isinstance(obj, Graph):
        _emit(args.output, format_graph(obj))
    else:
        _emit(args.output, format_complex(obj))
    return 0


# -- vectors ---------------------------------------------------------------------

def cmd_vectors(args) -> int:
    given = [x for x in (args.f, args.h, args.gamma) if x is not None]
    if len(given) > 1:
        raise UsageError("give at most one of --f, --h, --gamma")
    report: dict = {}
    if given:
        if args.f is not None:
            f = FaceVector(parse_vector(args.f))
            h = f_to_h(f)
        elif args.h is not None:
            h = HVector(parse_vector(args.h))
            f = h_to_f(h)
        else:
            if args.dim is None:
                raise UsageError("--gamma needs --dim")
            h = gamma_to_h(GammaVector(args.dim, parse_vector(args.gamma)))
            f = h_to_f(h)
        report["f"] = list(f.entries)
        report["h"] = list(h.entries)
        report["dehn_sommerville"] = is_dehn_sommerville(h)
        report["gamma"] = list(h_to_gamma(h).entries) if report["dehn_sommerville"] else None
        if f.d == 3:
            report["eulerian_3d_relations"] = eulerian_3d_relations(f)
            report["edge_density_region"] = edge_density_region(f[0], f[1])
    if args.n is not None:
        report["bounds"] = {
            "n": args.n,
            "turan_threshold": str(turan_threshold(args.n)),
            "upper_edge_bound": str(upper_edge_bound(args.n)),
        }
        if args.s is not None:
            lo, hi = multipartite_edge_bounds(args.s, args.n)
            report["bounds"].update({"s": args.s, "dense_bound": str(lo), "refined_bound": str(hi)})
    if not report:
        raise UsageError("nothing to do: give --f, --h, --gamma or --n")
    if args.json:
        print(_dump(report))
        return 0
    for key in ("f", "h", "gamma"):
        if key in report:
            val = report[key]
            print(f"{key} = {','.join(map(str, val)) if val is not None else 'undefined (not symmetric)'}")
    for key in ("dehn_sommerville", "eulerian_3d_relations", "edge_density_region"):
        if key in report:
            print(f"{key} = {report[key]}")
    for key, val in report.get("bounds", {}).items():
        print(f"{key} = {val}")
    return 0


# -- check -----------------------------------------------------------------------

def cmd_check(args) -> int:
    obj = _read_object(args.input)
    mode = args.mode
    if mode == "fascinating":
        rep = check_fascinating(_as_graph(obj))
        data = rep.to_json()
        ok = rep.passes
        detail = "" if ok else "failed conditions: " + ",".join(rep.failed_conditions())
    else:
        k = _as_complex(obj)
        if mode == "flag":
            ok = is_flag(k)
            data = {"passes": ok}
            detail = ""
        elif mode == "eulerian":
            ok = is_eulerian(k)
            data = {"passes": ok, "f": list(face_vector(k).entries) if k.facets else [],
                    "euler_characteristic": euler_characteristic(k)}
            detail = ""
        elif mode == "manifold":
            v = is_closed_flag_3_manifold(k)
            ok = v.ok
            data = {"passes": ok, "reason": v.reason, "witness": list(v.witness)}
            detail = f"{v.reason} {list(v.witness)}" if not ok else ""
        else:  # ghs-gf2
            ok = is_ghs_gf2(k)
            data = {"passes": ok, "betti_gf2": list(homology_gf2(k).betti)}
            detail = ""
    data = {"check": mode, **data}
    if args.json:
        print(_dump(data))
    else:
        print(f"{mode}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else ""))
        if mode == "fascinating" and not ok:
            for cond in ("cond_b", "cond_c", "cond_d"):
                for w in data[cond][:1]:
                    print(f"  {cond}: {json.dumps(w, sort_keys=True)}")
    return 0 if ok else 1


# -- decompose -------------------------------------------------------------------

def cmd_decompose(args) -> int:
    g = _as_graph(_read_object(args.input))
    if args.mode == "joinlike":
        try:
            d = detect_joinlike(g, t_max=args.t_max)
        except (NotJoinlike, NotFascinatingError) as exc:
            print(f"not found: {exc}", file=sys.stderr)
            return 1
        data = d.to_json()
        data["degree_bounds"] = check_exceptional_degree_bounds(d).to_json()
        if args.json:
            print(_dump(data))
        else:
            print(f"t = {d.t}")
            print(f"C1 = {' '.join(map(str, d.C1))}")
            print(f"C2 = {' '.join(map(str, d.C2))}")
            print(f"X = {' '.join(map(str, d.X))}")
            for s in d.stats:
                print(f"q={s.vertex}: d1={s.d1} d2={s.d2} e1={s.e1} e2={s.e2}")
        return 0
    print(f"seed: {args.seed}", file=sys.stderr)
    try:
        rep = stability_probe(g, Fraction(args.gamma), Fraction(args.alpha), seed=args.seed, restarts=args.restarts)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    data = rep.to_json()
    data["seed"] = args.seed
    if args.json:
        print(_dump(data))
    else:
        for key in ("A1", "A2", "X", "P", "K1", "K2"):
            print(f"{key} = {' '.join(map(str, data[key]))}")
        print(f"b = {rep.b}")
        print(f"defect = {rep.defect}")
    return 0


# -- search ----------------------------------------------------------------------

def cmd_search(args) -> int:
    print(f"seed: {args.seed}", file=sys.stderr)
    kw = dict(degree_cap=not args.no_degree_cap, early_exit=not args.no_early_exit, dedupe=args.dedupe,
              chunk_size=args.chunk_size, threads=args.threads, seed=args.seed, n_cap=args.n_cap,
              max_states=args.max_states, time_limit=args.time_limit,
              max_complement_edges=args.max_complement_edges)
    try:
        if args.m is not None:
            spec = SearchSpec.exact(args.n, args.m, **kw)
        else:
            spec = SearchSpec(args.n, m_min=args.m_min, m_max=args.m_max, **kw)
    except SearchSpecError as exc:
        raise UsageError(str(exc)) from exc
    resume = load_checkpoint(args.resume) if args.resume else None
    try:
        outcome = enumerate_dense_fascinating(spec, resume=resume)
    except SearchBudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        if args.checkpoint:
            save_checkpoint(exc.checkpoint, args.checkpoint)
            print(f"checkpoint written to {args.checkpoint}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w") as fh:
            write_ndjson(outcome.results, fh)
    summary = outcome.summary()
    summary["seed"] = args.seed
    if args.summary:
        with open(args.summary, "w") as fh:
            fh.write(_dump(summary) + "\n")
    if args.json:
        print(_dump(summary))
    else:
        print(f"n = {spec.n}, m in [{spec.m_min}, {spec.m_max if spec.m_max is not None else spec.total_pairs}]")
        print(f"results = {len(outcome.results)}")
        for cls, count in sorted(summary["classes"].items()):
            print(f"  {cls}: {count}")
        for r in outcome.results:
            print(f"m={r.m} class={r.cls} t={r.t} matches={','.join(r.matches) or '-'}")
        print(f"upper bound holds = {summary['upper_bound']['ok']}")
        if summary["small_n_exceptions"]:
            print(f"small-n exceptions = {len(summary['small_n_exceptions'])}")
    return 0 if summary["upper_bound"]["ok"] else 1


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flagtri", description="Flag triangulations of 3-manifolds at desk scale.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inp=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if inp:
            p.add_argument("-i", "--input", help="input file (default: stdin)")

    p = sub.add_parser("construct", help="build a complex or graph")
    p.add_argument("kind", choices=["join", "cycle", "crosspoly", "subdivide", "figure2a", "figure2b", "realize-gamma"])
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--graph", action="store_true", help="print the 1-skeleton instead of facets")
    p.add_argument("--facets", action="store_true", help="realize-gamma: print the complex, not the script")
    p.add_argument("--budget", type=int, default=20000, help="realize-gamma state budget")
    p.add_argument("-o", "--output")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("vectors", help="f/h/gamma conversions and edge bounds")
    p.add_argument("--f")
    p.add_argument("--h")
    p.add_argument("--gamma")
    p.add_argument("--dim", type=int, help="dimension for --gamma")
    p.add_argument("--n", type=int, help="vertex count for bounds")
    p.add_argument("--s", type=int, help="number of parts for the dense bounds")
    common(p, inp=False)
    p.set_defaults(func=cmd_vectors)

    p = sub.add_parser("check", help="run a predicate on a graph or facet list")
    p.add_argument("mode", choices=["flag", "eulerian", "manifold", "fascinating", "ghs-gf2"])
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="joinlike decomposition or stability probe")
    p.add_argument("mode", choices=["joinlike", "stability-probe"])
    p.add_argument("--t-max", type=int, default=2)
    p.add_argument("--gamma", default="1/10")
    p.add_argument("--alpha", default="1/1000")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--restarts", type=int, default=8)
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("search", help="exhaustive dense fascinating graph search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="exact edge count")
    p.add_argument("--m-min", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument("--no-degree-cap", action="store_true")
    p.add_argument("--no-early-exit", action="store_true")
    p.add_argument("--dedupe", choices=["canonical", "labeled"], default="canonical")
    p.add_argument("--chunk-size", type=int, default=256)
    p.add_argument("--threads", type=int, default=default_threads())
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--n-cap", type=int, default=10)
    p.add_argument("--max-states", type=int)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--max-complement-edges", type=int)
    p.add_argument("-o", "--output", help="NDJSON file of results")
    p.add_argument("--summary", help="JSON summary file")
    p.add_argument("--checkpoint", help="where to write a checkpoint if a budget runs out")
    p.add_argument("--resume", help="checkpoint to resume from")
    common(p, inp=False)
    p.set_defaults(func=cmd_search)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GraphError, ComplexError, VectorError, ConstructionError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
