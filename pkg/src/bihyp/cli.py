"""Command-line entry point.

Machine-readable JSON goes to standard output and a short human summary to
standard error.  Exit status: 0 on success (or when a sweep's predicate held
everywhere), 2 when a sweep found a counterexample or a verification claim
failed, 1 on errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from itertools import combinations
from pathlib import Path

from . import __version__, io
from .analysis import PreconditionError, all_bounds, identify, is_minimal_uncolorable
from .constructions import FAMILIES, ConstructionSpec, ParameterError
from .core import BiHypergraph, ModelError
from .enumeration.store import ContradictionError, VerdictStore
from .enumeration.sweep import PREDICATES, SweepSpec, SweepTimeout, run_sweep
from .enumeration.sweep import ParameterError as SweepParameterError
from .solver import decide_colorable, upper_chromatic_number
from .suite import SUITES, run_suite


EXIT_OK, EXIT_ERROR, EXIT_FOUND = 0, 1, 2


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, separators=(",", ":"))
    sys.stdout.write("\n")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_gen(args) -> int:
    params = {k: getattr(args, k) for k in ("n", "l", "m", "k") if getattr(args, k) is not None}
    h = ConstructionSpec(args.family, params).build()
    if args.out:
        io.write(h, args.out)
        _say(f"wrote {args.family}: {h.n} vertices, {h.size} edges to {args.out}")
    else:
        sys.stdout.write(io.dumps(h, args.format))
    return EXIT_OK


def cmd_solve(args) -> int:
    h = io.read(args.input)
    verdict = decide_colorable(h, args.max_colors)
    doc = verdict.to_json()
    if args.chibar:
        doc["chibar"] = upper_chromatic_number(h).to_json()
    if args.minimal:
        doc["minimal"] = is_minimal_uncolorable(h, args.jobs).minimal
    _emit(doc)
    _say(f"{args.input}: {verdict.status} ({verdict.nodes} nodes)")
    return EXIT_OK


def cmd_chibar(args) -> int:
    cb = upper_chromatic_number(io.read(args.input))
    _emit(cb.to_json())
    _say(f"{args.input}: upper chromatic number {cb.value}")
    return EXIT_OK


def cmd_minimal(args) -> int:
    cert = is_minimal_uncolorable(io.read(args.input), args.jobs)
    _emit(cert.to_json())
    _say(f"{args.input}: {'minimal uncolorable' if cert.minimal else 'not minimal uncolorable'}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    reports = all_bounds(io.read(args.input), args.r)
    _emit([rep.to_json() for rep in reports])
    for rep in reports:
        _say(f"{rep.name}: {rep.measured} {rep.sense} {rep.threshold:.4f} -> {rep.conclusion}")
    return EXIT_OK


def cmd_reduce(args) -> int:
    ident = identify(io.read(args.input), args.u, args.v)
    if args.out:
        io.write(ident.hypergraph, args.out)
    _emit(
        {
            "hypergraph": io.to_dict(ident.hypergraph),
            "vertex_map": list(ident.vertex_map),
            "merged_duplicates": ident.merged_duplicates,
            "dropped_supersets": ident.dropped_supersets,
        }
    )
    _say(f"identified {args.u} and {args.v}: {ident.hypergraph.n} vertices, {ident.hypergraph.size} edges")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    spec = SweepSpec(
        n=args.n,
        r=args.r,
        max_edges=args.max_edges,
        min_edges=args.min_edges,
        min_degree=args.min_degree,
        all_pairs_adjacent=args.all_pairs_adjacent,
        connected=args.connected,
        predicate=args.predicate,
        shards=args.shards,
        shard_depth=args.shard_depth,
    )
    store = VerdictStore(args.store) if args.store else None
    summary = run_sweep(spec, store, jobs=args.jobs, time_budget=args.time_budget)
    _emit(summary.to_json())
    _say(
        f"{spec.id}: {summary.classes} classes, {summary.evaluated} evaluated, "
        f"{len(summary.counterexamples)} counterexamples in {summary.elapsed:.1f}s"
    )
    return EXIT_OK if summary.held else EXIT_FOUND


def cmd_verify(args) -> int:
    def progress(res):
        _say(f"[{res.status:4}] claim {res.claim}: {res.title} ({res.elapsed:.1f}s) - {res.details}")

    result = run_suite(
        args.suite,
        jobs=args.jobs,
        store_dir=args.store_dir,
        seed=args.seed,
        n7_budget=args.n7_budget,
        progress=progress,
    )
    doc = result.to_json()
    out = Path(args.out) if args.out else Path(args.store_dir) / f"suite-{args.suite}.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(doc, indent=2) + "\n")
    _emit(doc)
    return EXIT_OK if result.ok else EXIT_FOUND


def cmd_probe(args) -> int:
    """Random search for small uncolorable uniform instances.  Unbounded by
    design: ``--iterations 0`` runs until interrupted."""
    rng = random.Random(args.seed)
    pool = list(combinations(range(args.n), args.r))
    if args.edges > len(pool):
        raise ParameterError(f"only {len(pool)} possible edges")
    found = []
    i = 0
    start = time.time()
    try:
        while args.iterations == 0 or i < args.iterations:
            i += 1
            h = BiHypergraph(args.n, rng.sample(pool, args.edges))
            if not decide_colorable(h).colorable:
                found.append([list(e) for e in h.edges])
                _say(f"iteration {i}: uncolorable instance found")
                if len(found) >= args.stop_after:
                    break
    except KeyboardInterrupt:
        _say("interrupted")
    _emit({"n": args.n, "r": args.r, "edges": args.edges, "iterations": i, "uncolorable": found,
           "elapsed_s": round(time.time() - start, 3)})
    return EXIT_FOUND if found else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bihyp", allow_abbrev=False, description="Exact coloring of mixed hypergraphs and bi-hypergraphs.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--seed", type=int, default=0, help="seed for randomized inputs")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="build a named construction")
    g.add_argument("--family", required=True, choices=FAMILIES)
    for name in ("n", "l", "m", "k"):
        g.add_argument(f"--{name}", type=int)
    g.add_argument("--out", help="output path; .json selects JSON, anything else the edge list")
    g.add_argument("--format", choices=("json", "txt"), default="json", help="format when writing to stdout")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="decide colorability")
    s.add_argument("input")
    s.add_argument("--chibar", action="store_true", help="also compute the upper chromatic number")
    s.add_argument("--minimal", action="store_true", help="also test minimal uncolorability")
    s.add_argument("--max-colors", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("chibar", help="upper chromatic number")
    c.add_argument("input")
    c.set_defaults(func=cmd_chibar)

    mn = sub.add_parser("minimal", help="test minimal uncolorability")
    mn.add_argument("input")
    mn.add_argument("--jobs", type=int, default=1)
    mn.set_defaults(func=cmd_minimal)

    b = sub.add_parser("bounds", help="sufficient conditions for colorability")
    b.add_argument("input")
    b.add_argument("--r", type=int, help="edge size, needed for edgeless inputs")
    b.set_defaults(func=cmd_bounds)

    rd = sub.add_parser("reduce", help="identify two non-adjacent vertices")
    rd.add_argument("input")
    rd.add_argument("--u", type=int, required=True)
    rd.add_argument("--v", type=int, required=True)
    rd.add_argument("--out")
    rd.set_defaults(func=cmd_reduce)

    e = sub.add_parser("enumerate", help="sweep all isomorphism classes")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--r", type=int, default=3)
    e.add_argument("--max-edges", type=int, required=True)
    e.add_argument("--min-edges", type=int, default=0)
    e.add_argument("--min-degree", type=int, default=0)
    e.add_argument("--all-pairs-adjacent", action="store_true")
    e.add_argument("--connected", action="store_true")
    e.add_argument("--predicate", choices=sorted(PREDICATES), default="colorable")
    e.add_argument("--shards", type=int, default=1)
    e.add_argument("--shard-depth", type=int, default=3)
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("--store", help="verdict store directory")
    e.add_argument("--time-budget", type=float, help="seconds")
    e.set_defaults(func=cmd_enumerate)

    vf = sub.add_parser("verify", help="run the acceptance suite")
    vf.add_argument("--suite", choices=SUITES, default="quick")
    vf.add_argument("--jobs", type=int, default=1)
    vf.add_argument("--store-dir", default="bihyp-store")
    vf.add_argument("--out", help="SuiteResult path (default: <store-dir>/suite-<suite>.json)")
    vf.add_argument("--n7-budget", type=float, default=3600.0, help="seconds for the order-7 sweep before falling back")
    vf.set_defaults(func=cmd_verify)

    pr = sub.add_parser("probe", help="random search for uncolorable uniform instances (unbounded)")
    pr.add_argument("--n", type=int, default=10)
    pr.add_argument("--r", type=int, default=4)
    pr.add_argument("--edges", type=int, default=27)
    pr.add_argument("--iterations", type=int, default=1000, help="0 runs until interrupted")
    pr.add_argument("--stop-after", type=int, default=1)
    pr.set_defaults(func=cmd_probe)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except io.ParseError as exc:
        _say(f"parse error: {exc}")
    except (ModelError, ParameterError, SweepParameterError, PreconditionError) as exc:
        _say(f"error: {exc}")
    except (ContradictionError, SweepTimeout, OSError) as exc:
        _say(f"error: {exc}")
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
