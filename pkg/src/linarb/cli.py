"""Command-line interface: generation, decomposition, verification,
embedding, oracles, and the sweep harness feeding the report tool.

Exit codes: 0 success, 1 domain error (infeasible instance, exhausted
search, invalid input) with a one-line diagnostic on stderr, 2 usage
error.  All outputs are UTF-8; JSON files end with a newline.  Every
subcommand is deterministic given its flags and seed; sweep timing
measurements are opt-in (--timings) so that default output files are
byte-reproducible.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import sys
import time

from . import __version__
from .embed import EmbedError, embed
from .factorize import two_factorize
from .flow import dump_network
from .forest import (
    DecomposeOptions,
    PipelineError,
    certificate_to_json,
    decompose,
)
from .generators import (
    FAMILIES,
    NAMED_GRAPHS,
    GenerationError,
    GenSpec,
    generate,
    random_regular_with_girth,
)
from .graph import Graph, GraphFormatError, girth, parse_graph, serialize_graph
from .graph import graph_digest
from .transversal import RegimeError, build_network
from .verify import LowerBoundOnly, oracle_la, verify_certificate

SWEEP_VERSION = 1

_DOMAIN_ERRORS = (
    GraphFormatError,
    GenerationError,
    RegimeError,
    EmbedError,
    PipelineError,
    ValueError,
    OSError,
    json.JSONDecodeError,
)

# Acceptance-scale sweep preset: k in {1,2,3}, n <= 40.
PRESETS = {
    "acceptance": [
        [12, 1, 3],
        [24, 1, 12],
        [40, 1, 40],
        [20, 2, 3],
        [30, 2, 4],
        [40, 2, 4],
        [24, 3, 3],
        [40, 3, 3],
    ],
}


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _write_json(path: str | None, obj) -> None:
    _write_text(path, json.dumps(obj, indent=2) + "\n")


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _csv_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")


def _cmd_gen(args) -> int:
    family = args.family.replace("-", "_")
    spec = GenSpec(
        family=family,
        n=args.n,
        k=args.k,
        g_min=args.g_min,
        parts=tuple(args.parts) if args.parts else (0, 0),
        shifts=tuple(args.shifts) if args.shifts else (),
        name=args.name or "",
        seed=args.seed,
        retries=args.retries,
    )
    if family == "random_regular" and args.hint_out:
        g, hint = random_regular_with_girth(
            args.n, args.k, args.g_min, args.seed, args.retries
        )
        _write_json(args.hint_out, {"version": "1", "factors": hint})
    else:
        g = generate(spec)
    _write_text(args.output, serialize_graph(g))
    return 0


def _cmd_girth(args) -> int:
    value = girth(_load_graph(args.graph))
    print("inf" if value == float("inf") else int(value))
    return 0


def _cmd_factorize(args) -> int:
    g = _load_graph(args.graph)
    tf = two_factorize(g, args.k)
    obj = {
        "version": "1",
        "k": tf.k,
        "factors": [[list(c) for c in f.cycles] for f in tf.factors],
    }
    if args.output:
        _write_json(args.output, obj)
    summary = ", ".join(
        f"factor {i}: {len(f.cycles)} cycle(s)" for i, f in enumerate(tf.factors)
    )
    print(summary)
    return 0


def _cmd_decompose(args) -> int:
    g = _load_graph(args.graph)
    hint = None
    if args.hint:
        hint = json.loads(_read_text(args.hint))["factors"]
    opts = DecomposeOptions(
        strict=args.strict,
        time_budget=args.time_budget / 1000.0,
        c_max=args.c_max,
        hint=hint,
    )
    cert = decompose(g, args.k, opts)
    if args.dump_network:
        tf = cert.factorization
        sys.stderr.write(dump_network(build_network(g, tf, cert.regime.delta)))
    if args.output:
        _write_json(args.output, certificate_to_json(g, cert))
    print(
        f"claimed <= {cert.claimed_bound}, achieved {cert.achieved_count}, "
        f"verified {'yes' if cert.verified else 'no'}"
    )
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    cert = json.loads(_read_text(args.certificate))
    report = verify_certificate(g, cert)
    print(report)
    return 0 if report.overall else 1


def _cmd_oracle_la(args) -> int:
    g = _load_graph(args.graph)
    cache: dict[str, int] = {}
    digest = graph_digest(g)
    if args.cache:
        try:
            cache = json.loads(_read_text(args.cache))
        except FileNotFoundError:
            cache = {}
        if digest in cache:
            print(cache[digest])
            return 0
    value = oracle_la(g, args.budget / 1000.0)
    if isinstance(value, LowerBoundOnly):
        print(f">= {value.value}")
        return 0
    print(value)
    if args.cache:
        cache[digest] = value
        _write_json(args.cache, cache)
    return 0


def _cmd_embed(args) -> int:
    h = _load_graph(args.graph)
    eg = embed(h, args.delta, args.girth, layers=args.layers)
    _write_text(args.output, serialize_graph(eg.graph))
    if args.output:
        meta = {
            "version": "1",
            "layer_count": eg.layer_count,
            "host_degree": eg.spec.host_degree,
            "girth_target": eg.spec.girth_target,
            "base_vertex_map": {str(i): i * eg.layer_count for i in range(h.n)},
            "shifts": {str(v): list(s) for v, s in sorted(eg.spec.shifts.items())},
        }
        _write_json(args.output + ".meta.json", meta)
    print(
        f"layers {eg.layer_count}, host vertices {eg.graph.n}, "
        f"{eg.spec.host_degree}-regular, girth >= {eg.spec.girth_target} verified"
    )
    return 0


def _sweep_task(task: tuple) -> dict:
    """One (cell, seed) instance; module-level so process pools can pick it up."""
    cell_index, n, k, g_min, seed, opt_dict, timings = task
    record = {
        "n": n,
        "k": k,
        "g_min": g_min,
        "seed": seed,
        "girth": None,
        "regime_tag": None,
        "delta": None,
        "claimed_bound": None,
        "achieved_count": None,
        "verified": False,
        "status": "ok",
        "runtime_ms": None,
        "flags": [],
    }
    start = time.monotonic()
    try:
        g, hint = random_regular_with_girth(
            n, k, g_min, seed, opt_dict.get("retries", 10_000)
        )
    except GenerationError as exc:
        record["status"] = "gen_failed"
        record["flags"] = [str(exc)]
        return record
    try:
        cert = decompose(
            g,
            k,
            DecomposeOptions(
                strict=opt_dict.get("strict", False),
                time_budget=opt_dict.get("time_budget_ms", 10_000) / 1000.0,
                c_max=opt_dict.get("c_max", 64),
                hint=hint,
            ),
        )
    except (PipelineError, RegimeError, ValueError) as exc:
        record["status"] = "error"
        record["flags"] = [str(exc)]
        return record
    record["girth"] = cert.girth
    record["regime_tag"] = cert.regime.tag
    record["delta"] = cert.regime.delta
    record["claimed_bound"] = cert.claimed_bound
    record["achieved_count"] = cert.achieved_count
    record["verified"] = cert.verified
    record["flags"] = list(cert.flags)
    if cert.flags or not cert.verified:
        record["status"] = "flagged"
    if timings:
        record["runtime_ms"] = int((time.monotonic() - start) * 1000)
    return record


def _cmd_sweep(args) -> int:
    spec = json.loads(_read_text(args.spec))
    if "preset" in spec:
        name = spec["preset"]
        if name not in PRESETS:
            raise ValueError(f"unknown sweep preset {name!r}")
        grid = PRESETS[name]
    else:
        grid = spec["grid"]
    seeds = int(spec.get("seeds", 1))
    if seeds < 1:
        raise ValueError("seeds must be positive")
    options = spec.get("options", {})
    for cell in grid:
        n, _, g_min = cell
        if g_min > n:
            raise ValueError(f"cell {cell}: g_min exceeds n")
    tasks = [
        (ci, int(n), int(k), int(g_min), seed, options, args.timings)
        for ci, (n, k, g_min) in enumerate(grid)
        for seed in range(seeds)
    ]
    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_sweep_task, tasks))
    else:
        records = [_sweep_task(t) for t in tasks]
    _write_json(args.output, {"version": SWEEP_VERSION, "records": records})
    flagged = sum(1 for r in records if r["status"] != "ok")
    print(f"{len(records)} record(s), {flagged} not ok")
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="linarb",
        description="Constructive linear-arboricity bounds with verifiable "
        "certificates for even-regular graphs.",
    )
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph in edge-list format")
    p.add_argument("--family", required=True,
                   choices=[f.replace("_", "-") for f in FAMILIES])
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--g-min", type=int, default=3, dest="g_min")
    p.add_argument("--parts", type=_csv_ints, default=None,
                   help="complete-bipartite sizes, e.g. 4,4")
    p.add_argument("--shifts", type=_csv_ints, default=None,
                   help="circulant shifts, e.g. 1,5")
    p.add_argument("--name", choices=NAMED_GRAPHS, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=10_000)
    p.add_argument("--hint-out", default=None, dest="hint_out",
                   help="write the random family's known factorization")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("girth", help="print the girth of a graph")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_girth)

    p = sub.add_parser("factorize", help="split a 2k-regular graph into k 2-factors")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser("decompose", help="full pipeline; writes a certificate")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--strict", action="store_true",
                   help="skip the flow solver; strict search only")
    p.add_argument("--time-budget", type=int, default=10_000, dest="time_budget",
                   help="per-stage search budget in milliseconds")
    p.add_argument("--c-max", type=int, default=64, dest="c_max")
    p.add_argument("--hint", default=None,
                   help="factorization hint JSON from gen --hint-out")
    p.add_argument("--dump-network", action="store_true", dest="dump_network",
                   help="dump the selection network arc list to stderr")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="independently re-check a certificate")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle-la", help="exact linear arboricity (desk scale)")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=30_000,
                   help="time budget in milliseconds")
    p.add_argument("--cache", default=None,
                   help="JSON cache file keyed by graph digest")
    p.set_defaults(func=_cmd_oracle_la)

    p = sub.add_parser("embed", help="embed into a regular host of given girth")
    p.add_argument("graph")
    p.add_argument("--delta", type=int, required=True,
                   help="host degree (at least the input's max degree)")
    p.add_argument("--girth", type=int, required=True,
                   help="girth floor for the host")
    p.add_argument("--layers", type=int, default=None,
                   help="starting layer count (even); default 2*girth*(delta+1)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("sweep", help="run a (n, k, g_min) x seeds grid")
    p.add_argument("--spec", required=True, help="sweep spec JSON")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel instances (per-instance work stays sequential)")
    p.add_argument("--timings", action="store_true",
                   help="record wall-clock runtime_ms (breaks byte-reproducibility)")
    p.set_defaults(func=_cmd_sweep)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
