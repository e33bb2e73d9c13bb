"""Tables and figures for the girth-capacity trade-off.

Outputs per results file: one CSV summary (a row per regime tag), one
vector figure, and one raster figure of girth versus extra forests beyond
k, with the theorem step function overlaid per k series.  Filenames carry
a digest of the input so reruns on different sweeps never collide.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import os
import sys

import matplotlib

matplotlib.use("Agg")
# stable SVG element ids, so identical inputs give identical bytes
matplotlib.rcParams["svg.hashsalt"] = "linarb-report"

import matplotlib.pyplot as plt

SUPPORTED_VERSIONS = (1,)

REQUIRED_FIELDS = (
    "n",
    "k",
    "g_min",
    "seed",
    "girth",
    "regime_tag",
    "delta",
    "claimed_bound",
    "achieved_count",
    "verified",
    "status",
)

DEFAULT_C_MAX = 64


class RenderError(ValueError):
    """Schema mismatch or unusable results content."""


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def expected_extra_forests(k: int, girth: int, c_max: int = DEFAULT_C_MAX) -> int | None:
    """Theorem step function: extra forests beyond k claimable at this girth.

    Recomputed here on purpose; the renderer must not trust the sweep's own
    regime planner.  Cheapest family wins: 1 at girth >= 2k, 2 at >= k, 3
    at >= k/2, 5 at >= k/4, and ceil((3c+2)/2) for c = ceil(2k/girth).
    None when even the general family is out of range (c > c_max).
    """
    options = []
    if girth >= 2 * k:
        options.append(1)
    if girth >= k:
        options.append(2)
    if 2 * girth >= k:
        options.append(3)
    if 4 * girth >= k:
        options.append(5)
    c = _ceil_div(2 * k, girth)
    if c <= c_max:
        options.append(_ceil_div(3 * c + 2, 2))
    return min(options) if options else None


def load_results(path: str) -> list[dict]:
    """Load and validate a sweep results file; returns its records."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or data.get("version") not in SUPPORTED_VERSIONS:
        raise RenderError(
            f"unrecognized results schema version {data.get('version')!r}"
            if isinstance(data, dict)
            else "results file is not an object with a version field"
        )
    records = data.get("records")
    if not isinstance(records, list):
        raise RenderError("results file has no records array")
    if not records:
        raise RenderError("empty results")
    for i, rec in enumerate(records):
        missing = [f for f in REQUIRED_FIELDS if f not in rec]
        if missing:
            raise RenderError(f"record {i} missing fields: {', '.join(missing)}")
    return records


def _digest(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()[:12]


def summarize(records: list[dict]) -> list[dict]:
    """Per-regime rows: count, claimed t, max extra achieved, pass rate,
    and how many records disagree with the recomputed step function."""
    groups: dict[str, list[dict]] = {}
    for rec in records:
        groups.setdefault(str(rec["regime_tag"]), []).append(rec)
    rows = []
    for tag in sorted(groups):
        recs = groups[tag]
        usable = [r for r in recs if r["claimed_bound"] is not None]
        mismatches = 0
        for r in usable:
            expect = expected_extra_forests(r["k"], r["girth"])
            if expect is None or r["claimed_bound"] - r["k"] != expect:
                mismatches += 1
        claimed_ts = {r["claimed_bound"] - r["k"] for r in usable}
        rows.append(
            {
                "regime_tag": tag,
                "count": len(recs),
                "claimed_t": min(claimed_ts) if claimed_ts else "",
                "max_extra_achieved": max(
                    (r["achieved_count"] - r["k"] for r in usable), default=""
                ),
                "verified_rate": round(
                    sum(1 for r in recs if r["verified"]) / len(recs), 4
                ),
                "step_mismatches": mismatches,
            }
        )
    return rows


def _write_table(rows: list[dict], path: str) -> None:
    fields = [
        "regime_tag",
        "count",
        "claimed_t",
        "max_extra_achieved",
        "verified_rate",
        "step_mismatches",
    ]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)


def _plot(records: list[dict], vector_path: str, raster_path: str) -> None:
    usable = [r for r in records if r["claimed_bound"] is not None]
    ks = sorted({r["k"] for r in usable})
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    cmap = plt.get_cmap("tab10")
    for idx, k in enumerate(ks):
        color = cmap(idx % 10)
        pts = [(r["girth"], r["achieved_count"] - r["k"]) for r in usable if r["k"] == k]
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        ax.scatter(xs, ys, s=28, color=color, alpha=0.8, label=f"k={k} achieved")
        g_max = max(xs) if xs else 2 * k
        grid = list(range(3, max(g_max, 2 * k) + 2))
        step = [expected_extra_forests(k, g) for g in grid]
        ax.step(grid, step, where="post", color=color, linewidth=1.2,
                alpha=0.6, linestyle="--", label=f"k={k} claimable")
    ax.set_xlabel("girth")
    ax.set_ylabel("extra forests beyond k")
    ax.set_title("Girth vs extra linear forests")
    ax.grid(True, linewidth=0.3, alpha=0.5)
    ax.legend(fontsize=8)
    fig.tight_layout()
    # drop the embedded creation date so reruns are byte-stable
    fig.savefig(vector_path, metadata={"Date": None})
    fig.savefig(raster_path, dpi=150)
    plt.close(fig)


def render(results_file: str, out_dir: str) -> dict[str, str]:
    """Emit the summary table and both figures; returns the output paths."""
    records = load_results(results_file)
    os.makedirs(out_dir, exist_ok=True)
    stem = _digest(results_file)
    paths = {
        "table": os.path.join(out_dir, f"summary_{stem}.csv"),
        "vector": os.path.join(out_dir, f"tradeoff_{stem}.svg"),
        "raster": os.path.join(out_dir, f"tradeoff_{stem}.png"),
    }
    _write_table(summarize(records), paths["table"])
    _plot(records, paths["vector"], paths["raster"])
    return paths


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="linarb-report",
        description="Render linarb sweep results into a summary table and "
        "girth-vs-bound figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render one results file")
    p.add_argument("results", help="sweep results JSON")
    p.add_argument("-o", "--out-dir", default=".", dest="out_dir")
    args = parser.parse_args(argv)
    try:
        paths = render(args.results, args.out_dir)
    except (RenderError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for kind, path in paths.items():
        print(f"{kind}: {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
