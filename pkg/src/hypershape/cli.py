"""Command-line interface.

Exit codes: 0 success, 2 usage or parse error, 3 unsupported shape,
4 resource limit or degenerate input.
"""

from __future__ import annotations

import argparse
import itertools
import math
import sys
from pathlib import Path

import numpy as np

from hypershape import io, svg
from hypershape.analytic import (
    AnalyticShape,
    SpVariant,
    mc_sp_oracle,
    sp_closed_form,
    sphericity_ball,
)
from hypershape.binning import BinningSpec, PointCloud
from hypershape.errors import (
    DegenerateAxis,
    DimensionTooLarge,
    EmptyImage,
    HypershapeError,
    UnsupportedShape,
)
from hypershape.metrics import FIELDS, analyze
from hypershape.sim import run_ball_experiment
from hypershape.stats import bootstrap_replicates, five_number, summarize

EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_RESOURCE = 4

SUBSETS = {
    "setosa": ("setosa",),
    "versicolor": ("versicolor",),
    "virginica": ("virginica",),
    "not_setosa": ("versicolor", "virginica"),
    "all": ("setosa", "versicolor", "virginica"),
}
DEFAULT_SUBSETS = ("setosa", "versicolor", "not_setosa", "all")


class UsageError(HypershapeError):
    pass


def int_range(text: str) -> list[int]:
    """Parse ``A..B`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or an integer, got {text!r}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def parse_ranges(text: str):
    out = []
    for part in text.split(","):
        try:
            lo, hi = part.split(":")
            out.append((float(lo), float(hi)))
        except ValueError:
            raise UsageError(f"--ranges expects lo:hi,lo:hi,...; bad entry {part!r}")
    return tuple(out)


def parse_shapes(text: str, dims: list[int]) -> list[AnalyticShape]:
    if text.startswith("platonic"):
        _, _, name = text.partition(":")
        names = [name] if name else ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"]
        return [AnalyticShape("platonic", d, nm) for nm in names for d in dims]
    return [AnalyticShape(text, d) for d in dims]


# -- analytic --------------------------------------------------------------

def cmd_analytic(args) -> int:
    dims = args.dims or [3]
    shapes = parse_shapes(args.shape, dims)
    variant = SpVariant(args.variant)
    header = ["shape", "n", "sp", "sp_published", "sp_geometric", "discrepant", "sphericity"]
    if args.oracle:
        header += ["oracle_sp", "oracle_stderr", "oracle_agrees_with"]
    rows = []
    for shape in shapes:
        published = sp_closed_form(shape, SpVariant.PUBLISHED)
        geom = sp_closed_form(shape, SpVariant.GEOMETRIC)
        chosen = published if variant is SpVariant.PUBLISHED else geom
        discrepant = not math.isclose(published, geom, rel_tol=1e-9)
        spher = f"{sphericity_ball(shape.n):.7f}" if shape.kind == "ball" else "NA"
        row = [shape.label, shape.n, f"{chosen:.7f}", f"{published:.7f}", f"{geom:.7f}",
               "yes" if discrepant else "no", spher]
        if args.oracle:
            est = mc_sp_oracle(shape, args.oracle, args.seed)
            agrees = [name for name, val in (("published", published), ("geometric", geom)) if est.within(val)]
            row += [f"{est.estimate:.7f}", f"{est.stderr:.7f}", "+".join(agrees) or "neither"]
        rows.append(row)
    io.write_rows(sys.stdout, header, rows)
    if any(r[5] == "yes" for r in rows):
        print(
            "note: published closed form differs from the circumradius-consistent value "
            "for rows marked discrepant",
            file=sys.stderr,
        )
    return 0


# -- metrics ---------------------------------------------------------------

def load_cloud(path, columns=None, subset=None, species_column="species"):
    """Read selected numeric columns, optionally filtered by a species subset."""
    header, rows = io.read_table(path)
    if subset is not None:
        if subset not in SUBSETS:
            raise UsageError(f"unknown subset {subset!r}; choose from {sorted(SUBSETS)}")
        if species_column not in header:
            raise io.CsvFormatError(f"{path}: --subset needs a {species_column!r} column")
        j = header.index(species_column)
        labels = [r[j].strip() for r in rows]
        unknown = sorted(set(labels) - set(io.IRIS_SPECIES))
        if unknown:
            raise io.CsvFormatError(f"{path}: unknown species {unknown}; expected {list(io.IRIS_SPECIES)}")
        keep = SUBSETS[subset]
        rows = [r for r, lab in zip(rows, labels) if lab in keep]
    if columns is None:
        columns = [h for h in header if h != species_column]
    if not rows:
        raise io.CsvFormatError(f"{path}: no data rows")
    return PointCloud(np.array(io.numeric_columns(path, header, rows, columns)), tuple(columns))


def cmd_metrics(args) -> int:
    columns = args.columns.split(",") if args.columns else None
    cloud = load_cloud(args.input, columns, args.subset, args.species_column)
    ranges = parse_ranges(args.ranges) if args.ranges else None
    header = ["bins"] + list(FIELDS)
    rows = []
    for k in args.bins:
        m = analyze(cloud, BinningSpec(k, ranges))
        rows.append([k] + [getattr(m, f) for f in FIELDS])
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        path = out / "metrics.csv"
        io.write_table(path, header, rows)
        io.write_manifest(path, io.manifest(
            "metrics", input=str(args.input), subset=args.subset, columns=list(cloud.column_names),
            bins=args.bins, ranges=ranges,
        ))
    io.write_rows(sys.stdout, header, rows)
    return 0


# -- simulate-ball -----------------------------------------------------------

BALL_RAW_HEADER = ["dim", "bins", "sample", "sp", "sphericity", "volume", "radius", "surface",
                   "degenerate_radius", "erosion_empty"]
SUMMARY_STATS = ("mean", "q025", "median", "q975")


def _summary_cols(prefix):
    return [f"{prefix}_{s}" for s in SUMMARY_STATS]


def ball_summary_rows(raw):
    rows = []
    for (dim, bins), grp in itertools.groupby(raw, key=lambda r: (r.dim, r.bins)):
        grp = list(grp)
        sp = summarize([r.metrics.sp for r in grp])
        lsp = summarize([math.log(r.metrics.sp) for r in grp])
        sph = summarize([r.metrics.sphericity for r in grp])
        row = [dim, bins, len(grp)]
        for s in (sp, lsp, sph):
            row += [s.mean, s.q025, s.median, s.q975]
        rows.append(row)
    return rows


BALL_SUMMARY_HEADER = ["dim", "bins", "count"] + _summary_cols("sp") + _summary_cols("log_sp") + _summary_cols("sphericity")


def ball_figures(summary_path: Path) -> dict[str, str]:
    """Render the three sweep figures from the summary CSV alone."""
    header, rows = io.read_table(summary_path)
    col = {h: i for i, h in enumerate(header)}
    figures = {}
    panels = (
        ("sphericity", 1.0, "Hyper-sphericity"),
        ("sp", 1.0, "Hyper-SP"),
        ("log_sp", 0.0, "log(hyper-SP)"),
    )
    for prefix, truth, label in panels:
        series = []
        for dim, grp in itertools.groupby(rows, key=lambda r: int(r[col["dim"]])):
            grp = list(grp)
            xs = [int(r[col["bins"]]) for r in grp]
            vals = [[float(r[col[f"{prefix}_{s}"]]) for r in grp] for s in ("mean", "q025", "q975")]
            series.append((f"n = {dim}", xs, *vals))
        figures[f"ball_{prefix}.svg"] = svg.line_band_chart(
            series, truth, f"{label}: simulated n-balls", "bins", label
        )
    return figures


def cmd_simulate_ball(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    raw = run_ball_experiment(args.dims, args.bins, args.samples, args.points, args.seed, jobs=args.jobs)
    record = io.manifest(
        "simulate-ball", dims=args.dims, bins=args.bins, samples=args.samples, points=args.points,
        seed=args.seed, seed_derivation="SeedSequence([seed, dim, bins, sample])",
    )
    raw_path = out / "ball_results.csv"
    io.write_table(raw_path, BALL_RAW_HEADER, (
        [r.dim, r.bins, r.sample, r.metrics.sp, r.metrics.sphericity, r.metrics.volume,
         r.metrics.radius, r.metrics.surface, r.metrics.degenerate_radius, r.metrics.erosion_empty]
        for r in raw
    ))
    io.write_manifest(raw_path, record)
    summary_path = out / "ball_summary.csv"
    io.write_table(summary_path, BALL_SUMMARY_HEADER, ball_summary_rows(raw))
    io.write_manifest(summary_path, record)
    written = [raw_path, summary_path]
    if raw:
        for name, body in ball_figures(summary_path).items():
            path = out / name
            path.write_text(body)
            io.write_manifest(path, dict(record, derived_from=summary_path.name))
            written.append(path)
    for p in written:
        print(p)
    return 0


# -- iris ------------------------------------------------------------------

IRIS_TABLE_HEADER = [
    "subset", "bins", "replicates",
    "sp_q025", "sp_median", "sp_q975", "sp_mean",
    "sphericity_q025", "sphericity_median", "sphericity_q975", "sphericity_mean",
    "full_sp", "full_sphericity", "full_radius", "full_erosion_empty",
]
IRIS_BOX_HEADER = ["subset", "bins", "metric", "min", "q1", "median", "q3", "max"]


def iris_figures(table_path: Path, box_path: Path) -> dict[str, str]:
    header, rows = io.read_table(table_path)
    col = {h: i for i, h in enumerate(header)}
    figures = {}
    for metric, label in (("sp", "log(hyper-SP)"), ("sphericity", "log(hyper-sphericity)")):
        groups = []
        for subset, grp in itertools.groupby(rows, key=lambda r: r[col["subset"]]):
            grp = list(grp)
            xs = [int(r[col["bins"]]) for r in grp]
            vals = [[math.log(float(r[col[f"{metric}_{s}"]])) for r in grp] for s in ("mean", "q025", "q975")]
            groups.append((subset, xs, *vals))
        figures[f"iris_log_{metric}.svg"] = svg.interval_chart(
            groups, f"Iris bootstrap: {label}, 95% interval", "bins", label
        )
    header, rows = io.read_table(box_path)
    col = {h: i for i, h in enumerate(header)}
    for metric, label in (("sp", "hyper-SP"), ("sphericity", "hyper-sphericity")):
        sel = [r for r in rows if r[col["metric"]] == metric]
        groups = []
        for subset, grp in itertools.groupby(sel, key=lambda r: r[col["subset"]]):
            grp = list(grp)
            xs = [int(r[col["bins"]]) for r in grp]
            boxes = [tuple(float(r[col[k]]) for k in ("min", "q1", "median", "q3", "max")) for r in grp]
            groups.append((subset, xs, boxes))
        figures[f"iris_box_{metric}.svg"] = svg.box_chart(
            groups, f"Iris bootstrap distribution: {label}", "bins", label
        )
    return figures


def cmd_iris(args) -> int:
    path = args.input or io.bundled_iris()
    header, _ = io.read_table(path)
    missing = [c for c in io.IRIS_FEATURES + ("species",) if c not in header]
    if missing:
        raise io.CsvFormatError(f"{path}: Iris schema needs columns {missing}")
    subsets = args.subsets.split(",") if args.subsets else list(DEFAULT_SUBSETS)
    for s in subsets:
        if s not in SUBSETS:
            raise UsageError(f"unknown subset {s!r}; choose from {sorted(SUBSETS)}")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    table, boxes = [], []
    for s in subsets:
        cloud = load_cloud(path, list(io.IRIS_FEATURES), s)
        for k in args.bins:
            spec = BinningSpec(k)
            full = analyze(cloud, spec)
            reps = bootstrap_replicates(cloud, spec, args.replicates, args.seed)
            sp = summarize([m.sp for m in reps])
            sph = summarize([m.sphericity for m in reps])
            table.append([s, k, args.replicates, sp.q025, sp.median, sp.q975, sp.mean,
                          sph.q025, sph.median, sph.q975, sph.mean,
                          full.sp, full.sphericity, full.radius, full.erosion_empty])
            for metric in ("sp", "sphericity"):
                f = five_number([getattr(m, metric) for m in reps])
                boxes.append([s, k, metric, f.minimum, f.q1, f.median, f.q3, f.maximum])
    record = io.manifest(
        "iris", input=str(path), subsets=subsets, bins=args.bins, replicates=args.replicates,
        seed=args.seed, seed_derivation="SeedSequence([seed, replicate])",
    )
    table_path = out / "iris_table.csv"
    box_path = out / "iris_boxes.csv"
    io.write_table(table_path, IRIS_TABLE_HEADER, table)
    io.write_manifest(table_path, record)
    io.write_table(box_path, IRIS_BOX_HEADER, boxes)
    io.write_manifest(box_path, record)
    written = [table_path, box_path]
    for name, body in iris_figures(table_path, box_path).items():
        p = out / name
        p.write_text(body)
        io.write_manifest(p, dict(record, derived_from=[table_path.name, box_path.name]))
        written.append(p)
    for p in written:
        print(p)
    return 0


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypershape", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analytic", help="closed-form SP and sphericity")
    a.add_argument("--shape", required=True,
                   help="ball, cube, simplex, orthoplex, platonic or platonic:NAME")
    a.add_argument("--dims", type=int_range, help="dimension or range A..B (default 3)")
    a.add_argument("--variant", choices=[v.value for v in SpVariant], default="published")
    a.add_argument("--oracle", type=int, default=0, metavar="N",
                   help="also estimate SP by Monte Carlo with N samples")
    a.add_argument("--seed", type=int, default=0)
    a.set_defaults(func=cmd_analytic)

    m = sub.add_parser("metrics", help="SP and sphericity of a CSV point cloud")
    m.add_argument("--input", required=True, type=Path)
    m.add_argument("--bins", type=int_range, required=True, help="bins or range A..B")
    m.add_argument("--columns", help="comma-separated numeric columns (default: all but species)")
    m.add_argument("--subset", help=f"species subset: {', '.join(SUBSETS)}")
    m.add_argument("--species-column", default="species")
    m.add_argument("--ranges", help="explicit per-axis ranges lo:hi,lo:hi,...")
    m.add_argument("--out", type=Path, help="also write metrics.csv and its manifest here")
    m.set_defaults(func=cmd_metrics)

    s = sub.add_parser("simulate-ball", help="bin sweep over simulated uniform n-balls")
    s.add_argument("--dims", type=int_range, default=int_range("2..5"))
    s.add_argument("--bins", type=int_range, default=int_range("4..14"))
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--points", type=int, default=100_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out", type=Path, required=True)
    s.set_defaults(func=cmd_simulate_ball)

    i = sub.add_parser("iris", help="bootstrap study over Iris subsets")
    i.add_argument("--input", type=Path, help="Iris CSV (default: bundled copy)")
    i.add_argument("--subsets", help="comma-separated subsets (default: setosa,versicolor,not_setosa,all)")
    i.add_argument("--bins", type=int_range, default=int_range("4..14"))
    i.add_argument("--replicates", type=int, default=1000)
    i.add_argument("--seed", type=int, default=0)
    i.add_argument("--out", type=Path, required=True)
    i.set_defaults(func=cmd_iris)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedShape as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (DimensionTooLarge, DegenerateAxis, EmptyImage) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except HypershapeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
