"""Seeded benchmark harness and statistics reporting.

A flat key=value config file names either a synthetic family (topology,
vertex count, horizon) or a dataset edge list, plus the color counts to
sweep and how many seeded runs each gets.  Per (color count, seed) one
instance is built and solved by ctpls; rows aggregate min/max/mean/
sample-SD of the returned color counts and the mean solve time, the
same shape as the experiment tables this mirrors.
"""

from __future__ import annotations

import concurrent.futures
import csv
import functools
import io as _io
import os
import statistics
import time
from dataclasses import dataclass, field
from typing import IO, Optional, Union

from . import io as gio
from .generate import (
    SynthConfig,
    Topology,
    assign_random_colors,
    gen_synthetic,
    parse_topology,
    yes_op_transform,
)
from .graph import ColoredTemporalGraph, InputError
from .heuristic import ctpls

WORKERS_ENV = "CTPLS_WORKERS"


@dataclass(frozen=True)
class BenchConfig:
    """One benchmark campaign.

    Synthetic mode: topology + n_vertices + horizon.  Dataset mode:
    dataset path (+ variant "no-op" or "yes-op").  colors lists the |C|
    values to sweep; each gets `seeds` runs seeded seed_base + index.
    """

    label: str
    colors: tuple[int, ...]
    seeds: int
    seed_base: int
    topology: Optional[Topology] = None
    n_vertices: int = 500
    horizon: int = 90
    dataset: Optional[str] = None
    variant: str = "no-op"

    @property
    def synthetic(self) -> bool:
        return self.topology is not None


_KEYS = {
    "label", "colors", "seeds", "seed_base", "topology",
    "n_vertices", "horizon", "dataset", "variant",
}


def parse_bench_config(source: gio.Source) -> BenchConfig:
    """Flat key=value text -> BenchConfig.

    Keys: topology OR dataset (exactly one), colors (comma list), seeds,
    seed_base, and optionally label, n_vertices, horizon, variant.
    """
    raw: dict[str, str] = {}
    text = source.read() if hasattr(source, "read") else open(source).read()
    for ln, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not value:
            raise InputError(f"line {ln}: expected key=value, got {line!r}")
        if key not in _KEYS:
            raise InputError(f"line {ln}: unknown key {key!r}")
        if key in raw:
            raise InputError(f"line {ln}: duplicate key {key!r}")
        raw[key] = value

    if ("topology" in raw) == ("dataset" in raw):
        raise InputError("config needs exactly one of topology=, dataset=")
    try:
        colors = tuple(int(c) for c in raw["colors"].split(","))
        seeds = int(raw.get("seeds", "20"))
        seed_base = int(raw.get("seed_base", "0"))
        n_vertices = int(raw.get("n_vertices", "500"))
        horizon = int(raw.get("horizon", "90"))
    except KeyError as missing:
        raise InputError(f"config misses required key {missing}") from None
    except ValueError as bad:
        raise InputError(f"bad numeric value in config: {bad}") from None
    if not colors or any(c < 1 for c in colors):
        raise InputError(f"colors must be positive, got {colors}")
    if seeds < 1:
        raise InputError(f"seeds must be >= 1, got {seeds}")
    variant = raw.get("variant", "no-op")
    if variant not in ("no-op", "yes-op"):
        raise InputError(f"variant must be no-op or yes-op, got {variant!r}")
    topology = parse_topology(raw["topology"]) if "topology" in raw else None
    label = raw.get(
        "label",
        topology.spec_string() if topology else
        os.path.basename(raw["dataset"]))
    return BenchConfig(
        label=label,
        colors=colors,
        seeds=seeds,
        seed_base=seed_base,
        topology=topology,
        n_vertices=n_vertices,
        horizon=horizon,
        dataset=raw.get("dataset"),
        variant=variant,
    )


@dataclass(frozen=True)
class StatsRow:
    """One table row: solution-quality stats over the seeds of one |C|."""

    config_id: str
    colors: int
    minimum: int
    maximum: int
    mean: float
    sd: float
    mean_seconds: float


@dataclass(frozen=True)
class StatsReport:
    rows: tuple[StatsRow, ...]
    seed_base: int
    seeds: int
    errors: tuple[str, ...] = field(default=())


def summarize(
    config_id: str, colors: int, counts: list[int], times: list[float]
) -> StatsRow:
    """Aggregate per-seed solution color counts into one row.

    Sample standard deviation (n-1 denominator); 0.0 for a single run.
    """
    sd = statistics.stdev(counts) if len(counts) > 1 else 0.0
    return StatsRow(
        config_id=config_id,
        colors=colors,
        minimum=min(counts),
        maximum=max(counts),
        mean=statistics.fmean(counts),
        sd=sd,
        mean_seconds=statistics.fmean(times),
    )


@functools.lru_cache(maxsize=4)
def _load_skeleton(path: str) -> ColoredTemporalGraph:
    # Placeholder coloring; every run recolors per its own seed.
    parsed = gio.parse_edge_list(path)
    return ColoredTemporalGraph(
        {v: 0 for v in parsed.vertices}, parsed.edges, parsed.domain)


def _bench_run(cfg: BenchConfig, colors: int, seed: int) -> tuple[int, float]:
    """One seeded run: build the instance, time the ctpls call only."""
    if cfg.synthetic:
        graph, _ = gen_synthetic(SynthConfig(
            n_vertices=cfg.n_vertices,
            horizon=cfg.horizon,
            topology=cfg.topology,
            n_colors=colors,
            seed=seed,
        ))
    else:
        graph = assign_random_colors(_load_skeleton(cfg.dataset), colors, seed)
        if cfg.variant == "yes-op":
            graph, _ = yes_op_transform(
                graph, seed, universe=set(range(colors)))
    t0 = time.perf_counter()
    path, _ = ctpls(graph)
    return path.length, time.perf_counter() - t0


def run_bench(
    cfg: BenchConfig, workers: Optional[int] = None
) -> StatsReport:
    """Execute the campaign; rows in the configured colors order.

    workers > 1 fans runs out over a process pool (runs are independent
    and seeded); default comes from the CTPLS_WORKERS env var, falling
    back to 1.  A failing (colors, seed) cell drops its whole row into
    the errors list and the campaign continues.
    """
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    if workers < 1:
        raise InputError(f"workers must be >= 1, got {workers}")
    jobs = [
        (colors, cfg.seed_base + idx)
        for colors in cfg.colors
        for idx in range(cfg.seeds)
    ]
    results: dict[tuple[int, int], tuple[int, float]] = {}
    errors: list[str] = []
    if workers == 1:
        for colors, seed in jobs:
            try:
                results[(colors, seed)] = _bench_run(cfg, colors, seed)
            except Exception as exc:  # noqa: BLE001  - per-row continuation
                errors.append(f"colors={colors} seed={seed}: {exc}")
    else:
        with concurrent.futures.ProcessPoolExecutor(workers) as pool:
            futures = {
                pool.submit(_bench_run, cfg, colors, seed): (colors, seed)
                for colors, seed in jobs
            }
            for fut in concurrent.futures.as_completed(futures):
                key = futures[fut]
                try:
                    results[key] = fut.result()
                except Exception as exc:  # noqa: BLE001
                    errors.append(f"colors={key[0]} seed={key[1]}: {exc}")

    rows = []
    for colors in cfg.colors:
        cells = [
            results[(colors, cfg.seed_base + idx)]
            for idx in range(cfg.seeds)
            if (colors, cfg.seed_base + idx) in results
        ]
        if len(cells) < cfg.seeds:
            continue  # incomplete row: already reported in errors
        rows.append(summarize(
            cfg.label, colors,
            [c for c, _ in cells], [t for _, t in cells]))
    return StatsReport(
        tuple(rows), cfg.seed_base, cfg.seeds, tuple(errors))


CSV_COLUMNS = ("config", "colors", "min", "max", "mean", "sd", "mean_seconds")


def write_stats_csv(report: StatsReport, target: gio.Source) -> None:
    """Emit the report; 2 decimal places for mean/sd/seconds.

    The seed provenance rides in a leading comment so the column set
    stays exactly the tables': replay is seed_base + run index.
    """
    buf = _io.StringIO()
    buf.write(f"# seed_base={report.seed_base} seeds={report.seeds}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report.rows:
        writer.writerow([
            r.config_id, r.colors, r.minimum, r.maximum,
            f"{r.mean:.2f}", f"{r.sd:.2f}", f"{r.mean_seconds:.2f}",
        ])
    gio._write_text(target, buf.getvalue())


def read_stats_csv(source: gio.Source) -> StatsReport:
    """Parse write_stats_csv output; emit(parse(emit(x))) == emit(x)."""
    text = source.read() if hasattr(source, "read") else open(source).read()
    seed_base = seeds = 0
    data_lines = []
    for line in text.splitlines():
        if line.startswith("#"):
            fields = dict(
                kv.split("=", 1) for kv in line[1:].split() if "=" in kv)
            seed_base = int(fields.get("seed_base", seed_base))
            seeds = int(fields.get("seeds", seeds))
            continue
        if line.strip():
            data_lines.append(line)
    reader = csv.reader(data_lines)
    header = next(reader, None)
    if tuple(header or ()) != CSV_COLUMNS:
        raise InputError(f"unexpected CSV header: {header}")
    rows = []
    for rec in reader:
        if len(rec) != len(CSV_COLUMNS):
            raise InputError(f"bad CSV row: {rec}")
        rows.append(StatsRow(
            config_id=rec[0],
            colors=int(rec[1]),
            minimum=int(rec[2]),
            maximum=int(rec[3]),
            mean=float(rec[4]),
            sd=float(rec[5]),
            mean_seconds=float(rec[6]),
        ))
    return StatsReport(tuple(rows), seed_base, seeds)
