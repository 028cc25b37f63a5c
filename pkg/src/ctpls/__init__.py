"""Maximum colorful paths in vertex-colored temporal graphs.

Core model (graph), the CTPLS heuristic (heuristic), exact small-instance
solvers (exact), the independent-set hardness gadget (reduction),
synthetic generators (generate), text formats (io), and a seeded
benchmark harness (bench).
"""

from .bench import (
    BenchConfig,
    StatsReport,
    StatsRow,
    parse_bench_config,
    read_stats_csv,
    run_bench,
    summarize,
    write_stats_csv,
)
from .exact import ExactLimits, ExactResult, exact_max_colorful_path, naive_enumerate
from .generate import (
    BarabasiAlbert,
    ErdosRenyi,
    PlantRecord,
    SynthConfig,
    assign_random_colors,
    gen_synthetic,
    parse_topology,
    yes_op_transform,
)
from .graph import (
    ColoredTemporalGraph,
    InputError,
    LimitError,
    PathViolation,
    TemporalEdge,
    TemporalPath,
    TimeDomain,
    is_colorful,
    path_colors,
    validate_colorful,
    validate_path,
)
from .heuristic import (
    CtplsTrace,
    LsMove,
    Segmentation,
    ctpls,
    greedy_build,
    ls1_sweep,
    ls2_sweep,
    segment_domain,
)
from .io import (
    ParsedEdgeList,
    ParseReport,
    densify_colors,
    load_graph,
    parse_edge_list,
    read_color_file,
    read_path_file,
    save_graph,
    write_color_file,
    write_edge_list,
    write_path_file,
)
from .reduction import (
    ReducedInstance,
    StaticGraph,
    brute_force_max_is,
    build_instance,
    is_to_path,
    path_to_is,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
