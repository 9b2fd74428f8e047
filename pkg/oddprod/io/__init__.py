"""
Document formats: instances, colourings, oracle graphs, DOT and stats CSV
"""

from oddprod.io.documents import (
    FORMAT_VERSION,
    ColouringDocument,
    InstanceDocument,
    canonicalize,
    load_colouring,
    load_generic_graph,
    load_instance,
    save_colouring,
    save_instance,
)
from oddprod.io.dot import export_dot
from oddprod.io.stats import (
    STATS_HEADER,
    RunMetadata,
    append_stats_csv,
    append_stats_rows,
    stats_row,
)

__all__ = [
    "FORMAT_VERSION",
    "STATS_HEADER",
    "ColouringDocument",
    "InstanceDocument",
    "RunMetadata",
    "append_stats_csv",
    "append_stats_rows",
    "canonicalize",
    "export_dot",
    "load_colouring",
    "load_generic_graph",
    "load_instance",
    "save_colouring",
    "save_instance",
    "stats_row",
]
