"""Graph algorithms that meter their workspace in bits."""

from ._backend import BACKEND, available_backends
from .bfs import bfs_overflow, bfs_scan, bfs_two_queue, components, is_bipartite
from .compactdfs import chains_compact, dfs_compact
from .decseq import DecrementSeq
from .dfs import chain_decomposition, dfs_unary
from .findany import FindAnyPartition, FindAnySet
from .graph import Graph, GraphFormatError, build_cross_links, from_edges, load, parse
from .mst import mst
from .order import degeneracy_order, toposort
from .spacemeter import SpaceLedger

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "available_backends", "bfs_overflow", "bfs_scan", "bfs_two_queue",
    "components", "is_bipartite", "chains_compact", "dfs_compact", "DecrementSeq",
    "chain_decomposition", "dfs_unary", "FindAnyPartition", "FindAnySet", "Graph",
    "GraphFormatError", "build_cross_links", "from_edges", "load", "parse", "mst",
    "degeneracy_order", "toposort", "SpaceLedger", "__version__",
]
