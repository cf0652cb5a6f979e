# src/graph/__init__.py

from src.graph.cleanup import CleanupLog, cleanup, cleanup_with_log
from src.graph.edgelist import format_edge_list, parse_edge_list, read_edge_list
from src.graph.multigraph import EdgeEnd, Multigraph, legal_partitions
from src.graph.spanning import SpanningTree, is_cactus, spanning_tree

__all__ = [
    "CleanupLog",
    "EdgeEnd",
    "Multigraph",
    "SpanningTree",
    "cleanup",
    "cleanup_with_log",
    "format_edge_list",
    "is_cactus",
    "legal_partitions",
    "parse_edge_list",
    "read_edge_list",
    "spanning_tree",
]
