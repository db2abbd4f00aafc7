"""Automorphism groups of planar graphs.

Typical use::

    from planaraut import analyze, families
    report = analyze(families.cube())
    report.group, report.order      # ('xC2(S(4))', 48)
"""

from .composer import AnalysisReport, analyze, analyze_primitive
from .decomposition import reduction_series
from .embedding import NotPlanar
from .graph import Edge, Multigraph, build_graph, parse_edge_list, dump_edge_list
from .mapaut import BACKEND

__all__ = [
    "AnalysisReport",
    "BACKEND",
    "Edge",
    "Multigraph",
    "NotPlanar",
    "analyze",
    "analyze_primitive",
    "build_graph",
    "dump_edge_list",
    "parse_edge_list",
    "reduction_series",
]
