"""Enumerate convex cuts of bipartite and plane graphs."""

from .alternating import (
    AlternatingPath,
    AlternatingPathGraph,
    alternating_path_graph,
    alternating_paths,
    assign_slots_and_count_crossings,
    eap_cut,
    is_well_arranged,
)
from .bipartite import BipartiteCutReport, convex_cuts_bipartite
from .embedding import Face, Opposites, PlaneEmbedding, opposite_edges, trace_faces
from .errors import (
    AlternatingPathError,
    ConvexCutError,
    EmbeddingError,
    FileFormatError,
    GraphError,
    NotBipartiteError,
    ResourceLimitError,
    VerificationError,
)
from .generators import generate
from .graph import Graph, Subdivision, all_pairs_distances, build_graph, is_bipartite, subdivide
from .oracle import (
    enumerate_convex_cuts_bruteforce,
    hamming_labeling,
    is_convex_cut,
    is_partial_cube,
)
from .plane import CutSet, SearchGraph, build_search_graph, enumerate_convex_cuts_plane
from .relations import (
    CompatibilityMatrices,
    build_compatibility_matrices,
    compatible,
    djokovic_related,
    edge_cut_set,
    tau_related,
)

__version__ = "0.1.0"

__all__ = [
    "AlternatingPath",
    "AlternatingPathError",
    "AlternatingPathGraph",
    "BipartiteCutReport",
    "CompatibilityMatrices",
    "ConvexCutError",
    "CutSet",
    "EmbeddingError",
    "Face",
    "FileFormatError",
    "Graph",
    "GraphError",
    "NotBipartiteError",
    "Opposites",
    "PlaneEmbedding",
    "ResourceLimitError",
    "SearchGraph",
    "Subdivision",
    "VerificationError",
    "all_pairs_distances",
    "alternating_path_graph",
    "alternating_paths",
    "assign_slots_and_count_crossings",
    "build_compatibility_matrices",
    "build_graph",
    "build_search_graph",
    "compatible",
    "convex_cuts_bipartite",
    "djokovic_related",
    "eap_cut",
    "edge_cut_set",
    "enumerate_convex_cuts_bruteforce",
    "enumerate_convex_cuts_plane",
    "generate",
    "hamming_labeling",
    "is_bipartite",
    "is_convex_cut",
    "is_partial_cube",
    "is_well_arranged",
    "opposite_edges",
    "subdivide",
    "tau_related",
    "trace_faces",
]
