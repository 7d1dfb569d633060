"""Plane substructures in drawings of hypercube graphs Q_d."""

from .constructions import build_bipartite_split, build_H, build_H_parallel, build_R
from .convex import ConvexDrawing, count_crossings, crossing_formula, length_profile, length_rotation
from .hypercube import HypercubeGraph, label, parse_label
from .perles import perles_path
from .plane import PlaneSubgraphResult, verify_plane
from .solvers import longest_plane_path, max_plane_matching, max_plane_subgraph

__version__ = "0.1.0"
