"""Long non-crossing Hamiltonian paths, spanning trees and Hamiltonian cycles on planar point sets."""
from .altpath import AlternatingPath, top_bridge_path, bridges, insert_into_path, insert_into_polygon, two_endpoint_path
from .bipartition import BalancedBipartition, enumerate_balanced_bipartitions, grid_bipartitions
from .errors import *  # noqa: F401,F403
from .generate import Distribution, generate
from .geometry import (
    Point,
    PointSet,
    Structure,
    StructureKind,
    convex_hull,
    diameter,
    validate_general_position,
    validate_noncrossing,
    width,
)
from .hamcycle import a4, a4_grid
from .hampath import a1, a1_grid, best_bipartition_path, perimeter_path
from .io import load, load_structure, save, save_structure
from .kernels import BACKEND
from .oracle import (
    brute_longest_cycle,
    brute_longest_noncrossing_tree,
    brute_longest_path,
    dmax_profile,
    max_spanning_tree,
)
from .report import RunReport
from .spantree import a2, a3, extended_star, star

__all__ = [
    "AlternatingPath",
    "top_bridge_path",
    "bridges",
    "insert_into_path",
    "insert_into_polygon",
    "two_endpoint_path",
    "BalancedBipartition",
    "enumerate_balanced_bipartitions",
    "grid_bipartitions",
    "Distribution",
    "generate",
    "Point",
    "PointSet",
    "Structure",
    "StructureKind",
    "convex_hull",
    "diameter",
    "validate_general_position",
    "validate_noncrossing",
    "width",
    "a4",
    "a4_grid",
    "a1",
    "a1_grid",
    "best_bipartition_path",
    "perimeter_path",
    "load",
    "load_structure",
    "save",
    "save_structure",
    "BACKEND",
    "brute_longest_cycle",
    "brute_longest_noncrossing_tree",
    "brute_longest_path",
    "dmax_profile",
    "max_spanning_tree",
    "RunReport",
    "a2",
    "a3",
    "extended_star",
    "star",
]

__version__ = "0.1.0"
