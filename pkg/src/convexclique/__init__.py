"""Maximum clique in intersection graphs of convex objects, with exact geometry."""

from .geometry import (
    AxisRect,
    ConvexBody,
    HalfPlane,
    Lens,
    Placement,
    Scene,
    SceneObject,
    build_lens,
    central_symmetrize,
    homothets_intersect,
    minkowski_norm,
    scene_to_graph,
    split_lens,
    translates_intersect,
)
from .graph import EdgeOrdering, IntersectionGraph, brute_force_max_clique, exact_max_clique

__version__ = "0.1.0"

__all__ = [
    "AxisRect",
    "ConvexBody",
    "EdgeOrdering",
    "HalfPlane",
    "IntersectionGraph",
    "Lens",
    "Placement",
    "Scene",
    "SceneObject",
    "brute_force_max_clique",
    "build_lens",
    "central_symmetrize",
    "exact_max_clique",
    "homothets_intersect",
    "minkowski_norm",
    "scene_to_graph",
    "split_lens",
    "translates_intersect",
]
