from .cutting import (
    CutPolygon,
    Side,
    Theta,
    check_cut_invariants,
    cut_along_theta,
    theta_subgraph,
)
from .faces import (
    FaceSet,
    Surface,
    describe_surface,
    euler_characteristic,
    surface_name,
    trace_faces,
)
from .rotation_system import (
    Dart,
    EmbeddedGraph,
    State,
    is_orientable,
    validate,
)

__all__ = [
    "CutPolygon",
    "Dart",
    "EmbeddedGraph",
    "FaceSet",
    "Side",
    "State",
    "Surface",
    "Theta",
    "check_cut_invariants",
    "cut_along_theta",
    "describe_surface",
    "euler_characteristic",
    "is_orientable",
    "surface_name",
    "theta_subgraph",
    "trace_faces",
    "validate",
]
