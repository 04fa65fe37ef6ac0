try:
    from ._version import version as __version__
except ImportError:
    __version__ = "unknown"

from .bases import (
    BasisLabel,
    CycleBasis,
    face_basis,
    maclane_basis,
    sparse_basis_general,
    sparsity,
    three_basis_projective,
    verify_basis,
)
from .bounds import (
    choose_constants,
    f_eval,
    find_threshold,
    fit_constant,
    recursion_bound,
    reduce_to_subgraph,
)
from .cycle_space import EdgeVector, GaussianBasis
from .embedding import (
    Dart,
    EmbeddedGraph,
    cut_along_theta,
    describe_surface,
    euler_characteristic,
    trace_faces,
)
from .fixtures import Fixture
from .graph import Multigraph, betti, fundamental_cycles, spanning_tree
from .methods import Method
from .oracle import basis_number_exact, brute_force_basis_number, is_planar
from .random_embedding import random_embedding
from .replacement import apply_replacement
from .three_basis import fundamental_pair, three_basis

__all__ = [
    "BasisLabel",
    "CycleBasis",
    "Dart",
    "EdgeVector",
    "EmbeddedGraph",
    "Fixture",
    "GaussianBasis",
    "Method",
    "Multigraph",
    "apply_replacement",
    "basis_number_exact",
    "betti",
    "brute_force_basis_number",
    "choose_constants",
    "cut_along_theta",
    "describe_surface",
    "euler_characteristic",
    "f_eval",
    "face_basis",
    "find_threshold",
    "fit_constant",
    "fundamental_cycles",
    "fundamental_pair",
    "is_planar",
    "maclane_basis",
    "random_embedding",
    "recursion_bound",
    "reduce_to_subgraph",
    "spanning_tree",
    "sparse_basis_general",
    "sparsity",
    "three_basis",
    "three_basis_projective",
    "trace_faces",
    "verify_basis",
]
