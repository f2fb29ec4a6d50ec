"""Exact homology verification for independence complexes of grid-like graphs.

Builds the supported graph families, reduces them by fold and suspension
moves, enumerates independent-set faces, computes reduced simplicial
homology with integer, GF(2), or rational coefficients, and checks the
results against closed-form wedge-of-spheres predictions.
"""

from .backend import BACKEND_NAME, has_compiled
from .complexes import (
    DEFAULT_FACE_BUDGET,
    FaceBudgetExceeded,
    build_complex,
    enumerate_faces,
    euler_characteristic,
    f_vector,
)
from .families import KINDS, FamilySpec, build, parse_spec
from .graphs import Graph, GraphError, make_cycle, make_path, read_graph, write_graph
from .homology import (
    HomologyProfile,
    homology_of_graph,
    homology_profile,
    smith_normal_form,
)
from .predictor import (
    UnsupportedFamilyError,
    WedgeDescriptor,
    descriptor_euler,
    descriptor_homology,
    predict,
)
from .reduction import ReductionTrace, reduce, verify_trace, write_trace

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME", "DEFAULT_FACE_BUDGET", "FaceBudgetExceeded", "FamilySpec",
    "Graph", "GraphError", "HomologyProfile", "KINDS", "ReductionTrace",
    "UnsupportedFamilyError", "WedgeDescriptor", "build", "build_complex",
    "descriptor_euler", "descriptor_homology", "enumerate_faces",
    "euler_characteristic", "f_vector", "has_compiled", "homology_of_graph",
    "homology_profile", "make_cycle", "make_path", "parse_spec", "predict",
    "read_graph", "reduce", "smith_normal_form", "verify_trace",
    "write_graph", "write_trace",
]
