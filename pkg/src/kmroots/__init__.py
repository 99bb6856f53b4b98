"""Hyperbolic Kac-Moody root systems: Cartan matrices, roots, lattices, reflection subgroups
and the classification of maximal rank hyperbolic root subsystems."""

from .diagrams import (
    INF,
    CoxeterDiagram,
    GeneralizedCartanMatrix,
    MatrixType,
    classify_diagram,
    classify_type,
    enumerate_hyperbolic_simplex_diagrams,
    is_hyperbolic,
    symmetrize,
)
from .dynkin import arrows, dual, enumerate_dynkin, is_symmetrizable
from .lattice import Lattice, hnf, lattice_contains, lattice_index
from .roots import (
    express_as_w_alpha,
    height,
    is_imaginary_root,
    is_real_root,
    is_root,
    real_roots_up_to_height,
    reflect,
)
from .coset import CosetTable, CoxeterPresentation, coxeter_presentation, reflection_word, todd_coxeter
from .subsystem import (
    Embedding,
    StarVerdict,
    chain_compose,
    check_star_bounded,
    induced_gcm,
    doubling_subsystem,
    vertex_stabilizer_property,
)
from .classify import DecompositionRecord, HasseGraph, build_hasse, find_subsystems, verify_catalog
from .dsl import parse_diagram, serialize

__version__ = "0.1.0"
