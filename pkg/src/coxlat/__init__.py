"""Finite Coxeter groups, their weak-order lattices, and lattice homomorphisms between them."""

from .cambrian import cambrian_congruence, cambrian_lattice, is_sortable, restrict_hom, sortable_elements
from .classify import classify_compressive, classify_surjective, verify_suite
from .congruence import (
    Congruence,
    closure_generic,
    closure_polygonal,
    forcing_poset,
    generated_by,
    homogeneous_degree,
    quotient,
)
from .coxeter import CoxeterDiagram, build_diagram, generate_roots
from .dominance import cartan_matrix, containment_check, dominates, induced_hom
from .errors import (
    CodecError,
    CoxlatError,
    DiagramError,
    LatticeStructureError,
    SizeCapExceeded,
    UnsupportedRingError,
    VerificationError,
)
from .homs import (
    LatticeHom,
    apply_signed,
    eta_delta,
    eta_edge_erasing,
    eta_epsilon,
    eta_nu,
    eta_parabolic,
    eta_sigma,
    verify_hom,
)
from .lattice import Lattice, isomorphic
from .weak import WeakOrderLattice, enumerate_weak_order, weak_order

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
