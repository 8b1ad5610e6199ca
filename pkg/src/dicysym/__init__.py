"""Exact symmetry classes of polynomials and tensors for the dicyclic
groups T_{4n}: cyclotomic arithmetic, ordinary and Brauer characters,
orbit machinery, symmetrizers with dual-route Gram computations, and
orthogonal-basis decisions."""

from .cyclotomic import CyclotomicNumber, cyclo, cyclotomic_polynomial, euler_phi, root_of_unity
from .dicyclic import (
    CharacterFn,
    DicyclicElement,
    DicyclicGroup,
    class_inner_product,
    dicyclic_group,
    table_report,
)
from .harness import SweepSpec, VerificationRecord, default_sweeps, predict, run_default, verify
from .obasis import (
    ObasisReport,
    OrbitDecision,
    OrthogonalityGraph,
    WorkCeilingExceeded,
    build_orthogonality_graph,
    decide_obasis,
    find_orthogonal_basis,
    orbital_rank,
    vector_rank,
)
from .orbits import (
    DegreeTooSmallError,
    OrbitData,
    act_poly,
    act_tensor,
    construct_free_multiindex,
    orbit_poly,
    orbit_reps_poly,
    orbit_reps_tensor,
    orbit_tensor,
    stabilizer_poly,
    stabilizer_tensor,
)
from .symmetrize import (
    SymmetrizedVector,
    apply_poly_symmetrizer,
    apply_tensor_symmetrizer,
    gram_matrix,
    gram_poly_closed,
    gram_tensor_closed,
    inner_direct,
    orbital_dimension,
    relabel_poly,
    symmetrize_poly,
    symmetrize_tensor,
)

__version__ = "0.1.0"
