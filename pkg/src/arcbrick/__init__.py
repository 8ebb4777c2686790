"""Arc model for bricks over type A preprojective algebras, with an exact oracle."""

from .arcs import (
    Arc,
    ArcError,
    CrossingReport,
    Letter,
    crossing_report,
    enumerate_arcs,
    euler_form_arcs,
    ext_dim_arcs,
    hom_arcs,
    is_clockwise,
    is_eps_admissible,
    is_quotient_arc,
    is_restriction,
    is_submodule_arc,
    is_tau_rigid_arc,
    is_weak_pair_arcs,
    make_arc,
    parse_arc,
    resolve_crossing,
    almost_rigid_pair_arcs,
)
from .diagrams import (
    ArcDiagram,
    diagram_graph_check,
    enumerate_noncrossing,
    enumerate_weak,
    is_clockwise_ordered,
    is_noncrossing,
    is_strand_diagram,
    longest_weak_length,
    max_weak_example,
    non_extendable_lengths,
)
from .reps import (
    AlgebraSpec,
    ExtResult,
    Relation,
    Representation,
    algebra,
    arc_from_brick,
    brick_from_arc,
    direct_sum,
    euler_form,
    ext1,
    hereditary_algebra,
    hom_basis,
    hom_dim,
    is_brick,
    is_indecomposable,
    is_tau_rigid_oracle,
    thin_subquotients,
    validate_rep,
)
from .witness import SesWitness, ext_basis, ses_contested, ses_cross_from, ses_cross_to, ses_to_cocycle, verify_ses
from .classify import (
    conjecture_report,
    is_exceptional_sequence_hereditary,
    is_weak_pair_modules,
    is_weak_sequence,
    maximal_almost_rigid,
    semibricks,
    sweep_verify,
)

__version__ = "0.1.0"
