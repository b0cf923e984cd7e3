"""Finite topological spaces, lattice analysis, lax comma constructions,
the lower Vietoris monad, and descent checkers.
"""

from .errors import (
    BaseMismatch,
    CapExceeded,
    DuplicatePoint,
    InternalInconsistency,
    LaxtopError,
    MeetsMissing,
    NoMeets,
    NotAChain,
    NotACompleteLattice,
    NotAFrame,
    NotALattice,
    NotAPartialOrder,
    NotATopology,
    NotCompletelyDistributive,
    NotClosedLevel,
    NotContinuous,
    NotHeyting,
    NotParallel,
    NotSurjective,
    NotT0,
    ParseError,
    SchemaError,
    UnknownLabel,
)
from .finspace import (
    CMap,
    FiniteSpace,
    build_space,
    closure_ops,
    cmap,
    enumerate_cmaps,
    identity_map,
    induced_space,
    is_continuous,
    is_quotient_map,
    natural_order,
    product_space,
    sober_report,
    sum_space,
    t0_report,
)
from .order import (
    distributivity_report,
    heyting_report,
    lattice_ops,
    lattice_report,
    order_to_space,
    require_meets,
)
from .laxcomma import (
    Exponential,
    Filtration,
    LaxMorphism,
    LaxObject,
    chain_filtration,
    exponentiability_report,
    exponential_object,
    initial_lift,
    initial_lift_over,
    is_lax_morphism,
    lan_extension,
    lax_coequalizer,
    lax_compose,
    lax_equalizer,
    lax_hom,
    lax_morphism,
    lax_object,
    lax_product,
    lax_pullback,
    lax_sum,
    verify_universal_property,
)
from .famx import (
    FamMorphism,
    FamObject,
    fam_descent_check,
    fam_effective_descent_check,
    fam_morphism,
    fam_object,
    fam_pullback,
    to_fam,
)
from .vietoris import (
    vietoris_algebra_check,
    vietoris_functor_map,
    vietoris_monad,
    vietoris_space,
)
from .descent import (
    DescentReport,
    cd_filtration_descent_check,
    convergence_descent_check,
    forgetful_preservation_check,
    frame_effective_descent_check,
    laxcomma_effective_descent,
    scp_meet_compat_check,
    sigma,
    top_descent_check,
    top_effective_descent_check,
)
from .enumeration import (
    are_isomorphic,
    canonical_form,
    dedup_by_isomorphism,
    enumerate_labeled_posets,
    enumerate_labeled_preorders,
    enumerate_posets,
)
from .harness import HarnessConfig, Report, paper_check
from . import spaces
