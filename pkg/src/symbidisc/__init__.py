"""Geometry of the symmetrized bidisc and its automorphism group.

The symmetrized bidisc is the image of the unit bidisc under
(lam1, lam2) -> (lam1 + lam2, lam1 * lam2). Its automorphisms are exactly the lifts
of disc automorphisms acting on both roots at once; this package provides that group
in canonical coordinates together with a numerical lab that enacts every computable
step of the characterization argument.
"""

from .disc_moebius import (
    DiscAutomorphism,
    apply_moebius,
    compose,
    identity,
    invert,
    make_moebius,
    moebius_equal,
)
from .errors import (
    DenominatorDegenerate,
    NotNormalized,
    NotOnRoyalVariety,
    NotWeightedHomogeneous,
    ParameterOutOfDomain,
    PoleEncountered,
    PreconditionUnmet,
    SingularJacobian,
)
from .g2_group import (
    G2Automorphism,
    Jacobian2,
    apply_g2,
    apply_g2_via_roots,
    compose_g2,
    finite_jacobian,
    g2_equal,
    invert_g2,
    jacobian_at,
    lift,
    rotation,
    transport_to_origin,
)
from .proof_lab import (
    CandidateMap,
    CommutatorReport,
    PipelineReport,
    cartan_residual,
    cauchy_bound_check,
    commutator_experiment,
    commutator_jacobian,
    evaluate_candidate,
    fit_candidate,
    force_c_zero,
    identity_candidate,
    iterate_commutator,
    make_candidate,
    normalize_and_extract,
    orbit_sample,
    origin_jacobian,
    rotation_commutation_residual,
    weighted_form_extract,
)
from .sym_geometry import (
    ORIGIN,
    MembershipVerdict,
    RootPair,
    SymPoint,
    desymmetrize,
    in_disc,
    in_g2,
    in_sigma2,
    royal_param,
    symmetrize,
)

__version__ = "0.1.0"

__all__ = [
    "DiscAutomorphism",
    "G2Automorphism",
    "Jacobian2",
    "CandidateMap",
    "CommutatorReport",
    "PipelineReport",
    "SymPoint",
    "RootPair",
    "MembershipVerdict",
    "ORIGIN",
    "make_moebius",
    "identity",
    "apply_moebius",
    "compose",
    "invert",
    "moebius_equal",
    "symmetrize",
    "desymmetrize",
    "in_disc",
    "in_g2",
    "in_sigma2",
    "royal_param",
    "lift",
    "apply_g2",
    "apply_g2_via_roots",
    "compose_g2",
    "invert_g2",
    "rotation",
    "g2_equal",
    "transport_to_origin",
    "jacobian_at",
    "finite_jacobian",
    "make_candidate",
    "identity_candidate",
    "evaluate_candidate",
    "origin_jacobian",
    "commutator_jacobian",
    "iterate_commutator",
    "cauchy_bound_check",
    "commutator_experiment",
    "rotation_commutation_residual",
    "weighted_form_extract",
    "force_c_zero",
    "orbit_sample",
    "cartan_residual",
    "fit_candidate",
    "normalize_and_extract",
    "ParameterOutOfDomain",
    "PoleEncountered",
    "DenominatorDegenerate",
    "NotOnRoyalVariety",
    "SingularJacobian",
    "NotNormalized",
    "NotWeightedHomogeneous",
    "PreconditionUnmet",
]
