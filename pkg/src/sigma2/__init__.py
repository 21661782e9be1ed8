"""Exact K-theory computations for exceptional collections on the degree-2
Hirzebruch surface and its quadric deformation."""

from .cohomology import CohomologyDims, hom_dims_line_bundles, line_bundle_cohomology
from .lattice import (
    KClass,
    PicClass,
    QUADRIC,
    SIGMA2,
    Surface,
    class_of_line_bundle,
    class_of_OC,
    dual_class,
    euler_matrix,
    euler_pairing,
    intersect,
    pic,
    riemann_roch_chi,
    serre_pair_check,
    tensor_line_bundle,
    twice_ch2,
)
from .mutations import (
    CollectionError,
    GroupLetter,
    GroupWord,
    NumCollection,
    RestrictionProfile,
    SymbolicObject,
    apply_group_word,
    enumerate_exceptional_classes,
    flip,
    gen_isometry,
    gen_isometry_inverse,
    left_mutation,
    reduce_to_standard,
    restriction_profile,
    right_mutation,
    sigma,
    standard_collection,
)
from .twists import (
    NormalForm,
    TwistGenerator,
    TwistWord,
    apply_word,
    dual_conjugate,
    is_k0_trivial,
    normalize,
    rewrite_pair,
    shift,
    tensor_oc,
    twist,
    twist_on_class,
    word,
    word_matrix,
)
from .verify import VerifyBounds, VerifyReport, run_verify

__all__ = [
    "CohomologyDims",
    "CollectionError",
    "GroupLetter",
    "GroupWord",
    "KClass",
    "NormalForm",
    "NumCollection",
    "PicClass",
    "QUADRIC",
    "RestrictionProfile",
    "SIGMA2",
    "Surface",
    "SymbolicObject",
    "TwistGenerator",
    "TwistWord",
    "VerifyBounds",
    "VerifyReport",
    "apply_group_word",
    "apply_word",
    "class_of_OC",
    "class_of_line_bundle",
    "dual_class",
    "dual_conjugate",
    "enumerate_exceptional_classes",
    "euler_matrix",
    "euler_pairing",
    "flip",
    "gen_isometry",
    "gen_isometry_inverse",
    "hom_dims_line_bundles",
    "intersect",
    "is_k0_trivial",
    "left_mutation",
    "line_bundle_cohomology",
    "normalize",
    "pic",
    "reduce_to_standard",
    "restriction_profile",
    "rewrite_pair",
    "riemann_roch_chi",
    "right_mutation",
    "run_verify",
    "serre_pair_check",
    "shift",
    "sigma",
    "standard_collection",
    "tensor_line_bundle",
    "tensor_oc",
    "twice_ch2",
    "twist",
    "twist_on_class",
    "word",
    "word_matrix",
]

__version__ = "0.1.0"
