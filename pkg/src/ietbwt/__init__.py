"""Exact interval exchange transformations with Rauzy induction and
Burrows-Wheeler clustering checks."""

from .alphabet import Alphabet, Perm
from .coding import (
    CylinderTable,
    LanguageSample,
    LetterMorphism,
    compose,
    cylinders,
    diet_language,
    identity_morphism,
    language,
    language_of_periodic,
    left_return_words,
    make_alpha,
    make_alpha_tilde,
    make_inclusion,
    make_rename,
    occurrences,
    right_return_words,
    trajectory,
)
from .errors import CapExceeded, DomainError
from .exact import FieldValue, make_quadratic, make_rational, parse_value
from .extgraph import (
    ClassifyReport,
    ExtensionGraph,
    classify_language,
    compatible,
    extension_graph,
    order_from_permutation,
    periodic_clustering_report,
)
from .iet import (
    Connection,
    DietSpec,
    Iet,
    diet_action,
    diet_lyndon_multiset,
    diet_spec,
    diet_to_iet,
    iet_from_json,
)
from .induction import (
    InductionChain,
    ReturnVisit,
    StepRecord,
    circular_reorder,
    div_set,
    first_return_point,
    induce_to_cylinder,
    is_admissible,
    left_step,
    orbit_window,
    right_step,
    split,
    y_interval,
    z_interval,
)
from .verify import (
    VerifyReport,
    verify_induction_consistency,
    verify_perfect_clustering_symmetric,
    verify_return_clustering,
)
from .words import (
    BwtResult,
    MorphismStep,
    alpha_step,
    alpha_tilde_step,
    apply_step_to_word,
    bwt,
    clustering_transport,
    ebwt,
    expected_clustered_output,
    infer_clustering_permutation,
    inclusion_step,
    is_clustering,
    is_lyndon,
    is_pangrammatic,
    is_pi_clustering,
    is_primitive,
    lyndon_representative,
    omega_compare,
    parikh,
    primitive_root,
    rename_step,
    rotations,
    runs_of,
)

__all__ = [
    "Alphabet",
    "BwtResult",
    "CapExceeded",
    "ClassifyReport",
    "Connection",
    "CylinderTable",
    "DietSpec",
    "DomainError",
    "ExtensionGraph",
    "FieldValue",
    "Iet",
    "InductionChain",
    "LanguageSample",
    "LetterMorphism",
    "MorphismStep",
    "Perm",
    "ReturnVisit",
    "StepRecord",
    "VerifyReport",
    "alpha_step",
    "alpha_tilde_step",
    "apply_step_to_word",
    "bwt",
    "circular_reorder",
    "classify_language",
    "clustering_transport",
    "compatible",
    "compose",
    "cylinders",
    "diet_action",
    "diet_language",
    "diet_lyndon_multiset",
    "diet_spec",
    "diet_to_iet",
    "div_set",
    "ebwt",
    "expected_clustered_output",
    "extension_graph",
    "first_return_point",
    "identity_morphism",
    "iet_from_json",
    "induce_to_cylinder",
    "infer_clustering_permutation",
    "inclusion_step",
    "is_admissible",
    "is_clustering",
    "is_lyndon",
    "is_pangrammatic",
    "is_pi_clustering",
    "is_primitive",
    "language",
    "language_of_periodic",
    "left_return_words",
    "left_step",
    "lyndon_representative",
    "make_alpha",
    "make_alpha_tilde",
    "make_inclusion",
    "make_quadratic",
    "make_rational",
    "make_rename",
    "occurrences",
    "omega_compare",
    "orbit_window",
    "order_from_permutation",
    "parikh",
    "parse_value",
    "periodic_clustering_report",
    "primitive_root",
    "rename_step",
    "right_return_words",
    "right_step",
    "rotations",
    "runs_of",
    "split",
    "trajectory",
    "verify_induction_consistency",
    "verify_perfect_clustering_symmetric",
    "verify_return_clustering",
    "y_interval",
    "z_interval",
]
