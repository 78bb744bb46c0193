"""Expansions of analytic functions on the closed unit disk in finite
Blaschke products, with explicit Toeplitz-operator coefficients, convergence
diagnostics in several function-space norms, and the constructions showing
where such expansions break down."""

from .blaschke import (
    FiniteBlaschkeProduct,
    PointSequence,
    SequenceKind,
    blaschke_factor,
    cauchy_kernel,
    make_sequence,
    pointwise_decay_check,
    product_as_function,
    product_eval,
)
from .errors import AnalyticityError, PreconditionError
from .fnspace import (
    BoundaryFunction,
    DiskPoint,
    dilate,
    eval_inside,
    from_samples,
    from_taylor,
    pairing,
    pointwise_combine,
    riesz_project,
)
from .norms import NormSpec, bergman_norm, embedding_check, hardy_norm, sup_norm
from .schauder import (
    ExpansionResult,
    convergence_study,
    expansion_coefficients,
    kernel_remainder_bound,
    partial_sum,
    remainder_closed_form,
    triangular_reconstruct,
)
from .tmw import functional_norm, gram_matrix, lacunary_witness, tmw_element
from .toeplitz import (
    factor_sup_bound_check,
    dilation_sup_bound_check,
    toeplitz_factor_apply,
    toeplitz_general_apply,
    toeplitz_product_apply,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticityError",
    "BoundaryFunction",
    "DiskPoint",
    "ExpansionResult",
    "FiniteBlaschkeProduct",
    "NormSpec",
    "PointSequence",
    "PreconditionError",
    "SequenceKind",
    "bergman_norm",
    "blaschke_factor",
    "cauchy_kernel",
    "convergence_study",
    "dilate",
    "embedding_check",
    "eval_inside",
    "expansion_coefficients",
    "from_samples",
    "from_taylor",
    "functional_norm",
    "gram_matrix",
    "hardy_norm",
    "factor_sup_bound_check",
    "kernel_remainder_bound",
    "lacunary_witness",
    "dilation_sup_bound_check",
    "make_sequence",
    "pairing",
    "partial_sum",
    "pointwise_combine",
    "pointwise_decay_check",
    "product_as_function",
    "product_eval",
    "remainder_closed_form",
    "riesz_project",
    "sup_norm",
    "tmw_element",
    "toeplitz_factor_apply",
    "toeplitz_general_apply",
    "toeplitz_product_apply",
    "triangular_reconstruct",
]
