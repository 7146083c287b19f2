from .reducers import (
    negative_kernel,
    positive_kernel,
    reduce_head,
    reduce_negative_head,
    reduce_positive_head,
)
from .terms import (
    ReductionTermSum,
    negative_head_coefficients,
    negative_head_leading,
    negative_head_terms,
    positive_head_coefficients,
    positive_head_terms,
)

__all__ = (
    "ReductionTermSum",
    "negative_head_coefficients",
    "negative_head_leading",
    "negative_head_terms",
    "negative_kernel",
    "positive_head_coefficients",
    "positive_head_terms",
    "positive_kernel",
    "reduce_head",
    "reduce_negative_head",
    "reduce_positive_head",
)
