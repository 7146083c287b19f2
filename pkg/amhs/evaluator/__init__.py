from .binomial import binomial_u_sum, power_difference, signed_binomial_sum, weak_shifted_sum
from .family import SumFamily
from .modes import EvalMode, ExactMode, Mode, ResidueMode, character, inverse_powers, inverses
from .nested import EXACT, Value, eval_naive, eval_sum, h31, half, letter_columns, nested_sum
from .poly import poly_coefficients, poly_value, poly_value_direct

__all__ = (
    "EXACT",
    "EvalMode",
    "ExactMode",
    "Mode",
    "ResidueMode",
    "SumFamily",
    "Value",
    "binomial_u_sum",
    "character",
    "eval_naive",
    "eval_sum",
    "h31",
    "half",
    "inverse_powers",
    "inverses",
    "letter_columns",
    "nested_sum",
    "poly_coefficients",
    "poly_value",
    "poly_value_direct",
    "power_difference",
    "signed_binomial_sum",
    "weak_shifted_sum",
)
