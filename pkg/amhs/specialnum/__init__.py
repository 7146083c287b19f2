from .bernoulli import (
    BernoulliCache,
    bernoulli,
    bernoulli_by_recurrence,
    bernoulli_residues,
    bernoulli_table,
    chi,
    von_staudt_fraction,
)
from .convolution import ConvolutionConstants, convolution_constants
from .euler import (
    alt_power_sum,
    alt_power_sum_direct,
    euler_poly,
    euler_zero,
    power_sum,
    power_sum_closed,
)

__all__ = (
    "BernoulliCache",
    "ConvolutionConstants",
    "alt_power_sum",
    "alt_power_sum_direct",
    "bernoulli",
    "bernoulli_by_recurrence",
    "bernoulli_residues",
    "bernoulli_table",
    "chi",
    "convolution_constants",
    "euler_poly",
    "euler_zero",
    "power_sum",
    "power_sum_closed",
    "von_staudt_fraction",
)
