from .composition import (
    Composition,
    CompositionLike,
    Word,
    as_composition,
    coarsenings,
    compositions_of_weight,
    h_from_s,
    increment_part,
    oplus,
    parse_word,
    reverse,
    s_from_h,
    sign,
)
from .partition import Partition, c_lambda, elementary_in_power_sums, odd_partitions, partitions

__all__ = (
    "Composition",
    "CompositionLike",
    "Partition",
    "Word",
    "as_composition",
    "c_lambda",
    "coarsenings",
    "compositions_of_weight",
    "elementary_in_power_sums",
    "h_from_s",
    "increment_part",
    "odd_partitions",
    "oplus",
    "parse_word",
    "partitions",
    "reverse",
    "s_from_h",
    "sign",
)
