from .rational import (
    INFINITY,
    RationalLike,
    as_rational,
    fermat_quotient,
    is_p_integral,
    require_p_integral,
    valuation,
)
from .residue import Residue, reduce_mod

__all__ = (
    "INFINITY",
    "RationalLike",
    "Residue",
    "as_rational",
    "fermat_quotient",
    "is_p_integral",
    "reduce_mod",
    "require_p_integral",
    "valuation",
)
