from .composition import Composition, Partition, compositions_of_weight, h_from_s, s_from_h
from .errors import AMHSError, IndexNotInvertible, ModulusMismatch, NotPIntegral, ParseError
from .evaluator import ExactMode, ResidueMode, SumFamily, eval_naive, eval_sum
from .reduction import reduce_negative_head, reduce_positive_head
from .registry import CheckId, CheckResult, CongruenceCheck, Status, catalog, run_check
from .residue import Residue, fermat_quotient, reduce_mod, valuation
from .specialnum import bernoulli, bernoulli_residues, chi, euler_zero
from .stuffle import WordSum, stuffle_product

__all__ = (
    "AMHSError",
    "CheckId",
    "CheckResult",
    "Composition",
    "CongruenceCheck",
    "ExactMode",
    "IndexNotInvertible",
    "ModulusMismatch",
    "NotPIntegral",
    "ParseError",
    "Partition",
    "Residue",
    "ResidueMode",
    "Status",
    "SumFamily",
    "WordSum",
    "bernoulli",
    "bernoulli_residues",
    "catalog",
    "chi",
    "compositions_of_weight",
    "euler_zero",
    "eval_naive",
    "eval_sum",
    "fermat_quotient",
    "h_from_s",
    "reduce_mod",
    "reduce_negative_head",
    "reduce_positive_head",
    "run_check",
    "s_from_h",
    "stuffle_product",
    "valuation",
)
