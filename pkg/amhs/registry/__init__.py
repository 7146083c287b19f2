from .catalog import CatalogOptions, CheckRegistry, catalog, registry
from .check import CheckResult, CongruenceCheck, Status, effective_power, run_check
from .check_id import CheckId, SuitePrefix, encode_param
from .context import PrimeContext, bernoulli_residue

__all__ = (
    "CatalogOptions",
    "CheckId",
    "CheckRegistry",
    "CheckResult",
    "CongruenceCheck",
    "PrimeContext",
    "Status",
    "SuitePrefix",
    "bernoulli_residue",
    "catalog",
    "effective_power",
    "encode_param",
    "registry",
    "run_check",
)
