from .commands import cli, main
from .config import SweepConfig, parse_prime_range
from .sweep import Report, SummaryRecord, run_sweep, select_checks, sweep_prime

__all__ = (
    "Report",
    "SummaryRecord",
    "SweepConfig",
    "cli",
    "main",
    "parse_prime_range",
    "run_sweep",
    "select_checks",
    "sweep_prime",
)
