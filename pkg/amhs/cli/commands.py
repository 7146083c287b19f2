import logging
import sys
from pathlib import Path
from typing import Optional, Tuple

import click
import gmpy2
from pydantic import ValidationError

from ..composition import Composition, parse_word
from ..errors import AMHSError
from ..evaluator import ResidueMode, SumFamily, eval_sum
from ..stuffle import stuffle_product
from .config import SweepConfig, parse_prime_range
from .sweep import run_sweep, select_checks

# compositions such as -2 or -3,2 are arguments, not options
_SIGNED_ARGS = {"ignore_unknown_options": True}


def _usage_error(e: Exception) -> click.UsageError:
    if isinstance(e, ValidationError):
        message = "; ".join(
            f"{'.'.join(map(str, err['loc'])) or 'config'}: {err['msg']}" for err in e.errors()
        )
        return click.UsageError(message)
    return click.UsageError(str(e))


@click.group()
@click.version_option(package_name="amhs")
def cli():
    """Alternating multiple harmonic sums: evaluation and congruence sweeps"""


@cli.command()
@click.option("--primes", "prime_range", default="7..100", show_default=True,
              help="Prime range LO..HI (inclusive)")
@click.option("--suite", "suites", multiple=True, default=("all",), show_default=True,
              help="Check id prefix such as C08 or C04.H; repeatable")
@click.option("--jobs", default=1, show_default=True, type=int, help="Worker processes")
@click.option("--seed", default=0, show_default=True, type=int,
              help="Seed of the randomized families")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path),
              help="Write the JSON-lines report here instead of stdout")
@click.option("--weight-cap", default=6, show_default=True, type=int,
              help="Largest weight the generic families are instantiated at")
@click.option("--power", "power_override", type=int,
              help="Lower every check to modulus p^K")
@click.option("--log-level", default="WARNING", show_default=True)
@click.option("--no-timing", is_flag=True,
              help="Report zero timings so that reports are byte-identical across runs")
def verify(
    prime_range: str,
    suites: Tuple[str, ...],
    jobs: int,
    seed: int,
    out: Optional[Path],
    weight_cap: int,
    power_override: Optional[int],
    log_level: str,
    no_timing: bool,
):
    """Run the congruence catalog over a range of primes"""
    try:
        lo, hi = parse_prime_range(prime_range)
        config = SweepConfig(
            prime_lo=lo,
            prime_hi=hi,
            suites=suites,
            power_override=power_override,
            jobs=jobs,
            seed=seed,
            weight_cap=weight_cap,
            out=out,
            log_level=log_level,
            no_timing=no_timing,
        )
    except (AMHSError, ValidationError) as e:
        raise _usage_error(e) from e

    logging.basicConfig(level=config.log_level, stream=sys.stderr)
    if not select_checks(config):
        raise click.UsageError(f"No check matches suites {', '.join(config.suites)}")
    report = run_sweep(config)

    if config.out is None:
        for line in report.lines():
            click.echo(line)
    else:
        with config.out.open("w", encoding="utf-8") as stream:
            report.write(stream)
    if report.summary.fail:
        click.echo(f"{report.summary.fail} unexpected failures", err=True)
    sys.exit(report.exit_code)


@cli.command(name="eval", context_settings=_SIGNED_ARGS)
@click.argument("family", type=click.Choice([f.value for f in SumFamily], case_sensitive=False))
@click.argument("composition")
@click.argument("n", type=int)
@click.option("--prime", type=int, help="Reduce modulo a power of this prime")
@click.option("--power", default=1, show_default=True, type=click.IntRange(1, 6))
def eval_command(family: str, composition: str, n: int, prime: Optional[int], power: int):
    """Print FAMILY(COMPOSITION; N), exactly or modulo PRIME^POWER"""
    try:
        c = Composition.parse(composition)
        mode = None
        if prime is not None:
            if not gmpy2.is_prime(prime):
                raise click.BadParameter(f"{prime} is not a prime", param_hint="--prime")
            mode = ResidueMode(prime, power)
        value = eval_sum(SumFamily(family.upper()), c, n, mode)
    except (AMHSError, ValueError) as e:
        raise _usage_error(e) from e
    click.echo(str(value))


@cli.command(context_settings=_SIGNED_ARGS)
@click.argument("w1")
@click.argument("w2")
def stuffle(w1: str, w2: str):
    """Print the stuffle product W1 * W2, terms sorted lexicographically"""
    try:
        product = stuffle_product(parse_word(w1), parse_word(w2))
    except AMHSError as e:
        raise _usage_error(e) from e
    click.echo(str(product))


def main():
    cli()
