"""
Prime sweeps over the catalog

Work is split by prime. Each worker process rebuilds the catalog from the
sweep options (recipes are closures and do not pickle) and sends back plain
result records, which are merged and sorted by (id, p) before emission.
"""

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from threading import RLock
from typing import IO, Any, Dict, List, Tuple

from cachetools import LRUCache, cached
from pydantic import BaseModel, ConfigDict, Field

from ..registry import CongruenceCheck, Status, catalog, run_check
from .config import SweepConfig

logger = logging.getLogger(__name__)

Record = Dict[str, Any]


class SummaryRecord(BaseModel):
    """Trailing report line; counts equal the number of result records by status"""

    model_config = ConfigDict(populate_by_name=True)

    record: str = "summary"
    total: int = 0
    passed: int = Field(0, alias="pass")
    fail: int = 0
    skipped: int = 0
    known_fail: int = 0
    primes: int = 0
    checks: int = 0
    wall_ms: int = 0


class Report(BaseModel):
    records: List[Record]
    summary: SummaryRecord

    @property
    def exit_code(self) -> int:
        return 1 if self.summary.fail else 0

    def lines(self) -> List[str]:
        lines = [json.dumps(record) for record in self.records]
        lines.append(json.dumps(self.summary.model_dump(by_alias=True)))
        return lines

    def write(self, stream: IO[str]) -> None:
        for line in self.lines():
            stream.write(line + "\n")


@cached(LRUCache(maxsize=8), lock=RLock())
def _catalog(weight_cap: int, seed: int) -> Tuple[CongruenceCheck, ...]:
    return tuple(catalog(weight_cap=weight_cap, seed=seed))


def select_checks(config: SweepConfig) -> List[CongruenceCheck]:
    return [c for c in _catalog(config.weight_cap, config.seed) if config.selects(c.id)]


def sweep_prime(config: SweepConfig, p: int) -> Tuple[List[Record], int]:
    """
    Run every selected check at ``p``

    :return: result records and how many of them reproduced a known failure
    """
    logger.debug("Prime %d started", p)
    records, known = [], 0
    for check in select_checks(config):
        result = run_check(check, p, config.power_override)
        if config.no_timing:
            result = result.model_copy(update={"elapsed_us": 0})
        if check.known_fail and result.status is Status.PASS:
            known += 1
        records.append(result.model_dump(mode="json"))
    logger.debug("Prime %d finished: %d records", p, len(records))
    return records, known


def _sweep_prime_job(args: Tuple[SweepConfig, int]) -> Tuple[List[Record], int]:
    config, p = args
    logging.basicConfig(level=config.log_level)
    return sweep_prime(config, p)


def run_sweep(config: SweepConfig) -> Report:
    started = time.perf_counter()
    primes = list(config.primes())
    jobs = [(config, p) for p in primes]
    if config.jobs == 1 or len(primes) == 1:
        outcomes = [sweep_prime(config, p) for p in primes]
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as executor:
            outcomes = list(executor.map(_sweep_prime_job, jobs))

    records: List[Record] = []
    summary = SummaryRecord(primes=len(primes), checks=len(select_checks(config)))
    for prime_records, known in outcomes:
        records.extend(prime_records)
        summary.known_fail += known
    records.sort(key=lambda r: (r["id"], r["p"]))
    for record in records:
        status = Status(record["status"])
        if status is Status.PASS:
            summary.passed += 1
        elif status is Status.FAIL:
            summary.fail += 1
        else:
            summary.skipped += 1
    summary.total = len(records)
    if not config.no_timing:
        summary.wall_ms = int((time.perf_counter() - started) * 1000)

    logger.info(
        "Sweep %d..%d: %d pass, %d fail, %d skipped (%d known failures reproduced)",
        config.prime_lo,
        config.prime_hi,
        summary.passed,
        summary.fail,
        summary.skipped,
        summary.known_fail,
    )
    return Report(records=records, summary=summary)
