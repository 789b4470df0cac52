"""
Parallel execution of check jobs.

Jobs run on a thread pool; records are merged in check-name order, so a
report does not depend on completion order or on the number of workers.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional

from harness.report import CheckRecord, Report, statusFor
from harness.scenarioConfig import ScenarioConfig
from harness.suites import CheckJob, buildJobs
from utils.errors import (
    DegeneracySpanNotSplit, NotACycle, NotChainMap, NotDivisible, NotSplitImage, TruncationUnsound,
)

logger = logging.getLogger(__name__)

# Errors that mean the library disagrees with itself; the check fails, the run goes on
BUG_SIGNALS = (NotChainMap, NotACycle, DegeneracySpanNotSplit, TruncationUnsound, NotSplitImage, NotDivisible)


def runJob(job: CheckJob, timing: bool = True) -> CheckRecord:
    """Run one job; an error raised by the check becomes a failed record."""
    start = time.perf_counter()
    try:
        outcome = job.run()
        expected: Any = {"formula": job.formula, "value": outcome.expected}
        computed: Any = outcome.computed
        passed = outcome.passed
    except BUG_SIGNALS as e:
        logger.warning("Check %s raised %s: %s", job.name, type(e).__name__, e)
        expected = {"formula": job.formula, "value": None}
        computed = {"error": type(e).__name__, "message": str(e)}
        passed = False
    except Exception as e:
        logger.warning("Check %s crashed with %s: %s", job.name, type(e).__name__, e, exc_info=True)
        expected = {"formula": job.formula, "value": None}
        computed = {"error": type(e).__name__, "message": str(e)}
        passed = False
    millis = int(round((time.perf_counter() - start) * 1000)) if timing else 0
    status = statusFor(passed, job.conjecture)
    if job.conjecture and not passed:
        logger.warning("Conjecture check %s disagrees", job.name)
    elif not passed:
        logger.info("Check %s failed", job.name)
    else:
        logger.debug("Check %s: %s in %d ms", job.name, status, millis)
    return CheckRecord(name=job.name, params=job.params, expected=expected, computed=computed,
                       status=status, millis=millis)


def runJobs(jobs: List[CheckJob], workers: int = 1, timing: bool = True) -> List[CheckRecord]:
    """
    Run jobs on a pool of worker threads.

    Args:
        jobs: Independent check jobs
        workers: Pool size; 1 runs the jobs in order on the calling thread
        timing: Record wall time per check (zero otherwise)

    Returns:
        Records sorted by check name
    """
    if workers <= 1:
        records = [runJob(job, timing) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda job: runJob(job, timing), jobs))
    return sorted(records, key=lambda record: record.name)


def configSummary(config: ScenarioConfig) -> Dict[str, Any]:
    """The scenario as recorded at the top of a report."""
    return config.model_dump(mode="json", exclude_none=True)


def runScenario(config: ScenarioConfig, workers: int = 1, timing: bool = True,
                jobs: Optional[List[CheckJob]] = None) -> Report:
    """
    Expand a scenario into jobs, run them and assemble the report.

    Raises:
        ValidationError: If the scenario instance misses a suite requirement
        UnsupportedIdeal: If the scenario ideal has no resolution recipe
    """
    jobs = buildJobs(config) if jobs is None else jobs
    logger.info("Running %d checks for %s on %d worker(s)", len(jobs), config.suite, workers)
    records = runJobs(jobs, workers, timing)
    report = Report(config=configSummary(config), records=records)
    counts = report.counts()
    logger.info("Suite %s finished: %d passed, %d failed", config.suite, counts["pass"], counts["fail"])
    return report
