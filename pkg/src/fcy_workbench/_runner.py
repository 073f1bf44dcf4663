"""Suite execution and report assembly."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone

from ._config import WorkbenchConfig, threads_from_env
from ._models import Report, SuiteSummary
from ._suites import SuiteContext, SuiteRegistry, default_registry

logger = logging.getLogger(__name__)

ALL = "all"


def worker_count(config: WorkbenchConfig) -> int | None:
    """Configured thread count, capped by FCY_THREADS when set."""
    cap = threads_from_env()
    if cap is None:
        return config.threads
    return min(config.threads, cap) if config.threads else cap


def run_suite(
    name: str,
    config: WorkbenchConfig | None = None,
    registry: SuiteRegistry | None = None,
) -> Report:
    """Run one suite (or every suite for "all") and collect its cases in task order."""
    config = config or WorkbenchConfig()
    registry = registry or default_registry()
    names = registry.list_suites() if name == ALL else [name]
    suites = [registry.get(n) for n in names]

    ctx = SuiteContext(seed=config.seed, samples=config.samples, options=config.suites)
    tasks = [task for suite in suites for task in suite.tasks(ctx)]
    logger.debug("Running %s: %d tasks", name, len(tasks))

    start = time.perf_counter()
    with ThreadPoolExecutor(max_workers=worker_count(config)) as pool:
        batches = list(pool.map(lambda task: task(), tasks))
    wall_time = time.perf_counter() - start

    cases = [case for batch in batches for case in batch]
    passed = sum(1 for case in cases if case.passed)
    logger.debug("Finished %s: %d/%d passed in %.2fs", name, passed, len(cases), wall_time)
    return Report(
        suite=name,
        seed=config.seed,
        cases=cases,
        summary=SuiteSummary(total=len(cases), passed=passed, failed=len(cases) - passed),
        wall_time=wall_time,
        timestamp=datetime.now(timezone.utc).isoformat(),
    )
