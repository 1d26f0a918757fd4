"""
Parallel execution of independent Monte Carlo trials
Every trial owns its random stream, so results do not depend on how tasks
are spread over worker threads.
"""

import logging
from typing import Callable, Iterable, List, Optional, TypeVar

from django.conf import settings
from joblib import Parallel, delayed

logger = logging.getLogger(__name__)

Task = TypeVar("Task")
Result = TypeVar("Result")


def resolve_workers(workers: Optional[int] = None) -> int:
    """joblib n_jobs for an explicit or configured thread count; 0 = all cores"""
    threads = settings.PM_THREADS if workers is None else workers
    if threads < 0:
        raise ValueError(f"worker count must be non-negative, got {threads}")
    return -1 if threads == 0 else threads


def run_tasks(
    function: Callable[[Task], Result],
    tasks: Iterable[Task],
    workers: Optional[int] = None,
) -> List[Result]:
    """function(task) for every task, results in task order"""
    tasks = list(tasks)
    n_jobs = resolve_workers(workers)
    logger.debug("running %d tasks with n_jobs=%d", len(tasks), n_jobs)
    return Parallel(n_jobs=n_jobs, prefer="threads")(delayed(function)(task) for task in tasks)
