"""
Process based parallelism for independent parameter evaluations. Threads would share the GIL, so the work goes to a
:class:`concurrent.futures.ProcessPoolExecutor`. :meth:`ProcessPool.batch` maps a function over its inputs and
returns results in submission order, so output never depends on the number of workers.
"""
import logging
from concurrent import futures
from types import TracebackType
from typing import Any, Optional
from collections.abc import Callable, Iterable, Iterator

# Set up the logger for the module
logging.basicConfig(
    level=logging.DEBUG,
    format="%(asctime)s %(levelname)s %(name)s [%(lineno)d] %(message)s "
)

# Get the logger
logger: logging.Logger = logging.getLogger("polytri.parallel")


class ProcessPool:
    """
    A thin wrapper around :class:`concurrent.futures.ProcessPoolExecutor`, usable as a context manager.

    :ivar int n_workers: Number of worker processes.
    :ivar concurrent.futures.ProcessPoolExecutor executor: The executor doing the work.

    .. automethod:: __init__
    """
    def __init__(self, n_workers: int) -> None:
        """
        :raises TypeError: If n_workers is not an integer.
        :raises ValueError: If n_workers is smaller than one.
        :param int n_workers: Number of processes to spawn.
        """
        # Check that n_workers is a positive integer.
        if not isinstance(n_workers, int) or isinstance(n_workers, bool):
            logger.critical("ProcessPool - Incorrect Input Type")
            raise TypeError("Number Of Workers Not An Integer")

        if n_workers < 1:
            logger.critical("ProcessPool - Non Positive Worker Count")
            raise ValueError("Need At Least One Worker")

        self.n_workers: int = n_workers
        self.executor: futures.ProcessPoolExecutor = futures.ProcessPoolExecutor(max_workers=self.n_workers)

    def __enter__(self) -> "ProcessPool":
        return self

    def __exit__(
            self,
            exc_type: Optional[type[BaseException]],
            exc: Optional[BaseException],
            traceback: Optional[TracebackType]
    ) -> None:
        self.shutdown()

    def batch(self, func: Callable[..., Any], *iterables: Iterable[Any]) -> Iterator[Any]:
        """
        Maps ``func`` over the iterables across the workers.

        :param Callable[..., Any] func: A picklable, module level function.
        :param Iterable[Any] iterables: One iterable per positional argument of ``func``.
        :rtype: Iterator[Any]
        :return: Results in submission order.
        """
        return self.executor.map(func, *iterables)

    def single(self, func: Callable[..., Any], *arg: Any) -> futures.Future[Any]:
        """Submits one call and returns its future."""
        return self.executor.submit(func, *arg)

    def shutdown(self) -> None:
        """Waits for outstanding work and releases the workers."""
        self.executor.shutdown(wait=True)


def run_all(func: Callable[..., Any], args: list[tuple[Any, ...]], threads: int) -> list[Any]:
    """
    Evaluates ``func(*a)`` for every tuple in ``args``. With one thread everything runs in this process.

    >>> from polytri.parallel import run_all
    >>> run_all(pow, [(2, 3), (3, 2)], 1)
    [8, 9]
    """
    if threads == 1 or len(args) < 2:
        return [func(*a) for a in args]

    logger.debug(f"run_all - {len(args)} tasks on {threads} workers")
    with ProcessPool(min(threads, len(args))) as pool:
        return list(pool.batch(func, *zip(*args)))
