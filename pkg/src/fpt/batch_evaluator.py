import logging
from concurrent.futures import Executor, ThreadPoolExecutor, as_completed
from contextlib import nullcontext
from .._compat import batched
from typing import Callable, Generic, Iterable, Iterator, Sequence, TypeVar

from tqdm import tqdm

from ..errors import DsmError

T = TypeVar("T")
R = TypeVar("R")


class BatchEvaluator(Generic[T, R]):
    """Runs ``evaluate`` over a stream in fixed-size batches.

    Results come back in stream order regardless of how many workers ran the
    batch, and items evaluating to ``None`` are dropped. A failing evaluation is
    logged and counted as ``None`` when it raises a ``DsmError``; any other
    exception is logged and propagates.
    """

    def __init__(self, evaluate: Callable[[T], R | None], threads: int = 1, batch_size: int = 64,
                 show_progress: bool = False, desc: str = "Evaluating configurations"):
        self.logger = logging.getLogger(__name__)
        self.evaluate = evaluate
        self.threads = threads
        self.batch_size = batch_size
        self.show_progress = show_progress
        self.desc = desc
        self.evaluated = 0

    def accepted(self, items: Iterable[T]) -> Iterator[tuple[T, R]]:
        progress = tqdm(desc=self.desc, unit="config", disable=not self.show_progress)
        pool = ThreadPoolExecutor(max_workers=self.threads) if self.threads > 1 else nullcontext()
        try:
            with pool as executor:
                for batch in batched(items, self.batch_size):
                    results = self._evaluate_batch(batch, executor)
                    self.evaluated += len(batch)
                    progress.update(len(batch))
                    for item, result in zip(batch, results):
                        if result is not None:
                            yield item, result
        finally:
            progress.close()

    def _evaluate_one(self, item: T) -> R | None:
        try:
            return self.evaluate(item)
        except DsmError as e:
            self.logger.error(f"Error while evaluating {item!r:.80}: {e}")
            return None
        except Exception:
            self.logger.exception(f"Unexpected failure while evaluating {item!r:.80}")
            raise

    def _evaluate_batch(self, batch: Sequence[T], executor: Executor | None) -> list[R | None]:
        if executor is None:
            return [self._evaluate_one(item) for item in batch]
        results = [None] * len(batch)
        futures = {executor.submit(self._evaluate_one, item): pos for pos, item in enumerate(batch)}
        for future in as_completed(futures):
            results[futures[future]] = future.result()
        return results
