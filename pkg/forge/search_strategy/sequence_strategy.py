import itertools
import logging
from threading import Thread
from typing import Any, Callable, Generic, Iterable, Iterator, List, Optional

from forge.config import Config
from forge.search_strategy.sequence_elem import ElemState, SequenceElem, Type


class SequenceFinished(Exception):
    pass


class SequenceStrategy(Generic[Type]):
    """
    Evaluates candidates in batches of Config.threads worker threads and stops at the first
    batch holding a witness; the reported witness is the first one in sequence order.
    """

    def __init__(self, values: Iterable[Type], evaluate: Callable[[Type], Optional[Any]], reverse: bool = False, batch_size: int = None) -> None:
        self.logger = logging.getLogger("forge")
        if reverse:
            values = list(values)[::-1]
        self._values: Iterator[Type] = iter(values)
        self.evaluate = evaluate
        self.batch_size = batch_size if batch_size is not None else Config.threads
        self.reverse = reverse
        self.evaluated = 0
        self.errors = 0
        self._next_index = 0

    def next_batch(self) -> List[SequenceElem]:
        values = list(itertools.islice(self._values, self.batch_size))
        if not values:
            raise SequenceFinished()
        batch = [SequenceElem(self._next_index + i, value) for i, value in enumerate(values)]
        self._next_index += len(batch)
        return batch

    def _evaluate_elem(self, elem: SequenceElem) -> None:
        elem.state = ElemState.IN_PROGRESS
        try:
            elem.update_outcome(self.evaluate(elem.value))
        except Exception:
            self.logger.error(f"Evaluation of candidate {elem.index} failed", exc_info=True)
            elem.mark_error()

    def evaluate_batch(self, batch: List[SequenceElem]) -> None:
        if len(batch) == 1:
            self._evaluate_elem(batch[0])
        else:
            threads = []
            for elem in batch:
                thread = ThreadWithReturnValue(target=self._evaluate_elem, args=(elem,))
                thread.start()
                threads.append(thread)
            for thread in threads:
                thread.join()
            for elem in batch:
                if elem.state == ElemState.IN_PROGRESS:
                    self.logger.error(f"Candidate {elem.index} was left unfinished by its worker")
                    elem.mark_error()
        self.evaluated += len(batch)
        self.errors += sum(1 for elem in batch if elem.state == ElemState.ERROR)

    def run(self) -> Optional[SequenceElem]:
        while True:
            try:
                batch = self.next_batch()
            except SequenceFinished:
                self.logger.info(f"Sequence exhausted after {self.evaluated} candidates")
                return None
            self.evaluate_batch(batch)
            for elem in batch:
                if elem.has_witness:
                    self.logger.info(f"Witness found at candidate {elem.index} after {self.evaluated} evaluations")
                    return elem


class ThreadWithReturnValue(Thread):
    def __init__(self, group=None, target=None, name=None, args=(), kwargs=None):
        Thread.__init__(self, group=group, target=target, name=name, args=args, kwargs=kwargs or {})
        self._return = None

    def run(self):
        if self._target is not None:
            self._return = self._target(*self._args, **self._kwargs)

    def join(self, *args):
        Thread.join(self, *args)
        return self._return
