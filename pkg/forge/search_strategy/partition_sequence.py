import logging
import math
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from forge.config import Config

Blocks = Tuple[Tuple[int, ...], ...]


def fits_caps(sizes: Sequence[int], caps: Sequence[int]) -> bool:
    """
    Blocks are unordered: the sizes fit when, both sorted decreasingly, each size stays below its cap.
    """
    return len(sizes) <= len(caps) and all(
        size <= cap for size, cap in zip(sorted(sizes, reverse=True), sorted(caps, reverse=True)))


class PartitionSequence:
    """
    Assignments of items to r interchangeable blocks, listed once per unordered partition.

    Blocks are opened in the order of their minimal item (restricted growth). With
    allow_unassigned, items may stay outside every block; maximal keeps only assignments
    where no outside item can join a block. Every listed assignment has r nonempty blocks.
    """

    def __init__(
            self,
            items: Sequence[int],
            r: int,
            caps: Sequence[int] = None,
            admissible: Callable[[List[int], int], bool] = None,
            allow_unassigned: bool = False,
            maximal: bool = False) -> None:
        self.logger = logging.getLogger("forge")
        if caps is not None and len(caps) != r:
            raise AttributeError(f"Expected {r} caps, got {len(caps)}")
        self.items = list(items)
        self.r = r
        self.caps = list(caps) if caps is not None else None
        self.admissible = admissible if admissible is not None else lambda block, item: True
        self.allow_unassigned = allow_unassigned
        self.maximal = maximal

    def estimated_size(self) -> int:
        choices = self.r + (1 if self.allow_unassigned else 0)
        return choices ** len(self.items) // math.factorial(self.r)

    def check_limit(self) -> None:
        Config.check_limit("max_partition_candidates", self.estimated_size())

    def _can_join(self, blocks: List[List[int]], slot: int, item: int) -> bool:
        if not self.admissible(blocks[slot], item):
            return False
        if self.caps is None:
            return True
        sizes = [len(block) + (1 if i == slot else 0) for i, block in enumerate(blocks)]
        return fits_caps(sizes, self.caps)

    def _is_maximal(self, blocks: List[List[int]], outside: List[int]) -> bool:
        return not any(self._can_join(blocks, slot, item) for item in outside for slot in range(self.r))

    def __iter__(self) -> Iterator[Blocks]:
        blocks: List[List[int]] = []
        outside: List[int] = []
        n = len(self.items)

        def extend(index: int) -> Iterator[Blocks]:
            # the remaining items must be able to open the missing blocks
            if self.r - len(blocks) > n - index:
                return
            if index == n:
                padded = blocks + [[] for _ in range(self.r - len(blocks))]
                if not self.maximal or self._is_maximal(padded, outside):
                    yield tuple(tuple(block) for block in blocks)
                return
            item = self.items[index]
            padded = blocks + [[]]
            for slot in range(min(len(blocks) + 1, self.r)):
                if slot == len(blocks):
                    if not self._can_join(padded, slot, item):
                        continue
                    blocks.append([item])
                    yield from extend(index + 1)
                    blocks.pop()
                elif self._can_join(blocks, slot, item):
                    blocks[slot].append(item)
                    yield from extend(index + 1)
                    blocks[slot].pop()
            if self.allow_unassigned:
                outside.append(item)
                yield from extend(index + 1)
                outside.pop()

        yield from extend(0)


def partition_count(sequence: PartitionSequence, limit: Optional[int] = None) -> int:
    count = 0
    for _ in sequence:
        count += 1
        if limit is not None and count >= limit:
            break
    return count
