import logging
from typing import Dict, List, Optional, Sequence

from forge.affine.hulls import PartitionWitness, verify_witness, witness_for_parts
from forge.affine.point_config import InvalidPointConfigError, RationalPointConfig
from forge.search_strategy.partition_sequence import Blocks, PartitionSequence
from forge.search_strategy.sequence_strategy import SequenceStrategy

logger = logging.getLogger("forge")


class SearchResult:

    def __init__(self, witness: Optional[PartitionWitness], evaluated: int, errors: int = 0, reverse: bool = False) -> None:
        self.witness = witness
        self.evaluated = evaluated
        self.errors = errors
        self.reverse = reverse

    @property
    def found(self) -> bool:
        return self.witness is not None

    @property
    def exhausted(self) -> bool:
        """
        Certified absence of a witness: every candidate was evaluated without errors.
        """
        return self.witness is None and self.errors == 0

    def to_json(self) -> dict:
        return {
            "found": self.found,
            "evaluated": self.evaluated,
            "errors": self.errors,
            "reverse": self.reverse,
            "witness": self.witness.to_json() if self.witness else None,
        }


def search_partitions(config: RationalPointConfig, candidates, reverse: bool = False, transform=None) -> SearchResult:
    """
    Evaluates candidate part lists in order and returns the first one whose hulls intersect.
    `transform` maps a candidate to the point-index parts tested.
    """
    transform = transform if transform is not None else (lambda blocks: [list(block) for block in blocks])

    def evaluate(blocks):
        return witness_for_parts(config, transform(blocks))

    strategy = SequenceStrategy(candidates, evaluate, reverse=reverse)
    elem = strategy.run()
    witness = elem.outcome if elem is not None else None
    if witness is not None:
        verify_witness(config, witness)
    return SearchResult(witness, strategy.evaluated, strategy.errors, reverse)


def tverberg_search(config: RationalPointConfig, r: int, size_caps: Sequence[int] = None, reverse: bool = False) -> SearchResult:
    """
    Partitions of all points into r nonempty parts with intersecting hulls.
    """
    if len(config) < r:
        raise InvalidPointConfigError(f"Cannot split {len(config)} points into {r} nonempty parts")
    sequence = PartitionSequence(range(len(config)), r, caps=size_caps)
    sequence.check_limit()
    logger.info(f"Tverberg search with r = {r} on {config}")
    return search_partitions(config, iter(sequence), reverse)


def dimension_caps(r: int, k: int, s: int) -> List[int]:
    """
    s parts of dimension at most k, the other r - s of dimension at most k - 1.
    """
    return [k + 1] * s + [k] * (r - s)


def rainbow_search(config: RationalPointConfig, r: int, k: int = None, s: int = None, size_caps: Sequence[int] = None, reverse: bool = False) -> SearchResult:
    """
    r pairwise disjoint rainbow parts with intersecting hulls; only maximal part tuples are tried
    since enlarging a part keeps a common point.
    """
    if config.colors is None:
        raise InvalidPointConfigError("Rainbow search needs a colored configuration")
    if k is not None and s is not None:
        if not 0 <= s <= r:
            raise InvalidPointConfigError(f"s should lie in [0, {r}], got {s}")
        if k + 1 > len(config.colors):
            raise InvalidPointConfigError(f"Rainbow parts of dimension {k} need {k + 1} colors, the configuration has {len(config.colors)}")
        size_caps = dimension_caps(r, k, s)
    color = {index: c for c, members in enumerate(config.colors) for index in members}

    def rainbow(block, item):
        return all(color[other] != color[item] for other in block)

    sequence = PartitionSequence(range(len(config)), r, caps=size_caps, admissible=rainbow, allow_unassigned=True, maximal=True)
    sequence.check_limit()
    logger.info(f"Rainbow search with r = {r}, caps {size_caps} on {config}")
    return search_partitions(config, iter(sequence), reverse)


SEVEN_POINT_SHAPE = [2, 2, 2, 1]


def seven_point_lift(config: RationalPointConfig) -> Dict[int, int]:
    """
    Vertices of K_{3,3,3,1} (color-major) to point indices: the third vertex of each 3-class
    lands on the second point of the pair.
    """
    if config.colors is None or [len(c) for c in config.colors] != SEVEN_POINT_SHAPE:
        raise InvalidPointConfigError(f"Expected color classes of sizes {SEVEN_POINT_SHAPE}, got {config.color_sizes}")
    lift = {}
    for c in range(3):
        first, second = config.colors[c]
        lift[3 * c] = first
        lift[3 * c + 1] = second
        lift[3 * c + 2] = second
    lift[9] = config.colors[3][0]
    return lift


def seven_point_search(config: RationalPointConfig, reverse: bool = False) -> SearchResult:
    """
    Four rainbow sets, the first point of each pair and the singleton used once and the second
    point of each pair twice: four disjoint rainbow faces of K_{3,3,3,1} covering all ten
    vertices, pushed through the 3-to-2 quotient.
    """
    lift = seven_point_lift(config)

    def rainbow(block, item):
        return all(other // 3 != item // 3 for other in block)

    sequence = PartitionSequence(range(10), 4, admissible=rainbow)
    sequence.check_limit()

    def transform(blocks: Blocks):
        return [sorted(lift[v] for v in block) for block in blocks]

    logger.info(f"Seven-point search on {config}")
    return search_partitions(config, iter(sequence), reverse, transform)


def multiplicity_profile(witness: PartitionWitness, n: int) -> List[int]:
    counts = [0] * n
    for part in witness.parts:
        for index in part:
            counts[index] += 1
    return counts
