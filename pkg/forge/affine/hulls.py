import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from forge.affine.lp import lp_feasible
from forge.affine.point_config import InvalidPointConfigError, Point, RationalPointConfig, format_fraction

logger = logging.getLogger("forge")


class PartitionWitness:
    """
    Parts S_1..S_r (point indices), a common point x and per part the barycentric weights
    expressing x as a convex combination of the part.
    """

    def __init__(self, parts: Sequence[Sequence[int]], point: Point, weights: Sequence[Sequence[Fraction]]) -> None:
        self.parts = [list(part) for part in parts]
        self.point = tuple(point)
        self.weights = [list(w) for w in weights]

    def to_json(self) -> dict:
        return {
            "parts": self.parts,
            "point": [format_fraction(x) for x in self.point],
            "weights": [[format_fraction(x) for x in w] for w in self.weights],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PartitionWitness":
        return cls(
            data["parts"],
            tuple(Fraction(x) for x in data["point"]),
            [[Fraction(x) for x in w] for w in data["weights"]])

    def render(self) -> str:
        width = max(len(str(part)) for part in self.parts)
        lines = [f"common point ({', '.join(format_fraction(x) for x in self.point)})"]
        for i, (part, weights) in enumerate(zip(self.parts, self.weights), start=1):
            lines.append(f"  S{i} {str(part).ljust(width)}  weights {', '.join(format_fraction(w) for w in weights)}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"PartitionWitness(parts={self.parts}, point={[format_fraction(x) for x in self.point]})"


def hulls_intersect(point_sets: Sequence[Sequence[Point]]) -> Optional[PartitionWitness]:
    """
    Common point of the convex hulls, as a feasibility problem in the barycentric weights:
    the weights of each set sum to one and all sets produce the same point.
    Parts of the returned witness index into the given sets.
    """
    if not point_sets:
        raise InvalidPointConfigError("At least one point set is required")
    if any(not points for points in point_sets):
        raise InvalidPointConfigError("Point sets should be nonempty")
    d = len(point_sets[0][0])
    offsets, total = [], 0
    for points in point_sets:
        offsets.append(total)
        total += len(points)

    equalities: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for offset, points in zip(offsets, point_sets):
        row = [Fraction(0)] * total
        for j in range(len(points)):
            row[offset + j] = Fraction(1)
        equalities.append(row)
        rhs.append(Fraction(1))
    first = point_sets[0]
    for offset, points in zip(offsets[1:], point_sets[1:]):
        for c in range(d):
            row = [Fraction(0)] * total
            for j, p in enumerate(first):
                row[j] += p[c]
            for j, p in enumerate(points):
                row[offset + j] -= p[c]
            equalities.append(row)
            rhs.append(Fraction(0))

    result = lp_feasible(equalities, rhs)
    if not result.feasible:
        return None
    weights = [result.solution[offset:offset + len(points)] for offset, points in zip(offsets, point_sets)]
    point = tuple(sum((w * p[c] for w, p in zip(weights[0], first)), Fraction(0)) for c in range(d))
    return PartitionWitness([list(range(len(points))) for points in point_sets], point, weights)


def witness_for_parts(config: RationalPointConfig, parts: Sequence[Sequence[int]]) -> Optional[PartitionWitness]:
    """
    Runs hulls_intersect on the parts of a configuration; the witness carries the configuration indices.
    """
    found = hulls_intersect([[config.points[i] for i in part] for part in parts])
    if found is None:
        return None
    return PartitionWitness(parts, found.point, found.weights)


class WitnessError(ValueError):
    pass


def verify_witness(config: RationalPointConfig, witness: PartitionWitness) -> None:
    """
    Substitutes the weights back: nonnegative, summing to one per part, reproducing the common point.
    """
    if len(witness.parts) != len(witness.weights):
        raise WitnessError("Every part needs its weights")
    for i, (part, weights) in enumerate(zip(witness.parts, witness.weights)):
        if len(part) != len(weights):
            raise WitnessError(f"Part {i} has {len(part)} points but {len(weights)} weights")
        if any(w < 0 for w in weights):
            raise WitnessError(f"Part {i} has a negative weight")
        if sum(weights, Fraction(0)) != 1:
            raise WitnessError(f"Weights of part {i} do not sum to one")
        for c in range(config.d):
            value = sum((w * config.points[index][c] for w, index in zip(weights, part)), Fraction(0))
            if value != witness.point[c]:
                raise WitnessError(f"Part {i} misses the common point in coordinate {c} by {value - witness.point[c]}")


def is_valid_witness(config: RationalPointConfig, witness: PartitionWitness) -> bool:
    try:
        verify_witness(config, witness)
    except WitnessError:
        return False
    return True
