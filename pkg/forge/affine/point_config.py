import itertools
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix, Rational

from forge.params import balanced_params

logger = logging.getLogger("forge")

Point = Tuple[Fraction, ...]


class InvalidPointConfigError(ValueError):
    pass


def parse_fraction(text) -> Fraction:
    if isinstance(text, bool):
        raise InvalidPointConfigError(f"Not a rational coordinate: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise InvalidPointConfigError(f"Not a rational coordinate: {text!r}")
    raise InvalidPointConfigError(f"Coordinates should be \"p/q\" strings or integers, got {text!r}")


def format_fraction(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class RationalPointConfig:
    """
    Points of Q^d, optionally colored (the color classes partition the indices) and with
    a multiplicity per point.
    """

    def __init__(self, d: int, points: Sequence[Sequence], colors: Optional[Sequence[Sequence[int]]] = None, multiplicities: Optional[Sequence[int]] = None) -> None:
        if d < 1:
            raise InvalidPointConfigError(f"Dimension should be positive, got {d}")
        self.d = d
        self.points: List[Point] = [tuple(parse_fraction(x) if not isinstance(x, Fraction) else x for x in p) for p in points]
        for index, p in enumerate(self.points):
            if len(p) != d:
                raise InvalidPointConfigError(f"Point {index} has {len(p)} coordinates, expected {d}")
        self.colors: Optional[List[List[int]]] = [list(c) for c in colors] if colors is not None else None
        if self.colors is not None:
            flat = sorted(v for c in self.colors for v in c)
            if flat != list(range(len(self.points))):
                raise InvalidPointConfigError("Color classes should partition the point indices")
        if multiplicities is not None and len(multiplicities) != len(self.points):
            raise InvalidPointConfigError("There should be one multiplicity per point")
        self.multiplicities = list(multiplicities) if multiplicities is not None else None

    def __len__(self) -> int:
        return len(self.points)

    def color_of(self, index: int) -> int:
        if self.colors is None:
            raise InvalidPointConfigError("The configuration has no colors")
        for color, members in enumerate(self.colors):
            if index in members:
                return color
        raise InvalidPointConfigError(f"Point {index} has no color")

    @property
    def color_sizes(self) -> List[int]:
        return [len(c) for c in self.colors] if self.colors is not None else []

    def to_json(self) -> dict:
        document = {
            "d": self.d,
            "points": [[format_fraction(x) for x in p] for p in self.points],
        }
        if self.colors is not None:
            document["colors"] = self.colors
        if self.multiplicities is not None:
            document["multiplicities"] = self.multiplicities
        return document

    @classmethod
    def from_json(cls, data: dict) -> "RationalPointConfig":
        try:
            d = int(data["d"])
            points = data["points"]
        except KeyError as e:
            raise InvalidPointConfigError(f"Point configuration misses field {e}")
        except (TypeError, ValueError) as e:
            raise InvalidPointConfigError(f"Malformed point configuration: {e}")
        return cls(d, points, data.get("colors"), data.get("multiplicities"))

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalPointConfig) and self.to_json() == other.to_json()

    def __repr__(self) -> str:
        return f"RationalPointConfig(d={self.d}, n={len(self.points)}, colors={self.color_sizes})"


def affinely_independent(points: Sequence[Point]) -> bool:
    if len(points) <= 1:
        return True
    base = points[0]
    rows = [[Rational(x.numerator, x.denominator) - Rational(b.numerator, b.denominator) for x, b in zip(p, base)] for p in points[1:]]
    matrix = Matrix(rows)
    if matrix.rows == matrix.cols:
        return matrix.det(method="bareiss") != 0
    return matrix.rank() == len(points) - 1


def in_general_position(config: RationalPointConfig) -> bool:
    """
    No d+1 of the points are affinely dependent.
    """
    size = min(config.d + 1, len(config.points))
    return all(affinely_independent(subset) for subset in itertools.combinations(config.points, size))


def color_preset(preset: str, r: int, d: int) -> List[int]:
    """
    Color class sizes of the colored settings: type-a has d+1 classes of size r-1 plus a
    singleton, balanced (also type-b) k+1 classes of size 2r-1, nine-point three classes
    of three planar points, seven-point the pairs A, B, C and the singleton D.
    """
    if preset == "type-a":
        return [r - 1] * (d + 1) + [1]
    if preset in ("type-b", "balanced"):
        params = balanced_params(r, d)
        return [params.class_size] * params.colors
    if preset == "nine-point":
        return [3, 3, 3]
    if preset == "seven-point":
        return [2, 2, 2, 1]
    raise AttributeError(f"Unknown color preset '{preset}'")


def parse_color_spec(spec: Optional[str], r: int, d: int) -> Optional[List[int]]:
    if spec is None:
        return None
    if spec and all(part.strip().isdigit() for part in spec.split(",")):
        sizes = [int(part) for part in spec.split(",")]
        if any(size < 1 for size in sizes):
            raise InvalidPointConfigError(f"Color classes should be nonempty: {spec}")
        return sizes
    return color_preset(spec, r, d)


def random_config(seed: int, n: int, d: int, color_sizes: Optional[Sequence[int]] = None, general: bool = True, coordinate_range: int = 100, denominator: int = 7, max_tries: int = 1000) -> RationalPointConfig:
    """
    Seeded random rational points, resampled until they are in general position.
    """
    if color_sizes is not None and sum(color_sizes) != n:
        raise InvalidPointConfigError(f"Color classes {list(color_sizes)} do not add up to {n} points")
    rng = np.random.default_rng(seed)
    colors = None
    if color_sizes is not None:
        colors, offset = [], 0
        for size in color_sizes:
            colors.append(list(range(offset, offset + size)))
            offset += size
    for attempt in range(max_tries):
        numerators = rng.integers(-coordinate_range, coordinate_range + 1, size=(n, d))
        denominators = rng.integers(1, denominator + 1, size=(n, d))
        points = [
            tuple(Fraction(int(numerators[i, c]), int(denominators[i, c])) for c in range(d))
            for i in range(n)
        ]
        config = RationalPointConfig(d, points, colors)
        if not general or in_general_position(config):
            if attempt:
                logger.debug(f"General position reached after {attempt + 1} samples")
            return config
    raise InvalidPointConfigError(f"No general-position sample in {max_tries} tries")


def regular_hexagon_with_center() -> RationalPointConfig:
    """
    Rational stand-in for a hexagon around the origin, opposite vertices paired into the
    colors A, B, C; the center is D.
    """
    hexagon = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]
    points = [hexagon[0], hexagon[3], hexagon[1], hexagon[4], hexagon[2], hexagon[5], (0, 0)]
    return RationalPointConfig(2, [[Fraction(x), Fraction(y)] for x, y in points], [[0, 1], [2, 3], [4, 5], [6]])
