import itertools
import logging
import math
from typing import Dict, List, Optional, Tuple

from forge.complexes.simplicial_complex import Face, SimplicialComplex
from forge.config import Config
from forge.config_space.coloring import Coloring, InvalidColoringError
from forge.config_space.config_simplex import ConfigSimplex, InvalidLabelError
from forge.params import BalancedParams

logger = logging.getLogger("forge")


class ConfigSimplexClass:

    def __init__(self, full_colors: Tuple[bool, ...], k1_full: bool, saturated: bool) -> None:
        self.full_colors = full_colors
        self.k1_full = k1_full
        self.saturated = saturated

    def to_json(self) -> dict:
        return {"full_colors": list(self.full_colors), "k1_full": self.k1_full, "saturated": self.saturated}

    def __repr__(self) -> str:
        return f"ConfigSimplexClass(full={self.full_colors}, k1_full={self.k1_full}, saturated={self.saturated})"


def check_coloring(params: BalancedParams, coloring: Coloring) -> None:
    if coloring.ground_size != params.m:
        raise InvalidColoringError(f"Coloring covers {coloring.ground_size} vertices, expected m = {params.m}")
    if coloring.sizes != [params.class_size] * params.colors:
        raise InvalidColoringError(
            f"Expected {params.colors} classes of size {params.class_size}, got {coloring.sizes}")


def validate_label(simplex: ConfigSimplex, params: BalancedParams, coloring: Coloring) -> None:
    if simplex.r != params.r:
        raise InvalidLabelError(f"{simplex} has {simplex.r} parts, expected {params.r}")
    if simplex.is_empty:
        raise InvalidLabelError("The label with B = [m] is not a simplex")
    full_parts = 0
    for part in simplex.parts:
        if any(v < 0 or v >= params.m for v in part):
            raise InvalidLabelError(f"{simplex} uses vertices outside [0, {params.m})")
        if not coloring.is_rainbow(part):
            raise InvalidLabelError(f"Part {sorted(part)} of {simplex} is not rainbow")
        if len(part) > params.k + 1:
            raise InvalidLabelError(f"Part {sorted(part)} of {simplex} exceeds k+1 = {params.k + 1} vertices")
        if len(part) == params.k + 1:
            full_parts += 1
    if full_parts > params.s:
        raise InvalidLabelError(f"{simplex} has {full_parts} parts of size k+1, at most s = {params.s} allowed")


def is_valid_label(simplex: ConfigSimplex, params: BalancedParams, coloring: Coloring) -> bool:
    try:
        validate_label(simplex, params, coloring)
    except InvalidLabelError:
        return False
    return True


def classify(simplex: ConfigSimplex, params: BalancedParams, coloring: Coloring) -> ConfigSimplexClass:
    full_colors = tuple(
        all(any(coloring.color_of(v) == color for v in part) for part in simplex.parts)
        for color in range(coloring.colors)
    )
    k1_full = sum(1 for part in simplex.parts if len(part) == params.k + 1) == params.s
    saturated = k1_full and all(len(part) >= params.k for part in simplex.parts)
    return ConfigSimplexClass(full_colors, k1_full, saturated)


def estimated_label_count(params: BalancedParams) -> int:
    per_color = sum(math.comb(params.r, j) * math.perm(params.class_size, j) for j in range(params.r + 1))
    return per_color ** params.colors


class ConfigurationSpace:
    """
    The configuration space of r-tuples of disjoint rainbow sets with balanced size caps,
    materialized as a complex on [m] x [r] together with its labels.
    """

    def __init__(self, params: BalancedParams, coloring: Coloring, labels: List[ConfigSimplex]) -> None:
        self.params = params
        self.coloring = coloring
        self.labels = sorted(labels, key=ConfigSimplex.sort_key)
        self._label_set = set(self.labels)
        self._by_face: Dict[Face, ConfigSimplex] = {label.to_face(): label for label in self.labels}
        self._complex: Optional[SimplicialComplex] = None

    @property
    def complex(self) -> SimplicialComplex:
        if self._complex is None:
            facets = [label.to_face() for label in self.maximal_labels()]
            self._complex = SimplicialComplex(range(self.params.m * self.params.r), facets, maximal=True)
        return self._complex

    def __contains__(self, label: ConfigSimplex) -> bool:
        return label in self._label_set

    def __len__(self) -> int:
        return len(self.labels)

    def label_of(self, face: Face) -> ConfigSimplex:
        return self._by_face[face]

    def is_maximal(self, label: ConfigSimplex) -> bool:
        for v in range(self.params.m):
            if label.in_remainder(v):
                for slot in range(self.params.r):
                    if label.toggled(slot, v) in self._label_set:
                        return False
        return True

    def maximal_labels(self) -> List[ConfigSimplex]:
        return [label for label in self.labels if self.is_maximal(label)]

    def classify(self, label: ConfigSimplex) -> ConfigSimplexClass:
        return classify(label, self.params, self.coloring)

    def sidecar(self) -> List[dict]:
        """
        Map from flat faces to labels, in canonical order.
        """
        return [
            {"face": sorted(label.to_face()), "parts": label.to_json(), "remainder": sorted(label.remainder(self.params.m))}
            for label in self.labels
        ]


def build_config_space(params: BalancedParams, coloring: Coloring = None) -> ConfigurationSpace:
    if coloring is None:
        coloring = Coloring.standard(params.colors, params.class_size)
    check_coloring(params, coloring)
    Config.check_limit("max_config_space_labels", estimated_label_count(params))
    logger.info(f"Building configuration space for {params}")

    r, k, s = params.r, params.k, params.s
    # per color: the partial injections slots -> class
    options = []
    for members in coloring.classes:
        color_options = []
        for used in range(r + 1):
            for slots in itertools.combinations(range(r), used):
                for chosen in itertools.permutations(members, used):
                    color_options.append(tuple(zip(slots, chosen)))
        options.append(color_options)

    labels: List[ConfigSimplex] = []
    sizes = [0] * r
    parts: List[List[int]] = [[] for _ in range(r)]

    def extend(color):
        if color == len(options):
            if any(sizes):
                labels.append(ConfigSimplex(parts))
            return
        for option in options[color]:
            for slot, v in option:
                sizes[slot] += 1
                parts[slot].append(v)
            if max(sizes) <= k + 1 and sum(1 for size in sizes if size == k + 1) <= s:
                extend(color + 1)
            for slot, v in option:
                sizes[slot] -= 1
                parts[slot].pop()

    extend(0)
    logger.info(f"Configuration space has {len(labels)} simplices")
    return ConfigurationSpace(params, coloring, labels)
