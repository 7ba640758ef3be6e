import logging
import math
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

from forge.config_space.coloring import Coloring
from forge.config_space.config_simplex import ConfigSimplex
from forge.config_space.config_space import ConfigurationSpace
from forge.morse.vector_field import DiscreteVectorField, acyclicity, check_dvf
from forge.params import BalancedParams

logger = logging.getLogger("forge")

INFINITY = math.inf

Vertex = Union[int, float]


class StepAddress(NamedTuple):
    """
    Big step j in 1..r, small step i in 1..k+1 (the color C_i).
    """
    j: int
    i: int

    def __str__(self) -> str:
        return f"{self.j}.{self.i}"


def step_addresses(params: BalancedParams) -> List[StepAddress]:
    return [StepAddress(j, i) for j in range(1, params.r + 1) for i in range(1, params.k + 2)]


class MatchingAssertionError(AssertionError):
    pass


def a_value(simplex: ConfigSimplex, j: int, i: int, coloring: Coloring, history: Optional[Vertex] = None) -> Vertex:
    """
    Smallest (by position) vertex of color C_i in A_j ∪ B whose position is strictly above
    the position of the previous value a_{j-1}^i (given as history; None when j = 1).
    """
    if history is INFINITY:
        return INFINITY
    threshold = 0 if history is None else coloring.position_of(history)
    part = simplex.parts[j - 1]
    for v in coloring.classes[i - 1]:
        if coloring.position_of(v) > threshold and (v in part or simplex.in_remainder(v)):
            return v
    return INFINITY


def a_values(simplex: ConfigSimplex, params: BalancedParams, coloring: Coloring) -> Dict[StepAddress, Vertex]:
    values: Dict[StepAddress, Vertex] = {}
    for i in range(1, params.k + 2):
        previous = None
        for j in range(1, params.r + 1):
            previous = a_value(simplex, j, i, coloring, previous)
            values[StepAddress(j, i)] = previous
    return values


def pi_tuple(simplex: ConfigSimplex, params: BalancedParams, coloring: Coloring, through: Optional[StepAddress] = None) -> Tuple[Vertex, ...]:
    """
    Values a_j^i as within-color positions, listed in step order; INFINITY compares above any position.
    With `through` set, only the steps up to and including that one are listed, so a label
    matched at an earlier step yields a shorter tuple.
    """
    values = a_values(simplex, params, coloring)
    steps = step_addresses(params)
    if through is not None:
        steps = steps[:steps.index(through) + 1]
    return tuple(
        INFINITY if values[step] is INFINITY else coloring.position_of(values[step])
        for step in steps
    )


class MatchingResult:
    """
    Output of the step matching: the vector field on the flat complex plus label-level
    bookkeeping (pairs, step of each pair, decision tags of critical labels).
    """

    def __init__(self, space: ConfigurationSpace, pairs: List[Tuple[ConfigSimplex, ConfigSimplex]], step_of: Dict[ConfigSimplex, StepAddress], tags: Dict[ConfigSimplex, List[Tuple[StepAddress, str]]]) -> None:
        self.space = space
        self.label_pairs = pairs
        self.step_of = step_of
        self.tags = tags
        self.field = DiscreteVectorField(space.complex, [(lower.to_face(), upper.to_face()) for lower, upper in pairs])
        self._partner = {}
        for lower, upper in pairs:
            self._partner[lower] = upper
            self._partner[upper] = lower

    def partner(self, label: ConfigSimplex) -> Optional[ConfigSimplex]:
        return self._partner.get(label)

    def is_matched_up(self, label: ConfigSimplex) -> bool:
        partner = self._partner.get(label)
        return partner is not None and partner.dimension > label.dimension

    def critical_labels(self) -> List[ConfigSimplex]:
        return [label for label in self.space.labels if label not in self._partner]

    def to_json(self) -> dict:
        document = self.field.to_json()
        document["steps"] = [str(self.step_of[lower]) for lower, _ in sorted(self.label_pairs, key=lambda p: p[0].sort_key())]
        document["critical_tags"] = {
            str(sorted(label.to_face())): [f"{step}:{tag}" for step, tag in self.tags.get(label, [])]
            for label in self.critical_labels()
        }
        return document


class StepMatching:
    """
    Sequential matching on the configuration space.

    Steps (j, i) are processed in lexicographic order. At each step every still unmatched label
    σ toggles a = a_j^i(σ) between A_j and B; σ and the toggled label τ are paired when τ is a
    simplex and is unmatched as well.
    """

    def __init__(self, space: ConfigurationSpace) -> None:
        self.space = space
        self.params = space.params
        self.coloring = space.coloring
        self.logger = logging.getLogger("forge")

    def run(self) -> MatchingResult:
        labels = self.space.labels
        values = {label: a_values(label, self.params, self.coloring) for label in labels}
        matched: Dict[ConfigSimplex, ConfigSimplex] = {}
        pairs: List[Tuple[ConfigSimplex, ConfigSimplex]] = []
        step_of: Dict[ConfigSimplex, StepAddress] = {}
        tags: Dict[ConfigSimplex, List[Tuple[StepAddress, str]]] = {}

        for step in step_addresses(self.params):
            paired_now = 0
            for sigma in labels:
                if sigma in matched:
                    continue
                a = values[sigma][step]
                if a is INFINITY:
                    tags.setdefault(sigma, []).append((step, "undefined"))
                    continue
                adding = sigma.in_remainder(a)
                tau = sigma.toggled(step.j - 1, a)
                if tau.is_empty or tau not in self.space:
                    tags.setdefault(sigma, []).append((step, "add-blocked" if adding else "remove-blocked"))
                    continue
                if tau in matched:
                    tags.setdefault(sigma, []).append((step, "partner-taken"))
                    continue
                if values[tau][step] != a:
                    raise MatchingAssertionError(
                        f"Toggle invariance fails at step {step}: a({sigma}) = {a}, a({tau}) = {values[tau][step]}")
                if adding:
                    lower, upper = sigma, tau
                else:
                    lower, upper = tau, sigma
                matched[sigma] = tau
                matched[tau] = sigma
                pairs.append((lower, upper))
                step_of[lower] = step
                step_of[upper] = step
                paired_now += 1
            self.logger.debug(f"Step {step}: {paired_now} pairs")

        for label in matched:
            if matched[matched[label]] != label:
                raise MatchingAssertionError(f"{label} is matched twice")
        result = MatchingResult(self.space, pairs, step_of, {label: tags.get(label, []) for label in labels if label not in matched})
        self.logger.info(
            f"Matching on {len(labels)} simplices: {len(pairs)} pairs, "
            f"critical cells by dimension {result.field.critical_by_dimension()}")
        return result


def step_matching(space: ConfigurationSpace) -> MatchingResult:
    return StepMatching(space).run()


class MonotonicityReport:

    def __init__(self, segments_checked: int, violations: List[Tuple[ConfigSimplex, ConfigSimplex, ConfigSimplex]]) -> None:
        self.segments_checked = segments_checked
        self.violations = violations

    @property
    def monotone(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "segments_checked": self.segments_checked,
            "violations": [[a.to_json(), b.to_json(), c.to_json()] for a, b, c in self.violations],
        }


def pi_monotonicity(result: MatchingResult) -> MonotonicityReport:
    """
    For every segment α0 ↗ β0 ↘ α1 with α1 ≠ α0 and α1 itself matched upward (so the path
    can continue), checks that Π(α1) < Π(α0) lexicographically. Π of a label lists its values
    up to the step at which it was matched; a proper prefix compares lower.
    """
    space = result.space
    pis: Dict[ConfigSimplex, Tuple[Vertex, ...]] = {}

    def pi(label):
        if label not in pis:
            pis[label] = pi_tuple(label, space.params, space.coloring, through=result.step_of.get(label))
        return pis[label]

    checked = 0
    violations = []
    for alpha0, beta0 in result.label_pairs:
        for slot, part in enumerate(beta0.parts):
            for v in sorted(part):
                alpha1 = beta0.toggled(slot, v)
                if alpha1 == alpha0 or alpha1.is_empty or not result.is_matched_up(alpha1):
                    continue
                checked += 1
                if not pi(alpha1) < pi(alpha0):
                    violations.append((alpha0, beta0, alpha1))
    logger.info(f"Checked {checked} gradient path segments, {len(violations)} violations")
    return MonotonicityReport(checked, violations)


def verify_matching(result: MatchingResult) -> dict:
    """
    Structural checks of the matching: validity, acyclicity and monotonicity.
    """
    return {
        "dvf": check_dvf(result.field).to_json(),
        "acyclicity": acyclicity(result.field).to_json(),
        "monotonicity": pi_monotonicity(result).to_json(),
    }
