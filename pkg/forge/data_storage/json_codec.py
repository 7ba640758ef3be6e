import json
from typing import Optional, Tuple

from forge.complexes.simplicial_complex import InvalidComplexError, SimplicialComplex
from forge.config_space.coloring import Coloring
from forge.config_space.config_simplex import ConfigSimplex, InvalidLabelError
from forge.config_space.config_space import ConfigurationSpace, check_coloring, validate_label
from forge.equivariant.action import PermAction, named_group_action
from forge.morse.vector_field import DiscreteVectorField
from forge.params import BalancedParams

SCHEMA_VERSION = 1


class CodecError(ValueError):
    pass


def _require(data: dict, *fields: str) -> None:
    if not isinstance(data, dict):
        raise CodecError(f"Expected a JSON object, got {type(data).__name__}")
    for field in fields:
        if field not in data:
            raise CodecError(f"Document misses field '{field}'")


def complex_to_json(complex_: SimplicialComplex, action: Optional[PermAction] = None) -> dict:
    document = {"ground_set": list(complex_.ground_set), "facets": complex_.facet_lists()}
    if action is not None:
        document["action"] = {
            "group": "trivial" if action.order == 1 else "klein4",
            "elements": action.to_json()["elements"],
        }
    return document


def complex_from_json(data: dict) -> SimplicialComplex:
    _require(data, "ground_set", "facets")
    try:
        return SimplicialComplex(data["ground_set"], data["facets"])
    except TypeError as e:
        raise InvalidComplexError(f"Malformed complex document: {e}")


def complex_with_action_from_json(data: dict, group: str) -> Tuple[SimplicialComplex, PermAction]:
    complex_ = complex_from_json(data)
    if group == "trivial":
        return complex_, named_group_action("trivial", complex_)
    if "action" not in data:
        raise CodecError(f"The complex document carries no {group} action")
    _require(data["action"], "elements")
    return complex_, named_group_action(group, complex_, data["action"]["elements"])


def params_from_json(data: dict) -> BalancedParams:
    _require(data, "r", "d", "k", "s", "m")
    try:
        values = [int(data[field]) for field in ("r", "d", "k", "s", "m")]
    except (TypeError, ValueError) as e:
        raise CodecError(f"Malformed parameters: {e}")
    return BalancedParams(*values)


def config_space_to_json(space: ConfigurationSpace) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "params": space.params.to_json(),
        "coloring": space.coloring.to_json(),
        "complex": complex_to_json(space.complex),
        "labels": space.sidecar(),
    }


def config_space_from_json(data: dict) -> ConfigurationSpace:
    _require(data, "params", "coloring", "labels")
    params = params_from_json(data["params"])
    coloring = Coloring.from_json(data["coloring"])
    check_coloring(params, coloring)
    labels = []
    for entry in data["labels"]:
        _require(entry, "parts")
        label = ConfigSimplex(entry["parts"])
        validate_label(label, params, coloring)
        labels.append(label)
    space = ConfigurationSpace(params, coloring, labels)
    if len(set(labels)) != len(labels):
        raise InvalidLabelError("Duplicate labels in the configuration space document")
    return space


def field_from_json(data: dict, complex_: SimplicialComplex) -> DiscreteVectorField:
    _require(data, "pairs")
    try:
        pairs = [(frozenset(lower), frozenset(upper)) for lower, upper in data["pairs"]]
    except (TypeError, ValueError) as e:
        raise CodecError(f"Malformed pair list: {e}")
    return DiscreteVectorField(complex_, pairs)


def load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as file:
            return json.load(file)
    except FileNotFoundError:
        raise CodecError(f"Could not find file at '{path}'")
