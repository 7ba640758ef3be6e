from forge.affine.point_config import (
    InvalidPointConfigError,
    RationalPointConfig,
    color_preset,
    in_general_position,
    parse_color_spec,
    random_config,
)
from forge.affine.lp import LPResult, lp_feasible
from forge.affine.hulls import PartitionWitness, WitnessError, hulls_intersect, verify_witness
from forge.affine.searches import SearchResult, rainbow_search, seven_point_search, tverberg_search
