from forge.equivariant.action import (
    KLEIN_ELEMENTS,
    KLEIN_TABLE,
    InvalidActionError,
    OrbitTypeReport,
    PermAction,
    board_sphere,
    cube_model,
    fixed_subcomplex,
    klein_actions,
    lift_action,
    named_group_action,
    octahedron_model,
    orbit_types,
    trivial_action,
)
from forge.equivariant.simplicial_map import DegreeError, InvalidMapError, SimplicialMap, degree, identity_map, join_of_maps
from forge.equivariant.search import (
    EquivariantScan,
    check_equivariance,
    enumerate_equivariant_maps,
    equivariant_iso_search,
    radial_approximation,
    reference_composite,
)
