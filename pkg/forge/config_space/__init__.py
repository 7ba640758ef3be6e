from forge.config_space.coloring import Coloring, InvalidColoringError
from forge.config_space.config_simplex import ConfigSimplex, InvalidLabelError, slot_action
from forge.config_space.config_space import (
    ConfigSimplexClass,
    ConfigurationSpace,
    build_config_space,
    classify,
    is_valid_label,
    validate_label,
)
