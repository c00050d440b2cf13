"""Multi-criteria comparison engine for distance-bounding protocol instances."""

from .attributes import (AttributeId, AttributeVector, Probability,
                         approx_equal, dominates, strictly_precedes,
                         weakly_precedes, attribute_specs)
from .catalog import (GlobalConstants, ProtocolInstance, DESCRIPTORS,
                      ALL_PROTOCOL_IDS, generate_instances, parameter_grid,
                      evaluate)
from .pareto import (MafiaBound, SolutionSet, filter_mafia_bound,
                     nondominated, representative_rows, pareto_pipeline)

__version__ = "0.1.0"
