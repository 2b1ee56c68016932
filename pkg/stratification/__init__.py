from stratification.coordsets import (
    ConstructibleCoordSet,
    coord_set_equals,
    parse_v_notation,
    render_v_notation,
)
from stratification.kn import KNStratum, MaxStratum, Stratification, chamber_sample, eta_of, kn_stratify
from stratification.windows import WindowDescriptor, window_descriptor
from stratification.walls import (
    BalancedWallReport,
    Verdict,
    WeightedProjectiveData,
    fixed_subquotient,
    near_wall_characters,
    wall_crossing,
)
