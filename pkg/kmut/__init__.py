from kmut.euler import BlockSplitting, EulerLattice, ExceptionalCollection
from kmut.adjoints import AdjointSide, Projection, adjoint_project
from kmut.mutation import mutate, mutate_sequence, mutation_matrix
from kmut.twists import (
    ChainFactorization,
    FactorizationResult,
    SphericalShadow,
    TwistMutationResult,
    WindowShiftResult,
    factor_twist,
    left_orthogonal,
    right_orthogonal,
    spherical_shadow,
    verify_factorization,
    verify_twist_mutation,
    verify_window_shift,
)
from kmut.plan import FactorizationPlan, TwistStep, factorization_plan
