"""
K-theory shadows of spherical functors built from semiorthogonal splittings.

For a splitting <E, G> (chi(g, e) = 0) the functor S: E -> G is the left
adjoint of the inclusion of G restricted to E, and R: G -> E is the right
adjoint of the inclusion of E restricted to G. At the level of classes

    cotwist F_S = R S - 1   on E
    twist   T_S = 1 - S R   on G

Sign table: the cones in the triangles id -> RS -> F_S and SR -> id -> T_S
contribute one sign each; with the orientation above both maps are the
identity on classes orthogonal to the image of S.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import sympy as sp

from kmut.adjoints import left_projection_matrix, right_projection_matrix
from kmut.euler import BlockSplitting, EulerLattice, coordinate_basis, is_integral
from utils.exceptions import AdjointUnsolvable, MalformedInput
from utils.logger import logger


@dataclass(frozen=True)
class SphericalShadow:
    s: sp.ImmutableMatrix
    r: sp.ImmutableMatrix
    cotwist: sp.ImmutableMatrix
    twist: sp.ImmutableMatrix

    @property
    def integral(self) -> bool:
        return all(is_integral(m) for m in (self.s, self.r, self.cotwist, self.twist))


def _shadow(lattice: EulerLattice, source: Sequence[int], target: Sequence[int]) -> SphericalShadow:
    if not lattice.block(target, source).is_zero_matrix:
        raise MalformedInput("Target block has nonzero pairing into the source block")
    n = lattice.rank
    p_source = coordinate_basis(n, list(source))
    p_target = coordinate_basis(n, list(target))
    s = sp.ImmutableMatrix(left_projection_matrix(lattice, p_target) * p_source)
    r = sp.ImmutableMatrix(right_projection_matrix(lattice, p_source) * p_target)
    return SphericalShadow(
        s=s,
        r=r,
        cotwist=sp.ImmutableMatrix(r * s - sp.eye(len(source))),
        twist=sp.ImmutableMatrix(sp.eye(len(target)) - s * r),
    )


def spherical_shadow(
    split: BlockSplitting,
    source: Optional[Sequence[int]] = None,
    target: Optional[Sequence[int]] = None,
) -> SphericalShadow:
    """S, R, F_S and T_S; source and target are block ids, by default all-but-last and last."""
    last = len(split.blocks) - 1
    source = list(range(last)) if source is None else list(source)
    target = [last] if target is None else list(target)
    return _shadow(split.lattice, split.indices(source), split.indices(target))


def right_orthogonal(lattice: EulerLattice, a: Sequence[int], b: Sequence[int]) -> sp.ImmutableMatrix:
    """Basis of {x : chi(a, x) = 0 for a in A}, one vector per index of B."""
    e_aa = lattice.block(a, a)
    if e_aa.det() == 0:
        raise AdjointUnsolvable("Gram matrix of A is singular")
    lift = -e_aa.inv() * lattice.block(a, b)
    return _assemble(lattice.rank, a, lift, b, sp.eye(len(b)))


def left_orthogonal(lattice: EulerLattice, a: Sequence[int], b: Sequence[int]) -> sp.ImmutableMatrix:
    """Basis of {x : chi(x, b) = 0 for b in B}, one vector per index of A."""
    e_bb = lattice.block(b, b)
    if e_bb.det() == 0:
        raise AdjointUnsolvable("Gram matrix of B is singular")
    lift = -e_bb.T.inv() * lattice.block(a, b).T
    return _assemble(lattice.rank, a, sp.eye(len(a)), b, lift)


def _assemble(n, a, part_a, b, part_b) -> sp.ImmutableMatrix:
    columns = part_a.cols
    out = sp.zeros(n, columns)
    for row, index in enumerate(a):
        out[index, :] = part_a[row, :]
    for row, index in enumerate(b):
        out[index, :] = part_b[row, :]
    return sp.ImmutableMatrix(out)


@dataclass(frozen=True)
class TwistMutationResult:
    holds: bool
    twist_shadow: sp.ImmutableMatrix
    twist_mutation: sp.ImmutableMatrix
    fourfold: bool

    @property
    def unimodular(self) -> bool:
        return self.twist_shadow.det() in (1, -1)


def verify_twist_mutation(split: BlockSplitting) -> TwistMutationResult:
    """
    Compare T_S for S = i_B^L i_A with the composite of the left mutations
    B -> B' -> B, where B' is the right orthogonal of A and A' the left
    orthogonal of B.
    """
    if len(split.blocks) != 2:
        raise MalformedInput(f"Expected a splitting <A, B>, got {len(split.blocks)} blocks")
    lattice = split.lattice
    if lattice.form.det() == 0:
        raise AdjointUnsolvable("Ambient Euler form is degenerate")
    a, b = split.blocks

    shadow = _shadow(lattice, a, b)

    p_b = coordinate_basis(lattice.rank, list(b))
    p_b_prime = right_orthogonal(lattice, a, b)
    p_a_prime = left_orthogonal(lattice, a, b)
    into_b_prime = left_projection_matrix(lattice, p_b_prime) * p_b
    back_to_b = left_projection_matrix(lattice, p_b) * p_b_prime
    mutation = sp.ImmutableMatrix(back_to_b * into_b_prime)

    fourfold = bool((p_b_prime.T * lattice.form * p_a_prime).is_zero_matrix)
    holds = shadow.twist == mutation
    logger.debug(f"Twist versus mutation on rank {lattice.rank}: holds={holds}, fourfold={fourfold}")
    return TwistMutationResult(
        holds=holds,
        twist_shadow=shadow.twist,
        twist_mutation=mutation,
        fourfold=fourfold,
    )


@dataclass(frozen=True)
class FactorizationResult:
    hypothesis_holds: bool
    identity_holds: bool
    twist: sp.ImmutableMatrix
    twist_a: sp.ImmutableMatrix
    twist_b: sp.ImmutableMatrix


def _hypothesis(lattice: EulerLattice, a: Sequence[int], b: Sequence[int], g: Sequence[int]) -> bool:
    """chi(a, F_S(b)) = 0 for every basis a of A and b of B, S running from <A, B> to G."""
    e = list(a) + list(b)
    shadow = _shadow(lattice, e, g)
    p_a = coordinate_basis(lattice.rank, list(a))
    p_e = coordinate_basis(lattice.rank, e)
    f_on_b = shadow.cotwist[:, len(a):]
    return bool((p_a.T * lattice.form * p_e * f_on_b).is_zero_matrix)


def verify_factorization(split: BlockSplitting) -> FactorizationResult:
    """Check T_S = T_{S_A} T_{S_B} for a splitting <A, B, G>."""
    if len(split.blocks) != 3:
        raise MalformedInput(f"Expected a splitting <A, B, G>, got {len(split.blocks)} blocks")
    lattice = split.lattice
    a, b, g = split.blocks

    twist = _shadow(lattice, list(a) + list(b), g).twist
    twist_a = _shadow(lattice, a, g).twist
    twist_b = _shadow(lattice, b, g).twist

    return FactorizationResult(
        hypothesis_holds=_hypothesis(lattice, a, b, g),
        identity_holds=twist == twist_a * twist_b,
        twist=twist,
        twist_a=twist_a,
        twist_b=twist_b,
    )


@dataclass(frozen=True)
class ChainFactorization:
    step_hypotheses: Tuple[bool, ...]
    identity_holds: bool
    twist: sp.ImmutableMatrix
    factors: Tuple[sp.ImmutableMatrix, ...]

    @property
    def hypotheses_hold(self) -> bool:
        return all(self.step_hypotheses)


def factor_twist(split: BlockSplitting) -> ChainFactorization:
    """
    Split the source <E_0, ..., E_N> of a splitting <E_0, ..., E_N, G> one block
    at a time and compare T_S with T_{S_0} ... T_{S_N}.
    """
    if len(split.blocks) < 2:
        raise MalformedInput("Need at least one source block and the target block")
    lattice = split.lattice
    sources: List[Tuple[int, ...]] = list(split.blocks[:-1])
    g = split.blocks[-1]

    steps = []
    for i in range(len(sources) - 1):
        rest = [index for block in sources[i + 1:] for index in block]
        steps.append(_hypothesis(lattice, sources[i], rest, g))

    twist = _shadow(lattice, [index for block in sources for index in block], g).twist
    factors = tuple(_shadow(lattice, block, g).twist for block in sources)
    product = sp.eye(len(g))
    for factor in factors:
        product = product * factor

    return ChainFactorization(
        step_hypotheses=tuple(steps),
        identity_holds=twist == sp.ImmutableMatrix(product),
        twist=twist,
        factors=factors,
    )


@dataclass(frozen=True)
class WindowShiftResult:
    phi: sp.ImmutableMatrix
    twist: sp.ImmutableMatrix
    mutation: sp.ImmutableMatrix
    lands_in_complement: bool
    chain_identity: Optional[bool]

    @property
    def matches_twist(self) -> bool:
        return self.phi == self.twist

    @property
    def matches_mutation(self) -> bool:
        return self.phi == self.mutation

    @property
    def holds(self) -> bool:
        return (
            self.lands_in_complement
            and self.matches_twist
            and self.matches_mutation
            and self.chain_identity is not False
        )


def verify_window_shift(split: BlockSplitting) -> WindowShiftResult:
    """
    Window shift on classes for a window <A, G>, A the source blocks.

    G is lifted into the window, pushed across A by the left mutation
    1 - i_A i_A^R into the right orthogonal G' of A (so the window becomes
    <G', A>), and restricted back to G. The result is compared with T_S,
    with the mutation composite G -> G' -> G and, when the source has
    several blocks whose chain hypotheses hold, with T_{S_0} ... T_{S_N}.
    """
    if len(split.blocks) < 2:
        raise MalformedInput("Need at least one source block and the target block")
    lattice = split.lattice
    sources = split.blocks[:-1]
    a = [index for block in sources for index in block]
    g = split.blocks[-1]

    shadow = _shadow(lattice, a, g)
    n = lattice.rank
    p_a = coordinate_basis(n, a)
    p_g = coordinate_basis(n, list(g))

    mutated = sp.ImmutableMatrix((sp.eye(n) - p_a * right_projection_matrix(lattice, p_a)) * p_g)
    lands = bool((p_a.T * lattice.form * mutated).is_zero_matrix)
    restrict = left_projection_matrix(lattice, p_g)
    phi = sp.ImmutableMatrix(restrict * mutated)

    p_g_prime = right_orthogonal(lattice, a, g)
    into_g_prime = left_projection_matrix(lattice, p_g_prime) * p_g
    mutation = sp.ImmutableMatrix(restrict * p_g_prime * into_g_prime)

    chain_identity = None
    if len(sources) > 1:
        chain = factor_twist(split)
        if chain.hypotheses_hold:
            product = sp.eye(len(g))
            for factor in chain.factors:
                product = product * factor
            chain_identity = phi == sp.ImmutableMatrix(product)

    logger.debug(f"Window shift on rank {n}: phi == T_S is {phi == shadow.twist}, chain={chain_identity}")
    return WindowShiftResult(
        phi=phi,
        twist=shadow.twist,
        mutation=mutation,
        lands_in_complement=lands,
        chain_identity=chain_identity,
    )
