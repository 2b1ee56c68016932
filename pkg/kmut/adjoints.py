from dataclasses import dataclass
from enum import Enum

import sympy as sp

from kmut.euler import BlockSplitting, EulerLattice, is_integral
from utils.exceptions import AdjointUnsolvable, IndexOutOfRange


class AdjointSide(str, Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Projection:
    coefficients: sp.ImmutableMatrix
    vector: sp.ImmutableMatrix
    integral: bool


def _inverse(gram: sp.MatrixBase, what: str) -> sp.ImmutableMatrix:
    if gram.det() == 0:
        raise AdjointUnsolvable(f"Gram matrix of {what} is singular")
    return sp.ImmutableMatrix(gram.inv())


def left_projection_matrix(lattice: EulerLattice, basis: sp.MatrixBase) -> sp.ImmutableMatrix:
    """
    Coefficients of the left adjoint: the unique b in span(basis) with
    chi(b, b') = chi(x, b') for every b' in the span.
    """
    gram = lattice.gram(basis)
    return sp.ImmutableMatrix(_inverse(gram.T, "the target subspace") * basis.T * lattice.form.T)


def right_projection_matrix(lattice: EulerLattice, basis: sp.MatrixBase) -> sp.ImmutableMatrix:
    """Coefficients of the right adjoint: chi(a, a') = chi(a, x) for every a in the span."""
    gram = lattice.gram(basis)
    return sp.ImmutableMatrix(_inverse(gram, "the target subspace") * basis.T * lattice.form)


def project(lattice: EulerLattice, basis: sp.MatrixBase, x: sp.MatrixBase, side: AdjointSide) -> Projection:
    if side is AdjointSide.LEFT:
        matrix = left_projection_matrix(lattice, basis)
    else:
        matrix = right_projection_matrix(lattice, basis)
    coefficients = sp.ImmutableMatrix(matrix * x)
    return Projection(
        coefficients=coefficients,
        vector=sp.ImmutableMatrix(basis * coefficients),
        integral=is_integral(coefficients),
    )


def adjoint_project(split: BlockSplitting, x, block: int, side: AdjointSide) -> Projection:
    """Project the class x onto one block of a splitting through an inclusion adjoint."""
    if not 0 <= block < len(split.blocks):
        raise IndexOutOfRange(f"Block {block} outside 0..{len(split.blocks) - 1}")
    x = sp.ImmutableMatrix(x)
    return project(split.lattice, split.basis([block]), x, AdjointSide(side))
