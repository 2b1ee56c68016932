"""
Integral Euler forms and their block splittings.

Convention: chi(x, y) = x^T E y, with x and y column vectors of coordinates in
the basis, so E[i, j] = chi(e_i, e_j). A splitting <B_0, ..., B_k> is
semiorthogonal when chi(b, a) = 0 for every a in an earlier block and b in a
later one, i.e. E is block upper triangular. Shifts only contribute signs at
this level and are not modelled.
"""
from dataclasses import dataclass
from typing import Sequence, Tuple

import sympy as sp

from utils.exceptions import MalformedInput


def as_matrix(rows) -> sp.ImmutableMatrix:
    return sp.ImmutableMatrix(rows)


def coordinate_basis(n: int, indices: Sequence[int]) -> sp.ImmutableMatrix:
    """n x len(indices) matrix whose columns are the chosen basis vectors."""
    return sp.ImmutableMatrix(n, len(indices), lambda i, j: 1 if i == indices[j] else 0)


def is_integral(m: sp.MatrixBase) -> bool:
    return all(entry.is_integer for entry in m)


@dataclass(frozen=True)
class EulerLattice:
    form: sp.ImmutableMatrix

    def __post_init__(self):
        if not self.form.is_square:
            raise MalformedInput(f"Euler form must be square, got {self.form.shape}")
        if not is_integral(self.form):
            raise MalformedInput("Euler form entries must be integers")

    @classmethod
    def from_rows(cls, rows) -> "EulerLattice":
        return cls(as_matrix(rows))

    @property
    def rank(self) -> int:
        return self.form.rows

    def chi(self, x: sp.MatrixBase, y: sp.MatrixBase):
        return (x.T * self.form * y)[0, 0]

    def basis(self, indices: Sequence[int]) -> sp.ImmutableMatrix:
        return coordinate_basis(self.rank, list(indices))

    def gram(self, basis: sp.MatrixBase) -> sp.ImmutableMatrix:
        return sp.ImmutableMatrix(basis.T * self.form * basis)

    def block(self, rows: Sequence[int], cols: Sequence[int]) -> sp.ImmutableMatrix:
        return sp.ImmutableMatrix(self.form.extract(list(rows), list(cols)))


@dataclass(frozen=True)
class ExceptionalCollection(EulerLattice):
    """Euler form of a full exceptional collection: upper unitriangular."""

    def __post_init__(self):
        super().__post_init__()
        n = self.rank
        for i in range(n):
            if self.form[i, i] != 1:
                raise MalformedInput(f"chi(e_{i}, e_{i}) = {self.form[i, i]}, expected 1")
            for j in range(i):
                if self.form[i, j] != 0:
                    raise MalformedInput(f"chi(e_{i}, e_{j}) = {self.form[i, j]}, expected 0")


@dataclass(frozen=True)
class BlockSplitting:
    lattice: EulerLattice
    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        flat = [i for block in self.blocks for i in block]
        if sorted(flat) != list(range(self.lattice.rank)) or any(not b for b in self.blocks):
            raise MalformedInput(f"Blocks {self.blocks} do not partition 0..{self.lattice.rank - 1}")
        for earlier_index, earlier in enumerate(self.blocks):
            for later in self.blocks[earlier_index + 1:]:
                if not self.lattice.block(later, earlier).is_zero_matrix:
                    raise MalformedInput(f"chi(block {later}, block {earlier}) is not zero")

    @classmethod
    def from_sizes(cls, lattice: EulerLattice, sizes: Sequence[int]) -> "BlockSplitting":
        blocks, start = [], 0
        for size in sizes:
            blocks.append(tuple(range(start, start + size)))
            start += size
        return cls(lattice, tuple(blocks))

    def indices(self, block_ids: Sequence[int]) -> Tuple[int, ...]:
        return tuple(i for b in block_ids for i in self.blocks[b])

    def basis(self, block_ids: Sequence[int]) -> sp.ImmutableMatrix:
        return self.lattice.basis(self.indices(block_ids))
