from typing import Iterable, Tuple

import sympy as sp

from kmut.adjoints import AdjointSide
from kmut.euler import ExceptionalCollection
from utils.exceptions import IndexOutOfRange


def mutation_matrix(coll: ExceptionalCollection, k: int, side: AdjointSide) -> sp.ImmutableMatrix:
    """Rows are the new basis vectors in terms of the old ones."""
    n = coll.rank
    if not 0 <= k < n - 1:
        raise IndexOutOfRange(f"Mutation slot {k} outside 0..{n - 2}")
    c = coll.form[k, k + 1]
    m = sp.eye(n).as_mutable()
    m[k, :] = sp.zeros(1, n)
    m[k + 1, :] = sp.zeros(1, n)
    if AdjointSide(side) is AdjointSide.LEFT:
        # (f_k, f_k+1) -> (f_k+1 - c f_k, f_k)
        m[k, k + 1] = 1
        m[k, k] = -c
        m[k + 1, k] = 1
    else:
        # (f_k, f_k+1) -> (f_k+1, f_k - c f_k+1)
        m[k, k + 1] = 1
        m[k + 1, k] = 1
        m[k + 1, k + 1] = -c
    return sp.ImmutableMatrix(m)


def mutate(coll: ExceptionalCollection, k: int, side: AdjointSide) -> Tuple[ExceptionalCollection, sp.ImmutableMatrix]:
    """Mutate the pair at slots k, k+1 and return the new collection with its base change."""
    m = mutation_matrix(coll, k, side)
    return ExceptionalCollection(sp.ImmutableMatrix(m * coll.form * m.T)), m


def mutate_sequence(
    coll: ExceptionalCollection,
    steps: Iterable[Tuple[int, AdjointSide]],
) -> Tuple[ExceptionalCollection, sp.ImmutableMatrix]:
    """Apply mutations in order; the total base change expresses the final basis in the original one."""
    total = sp.ImmutableMatrix(sp.eye(coll.rank))
    for k, side in steps:
        coll, m = mutate(coll, k, side)
        total = sp.ImmutableMatrix(m * total)
    return coll, total
