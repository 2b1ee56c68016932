from typing import List

import numpy as np
import sympy as sp

from kmut.euler import BlockSplitting, EulerLattice, ExceptionalCollection


def _ints(rng: np.random.Generator, low: int, high: int, size) -> np.ndarray:
    return rng.integers(low, high + 1, size=size)


def random_unitriangular(rng: np.random.Generator, n: int, max_entry: int) -> sp.ImmutableMatrix:
    upper = np.triu(_ints(rng, -max_entry, max_entry, (n, n)), k=1)
    return sp.ImmutableMatrix((upper + np.eye(n, dtype=upper.dtype)).tolist())


def random_unimodular(rng: np.random.Generator, n: int, max_entry: int = 1) -> sp.ImmutableMatrix:
    """Product of a lower and an upper unitriangular matrix: determinant 1, not triangular."""
    lower = random_unitriangular(rng, n, max_entry).T
    upper = random_unitriangular(rng, n, max_entry)
    return sp.ImmutableMatrix(lower * upper)


def random_collection(rng: np.random.Generator, n: int, max_entry: int = 5) -> ExceptionalCollection:
    return ExceptionalCollection(random_unitriangular(rng, n, max_entry))


def _compose(sizes: List[int], grams: List[sp.MatrixBase], upper: dict) -> sp.ImmutableMatrix:
    """Block upper triangular form from diagonal Gram blocks and off-diagonal blocks."""
    n = sum(sizes)
    form = sp.zeros(n, n)
    starts = np.cumsum([0] + sizes).tolist()
    for k, gram in enumerate(grams):
        form[starts[k]:starts[k + 1], starts[k]:starts[k + 1]] = gram
    for (i, j), block in upper.items():
        form[starts[i]:starts[i + 1], starts[j]:starts[j + 1]] = block
    return sp.ImmutableMatrix(form)


def random_two_block_splitting(rng: np.random.Generator, max_rank: int = 6, max_entry: int = 3) -> BlockSplitting:
    """<A, B> with unimodular diagonal blocks and a random block above them."""
    n = int(rng.integers(2, max_rank + 1))
    a = int(rng.integers(1, n))
    sizes = [a, n - a]
    grams = [random_unimodular(rng, size) for size in sizes]
    off = sp.ImmutableMatrix(_ints(rng, -max_entry, max_entry, (a, n - a)).tolist())
    form = _compose(sizes, grams, {(0, 1): off})
    return BlockSplitting.from_sizes(EulerLattice(form), sizes)


def _s_pairing(e_ag: sp.MatrixBase, e_bg: sp.MatrixBase, gram_g: sp.MatrixBase) -> sp.ImmutableMatrix:
    """chi(a, S b) for all basis pairs: S b is the left projection of b onto G."""
    return sp.ImmutableMatrix(e_ag * gram_g.T.inv() * e_bg.T)


def random_three_block_splitting(
    rng: np.random.Generator,
    satisfy_hypothesis: bool,
    max_rank: int = 6,
    max_entry: int = 2,
) -> BlockSplitting:
    """
    <A, B, G>; with satisfy_hypothesis the block chi(A, B) is chosen equal to
    chi(A, S B), which does not depend on it.
    """
    n = int(rng.integers(3, max_rank + 1))
    a = int(rng.integers(1, n - 1))
    b = int(rng.integers(1, n - a))
    g = n - a - b
    sizes = [a, b, g]
    grams = [random_unimodular(rng, size) for size in sizes]
    e_ag = sp.ImmutableMatrix(_ints(rng, -max_entry, max_entry, (a, g)).tolist())
    e_bg = sp.ImmutableMatrix(_ints(rng, -max_entry, max_entry, (b, g)).tolist())
    if satisfy_hypothesis:
        e_ab = _s_pairing(e_ag, e_bg, grams[2])
    else:
        e_ab = sp.ImmutableMatrix(_ints(rng, -max_entry, max_entry, (a, b)).tolist())
    form = _compose(sizes, grams, {(0, 1): e_ab, (0, 2): e_ag, (1, 2): e_bg})
    return BlockSplitting.from_sizes(EulerLattice(form), sizes)


def random_chain_splitting(
    rng: np.random.Generator,
    max_length: int = 4,
    max_target: int = 3,
    max_entry: int = 2,
) -> BlockSplitting:
    """<E_0, ..., E_N, G> with rank-1 exceptional E_i and every splitting step satisfying the hypothesis."""
    length = int(rng.integers(2, max_length + 1))
    g = int(rng.integers(1, max_target + 1))
    gram_g = random_unimodular(rng, g)
    e_g = sp.ImmutableMatrix(_ints(rng, -max_entry, max_entry, (length, g)).tolist())
    pairing = _s_pairing(e_g, e_g, gram_g)

    e_block = sp.eye(length)
    for i in range(length):
        for j in range(i + 1, length):
            e_block[i, j] = pairing[i, j]

    sizes = [1] * length + [g]
    form = sp.zeros(length + g, length + g)
    form[:length, :length] = e_block
    form[:length, length:] = e_g
    form[length:, length:] = gram_g
    return BlockSplitting.from_sizes(EulerLattice(sp.ImmutableMatrix(form)), sizes)
