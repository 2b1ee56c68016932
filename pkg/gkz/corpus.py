from typing import List, Optional

import numpy as np

from gkz.weights import WeightMatrix, parse_and_validate
from utils.config import Config
from utils.logger import logger


def random_cy_matrix(
    rng: np.random.Generator,
    max_columns: int = Config.CORPUS_MAX_COLUMNS,
    max_entry: int = Config.CORPUS_MAX_ENTRY,
) -> WeightMatrix:
    """Draw a valid Calabi-Yau weight matrix; the last column balances the others."""
    while True:
        m = int(rng.integers(3, max_columns + 1))
        free = rng.integers(-max_entry, max_entry + 1, size=(2, m - 1))
        last = -free.sum(axis=1)
        if np.abs(last).max() > max_entry:
            continue
        table = np.concatenate([free, last[:, None]], axis=1)
        raw = [[int(v) for v in row] for row in table]
        if any(raw[0][j] == 0 and raw[1][j] == 0 for j in range(m)):
            continue
        # rank 2: some column is not parallel to the first
        first = raw[0][0], raw[1][0]
        if all(first[0] * raw[1][j] - first[1] * raw[0][j] == 0 for j in range(m)):
            continue
        return parse_and_validate(raw)


def cy_corpus(size: Optional[int] = None, seed: Optional[int] = None) -> List[WeightMatrix]:
    """A seeded, reproducible list of random Calabi-Yau weight matrices."""
    size = Config.CORPUS_SIZE if size is None else size
    seed = Config.CORPUS_SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    corpus = [random_cy_matrix(rng) for _ in range(size)]
    logger.info(f"Generated {len(corpus)} Calabi-Yau weight matrices with seed {seed}")
    return corpus
