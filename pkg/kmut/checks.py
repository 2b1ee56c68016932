from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
import sympy as sp

from kmut.adjoints import AdjointSide
from kmut.corpus import (
    random_chain_splitting,
    random_collection,
    random_three_block_splitting,
    random_two_block_splitting,
)
from kmut.euler import ExceptionalCollection
from kmut.mutation import mutate, mutate_sequence
from kmut.twists import factor_twist, verify_factorization, verify_twist_mutation, verify_window_shift
from utils.config import Config
from utils.exceptions import CustomException, MalformedInput
from utils.logger import logger

LEFT, RIGHT = AdjointSide.LEFT, AdjointSide.RIGHT


@dataclass
class CheckResult:
    check: str
    seed: int
    instances: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    notes: List[str] = field(default_factory=list)

    def record(self, ok: Optional[bool]):
        self.instances += 1
        if ok is None:
            self.skipped += 1
        elif ok:
            self.passed += 1
        else:
            self.failed += 1


def braid_instance_ok(coll: ExceptionalCollection, k: int) -> bool:
    """Inverse pair, unimodular base change and the braid relation at slots k, k+1."""
    n = coll.rank
    for slot in range(n - 1):
        right, m_right = mutate(coll, slot, RIGHT)
        back, m_left = mutate(right, slot, LEFT)
        if back.form != coll.form or (m_left * m_right) != sp.eye(n):
            return False
        if abs(m_right.det()) != 1:
            return False
    first = mutate_sequence(coll, [(k, LEFT), (k + 1, LEFT), (k, LEFT)])
    second = mutate_sequence(coll, [(k + 1, LEFT), (k, LEFT), (k + 1, LEFT)])
    return first[0].form == second[0].form and first[1] == second[1]


def check_braid(size: int, seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    result = CheckResult(check="braid", seed=seed)
    for _ in range(size):
        n = int(rng.integers(3, 6))
        coll = random_collection(rng, n)
        k = int(rng.integers(0, n - 2))
        try:
            ok = braid_instance_ok(coll, k)
        except MalformedInput:
            # a mutation left the upper unitriangular shape
            ok = False
        result.record(ok)
    return result


def check_twist_mutation(size: int, seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    result = CheckResult(check="311", seed=seed)
    fourfold = 0
    for _ in range(size):
        split = random_two_block_splitting(rng)
        outcome = verify_twist_mutation(split)
        ok = outcome.holds
        if outcome.fourfold:
            fourfold += 1
            ok = ok and outcome.unimodular
        result.record(ok)
    result.notes.append(f"{fourfold} instances with chi(B', A') = 0, determinant checked on those")
    return result


def check_factorization(size: int, seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    result = CheckResult(check="412", seed=seed)
    chains = 0
    outside = 0
    for i in range(size):
        if i % 3 == 2:
            chains += 1
            chain = factor_twist(random_chain_splitting(rng))
            result.record(chain.identity_holds if chain.hypotheses_hold else False)
            continue
        outcome = verify_factorization(random_three_block_splitting(rng, satisfy_hypothesis=(i % 3 == 0)))
        if outcome.hypothesis_holds:
            result.record(outcome.identity_holds)
        else:
            outside += 1
            result.record(None)
    result.notes.append(f"{chains} full rank-1 chains")
    result.notes.append(f"{outside} instances outside the hypothesis, identity not asserted")
    return result


def check_window_shift(size: int, seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    result = CheckResult(check="shift", seed=seed)
    chains = 0
    for i in range(size):
        if i % 2:
            split = random_chain_splitting(rng)
        else:
            split = random_two_block_splitting(rng)
        outcome = verify_window_shift(split)
        if outcome.chain_identity is not None:
            chains += 1
        result.record(outcome.holds)
    result.notes.append(f"{chains} instances also compared with the chain of rank-1 twists")
    return result


CHECKS = {
    "braid": (check_braid, "BRAID_CORPUS_SIZE"),
    "311": (check_twist_mutation, "TWIST_MUTATION_CORPUS_SIZE"),
    "412": (check_factorization, "FACTORIZATION_CORPUS_SIZE"),
    "shift": (check_window_shift, "WINDOW_SHIFT_CORPUS_SIZE"),
}


def run_check(name: str, size: Optional[int] = None, seed: Optional[int] = None) -> CheckResult:
    if name not in CHECKS:
        raise MalformedInput(f"Unknown check {name!r}; expected one of {sorted(CHECKS)}")
    runner, size_key = CHECKS[name]
    size = getattr(Config, size_key) if size is None else size
    seed = Config.CORPUS_SEED if seed is None else seed
    try:
        result = runner(size, seed)
    except CustomException:
        raise
    except Exception as e:
        logger.error(f"Check {name} crashed: {e}")
        raise CustomException(f"Check {name} failed to run: {e}")
    logger.info(f"Check {name}: {result.passed} passed, {result.failed} failed, {result.skipped} skipped")
    return result
