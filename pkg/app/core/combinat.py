"""Noncrossing partitions, Kreweras complements and concordance."""

import logging
from functools import lru_cache
from itertools import product
from typing import Iterable, List, Sequence

from sympy.combinatorics import Permutation
from sympy.utilities.iterables import multiset_partitions

from .errors import NotAPartitionError
from .models import (
    IndexPair,
    KrewerasPair,
    NoncrossingPartition,
    _canonical_blocks,
    _find_crossing,
    _partition_problem,
)

logger = logging.getLogger(__name__)


def is_noncrossing(n: int, blocks: Iterable[Iterable[int]]) -> bool:
    canonical = _canonical_blocks(blocks)
    problem = _partition_problem(n, canonical)
    if problem:
        raise NotAPartitionError(f"not a partition of 1..{n}: {problem}")
    return _find_crossing(canonical) is None


def kreweras_complement(sigma: NoncrossingPartition) -> NoncrossingPartition:
    """Blocks of the complement on the tilde labels, returned as a partition of 1..n.

    With sigma read as the permutation whose cycles are its blocks in increasing
    order and c = (1 2 ... n), the complement is sigma^{-1} c; its cycle i -> j
    records that i~ and j~ share a block.
    """
    n = sigma.n
    cycles = [[x - 1 for x in block] for block in sigma.blocks]
    perm = Permutation(cycles, size=n)
    long_cycle = Permutation([list(range(n))], size=n)
    # sympy composes left to right: (p * q)(i) = q(p(i))
    complement = long_cycle * ~perm
    blocks = [[x + 1 for x in cycle] for cycle in complement.full_cyclic_form]
    return NoncrossingPartition(n=n, blocks=blocks)


def kreweras_pair(sigma: NoncrossingPartition) -> KrewerasPair:
    return KrewerasPair(sigma=sigma, sigma_tilde=kreweras_complement(sigma))


@lru_cache(maxsize=None)
def _noncrossing_of(n: int) -> tuple:
    found = []
    for parts in multiset_partitions(list(range(1, n + 1))):
        if _find_crossing(parts) is None:
            found.append(NoncrossingPartition(n=n, blocks=parts))
    found.sort()
    logger.debug("enumerated %d noncrossing partitions of [%d]", len(found), n)
    return tuple(found)


def enumerate_noncrossing(n: int) -> List[NoncrossingPartition]:
    """All noncrossing partitions of [n], ordered lexicographically on sorted blocks."""
    if n < 1:
        raise NotAPartitionError("n must be positive")
    return list(_noncrossing_of(n))


def is_concordant(index_set: Iterable[int], sigma: NoncrossingPartition) -> bool:
    chosen = set(index_set)
    if not chosen <= set(range(1, sigma.n + 1)):
        return False
    if sum(len(chosen & set(block)) for block in sigma.blocks) != len(chosen):
        return False
    return all(len(chosen & set(block)) == 1 for block in sigma.blocks)


def concordant_index_pairs(pair: KrewerasPair) -> List[IndexPair]:
    return [
        IndexPair(I=left, I_tilde=right)
        for left in product(*pair.sigma.blocks)
        for right in product(*pair.sigma_tilde.blocks)
    ]


def interleave(pair: KrewerasPair) -> List[Sequence[int]]:
    """The union partition on the circle 1..2n with i -> 2i-1 and i~ -> 2i."""
    union = [tuple(2 * x - 1 for x in block) for block in pair.sigma.blocks]
    union += [tuple(2 * x for x in block) for block in pair.sigma_tilde.blocks]
    return sorted(union)
