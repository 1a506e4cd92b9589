"""Top-down maximal-frequent-itemset search via per-level subset peeling.

The search starts at the largest transaction cardinality and walks down:
at each level k the candidate pool holds k-itemsets tagged with the
transaction they were peeled from. Counting distinct source transactions
per itemset gives exact support once every transaction of size >= k has
been absorbed, so the first level with a qualifying itemset is the answer.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .txdb import (Itemset, MiningParams, ParameterError, ResourceLimitError,
                   SupportedItemset, TransactionDatabase, transaction_sizes)

DEFAULT_POOL_CAP = 10_000_000


@dataclass(frozen=True)
class Candidate:
    itemset: Itemset
    source_tx: int


@dataclass
class MfifResult:
    level: int
    itemsets: list
    levels_descended: int
    subset_expansions: int


def k_minus_1_subsets(x: Itemset):
    """All subsets obtained by dropping one member; dropping the i-th
    smallest member yields the i-th output."""
    if not x:
        raise ParameterError("cannot peel empty itemset")
    return [x[:i] + x[i + 1:] for i in range(len(x))]


def _pool_size(pool) -> int:
    return sum(len(srcs) for srcs in pool.values())


def mfif_mine(db: TransactionDatabase, params: MiningParams,
              pool_cap: int = DEFAULT_POOL_CAP) -> MfifResult:
    """Find the largest-cardinality frequent itemsets.

    Returns every itemset of the winning cardinality whose support meets
    the threshold, with exact supports; level 0 when nothing is frequent.
    """
    sizes = transaction_sizes(db)
    level = max(sizes, default=0)
    # itemset -> set of distinct source transaction ids (the level counter)
    pool = defaultdict(set)
    levels_descended = 0
    subset_expansions = 0

    while level >= 1:
        for t in db.transactions:
            if sizes[t.id] == level:
                pool[t.items].add(t.id)
        levels_descended += 1
        winners = sorted(x for x, srcs in pool.items()
                         if len(srcs) >= params.min_support_count)
        if winners:
            found = [SupportedItemset(x, len(pool[x]), frozenset(pool[x]))
                     for x in winners]
            return MfifResult(level, found, levels_descended, subset_expansions)
        new_pool = defaultdict(set)
        if level > 1:
            for x in sorted(pool):
                srcs = pool[x]
                subset_expansions += len(x) * len(srcs)
                for sub in k_minus_1_subsets(x):
                    new_pool[sub].update(srcs)
            if _pool_size(new_pool) > pool_cap:
                raise ResourceLimitError(
                    f"candidate pool exceeded cap {pool_cap} descending to "
                    f"level {level - 1}")
        pool = new_pool
        level -= 1

    return MfifResult(0, [], levels_descended, subset_expansions)


def mfif_mine_all_maximal(db: TransactionDatabase, params: MiningParams,
                          pool_cap: int = DEFAULT_POOL_CAP):
    """Complete maximal frequent family via continued level descent.

    Candidates that are subsets of an already-reported maximal itemset are
    suppressed; they cannot be maximal and their counts are never needed
    (no transaction outside a reported maximal can contain them).
    """
    sizes = transaction_sizes(db)
    level = max(sizes, default=0)
    pool = defaultdict(set)
    maximal = []
    maximal_sets = []

    def suppressed(x: Itemset) -> bool:
        xs = set(x)
        return any(xs <= m for m in maximal_sets)

    while level >= 1:
        for t in db.transactions:
            if sizes[t.id] == level and not suppressed(t.items):
                pool[t.items].add(t.id)
        winners = sorted(x for x, srcs in pool.items()
                         if len(srcs) >= params.min_support_count)
        for x in winners:
            maximal.append(SupportedItemset(x, len(pool[x]), frozenset(pool[x])))
            maximal_sets.append(set(x))
        new_pool = defaultdict(set)
        if level > 1:
            for x in sorted(pool):
                if len(pool[x]) >= params.min_support_count:
                    continue  # reported; all its subsets are now suppressed
                srcs = pool[x]
                for sub in k_minus_1_subsets(x):
                    if not suppressed(sub):
                        new_pool[sub].update(srcs)
            if _pool_size(new_pool) > pool_cap:
                raise ResourceLimitError(
                    f"candidate pool exceeded cap {pool_cap} descending to "
                    f"level {level - 1}")
        pool = new_pool
        level -= 1

    maximal.sort(key=lambda s: (len(s.itemset), s.itemset))
    return maximal
