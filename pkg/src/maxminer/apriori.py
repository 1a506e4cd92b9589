"""Level-wise Apriori baseline: prefix join, prune, one counting scan per level."""
from __future__ import annotations

from dataclasses import dataclass

from .txdb import (MiningParams, TransactionDatabase, batch_supports)


@dataclass
class FrequentLevel:
    k: int
    itemsets: list  # SupportedItemset, canonically sorted


@dataclass
class CandidateLevel:
    k: int
    itemsets: list  # Itemset, canonically sorted


@dataclass
class AprioriResult:
    levels: list  # non-empty FrequentLevel in ascending k
    scan_count: int

    def frequent_family(self):
        return [s for lvl in self.levels for s in lvl.itemsets]

    @property
    def max_level(self) -> int:
        return self.levels[-1].k if self.levels else 0


def apriori_join(prev: FrequentLevel) -> CandidateLevel:
    """Merge pairs of frequent k-itemsets sharing their first k-1 members."""
    items = [s.itemset for s in prev.itemsets]
    out = []
    n = len(items)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = items[i], items[j]
            if a[:-1] == b[:-1]:
                merged = a + (b[-1],) if a[-1] < b[-1] else b + (a[-1],)
                out.append(merged)
            elif a[:-1] < b[:-1]:
                break  # items sorted; later j can't share the prefix
    out = sorted(set(out))
    return CandidateLevel(prev.k + 1, out)


def apriori_prune(cands: CandidateLevel, prev: FrequentLevel) -> CandidateLevel:
    """Drop candidates having a k-subset that is not frequent."""
    prev_set = {s.itemset for s in prev.itemsets}
    kept = []
    for c in cands.itemsets:
        if all(c[:i] + c[i + 1:] in prev_set for i in range(len(c))):
            kept.append(c)
    return CandidateLevel(cands.k, kept)


def apriori_mine(db: TransactionDatabase, params: MiningParams) -> AprioriResult:
    """All frequent levels L(1), L(2), ... with exact supports.

    A scan is counted for every non-empty candidate level whose supports
    are measured against the database, including a final level that turns
    out to have no frequent member.
    """
    levels = []
    scan_count = 0
    cands = CandidateLevel(1, [(i,) for i in range(db.universe_size)])
    while cands.itemsets:
        scan_count += 1
        supported = batch_supports(db, cands.itemsets)
        frequent = [s for s in supported
                    if s.support >= params.min_support_count]
        if not frequent:
            break
        level = FrequentLevel(cands.k, frequent)
        levels.append(level)
        cands = apriori_prune(apriori_join(level), level)
    return AprioriResult(levels, scan_count)
