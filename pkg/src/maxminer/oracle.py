"""Brute-force reference miner: exhaustive enumeration of every frequent itemset.

Deliberately exponential; guarded to small universes. This is the ground
truth the fast miners are tested against, so it must stay independent of
them (it only uses plain bitmask arithmetic, no shared counting code).
"""
from __future__ import annotations

from .txdb import (MiningParams, ParameterError, SupportedItemset,
                   TransactionDatabase)

MAX_UNIVERSE = 24


def _tx_masks(db: TransactionDatabase):
    masks = []
    for t in db.transactions:
        m = 0
        for i in t.items:
            m |= 1 << i
        masks.append(m)
    return masks


def _mask_to_itemset(mask: int):
    return tuple(i for i in range(mask.bit_length()) if mask & (1 << i))


def brute_force_frequent(db: TransactionDatabase, params: MiningParams):
    """All non-empty frequent itemsets with exact supports and sources.

    Enumeration order: by cardinality, then canonical member order.
    """
    if db.universe_size > MAX_UNIVERSE:
        raise ParameterError(
            f"brute-force oracle limited to {MAX_UNIVERSE} items, "
            f"got universe of {db.universe_size}")
    masks = _tx_masks(db)
    found = []
    for cand in range(1, 1 << db.universe_size):
        sources = frozenset(tid for tid, m in enumerate(masks)
                            if cand & m == cand)
        if len(sources) >= params.min_support_count:
            found.append(SupportedItemset(_mask_to_itemset(cand),
                                          len(sources), sources))
    found.sort(key=lambda s: (len(s.itemset), s.itemset))
    return found


def brute_force_maximal(db: TransactionDatabase, params: MiningParams):
    """The maximal antichain of the brute-force frequent family."""
    frequent = brute_force_frequent(db, params)
    sets = [set(s.itemset) for s in frequent]
    out = []
    for i, s in enumerate(frequent):
        if not any(j != i and sets[i] < sets[j] for j in range(len(frequent))):
            out.append(s)
    return out
