"""Strong association-rule generation from frequent itemsets.

Confidence is kept as an exact Fraction internally; format_confidence
renders the fixed 6-digit decimal used in all serialized output.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .txdb import (ConsistencyError, Itemset, MiningParams, ParameterError,
                   SupportedItemset, TransactionDatabase, support)


@dataclass(frozen=True)
class AssociationRule:
    antecedent: Itemset
    consequent: Itemset
    support: int
    confidence: Fraction


def format_confidence(conf: Fraction) -> str:
    return f"{float(conf):.6f}"


def expand_frequent(db: TransactionDatabase, maximal, params: MiningParams):
    """All frequent subsets (cardinality >= 2) of a maximal family, with
    supports recomputed. Rule generation needs exact subset supports,
    which a maximal family alone does not carry."""
    seen = set()
    for s in maximal:
        for k in range(2, len(s.itemset) + 1):
            for sub in combinations(s.itemset, k):
                seen.add(sub)
    out = [support(db, x) for x in sorted(seen, key=lambda x: (len(x), x))]
    return [s for s in out if s.support >= params.min_support_count]


def generate_rules(db: TransactionDatabase, frequent, params: MiningParams,
                   single_consequent: bool = False):
    """Emit X => Z\\X for every frequent Z and non-empty proper subset X
    whose confidence meets the threshold. Supports are re-derived from the
    database; stale inputs are rejected."""
    min_conf = params.min_confidence
    if min_conf is None:
        min_conf = Fraction(0)
    support_cache = {}

    def sigma(x: Itemset) -> int:
        if x not in support_cache:
            support_cache[x] = support(db, x).support
        return support_cache[x]

    rules = {}
    for s in frequent:
        z = s.itemset
        if len(z) < 2:
            raise ParameterError(
                f"rule generation needs itemsets of cardinality >= 2, "
                f"got {z}")
        actual = sigma(z)
        if actual != s.support:
            raise ConsistencyError(
                f"itemset {z} claims support {s.support}, database says {actual}")
        if actual < params.min_support_count:
            raise ParameterError(
                f"itemset {z} has support {actual} below threshold "
                f"{params.min_support_count}")
        for r in range(1, len(z)):
            for ante in combinations(z, r):
                cons = tuple(i for i in z if i not in ante)
                if single_consequent and len(cons) != 1:
                    continue
                conf = Fraction(actual, sigma(ante))
                if conf >= min_conf:
                    rules[(ante, cons)] = AssociationRule(ante, cons, actual, conf)
    return [rules[k] for k in sorted(rules)]
