import random

import pytest

from maxminer import (MiningParams, ParameterError, ResourceLimitError,
                      brute_force_frequent, brute_force_maximal,
                      db_from_itemsets, k_minus_1_subsets, mfif_mine,
                      mfif_mine_all_maximal, support, transaction_sizes)

from .helpers import random_db


class TestSubsetFormation:
    def test_three_items(self):
        assert k_minus_1_subsets((0, 1, 2)) == [(1, 2), (0, 2), (0, 1)]

    def test_singleton(self):
        assert k_minus_1_subsets((4,)) == [()]

    def test_pair(self):
        assert k_minus_1_subsets((1, 6)) == [(6,), (1,)]

    def test_empty_rejected(self):
        with pytest.raises(ParameterError, match="peel"):
            k_minus_1_subsets(())


class TestMfifMine:
    def test_demo_golden(self, demo_db):
        res = mfif_mine(demo_db, MiningParams(2))
        assert res.level == 2
        assert [(s.itemset, s.support) for s in res.itemsets] == \
            [((0, 1), 2), ((0, 2), 3)]
        assert res.levels_descended == 2

    def test_duplicated_wide_row_found_in_one_level(self):
        planted = tuple(range(12))
        rows = [planted, planted] + [tuple(range(i % 5 + 1)) for i in range(8)]
        db = db_from_itemsets(20, rows)
        params = MiningParams.from_percent(20, db.n_transactions)
        res = mfif_mine(db, params)
        assert res.level == 12
        assert res.itemsets[0].itemset == planted
        assert res.levels_descended == 1

    def test_unreachable_threshold(self, demo_db):
        res = mfif_mine(demo_db, MiningParams(demo_db.n_transactions + 1))
        assert res.level == 0
        assert res.itemsets == []

    def test_empty_transactions_only(self):
        db = db_from_itemsets(2, [(), ()])
        res = mfif_mine(db, MiningParams(1))
        assert res.level == 0 and res.levels_descended == 0

    def test_pool_cap(self):
        # one wide transaction forces heavy peeling before any count succeeds
        db = db_from_itemsets(16, [tuple(range(16)), (0,)])
        with pytest.raises(ResourceLimitError, match="level"):
            mfif_mine(db, MiningParams(2), pool_cap=10)


class TestAllMaximal:
    def test_demo(self, demo_db):
        found = mfif_mine_all_maximal(demo_db, MiningParams(2))
        assert [(s.itemset, s.support) for s in found] == \
            [((0, 1), 2), ((0, 2), 3)]

    def test_demo_high_threshold(self, demo_db):
        found = mfif_mine_all_maximal(demo_db, MiningParams(4))
        assert [(s.itemset, s.support) for s in found] == [((0,), 5)]

    def test_demo_empty(self, demo_db):
        assert mfif_mine_all_maximal(demo_db, MiningParams(6)) == []


def test_matches_oracle_randomized():
    rng = random.Random(7)
    for _ in range(60):
        db = random_db(rng, max_items=7, max_tx=15)
        for minsup in (1, 2, 3, db.n_transactions):
            params = MiningParams(minsup)
            frequent = brute_force_frequent(db, params)
            top = max((len(s.itemset) for s in frequent), default=0)
            res = mfif_mine(db, params)
            assert res.level == top
            assert [(s.itemset, s.support) for s in res.itemsets] == \
                [(s.itemset, s.support) for s in frequent
                 if len(s.itemset) == top]
            assert mfif_mine_all_maximal(db, params) == \
                brute_force_maximal(db, params)


def test_reported_subsets_are_frequent():
    # downward closure of every answer
    rng = random.Random(13)
    for _ in range(40):
        db = random_db(rng)
        params = MiningParams(rng.randint(1, db.n_transactions))
        res = mfif_mine(db, params)
        for s in res.itemsets:
            for sub in k_minus_1_subsets(s.itemset):
                assert support(db, sub).support >= params.min_support_count


def test_level_bound_and_counts():
    rng = random.Random(99)
    for _ in range(40):
        db = random_db(rng)
        params = MiningParams(rng.randint(1, db.n_transactions))
        res = mfif_mine(db, params)
        top_size = max(transaction_sizes(db), default=0)
        if res.level > 0:
            assert res.levels_descended <= top_size - res.level + 1
            for s in res.itemsets:
                assert support(db, s.itemset).support == s.support
