"""Shared helpers for randomized tests."""
from maxminer import db_from_itemsets


def random_db(rng, max_items=8, max_tx=20):
    """Small random database with a randomly chosen row density."""
    u = rng.randint(1, max_items)
    n = rng.randint(1, max_tx)
    rows = [[i for i in range(u) if rng.random() < rng.choice((0.2, 0.5, 0.8))]
            for _ in range(n)]
    return db_from_itemsets(u, rows)
