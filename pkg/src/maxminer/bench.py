"""Benchmark harness: timed algorithm comparisons over one or more corpora.

Timing protocol: one warm-up run, then the median of `reps` timed runs on
a monotonic clock. Rows never interleave; each corpus/algorithm pair runs
to completion before the next starts.
"""
from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass
from typing import Optional

from . import apriori, mfif, oracle
from .txdb import MiningError, MiningParams, TransactionDatabase

ALGORITHMS = ("mfif", "mfif-all", "apriori", "brute")


@dataclass
class BenchRow:
    algorithm: str
    n_transactions: int
    universe_size: int
    min_support_count: int
    wall_time_seconds: float
    scans_or_levels: int
    result_level: int
    result_count: int
    error: Optional[str] = None


def run_algorithm(name: str, db: TransactionDatabase, params: MiningParams,
                  pool_cap: int = mfif.DEFAULT_POOL_CAP):
    """Run one miner; returns (result_level, itemsets, scans_or_levels)."""
    if name == "mfif":
        res = mfif.mfif_mine(db, params, pool_cap=pool_cap)
        return res.level, res.itemsets, res.levels_descended
    if name == "mfif-all":
        found = mfif.mfif_mine_all_maximal(db, params, pool_cap=pool_cap)
        level = max((len(s.itemset) for s in found), default=0)
        return level, found, 0
    if name == "apriori":
        res = apriori.apriori_mine(db, params)
        top = res.levels[-1].itemsets if res.levels else []
        return res.max_level, top, res.scan_count
    if name == "brute":
        found = oracle.brute_force_frequent(db, params)
        level = max((len(s.itemset) for s in found), default=0)
        top = [s for s in found if len(s.itemset) == level]
        return level, top, 0
    raise MiningError(f"unknown algorithm {name!r}")


def run_bench(corpora, algorithms, params_for, reps: int = 3,
              pool_cap: int = mfif.DEFAULT_POOL_CAP):
    """Time each algorithm on each corpus.

    corpora: iterable of TransactionDatabase. params_for: callable mapping
    a database to its MiningParams (percent thresholds depend on n).
    """
    if reps < 1:
        raise MiningError("reps must be >= 1")
    rows = []
    for db in corpora:
        for name in algorithms:
            try:
                level, top, scans = run_algorithm(name, db, params_for(db),
                                                  pool_cap)  # warm-up
                times = []
                for _ in range(reps):
                    t0 = time.perf_counter()
                    level, found, scans = run_algorithm(
                        name, db, params_for(db), pool_cap)
                    times.append(time.perf_counter() - t0)
                count = sum(1 for s in found if len(s.itemset) == level)
                rows.append(BenchRow(
                    name, db.n_transactions, db.universe_size,
                    params_for(db).min_support_count,
                    statistics.median(times), scans, level, count))
            except MiningError as exc:
                rows.append(BenchRow(
                    name, db.n_transactions, db.universe_size,
                    params_for(db).min_support_count,
                    0.0, 0, 0, 0, error=str(exc)))
    return rows


_CSV_FIELDS = ["algorithm", "n_transactions", "universe_size",
               "min_support_count", "wall_time_seconds", "scans_or_levels",
               "result_level", "result_count", "error"]


def write_csv(rows, fh):
    w = csv.DictWriter(fh, fieldnames=_CSV_FIELDS)
    w.writeheader()
    for r in rows:
        d = {k: getattr(r, k) for k in _CSV_FIELDS}
        d["error"] = d["error"] or ""
        d["wall_time_seconds"] = f"{r.wall_time_seconds:.6f}"
        w.writerow(d)


def write_plot_data(rows, fh):
    """(n_transactions, time) series per algorithm, for plotting."""
    w = csv.writer(fh)
    w.writerow(["algorithm", "n_transactions", "wall_time_seconds"])
    for r in rows:
        if r.error is None:
            w.writerow([r.algorithm, r.n_transactions,
                        f"{r.wall_time_seconds:.6f}"])
