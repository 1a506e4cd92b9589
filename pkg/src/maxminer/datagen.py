"""Seeded synthetic corpus generator: planted duplicate rows plus noise."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .txdb import ParameterError, TransactionDatabase, db_from_matrix


@dataclass(frozen=True)
class GeneratorSpec:
    n_transactions: int
    universe_size: int
    planted_itemset_size: int = 0
    planted_copies: int = 0
    noise_density: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.n_transactions < 1:
            raise ParameterError("n_transactions must be >= 1")
        if self.universe_size < 1:
            raise ParameterError("universe_size must be >= 1")
        if not (0 <= self.planted_itemset_size <= self.universe_size):
            raise ParameterError(
                f"planted_itemset_size {self.planted_itemset_size} exceeds "
                f"universe of {self.universe_size}")
        if not (0 <= self.planted_copies <= self.n_transactions):
            raise ParameterError(
                f"planted_copies {self.planted_copies} exceeds "
                f"{self.n_transactions} transactions")
        if not (0.0 <= self.noise_density <= 1.0):
            raise ParameterError("noise_density must be in [0,1]")


def generate(spec: GeneratorSpec) -> TransactionDatabase:
    """Deterministic corpus: the first planted_copies rows are identical
    copies of a random planted itemset; remaining rows are independent
    Bernoulli(noise_density) fills."""
    rng = np.random.default_rng(spec.seed)
    mat = np.zeros((spec.n_transactions, spec.universe_size), dtype=np.uint8)
    copies = spec.planted_copies if spec.planted_itemset_size > 0 else 0
    if copies > 0:
        planted = rng.choice(spec.universe_size, size=spec.planted_itemset_size,
                             replace=False)
        mat[:copies, planted] = 1
    if copies < spec.n_transactions:
        noise = rng.random((spec.n_transactions - copies, spec.universe_size))
        mat[copies:] = (noise < spec.noise_density).astype(np.uint8)
    return db_from_matrix(mat)


def generate_to_file(spec: GeneratorSpec, path) -> TransactionDatabase:
    db = generate(spec)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(db.to_matrix_text())
    return db
