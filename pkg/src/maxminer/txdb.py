"""Transaction database model, input parsers, and exact support counting.

Items are 0-based internally; every human-facing label is the 1-based
"I<n>" form (item 0 prints as I1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels


class MiningError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(MiningError):
    """Malformed input data (bad tokens, ragged rows, empty files)."""


class ParameterError(MiningError):
    """Invalid mining parameters or out-of-range arguments."""


class ResourceLimitError(MiningError):
    """A configured resource cap (candidate pool size) was exceeded."""


class ConsistencyError(MiningError):
    """Caller-supplied support data disagrees with the database."""


# Canonical itemset: strictly ascending tuple of 0-based item indices.
Itemset = tuple


def make_itemset(items: Iterable[int]) -> Itemset:
    """Canonicalize an iterable of item indices (sorted, deduplicated)."""
    out = tuple(sorted({int(i) for i in items}))
    if out and out[0] < 0:
        raise ParameterError(f"negative item index {out[0]}")
    return out


def item_label(index: int) -> str:
    return f"I{index + 1}"


def itemset_labels(x: Itemset) -> str:
    return " ".join(item_label(i) for i in x)


@dataclass(frozen=True)
class Transaction:
    id: int
    items: Itemset


@dataclass(frozen=True)
class SupportedItemset:
    itemset: Itemset
    support: int
    sources: frozenset

    def __post_init__(self):
        if self.support != len(self.sources):
            raise ConsistencyError(
                f"support {self.support} != |sources| {len(self.sources)}"
            )


@dataclass(frozen=True)
class MiningParams:
    min_support_count: int
    min_confidence: Optional[Fraction] = None

    def __post_init__(self):
        if self.min_support_count < 1:
            raise ParameterError(
                f"min_support_count must be >= 1, got {self.min_support_count}"
            )
        if self.min_confidence is not None:
            conf = Fraction(str(self.min_confidence)) if not isinstance(
                self.min_confidence, Fraction) else self.min_confidence
            if not (0 <= conf <= 1):
                raise ParameterError(f"min_confidence must be in [0,1], got {conf}")
            object.__setattr__(self, "min_confidence", conf)

    @classmethod
    def from_percent(cls, percent, n_transactions: int,
                     min_confidence=None) -> "MiningParams":
        """Convert a percentage threshold to an absolute count (ceiling, >= 1)."""
        p = Fraction(str(percent))
        if not (0 < p <= 100):
            raise ParameterError(f"min support percent must be in (0,100], got {percent}")
        count = max(1, math.ceil(p * n_transactions / 100))
        return cls(min_support_count=count, min_confidence=min_confidence)


@dataclass
class TransactionDatabase:
    universe_size: int
    transactions: tuple
    _matrix: Optional[np.ndarray] = field(
        default=None, init=False, repr=False, compare=False)
    _item_sets: Optional[list] = field(
        default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.universe_size < 0:
            raise ParameterError("universe_size must be non-negative")
        self.transactions = tuple(self.transactions)
        for pos, t in enumerate(self.transactions):
            if t.id != pos:
                raise ParameterError(f"transaction ids must be 0..n-1 in order, "
                                     f"got id {t.id} at position {pos}")
            if t.items and t.items[-1] >= self.universe_size:
                raise ParameterError(
                    f"transaction {t.id} has item {t.items[-1]} outside universe "
                    f"of size {self.universe_size}")

    @property
    def n_transactions(self) -> int:
        return len(self.transactions)

    def matrix(self) -> np.ndarray:
        """0/1 membership matrix, shape (n_transactions, universe_size), uint8."""
        if self._matrix is None:
            m = np.zeros((self.n_transactions, self.universe_size), dtype=np.uint8)
            for t in self.transactions:
                for i in t.items:
                    m[t.id, i] = 1
            self._matrix = m
        return self._matrix

    def item_sets(self) -> list:
        if self._item_sets is None:
            self._item_sets = [frozenset(t.items) for t in self.transactions]
        return self._item_sets

    def to_matrix_text(self) -> str:
        lines = []
        for t in self.transactions:
            row = ["0"] * self.universe_size
            for i in t.items:
                row[i] = "1"
            lines.append(" ".join(row))
        return "\n".join(lines) + "\n"

    def to_item_list_text(self) -> str:
        lines = [" ".join(str(i + 1) for i in t.items) for t in self.transactions]
        return "\n".join(lines) + "\n"


def db_from_itemsets(universe_size: int, rows: Sequence[Iterable[int]]
                     ) -> TransactionDatabase:
    txs = tuple(Transaction(i, make_itemset(r)) for i, r in enumerate(rows))
    return TransactionDatabase(universe_size, txs)


def db_from_matrix(matrix: np.ndarray) -> TransactionDatabase:
    rows = [np.flatnonzero(matrix[i]).tolist() for i in range(matrix.shape[0])]
    return db_from_itemsets(matrix.shape[1], rows)


def parse_matrix(text: str) -> TransactionDatabase:
    """Parse the 0/1 matrix format: one transaction per line, blank lines ignored."""
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks:
            continue
        if width is None:
            width = len(toks)
        elif len(toks) != width:
            raise FormatError(
                f"line {lineno}: expected {width} values, got {len(toks)}")
        items = []
        for j, tok in enumerate(toks):
            if tok == "1":
                items.append(j)
            elif tok != "0":
                raise FormatError(
                    f"line {lineno}: invalid token {tok!r} (expected 0 or 1)")
        rows.append(items)
    if not rows:
        raise FormatError("no transactions")
    return db_from_itemsets(width, rows)


def parse_item_lists(text: str, universe_size: int) -> TransactionDatabase:
    """Parse the sparse format: 1-based item numbers per line, blank line = empty."""
    if universe_size < 1:
        raise ParameterError("universe_size must be >= 1")
    lines = text.splitlines()
    if not lines:
        raise FormatError("no transactions")
    rows = []
    for lineno, raw in enumerate(lines, start=1):
        toks = raw.split()
        items = []
        seen = set()
        for tok in toks:
            try:
                n = int(tok)
            except ValueError:
                raise FormatError(f"line {lineno}: invalid item number {tok!r}")
            if n < 1 or n > universe_size:
                raise FormatError(
                    f"line {lineno}: item number {n} out of range 1..{universe_size}")
            if n in seen:
                raise FormatError(f"line {lineno}: duplicate item number {n}")
            seen.add(n)
            items.append(n - 1)
        rows.append(items)
    return db_from_itemsets(universe_size, rows)


def support(db: TransactionDatabase, x: Iterable[int]) -> SupportedItemset:
    """Exact support of an itemset: count and ids of containing transactions."""
    xs = make_itemset(x)
    if xs and xs[-1] >= db.universe_size:
        raise ParameterError(
            f"item {xs[-1]} outside universe of size {db.universe_size}")
    want = frozenset(xs)
    sources = frozenset(
        t.id for t, s in zip(db.transactions, db.item_sets()) if want <= s)
    return SupportedItemset(xs, len(sources), sources)


def transaction_sizes(db: TransactionDatabase) -> list:
    """Number of items in each transaction, in transaction order."""
    return [len(t.items) for t in db.transactions]


def _candidate_matrix(universe_size: int, itemsets: Sequence[Itemset]) -> np.ndarray:
    cands = np.zeros((len(itemsets), universe_size), dtype=np.uint8)
    for j, x in enumerate(itemsets):
        for i in x:
            cands[j, i] = 1
    return cands


_CHUNK = 2048  # candidate batch size, bounds the transient containment matrix


def batch_support_counts(db: TransactionDatabase,
                         itemsets: Sequence[Itemset]) -> np.ndarray:
    """Support counts for many itemsets at once (kernel-accelerated)."""
    out = np.zeros(len(itemsets), dtype=np.int64)
    mat = db.matrix()
    for lo in range(0, len(itemsets), _CHUNK):
        chunk = itemsets[lo:lo + _CHUNK]
        out[lo:lo + len(chunk)] = _kernels.support_counts(
            mat, _candidate_matrix(db.universe_size, chunk))
    return out


def batch_supports(db: TransactionDatabase,
                   itemsets: Sequence[Itemset]) -> list:
    """Like batch_support_counts but materializes source-transaction ids."""
    mat = db.matrix()
    out = []
    for lo in range(0, len(itemsets), _CHUNK):
        chunk = itemsets[lo:lo + _CHUNK]
        hits = _kernels.containment(mat, _candidate_matrix(db.universe_size, chunk))
        for j, x in enumerate(chunk):
            src = frozenset(np.flatnonzero(hits[:, j]).tolist())
            out.append(SupportedItemset(x, len(src), src))
    return out
