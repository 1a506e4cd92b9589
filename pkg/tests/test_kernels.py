import random

import numpy as np
import pytest

from maxminer import _kernels
from maxminer.txdb import _candidate_matrix, batch_support_counts, support

from .helpers import random_db


def test_backend_selected():
    assert _kernels.backend_name() in _kernels.available_backends()


def test_batch_counts_match_scalar_support():
    rng = random.Random(23)
    for _ in range(20):
        db = random_db(rng)
        cands = []
        for _ in range(10):
            k = rng.randint(1, db.universe_size)
            cands.append(tuple(sorted(rng.sample(range(db.universe_size), k))))
        counts = batch_support_counts(db, cands)
        for x, c in zip(cands, counts):
            assert support(db, x).support == c


@pytest.mark.parametrize("backend", _kernels.available_backends())
def test_backends_agree(backend):
    rng = np.random.default_rng(1)
    matrix = (rng.random((50, 12)) < 0.4).astype(np.uint8)
    cands = (rng.random((30, 12)) < 0.3).astype(np.uint8)
    ref_counts = _kernels.support_counts_using("numpy", matrix, cands)
    ref_hits = _kernels.containment_using("numpy", matrix, cands)
    assert np.array_equal(
        _kernels.support_counts_using(backend, matrix, cands), ref_counts)
    assert np.array_equal(
        _kernels.containment_using(backend, matrix, cands), ref_hits)
    assert np.array_equal(ref_hits.sum(axis=0), ref_counts)


def test_empty_candidate_batch():
    matrix = np.ones((3, 4), dtype=np.uint8)
    empty = np.zeros((0, 4), dtype=np.uint8)
    for backend in _kernels.available_backends():
        assert _kernels.support_counts_using(backend, matrix, empty).shape == (0,)
        assert _kernels.containment_using(backend, matrix, empty).shape == (3, 0)


def test_empty_itemset_row_counts_everything():
    matrix = np.eye(4, dtype=np.uint8)
    cands = np.zeros((1, 4), dtype=np.uint8)
    for backend in _kernels.available_backends():
        assert _kernels.support_counts_using(backend, matrix, cands)[0] == 4


def test_candidate_matrix_layout():
    m = _candidate_matrix(4, [(0, 2), (3,)])
    assert m.tolist() == [[1, 0, 1, 0], [0, 0, 0, 1]]
