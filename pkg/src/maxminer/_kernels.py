"""Hot support-counting kernels.

Two interchangeable backends: numba-jitted loops (default when numba is
importable) and a pure-numpy matmul fallback. Select with the
MAXMINER_BACKEND environment variable: "numba", "numpy", or "auto".

Both operate on uint8 0/1 arrays: `matrix` is (n_transactions, universe)
and `cands` is (n_candidates, universe). A transaction contains a
candidate iff the row dot product equals the candidate's cardinality.
"""
import os

import numpy as np


def _support_counts_numpy(matrix, cands):
    if cands.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    sizes = cands.sum(axis=1, dtype=np.int64).astype(np.float32)
    hits = matrix.astype(np.float32) @ cands.T.astype(np.float32)
    return (hits == sizes).sum(axis=0).astype(np.int64)


def _containment_numpy(matrix, cands):
    if cands.shape[0] == 0:
        return np.zeros((matrix.shape[0], 0), dtype=np.bool_)
    sizes = cands.sum(axis=1, dtype=np.int64).astype(np.float32)
    hits = matrix.astype(np.float32) @ cands.T.astype(np.float32)
    return hits == sizes


try:
    from numba import njit

    @njit(cache=True)
    def _support_counts_numba(matrix, cands):
        n, u = matrix.shape
        m = cands.shape[0]
        out = np.zeros(m, dtype=np.int64)
        for j in range(m):
            c = 0
            for i in range(n):
                ok = True
                for k in range(u):
                    if cands[j, k] != 0 and matrix[i, k] == 0:
                        ok = False
                        break
                if ok:
                    c += 1
            out[j] = c
        return out

    @njit(cache=True)
    def _containment_numba(matrix, cands):
        n, u = matrix.shape
        m = cands.shape[0]
        out = np.zeros((n, m), dtype=np.bool_)
        for j in range(m):
            for i in range(n):
                ok = True
                for k in range(u):
                    if cands[j, k] != 0 and matrix[i, k] == 0:
                        ok = False
                        break
                out[i, j] = ok
        return out

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False


def _pick_backend():
    env = os.environ.get("MAXMINER_BACKEND", "auto").strip().lower()
    if env in ("", "auto"):
        return "numba" if _HAVE_NUMBA else "numpy"
    if env == "numpy":
        return "numpy"
    if env == "numba":
        if not _HAVE_NUMBA:
            raise ImportError("MAXMINER_BACKEND=numba but numba is not importable")
        return "numba"
    raise ValueError(f"unknown MAXMINER_BACKEND value {env!r}")


BACKEND = _pick_backend()


def backend_name():
    return BACKEND


def available_backends():
    return ("numba", "numpy") if _HAVE_NUMBA else ("numpy",)


def _as_u8(a):
    return np.ascontiguousarray(a, dtype=np.uint8)


def support_counts_using(backend, matrix, cands):
    matrix, cands = _as_u8(matrix), _as_u8(cands)
    if backend == "numba":
        return _support_counts_numba(matrix, cands)
    return _support_counts_numpy(matrix, cands)


def containment_using(backend, matrix, cands):
    matrix, cands = _as_u8(matrix), _as_u8(cands)
    if backend == "numba":
        return _containment_numba(matrix, cands)
    return _containment_numpy(matrix, cands)


def support_counts(matrix, cands):
    return support_counts_using(BACKEND, matrix, cands)


def containment(matrix, cands):
    return containment_using(BACKEND, matrix, cands)
