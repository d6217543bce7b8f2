"""Array kernels over permutation tables.

A permutation table is a 2-D ``int32`` array with one 0-based image row per
element.  Group tables are kept sorted lexicographically and deduplicated, so
the row index of an element doubles as its canonical rank.

Each kernel has a pure-numpy implementation and, when numba is importable, an
``@njit`` twin.  Set ``COSETLAB_DISABLE_JIT=1`` to force the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

_CHUNK = 1 << 20  # max rows materialized at once by the numpy path


def _jit_requested() -> bool:
    return os.environ.get("COSETLAB_DISABLE_JIT", "").strip().lower() not in ("1", "true", "yes")


try:
    import numba
except ImportError:  # pragma: no cover - numba is a soft dependency
    numba = None

HAVE_NUMBA = numba is not None
USE_JIT = HAVE_NUMBA and _jit_requested()


# ---------------------------------------------------------------------------
# numpy path

def compose_np(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise product ``a[i]·b[i]`` under the apply-a-then-b convention."""
    return np.take_along_axis(b, a.astype(np.intp, copy=False), axis=1)


def _row_keys(a: np.ndarray) -> np.ndarray:
    # big-endian unsigned bytes: bytewise order == lexicographic row order
    a = np.ascontiguousarray(a.astype(">u4"))
    return a.view(f"S{4 * a.shape[1]}").ravel()


def lookup_np(table: np.ndarray, rows: np.ndarray, table_keys: np.ndarray | None = None) -> np.ndarray:
    """Index of each row of ``rows`` in the sorted ``table``; -1 when absent."""
    if rows.shape[0] == 0:
        return np.empty(0, dtype=np.int64)
    if table.shape[1] == 0:
        return np.zeros(rows.shape[0], dtype=np.int64)
    tk = _row_keys(table) if table_keys is None else table_keys
    rk = _row_keys(rows)
    pos = np.minimum(np.searchsorted(tk, rk), len(tk) - 1)
    return np.where(tk[pos] == rk, pos, -1).astype(np.int64)


def min_label_np(table: np.ndarray, rows: np.ndarray, sub: np.ndarray,
                 left: bool, weights: np.ndarray) -> np.ndarray:
    """For each row g, ``min(weights[idx(g·s)])`` (left) or ``min(weights[idx(s·g)])``.

    With ``weights = arange`` this is the rank of the canonical coset
    representative of ``gS`` (resp. ``Sg``).
    """
    ng, ns, d = rows.shape[0], sub.shape[0], table.shape[1]
    out = np.empty(ng, dtype=np.int64)
    tk = _row_keys(table) if d else None
    step = max(1, _CHUNK // max(1, ns))
    for lo in range(0, ng, step):
        g = rows[lo:lo + step]
        m = g.shape[0]
        if left:
            a = np.repeat(g, ns, axis=0)
            b = np.tile(sub, (m, 1))
        else:
            a = np.tile(sub, (m, 1))
            b = np.repeat(g, ns, axis=0)
        idx = lookup_np(table, compose_np(a, b).reshape(m * ns, d), tk)
        if (idx < 0).any():
            raise ValueError("product left the group table")
        out[lo:lo + m] = weights[idx].reshape(m, ns).min(axis=1)
    return out


def coset_partition_np(table: np.ndarray, sub: np.ndarray, left: bool) -> tuple[np.ndarray, np.ndarray]:
    """Partition sorted ``table`` into cosets ``gS`` (left) or ``Sg``.

    Sweeps elements in canonical order; the first uncovered element is the
    minimum of its coset, so cosets come out numbered by representative.
    """
    n = table.shape[0]
    label = np.full(n, -1, dtype=np.int64)
    reps = []
    ns = sub.shape[0]
    tk = _row_keys(table) if table.shape[1] else None
    for i in range(n):
        if label[i] >= 0:
            continue
        g = np.repeat(table[i:i + 1], ns, axis=0)
        idx = lookup_np(table, compose_np(g, sub) if left else compose_np(sub, g), tk)
        if (idx < 0).any():
            raise ValueError("product left the group table")
        label[idx] = len(reps)
        reps.append(i)
    return label, np.asarray(reps, dtype=np.int64)


def double_coset_partition_np(table: np.ndarray, left_label: np.ndarray, left_reps: np.ndarray,
                              sub: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Group the left cosets of H (given by labels) into double cosets ``S g H``.

    Returns the double-coset id of each left coset and the element index of
    each double coset's minimum.
    """
    nc = left_reps.shape[0]
    dlabel = np.full(nc, -1, dtype=np.int64)
    dreps = []
    ns = sub.shape[0]
    tk = _row_keys(table) if table.shape[1] else None
    for c in range(nc):
        if dlabel[c] >= 0:
            continue
        g = np.repeat(table[left_reps[c]:left_reps[c] + 1], ns, axis=0)
        idx = lookup_np(table, compose_np(sub, g), tk)
        if (idx < 0).any():
            raise ValueError("product left the group table")
        dlabel[left_label[idx]] = len(dreps)
        dreps.append(left_reps[c])
    return dlabel, np.asarray(dreps, dtype=np.int64)


# ---------------------------------------------------------------------------
# numba path

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _row_cmp(table, i, row):
        d = table.shape[1]
        for x in range(d):
            a = table[i, x]
            b = row[x]
            if a < b:
                return -1
            if a > b:
                return 1
        return 0

    @numba.njit(cache=True)
    def _bsearch(table, row):
        lo = 0
        hi = table.shape[0] - 1
        while lo <= hi:
            mid = (lo + hi) // 2
            c = _row_cmp(table, mid, row)
            if c == 0:
                return mid
            if c < 0:
                lo = mid + 1
            else:
                hi = mid - 1
        return -1

    @numba.njit(cache=True)
    def compose_nb(a, b):
        n, d = a.shape
        out = np.empty((n, d), dtype=np.int32)
        for i in range(n):
            for x in range(d):
                out[i, x] = b[i, a[i, x]]
        return out

    @numba.njit(cache=True)
    def lookup_nb(table, rows):
        out = np.empty(rows.shape[0], dtype=np.int64)
        for i in range(rows.shape[0]):
            out[i] = _bsearch(table, rows[i])
        return out

    @numba.njit(cache=True)
    def _min_label_nb(table, rows, sub, left, weights):
        ng = rows.shape[0]
        ns = sub.shape[0]
        d = table.shape[1]
        out = np.empty(ng, dtype=np.int64)
        buf = np.empty(d, dtype=np.int32)
        for i in range(ng):
            best = np.iinfo(np.int64).max
            for j in range(ns):
                if left:
                    for x in range(d):
                        buf[x] = sub[j, rows[i, x]]
                else:
                    for x in range(d):
                        buf[x] = rows[i, sub[j, x]]
                k = _bsearch(table, buf)
                if k < 0:
                    return out, False
                w = weights[k]
                if w < best:
                    best = w
            out[i] = best
        return out, True

    def min_label_nb(table, rows, sub, left, weights):
        out, ok = _min_label_nb(table, rows, sub, left, weights)
        if not ok:
            raise ValueError("product left the group table")
        return out

    @numba.njit(cache=True)
    def _coset_partition_nb(table, sub, left):
        n = table.shape[0]
        ns = sub.shape[0]
        d = table.shape[1]
        label = np.full(n, -1, dtype=np.int64)
        reps = np.empty(n, dtype=np.int64)
        buf = np.empty(d, dtype=np.int32)
        nc = 0
        for i in range(n):
            if label[i] >= 0:
                continue
            for j in range(ns):
                if left:
                    for x in range(d):
                        buf[x] = sub[j, table[i, x]]
                else:
                    for x in range(d):
                        buf[x] = table[i, sub[j, x]]
                k = _bsearch(table, buf)
                if k < 0:
                    return label, reps[:0], False
                label[k] = nc
            reps[nc] = i
            nc += 1
        return label, reps[:nc].copy(), True

    def coset_partition_nb(table, sub, left):
        label, reps, ok = _coset_partition_nb(table, sub, left)
        if not ok:
            raise ValueError("product left the group table")
        return label, reps

    @numba.njit(cache=True)
    def _double_coset_partition_nb(table, left_label, left_reps, sub):
        nc = left_reps.shape[0]
        ns = sub.shape[0]
        d = table.shape[1]
        dlabel = np.full(nc, -1, dtype=np.int64)
        dreps = np.empty(nc, dtype=np.int64)
        buf = np.empty(d, dtype=np.int32)
        nd = 0
        for c in range(nc):
            if dlabel[c] >= 0:
                continue
            r = left_reps[c]
            for j in range(ns):
                for x in range(d):
                    buf[x] = table[r, sub[j, x]]
                k = _bsearch(table, buf)
                if k < 0:
                    return dlabel, dreps[:0], False
                dlabel[left_label[k]] = nd
            dreps[nd] = r
            nd += 1
        return dlabel, dreps[:nd].copy(), True

    def double_coset_partition_nb(table, left_label, left_reps, sub):
        dlabel, dreps, ok = _double_coset_partition_nb(table, left_label, left_reps, sub)
        if not ok:
            raise ValueError("product left the group table")
        return dlabel, dreps

else:  # pragma: no cover
    compose_nb = lookup_nb = min_label_nb = None
    coset_partition_nb = double_coset_partition_nb = None


# ---------------------------------------------------------------------------
# dispatch

def _prep(x: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(x, dtype=np.int32)


def compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = _prep(a), _prep(b)
    if USE_JIT and a.shape[1] > 0:
        return compose_nb(a, b)
    return compose_np(a, b)


def lookup(table: np.ndarray, rows: np.ndarray) -> np.ndarray:
    table, rows = _prep(table), _prep(rows)
    if USE_JIT:
        return lookup_nb(table, rows)
    return lookup_np(table, rows)


def min_label(table: np.ndarray, rows: np.ndarray, sub: np.ndarray, left: bool,
              weights: np.ndarray | None = None) -> np.ndarray:
    table, rows, sub = _prep(table), _prep(rows), _prep(sub)
    if weights is None:
        weights = np.arange(table.shape[0], dtype=np.int64)
    else:
        weights = np.ascontiguousarray(weights, dtype=np.int64)
    if USE_JIT:
        return min_label_nb(table, rows, sub, bool(left), weights)
    return min_label_np(table, rows, sub, bool(left), weights)


def coset_partition(table: np.ndarray, sub: np.ndarray, left: bool) -> tuple[np.ndarray, np.ndarray]:
    table, sub = _prep(table), _prep(sub)
    if USE_JIT:
        return coset_partition_nb(table, sub, bool(left))
    return coset_partition_np(table, sub, bool(left))


def double_coset_partition(table: np.ndarray, left_label: np.ndarray, left_reps: np.ndarray,
                           sub: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    table, sub = _prep(table), _prep(sub)
    left_label = np.ascontiguousarray(left_label, dtype=np.int64)
    left_reps = np.ascontiguousarray(left_reps, dtype=np.int64)
    if USE_JIT:
        return double_coset_partition_nb(table, left_label, left_reps, sub)
    return double_coset_partition_np(table, left_label, left_reps, sub)


def inverse(a: np.ndarray) -> np.ndarray:
    """Row-wise inverse permutation."""
    a = _prep(a)
    out = np.empty_like(a)
    cols = np.broadcast_to(np.arange(a.shape[1], dtype=np.int32), a.shape)
    np.put_along_axis(out, a.astype(np.intp), cols, axis=1)
    return out


def canonical(rows: np.ndarray) -> np.ndarray:
    """Sorted, deduplicated copy of a permutation table."""
    rows = _prep(rows)
    if rows.shape[0] == 0:
        return rows.copy()
    return np.ascontiguousarray(np.unique(rows, axis=0), dtype=np.int32)
