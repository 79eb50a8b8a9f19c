"""Hot integer kernels: associativity scan, table enumeration, canonical forms.

Each kernel has two implementations: a numba ``@njit`` version and a pure
Python/NumPy fallback.  The fallback is selected by setting the environment
variable ``SGTOOL_NO_NUMBA=1`` (or when numba is not importable).  Both paths
produce byte-identical results; ``benchmarks/bench_kernels.py`` times them
against each other.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache

import numpy as np

_NO_NUMBA_ENV = os.environ.get("SGTOOL_NO_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:  # pragma: no cover - exercised indirectly
    if _NO_NUMBA_ENV:
        raise ImportError("numba disabled via SGTOOL_NO_NUMBA")
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    HAS_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore[misc]
        # decorator stub so the _nb definitions below still import
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


USE_NUMBA = HAS_NUMBA and not _NO_NUMBA_ENV


# ---------------------------------------------------------------------------
# associativity witness


def assoc_witness_py(table: np.ndarray):
    """First triple (a, b, c) with (ab)c != a(bc), or None.  Vectorised."""
    t = np.asarray(table, dtype=np.int64)
    left = t[t, :]  # left[a, b, c] = t[t[a, b], c]
    right = t[:, t]  # right[a, b, c] = t[a, t[b, c]]
    bad = np.argwhere(left != right)
    if bad.size == 0:
        return None
    a, b, c = bad[0]
    return int(a), int(b), int(c)


@njit(cache=True)
def _assoc_witness_nb(t):
    n = t.shape[0]
    for a in range(n):
        for b in range(n):
            ab = t[a, b]
            for c in range(n):
                if t[ab, c] != t[a, t[b, c]]:
                    return a, b, c
    return -1, -1, -1


def assoc_witness_nb(table: np.ndarray):
    t = np.ascontiguousarray(table, dtype=np.int64)
    a, b, c = _assoc_witness_nb(t)
    if a < 0:
        return None
    return int(a), int(b), int(c)


def assoc_witness(table: np.ndarray):
    if USE_NUMBA:
        return assoc_witness_nb(table)
    return assoc_witness_py(table)


# ---------------------------------------------------------------------------
# enumeration of all associative tables (flattened, lexicographic order)
#
# Cells are filled row-major.  Placing cell (a, b) = c triggers exactly the
# associativity constraints whose four table lookups become defined at that
# moment, so the DFS prunes every inconsistent prefix as early as possible.


def _check_cell_py(t, n, pos):
    a, b = divmod(pos, n)
    c = t[pos]
    for z in range(n):
        bz = t[b * n + z]
        if bz >= 0:
            left = t[c * n + z]
            right = t[a * n + bz]
            if left >= 0 and right >= 0 and left != right:
                return False
    for x in range(n):
        xa = t[x * n + a]
        if xa >= 0:
            left = t[xa * n + b]
            right = t[x * n + c]
            if left >= 0 and right >= 0 and left != right:
                return False
    for x in range(n):
        base = x * n
        for y in range(n):
            if t[base + y] == a:
                yb = t[y * n + b]
                if yb >= 0:
                    other = t[base + yb]
                    if other >= 0 and other != c:
                        return False
    for y in range(n):
        ay = t[a * n + y]
        if ay >= 0:
            for z in range(n):
                if t[y * n + z] == b:
                    left = t[ay * n + z]
                    if left >= 0 and left != c:
                        return False
    return True


def all_assoc_tables_py(n: int, prefix=()) -> np.ndarray:
    size = n * n
    t = [-1] * size
    pos0 = len(prefix)
    for idx, v in enumerate(prefix):
        t[idx] = int(v)
        if not _check_cell_py(t, n, idx):
            return np.empty((0, size), dtype=np.int64)
    out = []
    if pos0 == size:
        return np.array([t], dtype=np.int64)
    cand = [0] * size
    cur = pos0
    cand[cur] = 0
    while cur >= pos0:
        if cur == size:
            out.append(list(t))
            cur -= 1
            continue
        v = cand[cur]
        if v >= n:
            t[cur] = -1
            cand[cur] = 0
            cur -= 1
            continue
        cand[cur] = v + 1
        t[cur] = v
        if _check_cell_py(t, n, cur):
            cur += 1
            if cur < size:
                cand[cur] = 0
        else:
            t[cur] = -1
    if not out:
        return np.empty((0, size), dtype=np.int64)
    return np.array(out, dtype=np.int64)


@njit(cache=True)
def _check_cell_nb(t, n, pos):
    a = pos // n
    b = pos % n
    c = t[pos]
    for z in range(n):
        bz = t[b * n + z]
        if bz >= 0:
            left = t[c * n + z]
            right = t[a * n + bz]
            if left >= 0 and right >= 0 and left != right:
                return False
    for x in range(n):
        xa = t[x * n + a]
        if xa >= 0:
            left = t[xa * n + b]
            right = t[x * n + c]
            if left >= 0 and right >= 0 and left != right:
                return False
    for x in range(n):
        base = x * n
        for y in range(n):
            if t[base + y] == a:
                yb = t[y * n + b]
                if yb >= 0:
                    other = t[base + yb]
                    if other >= 0 and other != c:
                        return False
    for y in range(n):
        ay = t[a * n + y]
        if ay >= 0:
            for z in range(n):
                if t[y * n + z] == b:
                    left = t[ay * n + z]
                    if left >= 0 and left != c:
                        return False
    return True


@njit(cache=True)
def _enum_nb(n, prefix):
    size = n * n
    t = np.full(size, -1, dtype=np.int64)
    pos0 = prefix.shape[0]
    bad = False
    for idx in range(pos0):
        t[idx] = prefix[idx]
        if not _check_cell_nb(t, n, idx):
            bad = True
            break
    # first pass counts, second pass fills; keeps memory exact
    count = 0
    if not bad and pos0 == size:
        count = 1
    elif not bad:
        cand = np.zeros(size, dtype=np.int64)
        cur = pos0
        while cur >= pos0:
            if cur == size:
                count += 1
                cur -= 1
                continue
            v = cand[cur]
            if v >= n:
                t[cur] = -1
                cand[cur] = 0
                cur -= 1
                continue
            cand[cur] = v + 1
            t[cur] = v
            if _check_cell_nb(t, n, cur):
                cur += 1
                if cur < size:
                    cand[cur] = 0
            else:
                t[cur] = -1

    out = np.empty((count, size), dtype=np.int64)
    if count == 0:
        return out
    for idx in range(size):
        t[idx] = -1
    for idx in range(pos0):
        t[idx] = prefix[idx]
        _check_cell_nb(t, n, idx)
    if pos0 == size:
        out[0, :] = t
        return out
    row = 0
    cand = np.zeros(size, dtype=np.int64)
    cur = pos0
    while cur >= pos0:
        if cur == size:
            out[row, :] = t
            row += 1
            cur -= 1
            continue
        v = cand[cur]
        if v >= n:
            t[cur] = -1
            cand[cur] = 0
            cur -= 1
            continue
        cand[cur] = v + 1
        t[cur] = v
        if _check_cell_nb(t, n, cur):
            cur += 1
            if cur < size:
                cand[cur] = 0
        else:
            t[cur] = -1
    return out


def all_assoc_tables_nb(n: int, prefix=()) -> np.ndarray:
    p = np.asarray(list(prefix), dtype=np.int64)
    return _enum_nb(n, p)


def all_assoc_tables(n: int, prefix=()) -> np.ndarray:
    """All associative n x n tables extending ``prefix`` (row-major cells),
    flattened, in lexicographic order."""
    if USE_NUMBA:
        return all_assoc_tables_nb(n, prefix)
    return all_assoc_tables_py(n, prefix)


# ---------------------------------------------------------------------------
# canonical form under relabelling (lexicographically least table)


@lru_cache(maxsize=None)
def _perm_arrays(n: int):
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    inv = np.empty_like(perms)
    for k in range(perms.shape[0]):
        inv[k, perms[k]] = np.arange(n, dtype=np.int64)
    return perms, inv


def canonical_table_py(table: np.ndarray) -> np.ndarray:
    t = np.asarray(table, dtype=np.int64).reshape(-1)
    n = int(round(len(t) ** 0.5))
    t2 = t.reshape(n, n)
    perms, inv = _perm_arrays(n)
    best = None
    for k in range(perms.shape[0]):
        q = perms[k]  # new index -> old element
        cand = inv[k][t2[np.ix_(q, q)]].reshape(-1)
        key = cand.tobytes()
        if best is None or key < best_key:
            best, best_key = cand, key
    return best


@njit(cache=True)
def _canonical_nb(t, n, perms, inv):
    size = n * n
    best = np.empty(size, dtype=np.int64)
    for pos in range(size):
        best[pos] = t[pos]
    nperm = perms.shape[0]
    for k in range(nperm):
        better = False
        for pos in range(size):
            i = pos // n
            j = pos % n
            v = inv[k, t[perms[k, i] * n + perms[k, j]]]
            if better:
                best[pos] = v
            else:
                bp = best[pos]
                if v < bp:
                    better = True
                    best[pos] = v
                elif v > bp:
                    break
    return best


def canonical_table_nb(table: np.ndarray) -> np.ndarray:
    t = np.ascontiguousarray(np.asarray(table, dtype=np.int64).reshape(-1))
    n = int(round(len(t) ** 0.5))
    perms, inv = _perm_arrays(n)
    return _canonical_nb(t, n, perms, inv)


def canonical_table(table: np.ndarray) -> np.ndarray:
    if USE_NUMBA:
        return canonical_table_nb(table)
    return canonical_table_py(table)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "python"
