"""Small-order enumeration of semigroups up to isomorphism.

Backtracking over table cells with incremental associativity pruning
produces every associative table; canonicalisation (lexicographically
least table over all relabellings) removes isomorphic duplicates.
Anti-isomorphism is NOT quotiented: counts are up to isomorphism only,
which differs from tallies that identify a table with its transpose.

Sharding splits the search on the first table cells; the merge step
deduplicates and sorts, so serial and sharded runs are byte-identical.
"""

from __future__ import annotations

import concurrent.futures
import json
import os

import numpy as np

from .. import kernels
from ..errors import OrderTooLarge

MAX_ORDER = 5


def _canonical_set(tables: np.ndarray) -> set[bytes]:
    out = set()
    for row in tables:
        out.add(kernels.canonical_table(row).astype(np.int64).tobytes())
    return out


def _shard_worker(args):
    n, prefix = args
    tables = kernels.all_assoc_tables(n, prefix)
    return _canonical_set(tables)


def enumerate_semigroups(order: int, jobs: int = 1) -> list[tuple[int, ...]]:
    """All semigroups of the given order up to isomorphism, as flattened
    canonical tables in lexicographic order."""
    if order < 1 or order > MAX_ORDER:
        raise OrderTooLarge(f"enumeration supports orders 1..{MAX_ORDER}")
    if jobs <= 1:
        canon = _canonical_set(kernels.all_assoc_tables(order))
    else:
        # shard on the first two cells (first cell only for order 1)
        if order == 1:
            prefixes = [(v,) for v in range(order)]
        else:
            prefixes = [(a, b) for a in range(order) for b in range(order)]
        canon = set()
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_shard_worker, [(order, p) for p in prefixes]):
                canon |= part
    out = []
    for blob in canon:
        out.append(tuple(int(x) for x in np.frombuffer(blob, dtype=np.int64)))
    return sorted(out)


def write_dataset(order: int, tables: list[tuple[int, ...]], out_dir: str) -> list[str]:
    """Write one Cayley document per canonical table plus an index file;
    names are deterministic."""
    os.makedirs(out_dir, exist_ok=True)
    names = []
    for idx, flat in enumerate(tables):
        doc = {
            "kind": "cayley",
            "order": order,
            "table": [list(flat[i * order : (i + 1) * order]) for i in range(order)],
        }
        name = f"semigroup-{order}-{idx:05d}.json"
        with open(os.path.join(out_dir, name), "w", encoding="utf-8") as fh:
            json.dump(doc, fh, sort_keys=True)
            fh.write("\n")
        names.append(name)
    with open(os.path.join(out_dir, f"index-{order}.json"), "w", encoding="utf-8") as fh:
        json.dump({"order": order, "count": len(tables), "files": names}, fh, indent=2)
        fh.write("\n")
    return names
