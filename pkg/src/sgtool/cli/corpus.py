"""The builtin corpus: the worked examples used across the test suite and
the verification runs, each under a stable id."""

from __future__ import annotations

from dataclasses import dataclass

from ..construct import brandt, direct_product, u_construction
from ..core import FiniteSemigroup, adjoin, validate_semigroup
from ..symbolic import (
    Bicyclic,
    BruckReilly,
    CollapsingLeftZeroChain,
    DisjointMonogenicChain,
    Family,
    FreeCommutative,
    FreeSemigroup,
    GrowingLeftZeroChain,
    NullFamily,
    Polycyclic,
    TrivialFreeProduct,
    Z2FreeProductSl2,
)

__all__ = ["CorpusEntry", "builtin_corpus", "builtin_finite", "builtin_families", "get_entry"]


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    kind: str  # "cayley" | "family"
    obj: object
    source: str = "builtin"


def left_zero(n: int) -> FiniteSemigroup:
    return validate_semigroup([[i] * n for i in range(n)])


def right_zero(n: int) -> FiniteSemigroup:
    return validate_semigroup([list(range(n)) for _ in range(n)])


def cyclic_group(n: int) -> FiniteSemigroup:
    return validate_semigroup([[(i + j) % n for j in range(n)] for i in range(n)])


def chain_semilattice(n: int) -> FiniteSemigroup:
    # elements 0 > 1 > ... > n-1 under x*y = max
    return validate_semigroup([[max(i, j) for j in range(n)] for i in range(n)])


def null_semigroup(n: int) -> FiniteSemigroup:
    # n symbols plus a zero at the last index
    return validate_semigroup(
        [[n] * (n + 1) for _ in range(n + 1)],
        labels=[f"x{i+1}" for i in range(n)] + ["0"],
    )


def monogenic(index: int, period: int) -> FiniteSemigroup:
    n = index + period - 1
    return validate_semigroup(
        [
            [
                (i + j + 1) if (i + j + 1) < n else (index - 1 + ((i + j + 1) - (index - 1)) % period)
                for j in range(n)
            ]
            for i in range(n)
        ],
        labels=[f"a^{k}" for k in range(1, n + 1)],
    )


def n21_monoid() -> FiniteSemigroup:
    # 2-element null semigroup with an identity adjoined: {1, a, 0}
    return validate_semigroup([[0, 1, 2], [1, 2, 2], [2, 2, 2]], labels=["1", "a", "0"])


def n21_collapse_theta() -> list[int]:
    # units to the identity, everything else to the idempotent of the ideal
    return [0, 2, 2]


def builtin_finite() -> list[CorpusEntry]:
    z2 = cyclic_group(2)
    entries = [
        CorpusEntry("trivial", "cayley", validate_semigroup([[0]])),
        CorpusEntry("z2", "cayley", z2),
        CorpusEntry("z3", "cayley", cyclic_group(3)),
        CorpusEntry("z4", "cayley", cyclic_group(4)),
        CorpusEntry("l2", "cayley", left_zero(2)),
        CorpusEntry("l3", "cayley", left_zero(3)),
        CorpusEntry("r2", "cayley", right_zero(2)),
        CorpusEntry("r3", "cayley", right_zero(3)),
        CorpusEntry("n2", "cayley", null_semigroup(1)),
        CorpusEntry("n3", "cayley", null_semigroup(2)),
        CorpusEntry("n21", "cayley", n21_monoid()),
        CorpusEntry("c31", "cayley", monogenic(3, 1)),
        CorpusEntry("c22", "cayley", monogenic(2, 2)),
        CorpusEntry("2-chain", "cayley", chain_semilattice(2)),
        CorpusEntry("3-chain", "cayley", chain_semilattice(3)),
        CorpusEntry("brandt-1-2", "cayley", brandt(validate_semigroup([[0]]), 2).semigroup),
        CorpusEntry("u-z2-id", "cayley", u_construction(z2, z2, [0, 1]).semigroup),
        CorpusEntry("rect-2-2", "cayley", direct_product(left_zero(2), right_zero(2))),
        CorpusEntry("z2-with-zero", "cayley", adjoin(z2, "zero")),
    ]
    return entries


def builtin_families() -> list[CorpusEntry]:
    return [
        CorpusEntry("bicyclic", "family", Bicyclic()),
        CorpusEntry("free-1", "family", FreeSemigroup(1)),
        CorpusEntry("free-2", "family", FreeSemigroup(2)),
        CorpusEntry("polycyclic-1", "family", Polycyclic(1)),
        CorpusEntry("polycyclic-2", "family", Polycyclic(2)),
        CorpusEntry("fc-2", "family", FreeCommutative(2)),
        CorpusEntry("null-inf", "family", NullFamily(None)),
        CorpusEntry("null-3", "family", NullFamily(3)),
        CorpusEntry("trivial-free-product", "family", TrivialFreeProduct()),
        CorpusEntry("z2-free-product-sl2", "family", Z2FreeProductSl2()),
        CorpusEntry("collapsing-left-zero-chain", "family", CollapsingLeftZeroChain()),
        CorpusEntry("growing-left-zero-chain", "family", GrowingLeftZeroChain()),
        CorpusEntry("disjoint-monogenic-chain", "family", DisjointMonogenicChain()),
        CorpusEntry(
            "br-bicyclic", "family", BruckReilly(validate_semigroup([[0]]), [0])
        ),
        CorpusEntry(
            "br-n21-collapse", "family", BruckReilly(n21_monoid(), n21_collapse_theta())
        ),
    ]


def builtin_corpus() -> list[CorpusEntry]:
    return builtin_finite() + builtin_families()


def get_entry(entry_id: str) -> CorpusEntry:
    for e in builtin_corpus():
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)
