"""Symbolic infinite families with normal forms, decidable right
divisibility, bounded enumeration and WRN verdicts."""

from __future__ import annotations

from .base import Family, SymElement, WrnVerdict
from .bruck_reilly import (
    BruckReilly,
    br_lemma_check,
    br_multiply,
    br_wrn_decide,
    endomorphisms,
    ideal_graph,
    right_ideals,
)
from .families import (
    Bicyclic,
    CollapsingLeftZeroChain,
    DisjointMonogenicChain,
    FreeCommutative,
    FreeSemigroup,
    GrowingLeftZeroChain,
    NullFamily,
    POLY_ZERO,
    Polycyclic,
    TrivialFreeProduct,
    UConstructionFamily,
    Z2FreeProductSl2,
)

__all__ = [
    "Family",
    "SymElement",
    "WrnVerdict",
    "FreeSemigroup",
    "FreeCommutative",
    "Bicyclic",
    "Polycyclic",
    "NullFamily",
    "TrivialFreeProduct",
    "Z2FreeProductSl2",
    "CollapsingLeftZeroChain",
    "GrowingLeftZeroChain",
    "DisjointMonogenicChain",
    "UConstructionFamily",
    "BruckReilly",
    "POLY_ZERO",
    "sym_multiply",
    "sym_r_leq",
    "sym_enumerate",
    "sym_indecomposables",
    "sym_wrn_verdict",
    "antichain_witness",
    "br_multiply",
    "br_wrn_decide",
    "br_lemma_check",
    "right_ideals",
    "endomorphisms",
    "ideal_graph",
]


def sym_multiply(family: Family, a: SymElement, b: SymElement) -> SymElement:
    return family.multiply(a, b)


def sym_r_leq(family: Family, a: SymElement, b: SymElement) -> bool:
    return family.r_leq(a, b)


def sym_enumerate(family: Family, bound: int) -> list[SymElement]:
    return family.enumerate(bound)


def sym_indecomposables(family: Family, bound: int, within: str | None = None):
    return family.indecomposables(bound, within)


def sym_wrn_verdict(family: Family) -> WrnVerdict:
    return family.wrn_verdict()


def antichain_witness(family: Family, k: int) -> list[SymElement]:
    return family.antichain(k)
