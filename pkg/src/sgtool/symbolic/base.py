"""Shared value types for the symbolic (infinite) families.

Elements are immutable ``SymElement`` records: a family tag plus a
canonical normal form, so equal elements always have identical encodings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..errors import FamilyMismatch, NotApplicable

__all__ = ["SymElement", "WrnVerdict", "Family"]


@dataclass(frozen=True)
class SymElement:
    family: str
    value: object

    def __repr__(self):
        return f"<{self.family}:{self.value!r}>"


@dataclass(frozen=True)
class WrnVerdict:
    """Decision for a family, with a machine-checkable witness.

    ``witness_kind`` is one of ``citation`` (WRN, with a rule tag),
    ``antichain`` / ``ascending-chain`` (with a generator function
    index -> element value), or ``loose-cycle`` (a cycle of right ideals
    of the base monoid with at least one loose step).
    """

    is_wrn: bool
    witness_kind: str
    citation: str | None = None
    generator: Callable[[int], object] | None = None
    loose_cycle: tuple | None = None


class Family:
    """Base class: one value object per infinite-family variant.

    Subclasses provide the multiplication, the decidable R-preorder, the
    bounded enumeration with its size measure, the indecomposable-element
    rule, and the WRN verdict.  All are pure; instances are immutable.
    """

    tag: str = ""
    is_monoid: bool = False
    has_local_right_identities: bool = False

    # -- elements -----------------------------------------------------------

    def contains(self, value) -> bool:
        raise NotImplementedError

    def element(self, value) -> SymElement:
        if not self.contains(value):
            raise FamilyMismatch(f"{value!r} is not an element of {self.tag}")
        return SymElement(self.tag, value)

    def check(self, el: SymElement):
        if not isinstance(el, SymElement) or el.family != self.tag or not self.contains(el.value):
            raise FamilyMismatch(f"{el!r} does not belong to {self.tag}")
        return el.value

    def size(self, value) -> int:
        raise NotImplementedError

    def render(self, value) -> str:
        raise NotImplementedError

    def identity_value(self):
        return None

    # -- operations -----------------------------------------------------------

    def multiply_values(self, a, b):
        raise NotImplementedError

    def r_leq_values(self, a, b) -> bool:
        raise NotImplementedError

    def enumerate_values(self, bound: int) -> list:
        raise NotImplementedError

    def indecomposable_values(self, bound: int, within: str | None = None) -> list:
        raise NotImplementedError

    def wrn_verdict(self) -> WrnVerdict:
        raise NotImplementedError

    def cofactor_bound(self, bound: int) -> int:
        """Enumeration bound B' so that whenever a = b c with sizes of a, b
        at most ``bound``, some witness c has size at most B'."""
        return 2 * bound + 2

    # -- wrappers taking SymElement -------------------------------------------

    def multiply(self, a: SymElement, b: SymElement) -> SymElement:
        return SymElement(self.tag, self.multiply_values(self.check(a), self.check(b)))

    def r_leq(self, a: SymElement, b: SymElement) -> bool:
        return self.r_leq_values(self.check(a), self.check(b))

    def enumerate(self, bound: int) -> list[SymElement]:
        return [SymElement(self.tag, v) for v in self.enumerate_values(bound)]

    def indecomposables(self, bound: int, within: str | None = None) -> list[SymElement]:
        return [SymElement(self.tag, v) for v in self.indecomposable_values(bound, within)]

    def antichain(self, k: int) -> list[SymElement]:
        """First k antichain witness elements, re-verified to be pairwise
        incomparable under the family's own R-preorder."""
        v = self.wrn_verdict()
        if v.is_wrn or v.generator is None:
            raise NotApplicable(f"{self.tag} has no antichain witness")
        out = [SymElement(self.tag, v.generator(i)) for i in range(k)]
        for i in range(k):
            for j in range(k):
                if i != j and self.r_leq(out[i], out[j]):
                    raise AssertionError("antichain witness failed re-verification")
        return out
