"""Finite semigroups as dense multiplication tables, plus the basic
constructions on them: adjoining identities/zeros, subsemigroup closure,
congruences and quotients, Rees quotients, and finite right acts.

Elements are dense indices ``0..n-1``; labels are display metadata only.
All objects are immutable after validation and safe to share between
threads.  Structural flags are computed lazily and memoised; recomputing
them from scratch gives identical answers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import (
    EmptyGeneratorSet,
    InvalidAction,
    NotAnIdeal,
    NotASubact,
    NotAssociative,
    NotClosed,
    NotTwoSided,
)

__all__ = [
    "FiniteSemigroup",
    "Congruence",
    "FiniteRightAct",
    "validate_semigroup",
    "adjoin",
    "closure",
    "congruence_from_pairs",
    "quotient",
    "rees_quotient",
    "act_min_generating",
    "act_rees_quotient",
    "structure_flags",
    "is_right_ideal",
    "is_left_ideal",
    "is_ideal",
    "is_subsemigroup",
]

FLAG_NAMES = (
    "commutative",
    "band",
    "semilattice",
    "regular",
    "inverse",
    "completely_regular",
    "group",
    "nilpotent",
    "has_zero",
    "has_identity",
    "local_right_identities",
)


class FiniteSemigroup:
    """A finite semigroup given by its Cayley table.

    The constructor validates closure and associativity (raising
    ``NotClosed`` / ``NotAssociative`` with a witness).  ``labels`` name the
    elements for rendering; they never affect computation.
    """

    __slots__ = ("table", "labels", "_cache")

    def __init__(self, table, labels: Sequence[str] | None = None):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise NotClosed(0, 0, -1, 0)
        n = t.shape[0]
        if n == 0:
            raise NotClosed(0, 0, -1, 0)
        bad = (t < 0) | (t >= n)
        if bad.any():
            r, c = np.argwhere(bad)[0]
            raise NotClosed(int(r), int(c), int(t[r, c]), n)
        witness = kernels.assoc_witness(t)
        if witness is not None:
            raise NotAssociative(*witness)
        t = t.copy()
        t.setflags(write=False)
        self.table = t
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise NotClosed(0, 0, -1, n)
        self.labels = labels
        self._cache: dict = {}

    # -- basics ------------------------------------------------------------

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def product(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product_word(self, word: Sequence[int]) -> int:
        acc = word[0]
        for x in word[1:]:
            acc = int(self.table[acc, x])
        return acc

    def power(self, a: int, k: int) -> int:
        if k < 1:
            raise ValueError("powers start at 1")
        acc = a
        for _ in range(k - 1):
            acc = int(self.table[acc, a])
        return acc

    def element_label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return str(i)

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order})"

    def _memo(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    # -- distinguished elements ---------------------------------------------

    def idempotents(self) -> list[int]:
        return self._memo(
            "idempotents",
            lambda: [a for a in self.elements() if self.table[a, a] == a],
        )

    def identity_element(self) -> int | None:
        def compute():
            n = self.order
            for e in range(n):
                if all(self.table[e, x] == x == self.table[x, e] for x in range(n)):
                    return e
            return None

        return self._memo("identity", compute)

    def zero_element(self) -> int | None:
        def compute():
            n = self.order
            for z in range(n):
                if all(self.table[z, x] == z == self.table[x, z] for x in range(n)):
                    return z
            return None

        return self._memo("zero", compute)

    # -- flags ---------------------------------------------------------------

    def is_commutative(self) -> bool:
        return self._memo("commutative", lambda: bool((self.table == self.table.T).all()))

    def is_band(self) -> bool:
        return self._memo("band", lambda: len(self.idempotents()) == self.order)

    def is_semilattice(self) -> bool:
        return self.is_band() and self.is_commutative()

    def is_regular(self) -> bool:
        def compute():
            n, t = self.order, self.table
            for a in range(n):
                if not any(t[t[a, x], a] == a for x in range(n)):
                    return False
            return True

        return self._memo("regular", compute)

    def is_inverse(self) -> bool:
        def compute():
            if not self.is_regular():
                return False
            es = self.idempotents()
            t = self.table
            return all(t[e, f] == t[f, e] for e in es for f in es)

        return self._memo("inverse", compute)

    def is_completely_regular(self) -> bool:
        # a lies in a subgroup iff a and a^2 generate the same principal
        # left and right ideals
        def compute():
            from .green import green_structure

            g = green_structure(self)
            t = self.table
            return all(g.h_of[a] == g.h_of[t[a, a]] for a in self.elements())

        return self._memo("completely_regular", compute)

    def is_group(self) -> bool:
        def compute():
            e = self.identity_element()
            if e is None:
                return False
            n, t = self.order, self.table
            return all(any(t[a, b] == e for b in range(n)) for a in range(n))

        return self._memo("group", compute)

    def is_nilpotent(self) -> bool:
        def compute():
            z = self.zero_element()
            if z is None:
                return False
            for a in self.elements():
                seen = set()
                x = a
                while x not in seen:
                    seen.add(x)
                    x = int(self.table[x, a])
                if z not in seen:
                    return False
            return True

        return self._memo("nilpotent", compute)

    def has_zero(self) -> bool:
        return self.zero_element() is not None

    def has_identity(self) -> bool:
        return self.identity_element() is not None

    def has_local_right_identities(self) -> bool:
        def compute():
            t = self.table
            return all(a in t[a, :] for a in self.elements())

        return self._memo("lri", compute)


def validate_semigroup(table, labels=None) -> FiniteSemigroup:
    """Validate a square table of element indices as a semigroup."""
    return FiniteSemigroup(table, labels)


def structure_flags(S: FiniteSemigroup) -> dict[str, bool]:
    """Evaluate every structural flag by its definitional predicate."""
    return {
        "commutative": S.is_commutative(),
        "band": S.is_band(),
        "semilattice": S.is_semilattice(),
        "regular": S.is_regular(),
        "inverse": S.is_inverse(),
        "completely_regular": S.is_completely_regular(),
        "group": S.is_group(),
        "nilpotent": S.is_nilpotent(),
        "has_zero": S.has_zero(),
        "has_identity": S.has_identity(),
        "local_right_identities": S.has_local_right_identities(),
    }


# ---------------------------------------------------------------------------
# adjoining an identity or zero


def adjoin(S: FiniteSemigroup, what: str) -> FiniteSemigroup:
    """Adjoin an identity or zero unless one already exists (then S itself
    is returned, implementing the S^1 = S and S^0 = S conventions)."""
    if what not in ("identity", "zero"):
        raise ValueError("what must be 'identity' or 'zero'")
    if what == "identity" and S.has_identity():
        return S
    if what == "zero" and S.has_zero():
        return S
    n = S.order
    t = np.full((n + 1, n + 1), n, dtype=np.int64)
    t[:n, :n] = S.table
    if what == "identity":
        t[n, :n] = np.arange(n)
        t[:n, n] = np.arange(n)
        t[n, n] = n
        new_label = "1"
    else:
        new_label = "0"
    labels = None
    if S.labels is not None:
        labels = list(S.labels) + [new_label]
    return FiniteSemigroup(t, labels)


# ---------------------------------------------------------------------------
# subsemigroup closure


def closure(S: FiniteSemigroup, gens: Iterable[int]) -> list[int]:
    """Least subset containing ``gens`` and closed under the table, sorted."""
    todo = sorted(set(int(g) for g in gens))
    if not todo:
        raise EmptyGeneratorSet("closure needs at least one generator")
    seen = set(todo)
    t = S.table
    while todo:
        a = todo.pop()
        for b in list(seen):
            for p in (int(t[a, b]), int(t[b, a])):
                if p not in seen:
                    seen.add(p)
                    todo.append(p)
    return sorted(seen)


def is_subsemigroup(S: FiniteSemigroup, subset: Iterable[int]):
    """Return a violating pair (a, b) or None."""
    sub = set(subset)
    t = S.table
    for a in sub:
        for b in sub:
            if int(t[a, b]) not in sub:
                return (a, b)
    return None


def restrict(S: FiniteSemigroup, subset: Sequence[int]) -> FiniteSemigroup:
    """The subsemigroup on ``subset`` (which must be closed), reindexed."""
    sub = sorted(set(subset))
    bad = is_subsemigroup(S, sub)
    if bad is not None:
        from .errors import NotASubsemigroup

        raise NotASubsemigroup(*bad)
    pos = {e: i for i, e in enumerate(sub)}
    t = [[pos[int(S.table[a, b])] for b in sub] for a in sub]
    labels = [S.element_label(e) for e in sub] if S.labels is not None else None
    return FiniteSemigroup(t, labels)


# ---------------------------------------------------------------------------
# ideals


def is_right_ideal(S: FiniteSemigroup, subset: Iterable[int]):
    sub = set(subset)
    t = S.table
    for a in sub:
        for s in S.elements():
            if int(t[a, s]) not in sub:
                return (a, s)
    return None


def is_left_ideal(S: FiniteSemigroup, subset: Iterable[int]):
    sub = set(subset)
    t = S.table
    for a in sub:
        for s in S.elements():
            if int(t[s, a]) not in sub:
                return (a, s)
    return None


def is_ideal(S: FiniteSemigroup, subset: Iterable[int]):
    return is_right_ideal(S, subset) or is_left_ideal(S, subset)


# ---------------------------------------------------------------------------
# congruences


@dataclass(frozen=True)
class Congruence:
    """An equivalence on element indices preserved under multiplication on
    the recorded side(s).  ``partition[a]`` is the class index of ``a``;
    classes are numbered by their least element."""

    partition: tuple[int, ...]
    side: str  # "right" | "left" | "two-sided"

    def class_count(self) -> int:
        return max(self.partition) + 1

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.class_count())]
        for a, c in enumerate(self.partition):
            out[c].append(a)
        return out

    def same(self, a: int, b: int) -> bool:
        return self.partition[a] == self.partition[b]


def _canonical_partition(parent_of: list[int]) -> tuple[int, ...]:
    n = len(parent_of)
    reps = {}
    out = [0] * n
    nxt = 0
    for a in range(n):
        r = parent_of[a]
        if r not in reps:
            reps[r] = nxt
            nxt += 1
        out[a] = reps[r]
    return tuple(out)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def congruence_from_pairs(S: FiniteSemigroup, pairs, side: str = "two-sided") -> Congruence:
    """Least congruence of the given side containing ``pairs``.

    Union-find with a work queue: whenever two classes merge, the products
    of a merged pair with every element are re-queued, until no merge
    happens (fixed point by class-count stability).
    """
    if side not in ("right", "left", "two-sided"):
        raise ValueError("side must be right, left or two-sided")
    n = S.order
    uf = _UnionFind(n)
    t = S.table
    queue = [(int(a), int(b)) for a, b in pairs]
    for a, b in queue:
        if not (0 <= a < n and 0 <= b < n):
            raise NotClosed(0, 0, max(a, b), n)
    while queue:
        a, b = queue.pop()
        if not uf.union(a, b):
            continue
        for s in range(n):
            if side in ("right", "two-sided"):
                pa, pb = int(t[a, s]), int(t[b, s])
                if uf.find(pa) != uf.find(pb):
                    queue.append((pa, pb))
            if side in ("left", "two-sided"):
                pa, pb = int(t[s, a]), int(t[s, b])
                if uf.find(pa) != uf.find(pb):
                    queue.append((pa, pb))
    return Congruence(_canonical_partition([uf.find(a) for a in range(n)]), side)


def quotient(S: FiniteSemigroup, cong: Congruence):
    """Quotient semigroup S/rho for a two-sided congruence, together with
    the projection (element index -> class index)."""
    if cong.side != "two-sided":
        raise NotTwoSided(f"need a two-sided congruence, got {cong.side}")
    part = cong.partition
    k = cong.class_count()
    reps = [None] * k
    for a, c in enumerate(part):
        if reps[c] is None:
            reps[c] = a
    t = [[part[int(S.table[reps[i], reps[j]])] for j in range(k)] for i in range(k)]
    labels = None
    if S.labels is not None:
        labels = ["[" + S.element_label(reps[c]) + "]" for c in range(k)]
    return FiniteSemigroup(t, labels), list(part)


def rees_quotient(S: FiniteSemigroup, ideal: Iterable[int]) -> FiniteSemigroup:
    """Collapse a two-sided ideal to a zero element (placed last)."""
    ide = set(int(x) for x in ideal)
    bad = is_right_ideal(S, ide)
    if bad is not None:
        raise NotAnIdeal(bad[0], bad[1], "right")
    bad = is_left_ideal(S, ide)
    if bad is not None:
        raise NotAnIdeal(bad[0], bad[1], "left")
    rest = [a for a in S.elements() if a not in ide]
    k = len(rest)
    pos = {e: i for i, e in enumerate(rest)}
    t = np.full((k + 1, k + 1), k, dtype=np.int64)
    for i, a in enumerate(rest):
        for j, b in enumerate(rest):
            p = int(S.table[a, b])
            t[i, j] = pos.get(p, k)
    labels = None
    if S.labels is not None:
        labels = [S.element_label(e) for e in rest] + ["0"]
    return FiniteSemigroup(t, labels)


# ---------------------------------------------------------------------------
# finite right acts


class FiniteRightAct:
    """A finite right act: ``action[a, s]`` is the point a.s."""

    __slots__ = ("semigroup", "action", "carrier_size")

    def __init__(self, semigroup: FiniteSemigroup, action):
        act = np.asarray(action, dtype=np.int64)
        if act.ndim != 2 or act.shape[1] != semigroup.order or act.shape[0] < 1:
            raise InvalidAction(("shape", act.shape))
        m = act.shape[0]
        if ((act < 0) | (act >= m)).any():
            raise InvalidAction(("range", int(act.min()), int(act.max())))
        t = semigroup.table
        # a(st) = (as)t
        left = act[:, t]  # left[a, s, t'] = act[a, st']
        right = act[act, :]  # right[a, s, t'] = act[act[a, s], t']
        bad = np.argwhere(left != right)
        if bad.size:
            raise InvalidAction(tuple(int(x) for x in bad[0]))
        e = semigroup.identity_element()
        if e is not None:
            if not (act[:, e] == np.arange(m)).all():
                a = int(np.argwhere(act[:, e] != np.arange(m))[0][0])
                raise InvalidAction(("identity", a))
        act = act.copy()
        act.setflags(write=False)
        self.semigroup = semigroup
        self.action = act
        self.carrier_size = m

    def apply(self, a: int, s: int) -> int:
        return int(self.action[a, s])


def regular_act(S: FiniteSemigroup) -> FiniteRightAct:
    """S acting on itself by right multiplication."""
    return FiniteRightAct(S, S.table)


def _act_reach(A: FiniteRightAct) -> np.ndarray:
    """reach[a] = boolean mask of a.S^1 (a itself plus its orbit)."""
    m = A.carrier_size
    reach = np.eye(m, dtype=bool)
    rows = np.arange(m)
    reach[rows[:, None], A.action] = True
    return reach


def act_min_generating(A: FiniteRightAct) -> list[int]:
    """A minimum generating set of the act: least-index representative of
    each maximal class of the reachability preorder a <= b iff a in b.S^1."""
    reach = _act_reach(A)
    m = A.carrier_size
    # a <= b iff reach[b, a]
    maximal: list[int] = []
    covered = np.zeros(m, dtype=bool)
    # mutually reachable points form classes; a class is maximal if nothing
    # outside it reaches into it
    cls = [-1] * m
    nclass = 0
    for a in range(m):
        if cls[a] >= 0:
            continue
        for b in range(m):
            if cls[b] < 0 and reach[a, b] and reach[b, a]:
                cls[b] = nclass
        nclass += 1
    for a in range(m):
        others = [b for b in range(m) if cls[b] != cls[a] and reach[b, a]]
        if not others and not covered[cls[a]]:
            covered[cls[a]] = True
            maximal.append(a)
    return sorted(maximal)


def act_subact_violation(A: FiniteRightAct, B: Iterable[int]):
    sub = set(int(b) for b in B)
    for b in sub:
        for s in A.semigroup.elements():
            if A.apply(b, s) not in sub:
                return (b, s)
    return None


def act_rees_quotient(A: FiniteRightAct, B: Iterable[int]) -> FiniteRightAct:
    """Collapse the subact B to a sink point (placed last).  An empty B is
    a no-op and returns A unchanged."""
    sub = sorted(set(int(b) for b in B))
    if not sub:
        return A
    bad = act_subact_violation(A, sub)
    if bad is not None:
        raise NotASubact(*bad)
    rest = [a for a in range(A.carrier_size) if a not in set(sub)]
    k = len(rest)
    pos = {e: i for i, e in enumerate(rest)}
    act = np.full((k + 1, A.semigroup.order), k, dtype=np.int64)
    for i, a in enumerate(rest):
        for s in A.semigroup.elements():
            act[i, s] = pos.get(A.apply(a, s), k)
    return FiniteRightAct(A.semigroup, act)
