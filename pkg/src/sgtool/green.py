"""Green's relations and preorders, right ideals with canonical minimal
generating sets, the R-class poset, principal series, kernel and socle,
relative Green structure, and idempotent covers.

The preorders are computed from principal-ideal membership masks:
``aS^1`` is a single row of the right Cayley table plus ``a`` itself, so
comparisons are subset tests on boolean rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import FiniteSemigroup, is_right_ideal, is_subsemigroup, restrict, rees_quotient
from .errors import EmptyGeneratorSet, NotASubsemigroup, NotIdempotents

__all__ = [
    "GreenStructure",
    "RightIdeal",
    "green_structure",
    "right_ideal_generated",
    "min_generating_set",
    "rpreorder_poset",
    "principal_series",
    "kernel_and_socle",
    "relative_green",
    "subsemigroup_predicates",
    "idempotent_cover",
    "all_right_ideals",
    "principal_right_ideal_masks",
    "eggbox_dot",
    "rclass_hasse_dot",
]


def principal_right_ideal_masks(S: FiniteSemigroup) -> np.ndarray:
    """masks[a] = boolean row for aS^1 = {a} + aS."""
    n = S.order
    m = np.eye(n, dtype=bool)
    rows = np.arange(n)
    m[rows[:, None], S.table] = True
    return m


def principal_left_ideal_masks(S: FiniteSemigroup) -> np.ndarray:
    n = S.order
    m = np.eye(n, dtype=bool)
    rows = np.arange(n)
    m[rows[:, None], S.table.T] = True
    return m


def principal_two_sided_masks(S: FiniteSemigroup) -> np.ndarray:
    """masks[a] = S^1 a S^1 = {a} + aS + Sa + SaS."""
    n = S.order
    t = S.table
    m = np.eye(n, dtype=bool)
    rows = np.arange(n)
    m[rows[:, None], t] = True
    m[rows[:, None], t.T] = True
    for a in range(n):
        sa = t[:, a]
        m[a, t[sa, :].reshape(-1)] = True
    return m


def _classes_from_masks(masks: np.ndarray):
    """Group rows by equality; class ids in order of least member."""
    n = masks.shape[0]
    of = [-1] * n
    classes: list[list[int]] = []
    keys: dict[bytes, int] = {}
    for a in range(n):
        k = masks[a].tobytes()
        if k not in keys:
            keys[k] = len(classes)
            classes.append([])
        of[a] = keys[k]
        classes[keys[k]].append(a)
    return of, classes


def _renumber_partition(of: list[int]):
    """Renumber classes by least member, return (of, classes)."""
    n = len(of)
    first = {}
    order = []
    for a in range(n):
        if of[a] not in first:
            first[of[a]] = len(order)
            order.append(of[a])
    new_of = [first[c] for c in of]
    classes: list[list[int]] = [[] for _ in range(len(order))]
    for a in range(n):
        classes[new_of[a]].append(a)
    return new_of, classes


@dataclass(frozen=True)
class GreenStructure:
    """The five Green partitions plus the R/L/J preorders on class ids.

    ``x_of[a]`` is the class id of element ``a``; ``x_classes[c]`` lists the
    members; ``r_preorder[i, j]`` holds iff class i <= class j.
    """

    r_of: tuple[int, ...]
    l_of: tuple[int, ...]
    h_of: tuple[int, ...]
    d_of: tuple[int, ...]
    j_of: tuple[int, ...]
    r_classes: tuple[tuple[int, ...], ...]
    l_classes: tuple[tuple[int, ...], ...]
    h_classes: tuple[tuple[int, ...], ...]
    d_classes: tuple[tuple[int, ...], ...]
    j_classes: tuple[tuple[int, ...], ...]
    r_preorder: np.ndarray
    l_preorder: np.ndarray
    j_preorder: np.ndarray

    def counts(self):
        return {
            "R": len(self.r_classes),
            "L": len(self.l_classes),
            "H": len(self.h_classes),
            "D": len(self.d_classes),
            "J": len(self.j_classes),
        }


def green_structure(S: FiniteSemigroup) -> GreenStructure:
    def compute():
        n = S.order
        rm = principal_right_ideal_masks(S)
        lm = principal_left_ideal_masks(S)
        jm = principal_two_sided_masks(S)
        r_of, r_classes = _classes_from_masks(rm)
        l_of, l_classes = _classes_from_masks(lm)
        j_of, j_classes = _classes_from_masks(jm)
        # H = R meet L
        hkey = {}
        h_of = [-1] * n
        for a in range(n):
            k = (r_of[a], l_of[a])
            if k not in hkey:
                hkey[k] = len(hkey)
            h_of[a] = hkey[k]
        h_of, h_classes = _renumber_partition(h_of)
        # D = R join L, computed as the composition L o R (equal to the join
        # for finite semigroups); union-find keeps it a genuine join.
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a in range(n):
            for b in range(a + 1, n):
                if r_of[a] == r_of[b] or l_of[a] == l_of[b]:
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
        d_of, d_classes = _renumber_partition([find(a) for a in range(n)])

        def class_preorder(masks, of, classes):
            k = len(classes)
            pre = np.zeros((k, k), dtype=bool)
            reps = [c[0] for c in classes]
            for i in range(k):
                for j in range(k):
                    pre[i, j] = bool((masks[reps[i]] & ~masks[reps[j]]).sum() == 0)
            return pre

        return GreenStructure(
            r_of=tuple(r_of),
            l_of=tuple(l_of),
            h_of=tuple(h_of),
            d_of=tuple(d_of),
            j_of=tuple(j_of),
            r_classes=tuple(tuple(c) for c in r_classes),
            l_classes=tuple(tuple(c) for c in l_classes),
            h_classes=tuple(tuple(c) for c in h_classes),
            d_classes=tuple(tuple(c) for c in d_classes),
            j_classes=tuple(tuple(c) for c in j_classes),
            r_preorder=class_preorder(rm, r_of, r_classes),
            l_preorder=class_preorder(lm, l_of, l_classes),
            j_preorder=class_preorder(jm, j_of, j_classes),
        )

    return S._memo("green", compute)


# ---------------------------------------------------------------------------
# right ideals


@dataclass(frozen=True)
class RightIdeal:
    """A right ideal of a finite semigroup with its generating data."""

    semigroup: FiniteSemigroup
    elements: tuple[int, ...]
    generators: tuple[int, ...]
    canonical_min_gens: tuple[int, ...]


def right_ideal_generated(S: FiniteSemigroup, X) -> RightIdeal:
    gens = sorted(set(int(x) for x in X))
    if not gens:
        raise EmptyGeneratorSet("a right ideal needs at least one generator")
    masks = principal_right_ideal_masks(S)
    mask = np.zeros(S.order, dtype=bool)
    for g in gens:
        mask |= masks[g]
    elements = tuple(int(a) for a in np.flatnonzero(mask))
    return RightIdeal(S, elements, tuple(gens), tuple(min_generating_set(S, elements)))


def min_generating_set(S: FiniteSemigroup, elements) -> list[int]:
    """Canonical minimum generating set of a right ideal: the least element
    of each R-class that is maximal (under the R-preorder) inside the ideal."""
    elems = sorted(set(int(x) for x in elements))
    g = green_structure(S)
    classes = sorted(set(g.r_of[a] for a in elems))
    maximal = []
    for c in classes:
        if not any(d != c and g.r_preorder[c, d] for d in classes):
            maximal.append(c)
    return sorted(min(a for a in g.r_classes[c] if a in set(elems)) for c in maximal)


def all_right_ideals(S: FiniteSemigroup) -> list[tuple[int, ...]]:
    """Every non-empty right ideal.  Exhaustive over subsets for small
    orders, via unions of principal ideals otherwise."""
    n = S.order
    masks = principal_right_ideal_masks(S)
    if n <= 14:
        out = []
        t = S.table
        for bits in range(1, 1 << n):
            members = [a for a in range(n) if bits >> a & 1]
            ok = all(bits >> int(t[a, s]) & 1 for a in members for s in range(n))
            if ok:
                out.append(tuple(members))
        return out
    distinct = {masks[a].tobytes(): masks[a] for a in range(n)}
    rows = list(distinct.values())
    found = {}
    for r in range(1, len(rows) + 1):
        for combo in itertools.combinations(rows, r):
            m = np.zeros(n, dtype=bool)
            for row in combo:
                m |= row
            found[m.tobytes()] = tuple(int(a) for a in np.flatnonzero(m))
    return sorted(found.values())


# ---------------------------------------------------------------------------
# the R-class poset


@dataclass(frozen=True)
class RPoset:
    """Partial order on R-classes with antichain/chain queries."""

    order_matrix: np.ndarray  # leq[i, j]
    class_members: tuple[tuple[int, ...], ...]

    def size(self) -> int:
        return int(self.order_matrix.shape[0])

    def max_antichain(self):
        """(size, witness class ids, exact?).  Exact by branch and bound up
        to 20 classes, greedy lower bound beyond that."""
        k = self.size()
        leq = self.order_matrix
        comparable = (leq | leq.T) & ~np.eye(k, dtype=bool)
        if k <= 20:
            best: list[int] = []

            def grow(candidates, current):
                nonlocal best
                if len(current) + len(candidates) <= len(best):
                    return
                if not candidates:
                    if len(current) > len(best):
                        best = list(current)
                    return
                c = candidates[0]
                rest = candidates[1:]
                grow([d for d in rest if not comparable[c, d]], current + [c])
                grow(rest, current)

            grow(list(range(k)), [])
            return len(best), sorted(best), True
        taken: list[int] = []
        for c in range(k):
            if all(not comparable[c, d] for d in taken):
                taken.append(c)
        return len(taken), taken, False

    def longest_chain(self):
        """(length, witness class ids from bottom to top)."""
        k = self.size()
        leq = self.order_matrix
        strict = leq & ~np.eye(k, dtype=bool)
        memo = [None] * k

        def down(i):
            if memo[i] is None:
                memo[i] = (1, [i])
                for j in range(k):
                    if strict[j, i]:
                        lj, cj = down(j)
                        if lj + 1 > memo[i][0]:
                            memo[i] = (lj + 1, cj + [i])
            return memo[i]

        best = max((down(i) for i in range(k)), key=lambda x: x[0])
        return best


def rpreorder_poset(S: FiniteSemigroup) -> RPoset:
    g = green_structure(S)
    return RPoset(g.r_preorder.copy(), g.r_classes)


# ---------------------------------------------------------------------------
# principal series and factors


def principal_series(S: FiniteSemigroup):
    """Chain of ideals built by accumulating J-classes from the kernel
    upward; returns a list of (ideal_elements, factor, tag) from the kernel
    to the top.  The kernel factor is the kernel subsemigroup itself; higher
    factors are Rees quotients, tagged "0-simple" or "null"."""
    g = green_structure(S)
    k = len(g.j_classes)
    leq = g.j_preorder
    # linear extension, kernel first: sort by up-set size, largest first
    # (c < d implies the up-set of c strictly contains that of d)
    order = sorted(range(k), key=lambda c: (-int(leq[c, :].sum()), c))
    accumulated: set[int] = set()
    out = []
    for idx, c in enumerate(order):
        accumulated |= set(g.j_classes[c])
        ideal = tuple(sorted(accumulated))
        if idx == 0:
            factor = restrict(S, ideal)
            tag = "simple"
        else:
            sub = restrict(S, ideal)
            inner = [i for i, e in enumerate(ideal) if e not in set(g.j_classes[c])]
            factor = rees_quotient(sub, inner)
            if _is_null(factor):
                tag = "null"
            elif is_zero_simple(factor):
                tag = "0-simple"
            else:  # cannot happen for a genuine principal factor
                raise AssertionError("principal factor neither null nor 0-simple")
        out.append((ideal, factor, tag))
    return out


def _is_null(S: FiniteSemigroup) -> bool:
    z = S.zero_element()
    if z is None:
        return False
    return bool((S.table == z).all())


def is_simple(S: FiniteSemigroup) -> bool:
    masks = principal_two_sided_masks(S)
    return bool(masks.all())


def is_zero_simple(S: FiniteSemigroup) -> bool:
    z = S.zero_element()
    if z is None or S.order < 2:
        return False
    if _is_null(S):  # S^2 = {0}
        return False
    masks = principal_two_sided_masks(S)
    nonzero = [a for a in S.elements() if a != z]
    return all(masks[a].all() for a in nonzero)


# ---------------------------------------------------------------------------
# kernel, minimal right ideals, socle


@dataclass(frozen=True)
class KernelSocle:
    kernel: tuple[int, ...]
    minimal_right_ideals: tuple[tuple[int, ...], ...]
    socle: tuple[int, ...] | None


def kernel_and_socle(S: FiniteSemigroup) -> KernelSocle:
    masks = principal_right_ideal_masks(S)
    n = S.order
    # minimal right ideals are minimal principal ones
    rows = {masks[a].tobytes(): a for a in range(n)}
    reps = list(rows.values())
    minimal = []
    for a in reps:
        if not any(
            b != a and (masks[b] & ~masks[a]).sum() == 0 and (masks[a] != masks[b]).any()
            for b in reps
        ):
            minimal.append(a)
    zero = S.zero_element()
    if zero is not None:
        # with a zero, {0} is the unique minimal right ideal; the socle
        # collects the 0-minimal ones instead
        min_ideals = [tuple(int(x) for x in np.flatnonzero(masks[a])) for a in minimal]
        nonzero_minimal = []
        for a in reps:
            if a == zero:
                continue
            ma = masks[a]
            if not any(
                b != a and b != zero and (masks[b] & ~ma).sum() == 0 and (ma != masks[b]).any()
                for b in reps
            ):
                nonzero_minimal.append(a)
        soc = np.zeros(n, dtype=bool)
        soc[zero] = True
        for a in nonzero_minimal:
            soc |= masks[a]
        socle = tuple(int(x) for x in np.flatnonzero(soc))
    else:
        socle = None
        min_ideals = [tuple(int(x) for x in np.flatnonzero(masks[a])) for a in minimal]
    min_ideals = sorted(set(min_ideals))
    # kernel = the unique minimal J-class (it sits below every other class)
    g = green_structure(S)
    best = 0
    for c in range(1, len(g.j_classes)):
        if g.j_preorder[c, best]:
            best = c
    kernel = tuple(sorted(g.j_classes[best]))
    return KernelSocle(kernel, tuple(min_ideals), socle)


# ---------------------------------------------------------------------------
# relative Green structure


@dataclass(frozen=True)
class RelativeGreen:
    r_of: tuple[int, ...]
    l_of: tuple[int, ...]
    h_of: tuple[int, ...]
    r_classes: tuple[tuple[int, ...], ...]
    l_classes: tuple[tuple[int, ...], ...]
    h_classes: tuple[tuple[int, ...], ...]
    green_index: int


def relative_green(S: FiniteSemigroup, T) -> RelativeGreen:
    """Green's relations of S relative to a subsemigroup T, plus the count
    of relative H-classes outside T (the Green index)."""
    Tset = sorted(set(int(x) for x in T))
    bad = is_subsemigroup(S, Tset)
    if bad is not None:
        raise NotASubsemigroup(*bad)
    n = S.order
    rmask = np.eye(n, dtype=bool)
    lmask = np.eye(n, dtype=bool)
    for a in range(n):
        for t in Tset:
            rmask[a, S.table[a, t]] = True
            lmask[a, S.table[t, a]] = True
    r_of, r_classes = _classes_from_masks(rmask)
    l_of, l_classes = _classes_from_masks(lmask)
    h_of = [-1] * n
    seen = {}
    for a in range(n):
        k = (r_of[a], l_of[a])
        if k not in seen:
            seen[k] = len(seen)
        h_of[a] = seen[k]
    h_of, h_classes = _renumber_partition(h_of)
    inside = set(Tset)
    for classes in (r_classes, l_classes, h_classes):
        for cl in classes:
            tally = sum(1 for x in cl if x in inside)
            assert tally in (0, len(cl)), "relative class straddles the subsemigroup"
    gi = sum(1 for cl in h_classes if cl[0] not in inside)
    return RelativeGreen(
        tuple(r_of),
        tuple(l_of),
        tuple(h_of),
        tuple(tuple(c) for c in r_classes),
        tuple(tuple(c) for c in l_classes),
        tuple(tuple(c) for c in h_classes),
        gi,
    )


def subsemigroup_predicates(S: FiniteSemigroup, T) -> dict[str, bool]:
    Tset = sorted(set(int(x) for x in T))
    bad = is_subsemigroup(S, Tset)
    if bad is not None:
        raise NotASubsemigroup(*bad)
    inside = set(Tset)
    t = S.table
    right_unitary = all(
        not (int(t[a, b]) in inside) or b in inside
        for a in inside
        for b in S.elements()
    )
    comp = [x for x in S.elements() if x not in inside]
    complement_left_ideal = bool(comp) and all(
        int(t[s, a]) not in inside for a in comp for s in S.elements()
    )
    complement_ideal = complement_left_ideal and all(
        int(t[a, s]) not in inside for a in comp for s in S.elements()
    )
    # compare the subsemigroup's own R-preorder with the ambient one
    sub = restrict(S, Tset)
    sub_masks = principal_right_ideal_masks(sub)
    amb_masks = principal_right_ideal_masks(S)
    r_preserving = True
    for i, a in enumerate(Tset):
        for j, b in enumerate(Tset):
            local = bool((sub_masks[i] & ~sub_masks[j]).sum() == 0)
            ambient = bool((amb_masks[a] & ~amb_masks[b]).sum() == 0)
            if local != ambient:
                r_preserving = False
    return {
        "right_unitary": right_unitary,
        "r_preserving": r_preserving,
        "complement_left_ideal": complement_left_ideal,
        "complement_ideal": complement_ideal,
    }


# ---------------------------------------------------------------------------
# idempotent covers


def idempotent_cover(S: FiniteSemigroup, U):
    """Minimum X inside U with every u in U equal to xu for some x in X.

    Exact set-cover search for |U| <= 20 (returns exact=True); greedy with
    exact=False beyond that.  Deterministic: prefers lexicographically
    least witness among minimum covers.
    """
    Uset = sorted(set(int(u) for u in U))
    for u in Uset:
        if S.table[u, u] != u:
            raise NotIdempotents(u)
    if not Uset:
        return [], True
    m = len(Uset)
    pos = {u: i for i, u in enumerate(Uset)}
    covers = []
    for x in Uset:
        mask = 0
        for u in Uset:
            if int(S.table[x, u]) == u:
                mask |= 1 << pos[u]
        covers.append(mask)
    full = (1 << m) - 1
    if m <= 20:
        best: list[int] | None = None

        def search(idx, chosen, mask):
            nonlocal best
            if best is not None and len(chosen) >= len(best):
                return
            if mask == full:
                best = list(chosen)
                return
            if idx == m:
                return
            remaining = 0
            for k in range(idx, m):
                remaining |= covers[k]
            if mask | remaining != full:
                return
            search(idx + 1, chosen + [idx], mask | covers[idx])
            search(idx + 1, chosen, mask)

        search(0, [], 0)
        if best is None:
            # an element covered by nothing cannot happen: u covers itself
            raise AssertionError("idempotent cover must exist")
        return [Uset[i] for i in best], True
    chosen: list[int] = []
    mask = 0
    while mask != full:
        k = max(range(m), key=lambda i: (bin(covers[i] & ~mask).count("1"), -i))
        chosen.append(k)
        mask |= covers[k]
    return [Uset[i] for i in sorted(chosen)], False


# ---------------------------------------------------------------------------
# DOT output


def eggbox_dot(S: FiniteSemigroup) -> str:
    """Egg-box diagram: one box per D-class laid out as an R x L grid of
    H-cells, with edges along the covering relation of the J-order."""
    g = green_structure(S)
    lines = ["digraph eggbox {", "  node [shape=plaintext];"]
    for d, members in enumerate(g.d_classes):
        rs = sorted(set(g.r_of[a] for a in members))
        ls = sorted(set(g.l_of[a] for a in members))
        rows = []
        for r in rs:
            cells = []
            for l in ls:
                cell = [a for a in members if g.r_of[a] == r and g.l_of[a] == l]
                label = ",".join(S.element_label(a) for a in cell) or "&nbsp;"
                cells.append(f"<TD>{label}</TD>")
            rows.append("<TR>" + "".join(cells) + "</TR>")
        table = (
            '<<TABLE BORDER="1" CELLBORDER="1" CELLSPACING="0">' + "".join(rows) + "</TABLE>>"
        )
        lines.append(f"  D{d} [label={table}];")
    # covers in the J-order between the D-classes (D = J on finite tables)
    k = len(g.d_classes)
    jof = [g.j_of[c[0]] for c in g.d_classes]
    leq = g.j_preorder
    for i in range(k):
        for j in range(k):
            if i == j or not leq[jof[i], jof[j]]:
                continue
            if leq[jof[j], jof[i]]:
                continue
            covered = not any(
                m not in (i, j)
                and leq[jof[i], jof[m]]
                and leq[jof[m], jof[j]]
                and not leq[jof[m], jof[i]]
                and not leq[jof[j], jof[m]]
                for m in range(k)
            )
            if covered:
                lines.append(f"  D{j} -> D{i};")
    lines.append("}")
    return "\n".join(lines)


def rclass_hasse_dot(S: FiniteSemigroup) -> str:
    """Hasse diagram of the R-class order; node Rk lists its members."""
    g = green_structure(S)
    k = len(g.r_classes)
    leq = g.r_preorder
    lines = ["digraph rclasses {"]
    for c, members in enumerate(g.r_classes):
        label = ",".join(S.element_label(a) for a in members)
        lines.append(f'  R{c} [label="R{c}: {label}"];')
    for i in range(k):
        for j in range(k):
            if i == j or not leq[i, j] or leq[j, i]:
                continue
            covered = not any(
                m not in (i, j) and leq[i, m] and leq[m, j] and not leq[m, i] and not leq[j, m]
                for m in range(k)
            )
            if covered:
                lines.append(f"  R{j} -> R{i};")
    lines.append("}")
    return "\n".join(lines)
