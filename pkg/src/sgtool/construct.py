"""Finite-output constructions: direct products, Rees matrix semigroups
(with and without zero), Brandt extensions, strong semilattices, the
null-extension construction, the completely-simple semilattice
decomposition, and Rees coordinates with a round-trip isomorphism check.

Element order in every construction is lexicographic in the printed
coordinates, with an adjoined zero always last, so tables are stable for
golden-file tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import FiniteSemigroup, restrict, validate_semigroup
from .errors import (
    CompositionViolation,
    IdentityViolation,
    NotAHomomorphism,
    NotCompletelyRegular,
    NotCompletelyZeroSimple,
    ZeroEntryWithoutZeroMode,
)
from .green import green_structure, is_simple, is_zero_simple

__all__ = [
    "direct_product",
    "rees_matrix",
    "brandt",
    "SemilatticeDiagram",
    "strong_semilattice",
    "u_construction",
    "completely_simple_decomposition",
    "rees_coordinates",
    "find_isomorphism",
    "is_isomorphic",
]


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product on pairs (s, t), ordered lexicographically."""
    ns, nt = S.order, T.order
    n = ns * nt
    t = np.empty((n, n), dtype=np.int64)
    for a in range(ns):
        for x in range(nt):
            i = a * nt + x
            t[i, :] = (S.table[a, :][:, None] * nt + T.table[x, :][None, :]).reshape(-1)
    labels = [
        f"({S.element_label(a)},{T.element_label(x)})" for a in range(ns) for x in range(nt)
    ]
    return validate_semigroup(t, labels)


@dataclass(frozen=True)
class CoordinateResult:
    """A constructed semigroup with its coordinate metadata: ``coords[k]``
    is the printed coordinate of element k (None for an adjoined zero)."""

    semigroup: FiniteSemigroup
    coords: tuple


def rees_matrix(S: FiniteSemigroup, I: int, J: int, P, with_zero: bool = False) -> CoordinateResult:
    """Rees matrix semigroup over S with a J x I sandwich matrix P.

    Entries of P are element indices of S; ``None`` marks a zero entry and
    is only allowed when ``with_zero`` is set.  Product:
    (i, s, j)(k, t, l) = (i, s p[j][k] t, l), falling to 0 on zero entries.
    """
    P = [list(row) for row in P]
    if len(P) != J or any(len(row) != I for row in P):
        raise ValueError("P must be a J x I matrix")
    for row in P:
        for e in row:
            if e is None:
                if not with_zero:
                    raise ZeroEntryWithoutZeroMode("zero sandwich entry outside zero mode")
            elif not (0 <= int(e) < S.order):
                raise ValueError(f"sandwich entry {e} is not an element of S")
    coords = [(i, s, j) for i in range(I) for s in range(S.order) for j in range(J)]
    idx = {c: k for k, c in enumerate(coords)}
    n = len(coords) + (1 if with_zero else 0)
    zero = n - 1 if with_zero else None
    t = np.empty((n, n), dtype=np.int64)
    if with_zero:
        t[:, :] = zero
    for (i, s, j) in coords:
        a = idx[(i, s, j)]
        for (k, u, l) in coords:
            b = idx[(k, u, l)]
            p = P[j][k]
            if p is None:
                continue
            v = S.table[S.table[s, p], u]
            t[a, b] = idx[(i, int(v), l)]
    labels = [f"({i+1},{S.element_label(s)},{j+1})" for (i, s, j) in coords]
    all_coords: list = list(coords)
    if with_zero:
        labels.append("0")
        all_coords.append(None)
    return CoordinateResult(validate_semigroup(t, labels), tuple(all_coords))


def brandt(S: FiniteSemigroup, I: int) -> CoordinateResult:
    """Brandt extension on (I x S x I) + {0}: diagonal-matching product."""
    coords = [(i, s, j) for i in range(I) for s in range(S.order) for j in range(I)]
    idx = {c: k for k, c in enumerate(coords)}
    n = len(coords) + 1
    zero = n - 1
    t = np.full((n, n), zero, dtype=np.int64)
    for (i, s, j) in coords:
        a = idx[(i, s, j)]
        for (k, u, l) in coords:
            if j == k:
                t[a, idx[(k, u, l)]] = idx[(i, int(S.table[s, u]), l)]
    labels = [f"({i+1},{S.element_label(s)},{j+1})" for (i, s, j) in coords] + ["0"]
    return CoordinateResult(validate_semigroup(t, labels), tuple(coords) + (None,))


# ---------------------------------------------------------------------------
# strong semilattices


@dataclass(frozen=True)
class SemilatticeDiagram:
    """Structure semilattice Y, a component per element of Y, and a
    structure map for every comparable pair alpha >= beta (alpha*beta=beta).
    ``homs[(alpha, beta)]`` maps element indices of components[alpha] into
    components[beta]."""

    Y: FiniteSemigroup
    components: tuple[FiniteSemigroup, ...]
    homs: dict

    def leq(self, beta: int, alpha: int) -> bool:
        """beta <= alpha in the semilattice order."""
        return int(self.Y.table[alpha, beta]) == beta

    def validate(self):
        if not self.Y.is_semilattice():
            raise ValueError("structure semigroup must be a semilattice")
        k = self.Y.order
        if len(self.components) != k:
            raise ValueError("one component per semilattice element required")
        for alpha in range(k):
            phi = self._hom(alpha, alpha)
            if list(phi) != list(range(self.components[alpha].order)):
                raise IdentityViolation(alpha)
        for alpha in range(k):
            for beta in range(k):
                if not self.leq(beta, alpha):
                    continue
                phi = self._hom(alpha, beta)
                A, B = self.components[alpha], self.components[beta]
                if len(phi) != A.order or any(not (0 <= int(x) < B.order) for x in phi):
                    raise NotAHomomorphism(f"phi[{alpha},{beta}]", -1, -1)
                for a in range(A.order):
                    for b in range(A.order):
                        if phi[int(A.table[a, b])] != int(B.table[phi[a], phi[b]]):
                            raise NotAHomomorphism(f"phi[{alpha},{beta}]", a, b)
        for alpha in range(k):
            for beta in range(k):
                for gamma in range(k):
                    if not (self.leq(beta, alpha) and self.leq(gamma, beta)):
                        continue
                    ab = self._hom(alpha, beta)
                    bc = self._hom(beta, gamma)
                    ac = self._hom(alpha, gamma)
                    if any(bc[ab[a]] != ac[a] for a in range(self.components[alpha].order)):
                        raise CompositionViolation(alpha, beta, gamma)

    def _hom(self, alpha: int, beta: int):
        if alpha == beta and (alpha, beta) not in self.homs:
            return list(range(self.components[alpha].order))
        try:
            return [int(x) for x in self.homs[(alpha, beta)]]
        except KeyError:
            raise NotAHomomorphism(f"missing phi[{alpha},{beta}]", -1, -1) from None


@dataclass(frozen=True)
class SemilatticeResult:
    semigroup: FiniteSemigroup
    component_of: tuple[int, ...]
    local_index: tuple[int, ...]


def strong_semilattice(D: SemilatticeDiagram) -> SemilatticeResult:
    """ab = (a phi[alpha, alpha beta]) (b phi[beta, alpha beta])."""
    D.validate()
    offsets = []
    total = 0
    for comp in D.components:
        offsets.append(total)
        total += comp.order
    component_of = []
    local_index = []
    labels = []
    for alpha, comp in enumerate(D.components):
        for a in range(comp.order):
            component_of.append(alpha)
            local_index.append(a)
            labels.append(f"{D.Y.element_label(alpha)}:{comp.element_label(a)}")
    t = np.empty((total, total), dtype=np.int64)
    for x in range(total):
        alpha, a = component_of[x], local_index[x]
        for y in range(total):
            beta, b = component_of[y], local_index[y]
            gamma = int(D.Y.table[alpha, beta])
            pa = D._hom(alpha, gamma)[a]
            pb = D._hom(beta, gamma)[b]
            t[x, y] = offsets[gamma] + int(D.components[gamma].table[pa, pb])
    return SemilatticeResult(
        validate_semigroup(t, labels), tuple(component_of), tuple(local_index)
    )


# ---------------------------------------------------------------------------
# the null-extension construction


def _check_hom(S: FiniteSemigroup, T: FiniteSemigroup, arr, name: str):
    m = [int(x) for x in arr]
    if len(m) != S.order or any(not (0 <= x < T.order) for x in m):
        raise NotAHomomorphism(name, -1, -1)
    for a in range(S.order):
        for b in range(S.order):
            if m[int(S.table[a, b])] != int(T.table[m[a], m[b]]):
                raise NotAHomomorphism(name, a, b)
    return m


def u_construction(S: FiniteSemigroup, T: FiniteSemigroup, theta, phi=None) -> CoordinateResult:
    """S glued above the null semigroup on {x_t} + {0} by
    s . x_t = x_[(s theta) t] and x_t . s = x_[t (s phi)]."""
    th = _check_hom(S, T, theta, "theta")
    ph = th if phi is None else _check_hom(S, T, phi, "phi")
    ns, nt = S.order, T.order
    n = ns + nt + 1
    zero = n - 1
    t = np.full((n, n), zero, dtype=np.int64)
    t[:ns, :ns] = S.table
    for s in range(ns):
        for x in range(nt):
            t[s, ns + x] = ns + int(T.table[th[s], x])
            t[ns + x, s] = ns + int(T.table[x, ph[s]])
    labels = [S.element_label(s) for s in range(ns)]
    labels += [f"x_{T.element_label(x)}" for x in range(nt)]
    labels += ["0"]
    coords = tuple(("s", s) for s in range(ns)) + tuple(("x", x) for x in range(nt)) + (None,)
    return CoordinateResult(validate_semigroup(t, labels), coords)


# ---------------------------------------------------------------------------
# completely simple decomposition of a completely regular semigroup


@dataclass(frozen=True)
class CSDecomposition:
    Y: FiniteSemigroup
    components: tuple[FiniteSemigroup, ...]
    component_of: tuple[int, ...]


def completely_simple_decomposition(S: FiniteSemigroup) -> CSDecomposition:
    """Split a completely regular semigroup into its semilattice of
    completely simple components (the J-classes)."""
    if not S.is_completely_regular():
        raise NotCompletelyRegular("input is not a union of groups")
    g = green_structure(S)
    k = len(g.j_classes)
    reps = [c[0] for c in g.j_classes]
    yt = [[g.j_of[int(S.table[reps[i], reps[j]])] for j in range(k)] for i in range(k)]
    Y = validate_semigroup(yt)
    if not Y.is_semilattice():
        raise NotCompletelyRegular("J-quotient is not a semilattice")
    comps = []
    for c in range(k):
        comp = restrict(S, g.j_classes[c])
        if not is_simple(comp):
            raise NotCompletelyRegular(f"J-class {c} is not simple")
        comps.append(comp)
    return CSDecomposition(Y, tuple(comps), tuple(g.j_of))


# ---------------------------------------------------------------------------
# Rees coordinates for completely (0-)simple semigroups


@dataclass(frozen=True)
class ReesCoordinates:
    group: FiniteSemigroup
    I: int
    J: int
    P: tuple  # J x I entries: group element indices, None for zero
    with_zero: bool
    embedding: tuple  # element index of S for each coordinate (i, g, j)


def rees_coordinates(S: FiniteSemigroup) -> ReesCoordinates:
    """Coordinatise a completely (0-)simple semigroup over a group.

    The group is the H-class of an idempotent; rows index the nonzero
    R-classes and columns the nonzero L-classes; the sandwich matrix comes
    from cross-section products.  The round trip is verified element by
    element before returning.
    """
    zero = S.zero_element()
    with_zero = zero is not None and S.order > 1
    if with_zero:
        if not is_zero_simple(S):
            raise NotCompletelyZeroSimple("not 0-simple")
    else:
        if not is_simple(S):
            raise NotCompletelyZeroSimple("not simple")
        zero = None
    g = green_structure(S)
    nonzero = [a for a in S.elements() if a != zero]
    r_ids = sorted(set(g.r_of[a] for a in nonzero))
    l_ids = sorted(set(g.l_of[a] for a in nonzero))
    idems = [e for e in S.idempotents() if e != zero]
    if not idems:
        raise NotCompletelyZeroSimple("no nonzero idempotent")
    e = min(idems)
    r0, l0 = g.r_of[e], g.l_of[e]
    G_elems = [a for a in nonzero if g.r_of[a] == r0 and g.l_of[a] == l0]
    G = restrict(S, G_elems)
    if not G.is_group():
        raise NotCompletelyZeroSimple("H-class of the idempotent is not a group")
    gpos = {a: i for i, a in enumerate(G_elems)}
    # cross-section representatives: x_i in R_i meet L_0, y_j in R_0 meet L_j
    xs = []
    for r in r_ids:
        cands = [a for a in nonzero if g.r_of[a] == r and g.l_of[a] == l0]
        if not cands:
            raise NotCompletelyZeroSimple("egg-box row misses the group column")
        xs.append(e if r == r0 else min(cands))
    ys = []
    for l in l_ids:
        cands = [a for a in nonzero if g.r_of[a] == r0 and g.l_of[a] == l]
        if not cands:
            raise NotCompletelyZeroSimple("egg-box column misses the group row")
        ys.append(e if l == l0 else min(cands))
    P = []
    for j in range(len(l_ids)):
        row = []
        for i in range(len(r_ids)):
            p = int(S.table[ys[j], xs[i]])
            if with_zero and p == zero:
                row.append(None)
            elif p in gpos:
                row.append(gpos[p])
            else:
                raise NotCompletelyZeroSimple("sandwich product escapes the group")
        P.append(tuple(row))
    # embedding (i, g, j) -> x_i g y_j, verified to be a bijective
    # homomorphism onto S
    embedding = []
    seen = set()
    for i in range(len(r_ids)):
        for ge in G_elems:
            for j in range(len(l_ids)):
                v = int(S.table[S.table[xs[i], ge], ys[j]])
                embedding.append(v)
                seen.add(v)
    expected = set(nonzero)
    if seen != expected or len(embedding) != len(expected):
        raise NotCompletelyZeroSimple("coordinate map is not a bijection")
    return ReesCoordinates(
        G, len(r_ids), len(l_ids), tuple(P), with_zero, tuple(embedding)
    )


def rebuild_from_coordinates(rc: ReesCoordinates) -> CoordinateResult:
    """Materialise the Rees matrix semigroup described by coordinates."""
    if rc.with_zero:
        return rees_matrix(rc.group, rc.I, rc.J, [list(r) for r in rc.P], with_zero=True)
    return rees_matrix(rc.group, rc.I, rc.J, [list(r) for r in rc.P], with_zero=False)


# ---------------------------------------------------------------------------
# isomorphism search (backtracking with invariant pruning)


def _element_profile(S: FiniteSemigroup):
    n = S.order
    prof = []
    for a in range(n):
        row = sorted(np.bincount(S.table[a, :], minlength=n).tolist())
        col = sorted(np.bincount(S.table[:, a], minlength=n).tolist())
        # index and period of the cyclic subsemigroup generated by a
        seen = {}
        x, k = a, 0
        while x not in seen:
            seen[x] = k
            x = int(S.table[x, a])
            k += 1
        prof.append((int(S.table[a, a] == a), k - seen[x], seen[x], tuple(row), tuple(col)))
    return prof


def find_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup):
    """A bijection f with f(ab) = f(a)f(b), or None.  Backtracking on
    element images with profile pruning; fine for orders up to ~8."""
    if S.order != T.order:
        return None
    n = S.order
    ps, pt = _element_profile(S), _element_profile(T)
    if sorted(ps) != sorted(pt):
        return None
    cands = [[b for b in range(n) if pt[b] == ps[a]] for a in range(n)]
    order = sorted(range(n), key=lambda a: len(cands[a]))
    img = [-1] * n
    used = [False] * n

    def consistent(a, b):
        for c in range(n):
            if img[c] < 0:
                continue
            x = int(S.table[a, c])
            y = int(T.table[b, img[c]])
            if img[x] >= 0 and img[x] != y:
                return False
            x = int(S.table[c, a])
            y = int(T.table[img[c], b])
            if img[x] >= 0 and img[x] != y:
                return False
        x = int(S.table[a, a])
        y = int(T.table[b, b])
        if img[x] >= 0 and img[x] != y:
            return False
        return True

    def extend(k):
        if k == n:
            for a in range(n):
                for b in range(n):
                    if img[int(S.table[a, b])] != int(T.table[img[a], img[b]]):
                        return False
            return True
        a = order[k]
        for b in cands[a]:
            if used[b] or not consistent(a, b):
                continue
            img[a] = b
            used[b] = True
            if extend(k + 1):
                return True
            img[a] = -1
            used[b] = False
        return False

    if extend(0):
        return list(img)
    return None


def is_isomorphic(S: FiniteSemigroup, T: FiniteSemigroup) -> bool:
    return find_isomorphism(S, T) is not None
