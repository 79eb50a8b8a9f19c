"""The `sgtool verify` run: validation of the corpus, the finite-scale
theorem suite, and the module property suites, with one pass/fail row per
check and a printed runtime budget."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

import numpy as np

from .. import checkers
from ..construct import (
    SemilatticeDiagram,
    brandt,
    direct_product,
    rees_matrix,
    strong_semilattice,
    u_construction,
)
from ..core import FiniteSemigroup, structure_flags, validate_semigroup
from ..errors import SgtoolError
from ..green import green_structure, kernel_and_socle, principal_right_ideal_masks
from ..symbolic import (
    Bicyclic,
    Family,
    SymElement,
    antichain_witness,
    br_lemma_check,
    br_wrn_decide,
    endomorphisms,
    sym_multiply,
    sym_r_leq,
)
from .corpus import CorpusEntry, builtin_corpus
from .enumerator import enumerate_semigroups

__all__ = ["VerifyRow", "run_verification"]


@dataclass(frozen=True)
class VerifyRow:
    name: str
    ok: bool
    detail: str
    seconds: float


def _random_semigroup(rng: random.Random, pool) -> FiniteSemigroup:
    return rng.choice(pool)


def _check(rows, name, fn):
    t0 = time.time()
    try:
        ok, detail = fn()
    except SgtoolError as exc:
        ok, detail = False, f"error: {exc}"
    except AssertionError as exc:
        ok, detail = False, f"assertion: {exc}"
    rows.append(VerifyRow(name, bool(ok), str(detail), time.time() - t0))


def run_verification(corpus: list[CorpusEntry] | None = None, max_enum_order: int = 3):
    """Run every suite and return (rows, all_ok)."""
    rows: list[VerifyRow] = []
    corpus = builtin_corpus() if corpus is None else corpus
    finite = [(e.id, e.obj) for e in corpus if e.kind == "cayley"]
    families = [(e.id, e.obj) for e in corpus if e.kind == "family"]

    def validation():
        for eid, S in finite:
            validate_semigroup(S.table, S.labels)
        for eid, F in families:
            if not isinstance(F, Family):
                return False, f"{eid} is not a family"
        return True, f"{len(finite)} tables + {len(families)} families"

    _check(rows, "corpus-validation", validation)

    enum_tables: dict[int, list] = {}

    def enum_counts():
        expected = {1: 1, 2: 5, 3: 24}
        got = {}
        for order in range(1, max_enum_order + 1):
            enum_tables[order] = enumerate_semigroups(order)
            got[order] = len(enum_tables[order])
        ok = all(got[o] == expected[o] for o in expected if o in got)
        return ok, f"counts up to isomorphism: {got}"

    _check(rows, "enumerator-counts", enum_counts)

    def theorem_suite():
        instances = list(finite)
        for order, tables in enum_tables.items():
            for i, flat in enumerate(tables):
                t = [list(flat[r * order : (r + 1) * order]) for r in range(order)]
                instances.append((f"enum-{order}-{i:03d}", validate_semigroup(t)))
        report = checkers.verify_theorem_suite(instances)
        detail = f"{report.passed} checks passed, {report.failed} failed"
        if report.failed:
            bad = [r for r in report.results if not r[2]][:3]
            detail += f"; first failures: {bad}"
        return report.ok, detail

    _check(rows, "finite-theorem-suite", theorem_suite)

    def construction_soundness():
        rng = random.Random(7)
        pool = [S for _, S in finite if S.order <= 5]
        count = 0
        for _ in range(60):
            a, b = rng.choice(pool), rng.choice(pool)
            direct_product(a, b)
            count += 1
        for _ in range(50):
            S = rng.choice(pool)
            i, j = rng.randint(1, 2), rng.randint(1, 2)
            P = [[rng.randrange(S.order) for _ in range(i)] for _ in range(j)]
            rees_matrix(S, i, j, P)
            count += 1
            P0 = [
                [None if rng.random() < 0.3 else rng.randrange(S.order) for _ in range(i)]
                for _ in range(j)
            ]
            rees_matrix(S, i, j, P0, with_zero=True)
            count += 1
        for _ in range(30):
            S = rng.choice(pool)
            brandt(S, rng.randint(1, 2))
            count += 1
        for _ in range(30):
            S = rng.choice(pool)
            # constant homomorphisms to an idempotent always exist
            idem = [e for e in S.elements() if S.table[e, e] == e]
            if not idem:
                continue
            theta = [idem[0]] * S.order
            u_construction(S, S, theta)
            count += 1
        y = validate_semigroup([[0, 0], [0, 1]])
        for _ in range(20):
            S = rng.choice(pool)
            idem = [e for e in S.elements() if S.table[e, e] == e]
            if not idem:
                continue
            hom = [idem[0]] * S.order
            diagram = SemilatticeDiagram(y, (S, S), {(1, 0): hom})
            strong_semilattice(diagram)
            count += 1
        return count >= 180, f"{count} randomized constructions validated"

    _check(rows, "construction-soundness", construction_soundness)

    def green_coherence():
        checked = 0
        for order, tables in enum_tables.items():
            for flat in tables:
                t = [list(flat[r * order : (r + 1) * order]) for r in range(order)]
                S = validate_semigroup(t)
                g = green_structure(S)
                for a in S.elements():
                    for b in S.elements():
                        same_h = g.h_of[a] == g.h_of[b]
                        if same_h != (g.r_of[a] == g.r_of[b] and g.l_of[a] == g.l_of[b]):
                            return False, f"H mismatch at order {order}"
                checked += 1
        return True, f"{checked} semigroups"

    _check(rows, "green-coherence", green_coherence)

    def kernel_socle():
        for order, tables in enum_tables.items():
            for flat in tables:
                t = [list(flat[r * order : (r + 1) * order]) for r in range(order)]
                S = validate_semigroup(t)
                kernel_and_socle(S)
        return True, "kernel and socle computed everywhere"

    _check(rows, "kernel-socle", kernel_socle)

    def bicyclic_windows():
        fam = Bicyclic()
        rng = random.Random(11)
        masks_ok = 0
        for _ in range(200):
            gens = [(rng.randint(0, 30), rng.randint(0, 30)) for _ in range(rng.randint(1, 5))]
            jmin = min(j for j, _ in gens)
            window = [(j, k) for j in range(31) for k in range(31)]
            generated = set()
            for g0 in gens:
                for c in window:
                    p = fam.multiply_values(g0, c)
                    if p[0] <= 30 and p[1] <= 30:
                        generated.add(p)
                generated.add(g0)
            principal = {p for p in window if p[0] >= jmin}
            if generated != principal:
                return False, f"window mismatch for {gens}"
            masks_ok += 1
        return True, f"{masks_ok} generated ideals were principal"

    _check(rows, "bicyclic-principality", bicyclic_windows)

    def antichains():
        from ..symbolic import FreeSemigroup, Polycyclic

        free = FreeSemigroup(2)
        wit = antichain_witness(free, 25)
        poly = Polycyclic(2)
        witp = antichain_witness(poly, 25)
        zero = 0
        for i in range(len(witp)):
            for j in range(len(witp)):
                if i != j:
                    prod = sym_multiply(poly, witp[i], witp[j])
                    if prod.value != "0":
                        return False, "polycyclic cross product not zero"
                    zero += 1
        return True, f"{len(wit)}+{len(witp)} witnesses, {zero} zero products"

    _check(rows, "antichain-witnesses", antichains)

    def bruck_reilly_sweep():
        total = 0
        lemma_hits = 0
        for order in range(1, max_enum_order + 1):
            for flat in enum_tables[order]:
                t = [list(flat[r * order : (r + 1) * order]) for r in range(order)]
                M = validate_semigroup(t)
                if M.identity_element() is None:
                    continue
                for theta in endomorphisms(M):
                    verdict = br_wrn_decide(M, theta)
                    walk = checkers.theta_sequence_brute_force(M, theta)
                    if verdict.is_wrn != (walk is None):
                        return False, f"detector vs simulation at order {order}"
                    wit = br_lemma_check(M, theta)
                    if wit is not None:
                        lemma_hits += 1
                        if verdict.is_wrn:
                            return False, "lemma witness on a wrn verdict"
                    total += 1
        return True, f"{total} (monoid, endomorphism) pairs, {lemma_hits} lemma hits"

    _check(rows, "bruck-reilly-sweep", bruck_reilly_sweep)

    def free_products():
        from ..symbolic import TrivialFreeProduct, Z2FreeProductSl2

        T = TrivialFreeProduct()
        for el in T.enumerate_values(12):
            part = T.part_of(el)
            if part not in T.PARTS:
                return False, f"unknown part {part}"
        Z = Z2FreeProductSl2()
        for el in Z.enumerate_values(12):
            Z.part_of(el)
        return True, "partitions labelled"

    _check(rows, "free-product-partitions", free_products)

    def commutative_suite():
        count = 0
        for order, tables in enum_tables.items():
            for flat in tables:
                t = [list(flat[r * order : (r + 1) * order]) for r in range(order)]
                S = validate_semigroup(t)
                if not S.is_commutative():
                    continue
                checkers.archimedean_decomposition(S)
                checkers.check_comm_wrn(S)
                count += 1
        return True, f"{count} commutative instances decomposed"

    _check(rows, "commutative-suite", commutative_suite)

    def family_verdicts():
        expected = {
            "bicyclic": True,
            "free-1": True,
            "free-2": False,
            "polycyclic-1": True,
            "polycyclic-2": False,
            "fc-2": True,
            "null-inf": False,
            "null-3": True,
            "trivial-free-product": True,
            "z2-free-product-sl2": True,
            "collapsing-left-zero-chain": False,
            "growing-left-zero-chain": True,
            "disjoint-monogenic-chain": True,
            "br-bicyclic": True,
            "br-n21-collapse": False,
        }
        for eid, F in families:
            if eid in expected and F.wrn_verdict().is_wrn != expected[eid]:
                return False, f"verdict mismatch for {eid}"
        return True, f"{len(expected)} family verdicts"

    _check(rows, "family-verdicts", family_verdicts)

    all_ok = all(r.ok for r in rows)
    return rows, all_ok
