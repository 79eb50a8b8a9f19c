"""The sgtool command line.

Subcommands: validate, analyze, construct, decide-wrn, witness,
enumerate, verify.  Exit codes: 0 success, 1 property failure, 2 input
error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .. import checkers
from ..core import FiniteSemigroup, structure_flags
from ..errors import InputError, NotApplicable, OrderTooLarge, SgtoolError
from ..green import (
    all_right_ideals,
    eggbox_dot,
    green_structure,
    min_generating_set,
    rclass_hasse_dot,
)
from ..symbolic import Family, antichain_witness
from . import formats
from .corpus import builtin_corpus
from .enumerator import MAX_ORDER, enumerate_semigroups, write_dataset
from .verify import run_verification

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_INPUT = 2


def _emit(doc, out: str | None):
    text = json.dumps(doc, indent=2, sort_keys=True, default=str)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_validate(args) -> int:
    kind, obj = formats.load_document(args.path)
    if kind == "cayley":
        print(f"valid semigroup of order {obj.order}")
    else:
        print(f"valid family: {obj.tag}")
    return EXIT_OK


def _family_ideal_report(F: Family, bound: int) -> dict:
    elements = F.enumerate_values(bound)
    window = set(elements)
    import itertools

    principal_ok = True
    witness = None
    for k in (1, 2, 3):
        for gens in itertools.islice(itertools.combinations(elements, k), 200):
            ideal = {a for a in window if any(F.r_leq_values(a, g) for g in gens)}
            if not any(
                ideal == {a for a in window if F.r_leq_values(a, g)} for g in ideal
            ):
                principal_ok = False
                witness = [F.render(g) for g in gens]
                break
        if not principal_ok:
            break
    distinct = len({frozenset(a for a in window if F.r_leq_values(a, g)) for g in elements})
    report = {
        "family": F.tag,
        "bound": bound,
        "elements-in-window": len(elements),
        "distinct-principal-ideals-in-window": distinct,
        "generated-ideals-principal-in-window": principal_ok,
    }
    if witness is not None:
        report["non-principal-witness"] = witness
    return report


def cmd_analyze(args) -> int:
    kind, obj = formats.load_document(args.path)
    report = args.report
    if kind == "family":
        if report == "ideals":
            _emit(_family_ideal_report(obj, args.bound), args.out)
            return EXIT_OK
        if report == "flags":
            v = obj.wrn_verdict()
            _emit(
                {
                    "family": obj.tag,
                    "monoid": obj.is_monoid,
                    "local_right_identities": obj.has_local_right_identities,
                    "wrn": v.is_wrn,
                },
                args.out,
            )
            return EXIT_OK
        raise InputError(f"report {report!r} is not available for families")
    S: FiniteSemigroup = obj
    if report == "green":
        g = green_structure(S)
        _emit(
            {
                "order": S.order,
                "counts": g.counts(),
                "r_classes": [list(c) for c in g.r_classes],
                "l_classes": [list(c) for c in g.l_classes],
                "h_classes": [list(c) for c in g.h_classes],
                "d_classes": [list(c) for c in g.d_classes],
                "j_classes": [list(c) for c in g.j_classes],
            },
            args.out,
        )
    elif report == "ideals":
        ideals = all_right_ideals(S)
        _emit(
            {
                "order": S.order,
                "right_ideal_count": len(ideals),
                "right_ideals": [
                    {"elements": list(I), "min_generators": min_generating_set(S, I)}
                    for I in ideals
                ],
            },
            args.out,
        )
    elif report == "flags":
        _emit(structure_flags(S), args.out)
    elif report == "eggbox-dot":
        text = eggbox_dot(S)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        else:
            print(text)
    elif report == "hasse-dot":
        text = rclass_hasse_dot(S)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        else:
            print(text)
    else:
        raise InputError(f"unknown report {report!r}")
    return EXIT_OK


def cmd_construct(args) -> int:
    kind, obj = formats.load_document(args.path)
    if kind != "cayley":
        raise InputError("construct expects a construction or cayley document")
    _emit(formats.semigroup_to_doc(obj), args.out)
    return EXIT_OK


def _verdict_doc(obj) -> dict:
    if isinstance(obj, FiniteSemigroup):
        return {
            "verdict": "wrn",
            "witness": {"kind": "citation", "rule": "finite"},
        }
    F: Family = obj
    v = F.wrn_verdict()
    if v.is_wrn:
        return {"verdict": "wrn", "witness": {"kind": "citation", "rule": v.citation}}
    if v.witness_kind == "loose-cycle":
        cycle = [sorted(F.M.element_label(a) for a in I) for I in v.loose_cycle]
        return {"verdict": "not-wrn", "witness": {"kind": "loose-cycle", "cycle": cycle}}
    sample = [F.render(v.generator(i)) for i in range(3)]
    return {
        "verdict": "not-wrn",
        "witness": {"kind": v.witness_kind, "sample": sample},
    }


def cmd_decide_wrn(args) -> int:
    _kind, obj = formats.load_document(args.path)
    _emit(_verdict_doc(obj), args.out)
    return EXIT_OK


def cmd_witness(args) -> int:
    kind, obj = formats.load_document(args.path)
    if kind != "family":
        raise InputError("witness applies to family documents (finite inputs are wrn)")
    try:
        wit = antichain_witness(obj, args.count)
    except NotApplicable as exc:
        raise InputError(str(exc)) from None
    for el in wit:
        print(obj.render(el.value))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.order > MAX_ORDER:
        raise OrderTooLarge(f"order capped at {MAX_ORDER}")
    if args.order == MAX_ORDER and not args.big:
        raise InputError(
            f"order {MAX_ORDER} can take minutes; pass --big to confirm"
        )
    t0 = time.time()
    tables = enumerate_semigroups(args.order, jobs=args.jobs)
    elapsed = time.time() - t0
    print(f"order {args.order}: {len(tables)} semigroups up to isomorphism ({elapsed:.1f}s)")
    if args.out:
        names = write_dataset(args.order, tables, args.out)
        print(f"wrote {len(names)} files to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    corpus = None
    if args.corpus != "builtin":
        import os

        entries = []
        for name in sorted(os.listdir(args.corpus)):
            if not name.endswith(".json"):
                continue
            path = os.path.join(args.corpus, name)
            try:
                kind, obj = formats.load_document(path)
            except SgtoolError as exc:
                print(f"[FAIL] {name}: {exc}")
                continue
            from .corpus import CorpusEntry

            entries.append(CorpusEntry(name[:-5], kind, obj, source=path))
        corpus = entries
    t0 = time.time()
    rows, ok = run_verification(corpus)
    total = time.time() - t0
    width = max(len(r.name) for r in rows)
    for r in rows:
        mark = "PASS" if r.ok else "FAIL"
        print(f"[{mark}] {r.name:<{width}}  {r.seconds:7.2f}s  {r.detail}")
    print(f"total runtime: {total:.2f}s; {sum(r.ok for r in rows)}/{len(rows)} checks passed")
    if args.out:
        _emit(
            {
                "rows": [
                    {"name": r.name, "ok": r.ok, "detail": r.detail, "seconds": r.seconds}
                    for r in rows
                ],
                "ok": ok,
                "runtime_seconds": total,
            },
            args.out,
        )
    return EXIT_OK if ok else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sgtool", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a document")
    p.add_argument("path")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("analyze", help="structure reports")
    p.add_argument("path")
    p.add_argument(
        "--report",
        default="green",
        choices=["green", "ideals", "flags", "eggbox-dot", "hasse-dot"],
    )
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("construct", help="materialise a construction document")
    p.add_argument("path")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("decide-wrn", help="weak right noetherian verdict")
    p.add_argument("path")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_decide_wrn)

    p = sub.add_parser("witness", help="print antichain witness elements")
    p.add_argument("path")
    p.add_argument("-k", "--count", type=int, default=5)
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("enumerate", help="enumerate semigroups up to isomorphism")
    p.add_argument("order", type=int)
    p.add_argument("--up-to", default="iso", choices=["iso"])
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--big", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--corpus", default="builtin")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SgtoolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
