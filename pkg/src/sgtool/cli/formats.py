"""JSON document formats.

Three document kinds share the top-level ``kind`` field:

* ``cayley``: ``{"kind": "cayley", "order": n, "labels": [...]?,
  "table": [[...]]}`` with a row-major table of element indices.
* ``family``: ``{"kind": "family", "variant": <tag>, "params": {...}}``;
  Bruck-Reilly and null-extension variants embed Cayley documents (or
  file paths) for their bases.
* construction documents: ``kind`` is one of ``product``, ``rees``,
  ``rees0``, ``brandt``, ``strong_semilattice``, ``u_construction``; the
  referenced semigroups may be inline Cayley documents or paths relative
  to the referencing file.
"""

from __future__ import annotations

import json
import os

from ..construct import (
    CoordinateResult,
    SemilatticeDiagram,
    brandt,
    direct_product,
    rees_matrix,
    strong_semilattice,
    u_construction,
)
from ..core import FiniteSemigroup, validate_semigroup
from ..errors import InputError
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
    UConstructionFamily,
    Z2FreeProductSl2,
)

CONSTRUCTION_KINDS = (
    "product",
    "rees",
    "rees0",
    "brandt",
    "strong_semilattice",
    "u_construction",
)


def load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None


def semigroup_to_doc(S: FiniteSemigroup) -> dict:
    doc = {"kind": "cayley", "order": S.order, "table": S.table.tolist()}
    if S.labels is not None:
        doc["labels"] = list(S.labels)
    return doc


def parse_cayley(doc: dict) -> FiniteSemigroup:
    if doc.get("kind") != "cayley":
        raise InputError("expected a cayley document")
    for key in ("order", "table"):
        if key not in doc:
            raise InputError(f"cayley document is missing '{key}'")
    order = doc["order"]
    table = doc["table"]
    if not isinstance(order, int) or order < 1:
        raise InputError("'order' must be a positive integer")
    if not isinstance(table, list) or len(table) != order:
        raise InputError("'table' must be a list of `order` rows")
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != order:
            raise InputError(f"table row {i} must have exactly {order} entries")
    labels = doc.get("labels")
    return validate_semigroup(table, labels)


def _resolve_ref(ref, base_dir: str) -> FiniteSemigroup:
    if isinstance(ref, str):
        return parse_cayley(load_json(os.path.join(base_dir, ref)))
    if isinstance(ref, dict):
        return parse_cayley(ref)
    raise InputError(f"expected a cayley document or a path, got {ref!r}")


def parse_family(doc: dict, base_dir: str = ".") -> Family:
    if doc.get("kind") != "family":
        raise InputError("expected a family document")
    variant = doc.get("variant")
    params = doc.get("params", {})
    if not isinstance(params, dict):
        raise InputError("'params' must be an object")
    if variant == "free":
        return FreeSemigroup(int(params.get("alphabet_size", 0)))
    if variant == "free_commutative":
        return FreeCommutative(int(params.get("rank", 0)))
    if variant == "bicyclic":
        return Bicyclic()
    if variant == "polycyclic":
        return Polycyclic(int(params.get("alphabet_size", 0)))
    if variant == "null":
        size = params.get("size", "infinite")
        return NullFamily(None if size == "infinite" else int(size))
    if variant == "bruck_reilly":
        M = _resolve_ref(params.get("monoid"), base_dir)
        return BruckReilly(M, params.get("theta", []))
    if variant == "u_construction":
        S = _resolve_ref(params.get("s"), base_dir)
        T = _resolve_ref(params.get("t"), base_dir)
        phi = params.get("phi")
        return UConstructionFamily(S, T, params.get("theta", []), phi)
    if variant == "trivial_free_product":
        return TrivialFreeProduct()
    if variant == "z2_free_product_sl2":
        return Z2FreeProductSl2()
    if variant == "collapsing_left_zero_chain":
        return CollapsingLeftZeroChain()
    if variant == "growing_left_zero_chain":
        return GrowingLeftZeroChain()
    if variant == "disjoint_monogenic_chain":
        return DisjointMonogenicChain()
    raise InputError(f"unknown family variant {variant!r}")


def parse_construction(doc: dict, base_dir: str = ".") -> FiniteSemigroup:
    kind = doc.get("kind")
    if kind == "product":
        return direct_product(
            _resolve_ref(doc.get("s"), base_dir), _resolve_ref(doc.get("t"), base_dir)
        )
    if kind in ("rees", "rees0"):
        S = _resolve_ref(doc.get("s"), base_dir)
        P = doc.get("p")
        if not isinstance(P, list):
            raise InputError("'p' must be a J x I matrix")
        res: CoordinateResult = rees_matrix(
            S, int(doc.get("i", 0)), int(doc.get("j", 0)), P, with_zero=(kind == "rees0")
        )
        return res.semigroup
    if kind == "brandt":
        S = _resolve_ref(doc.get("s"), base_dir)
        return brandt(S, int(doc.get("i", 0))).semigroup
    if kind == "strong_semilattice":
        Y = _resolve_ref(doc.get("y"), base_dir)
        comps = tuple(_resolve_ref(c, base_dir) for c in doc.get("components", []))
        homs = {}
        for h in doc.get("homs", []):
            homs[(int(h["from"]), int(h["to"]))] = [int(x) for x in h["map"]]
        diagram = SemilatticeDiagram(Y, comps, homs)
        return strong_semilattice(diagram).semigroup
    if kind == "u_construction":
        S = _resolve_ref(doc.get("s"), base_dir)
        T = _resolve_ref(doc.get("t"), base_dir)
        return u_construction(S, T, doc.get("theta", []), doc.get("phi")).semigroup
    raise InputError(f"unknown construction kind {kind!r}")


def load_document(path: str):
    """Parse any document; returns ("cayley", FiniteSemigroup) or
    ("family", Family)."""
    doc = load_json(path)
    base_dir = os.path.dirname(os.path.abspath(path))
    kind = doc.get("kind")
    if kind == "cayley":
        return "cayley", parse_cayley(doc)
    if kind == "family":
        return "family", parse_family(doc, base_dir)
    if kind in CONSTRUCTION_KINDS:
        return "cayley", parse_construction(doc, base_dir)
    raise InputError(f"unknown document kind {kind!r}")


def save_json(doc: dict, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
