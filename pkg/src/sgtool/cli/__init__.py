"""Command line front end, document formats, the small-order enumerator,
corpus management, and verification runs."""

from .corpus import CorpusEntry, builtin_corpus, get_entry
from .enumerator import enumerate_semigroups, write_dataset
from .formats import load_document, parse_cayley, parse_family, semigroup_to_doc
from .verify import run_verification

__all__ = [
    "CorpusEntry",
    "builtin_corpus",
    "get_entry",
    "enumerate_semigroups",
    "write_dataset",
    "load_document",
    "parse_cayley",
    "parse_family",
    "semigroup_to_doc",
    "run_verification",
]
