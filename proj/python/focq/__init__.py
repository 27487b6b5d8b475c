"""Python access to the focq library: SUO-KIF parsing, TPTP emission,
SZS parsing, verdict classification and the built-in resolution prover."""

from ._focq import *  # noqa: F401,F403
from ._focq import FocqError, Formula

__all__ = [
    "FocqError",
    "Formula",
    "alpha_equivalent",
    "classify",
    "clausify",
    "demangle_symbol",
    "emit_fof",
    "emit_problem",
    "load_corpus",
    "load_creative",
    "mangle_symbol",
    "negate",
    "nnf",
    "parse_formula",
    "parse_fof",
    "parse_kif",
    "parse_szs",
    "print_kif",
    "prove",
    "to_fof",
]
