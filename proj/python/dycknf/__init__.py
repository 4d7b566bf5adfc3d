"""Dyck normal form toolkit."""

from ._core import (
    DerivationTooShort,
    DycknfError,
    Grammar,
    GrammarParseError,
    PreconditionError,
    ResourceLimitError,
    ValidationError,
    elin_recognize,
    enumerate_words,
    in_dk_lemma,
    in_dk_stack,
    is_cnf,
    is_dyck_nf,
    is_even_linear,
    iterated_division,
    member,
    run_cli,
    to_cnf,
    to_dyck_nf,
    trace,
    verify_characterization,
)

__all__ = [
    "DerivationTooShort",
    "DycknfError",
    "Grammar",
    "GrammarParseError",
    "PreconditionError",
    "ResourceLimitError",
    "ValidationError",
    "elin_recognize",
    "enumerate_words",
    "in_dk_lemma",
    "in_dk_stack",
    "is_cnf",
    "is_dyck_nf",
    "is_even_linear",
    "iterated_division",
    "member",
    "run_cli",
    "to_cnf",
    "to_dyck_nf",
    "trace",
    "verify_characterization",
]
