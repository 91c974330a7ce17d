"""Exact promise-problem and quantum-circuit toolkit."""

from ._udt import (
    UdtError,
    builtin_names,
    classify_builtin,
    classify_circuit,
    cli,
    error_kind,
    gap_limits,
    gap_member,
    normalize_godel,
    p_acc,
    p_machine_verdict,
    pair,
    parse_circuit,
    poly_index,
    poly_series,
    run,
    unpair,
)

__all__ = [
    "UdtError",
    "builtin_names",
    "classify_builtin",
    "classify_circuit",
    "cli",
    "error_kind",
    "gap_limits",
    "gap_member",
    "normalize_godel",
    "p_acc",
    "p_machine_verdict",
    "pair",
    "parse_circuit",
    "poly_index",
    "poly_series",
    "run",
    "unpair",
]
