"""Exact computations with nilpotent Lie algebras, tori and solvable extensions."""

from ._core import (
    Algebra,
    TorusforgeError,
    cohomology,
    compare,
    derivations,
    diagonal_torus,
    dld,
    extend,
    fingerprint,
    load,
    normalize,
    parse,
    rank,
    roots,
    s_system,
    validate,
    verify_nilradical,
)

__all__ = [
    "Algebra",
    "TorusforgeError",
    "cohomology",
    "compare",
    "derivations",
    "diagonal_torus",
    "dld",
    "extend",
    "fingerprint",
    "load",
    "normalize",
    "parse",
    "rank",
    "roots",
    "s_system",
    "validate",
    "verify_nilradical",
]
