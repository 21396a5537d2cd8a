"""Exact operator algebra of the 2x2 matrix Gegenbauer weight.

Everything is computed over Q(p, n) with GMP rationals; see the README for
the command-line tool that exposes the same batteries.
"""

from ._core import (
    Algebra,
    DiffOp,
    RatFunc,
    MathError,
    DivisionByZero,
    SizeMismatch,
    ParseError,
    DomainError,
    NonMember,
    NotCentral,
    DecompositionFailure,
    ResourceLimit,
    __engine_version__,
    acceptance,
    centralizer,
    commutator,
    gram_entry,
    monic_mop,
    normal_form,
    run_cli,
    verify_relations,
    word_product_agrees,
)

__version__ = __engine_version__


def failing(records):
    """Names of the non-diagnostic records that did not pass."""
    return [r["name"] for r in records if r["status"] != "pass" and not r.get("diagnostic")]
