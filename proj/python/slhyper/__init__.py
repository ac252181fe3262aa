"""Python interface to the strategy-logic translation toolkit.

All operations work on strings: structures travel as JSON documents, formulas
in the textual syntax of the two logics.
"""

from ._core import (
    check_hypersl,
    check_slii,
    encode_h2s,
    encode_s2h,
    gen_instance,
    parse_hypersl,
    parse_slii,
    random_hypersl,
    random_slii,
    transform,
    validate,
    verify_h2s,
    verify_s2h,
)

__all__ = [
    "check_hypersl",
    "check_slii",
    "encode_h2s",
    "encode_s2h",
    "gen_instance",
    "parse_hypersl",
    "parse_slii",
    "random_hypersl",
    "random_slii",
    "transform",
    "validate",
    "verify_h2s",
    "verify_s2h",
]
