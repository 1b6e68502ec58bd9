"""Nil clean index computations for finite rings.

Thin re-export of the compiled extension. Rings are given by construction
expressions such as ``"Z4"``, ``"UT2(Z2)"``, or ``"Tri(Z2,nat(C2xC2),Z2)"``.
"""

from ._nilclean import (
    ElaborationError,
    NilcleanError,
    NilcleanFormatError,
    NilcleanParseError,
    __version__,
    canonical_hash,
    classify_group,
    corpus,
    enum_bimodules,
    eta,
    idempotents,
    index,
    nilpotents,
    units,
    verify,
)

__all__ = [
    "ElaborationError",
    "NilcleanError",
    "NilcleanFormatError",
    "NilcleanParseError",
    "__version__",
    "canonical_hash",
    "classify_group",
    "corpus",
    "enum_bimodules",
    "eta",
    "idempotents",
    "index",
    "nilpotents",
    "units",
    "verify",
]
