"""Highest weight vectors and multiplicities for S^d(Wedge^k W).

Thin wrapper over the C++ core. Partitions are lists of weakly decreasing
positive ints; big results come back as python ints, structured results as
plain dicts/lists mirroring the CLI's JSON.
"""

from ._core import (
    conjugate,
    decompose,
    decompose_tuple,
    duality,
    hwv_basis,
    hwv_dim,
    is_even,
    mult,
    pieri_tableaux,
    s_kd,
    schur_dim,
    stabilization,
    weintraub,
)

__all__ = [
    "conjugate",
    "decompose",
    "decompose_tuple",
    "duality",
    "hwv_basis",
    "hwv_dim",
    "is_even",
    "mult",
    "pieri_tableaux",
    "s_kd",
    "schur_dim",
    "stabilization",
    "weintraub",
]
