"""Equivariant Euler characteristics of invertible polynomials and their Saito duality."""

from ._saito import (
    Polynomial,
    SaitoError,
    annihilator_order,
    check_invariance,
    equivariant_euler,
    group_order,
    load_fixture,
    pc_check,
    stratum_chi,
    verify_duality,
)

__all__ = [
    "Polynomial",
    "SaitoError",
    "annihilator_order",
    "check_invariance",
    "equivariant_euler",
    "group_order",
    "load_fixture",
    "pc_check",
    "stratum_chi",
    "verify_duality",
]
