"""Recover the coprime split and parameters of a given idempotent matrix."""
from __future__ import annotations

import logging

from idem2.arith.split import CoprimeSplit, Role
from idem2.arith.zn import Modulus
from idem2.core.spec import IdempotentSpec
from idem2.errors import NotIdempotent, ShapeViolation
from idem2.matrix.mat2 import Mat2, Shape, local_shape, mat_is_idempotent

logger = logging.getLogger(__name__)

_SHAPE_OF_ROLE = {Role.P: Shape.COMPLEMENTARY, Role.Q: Shape.IDENTITY, Role.R: Shape.ZERO}


def _has_complementary_shape(local: Mat2) -> bool:
    alpha = local.a11
    return local.a22 == 1 - alpha and alpha * (1 - alpha) == local.a12 * local.a21


def local_role(A: Mat2, prime_power: Modulus) -> Role:
    """
    Role of the reduction of an idempotent mod p^d.

    Raises:
        ShapeViolation: If the reduction is neither I_2, 0_2 nor (alpha, beta; gamma, 1 - alpha),
            or the trace/determinant test disagrees with the direct comparison
    """
    local = A.reduce(prime_power)
    q = prime_power.n
    if local.is_identity():
        role = Role.Q
    elif local.is_zero():
        role = Role.R
    elif _has_complementary_shape(local):
        role = Role.P
    else:
        raise ShapeViolation(q, f"Reduction mod {q} matches none of I_2, 0_2, (alpha, beta; gamma, 1 - alpha)")

    shape = local_shape(local)
    if shape != _SHAPE_OF_ROLE[role]:
        raise ShapeViolation(q, f"Reduction mod {q} has role {role.value} but trace/determinant shape {shape}")
    return role


def classify(A: Mat2) -> IdempotentSpec:
    """
    Canonical parameters of an idempotent matrix.

    Every prime-power factor is decided independently: I_2 gives role Q, 0_2
    gives role R, anything else must have the (alpha, beta; gamma, 1 - alpha)
    shape and gives role P. alpha, beta, gamma are then the entries reduced mod P.

    Raises:
        NotIdempotent: If A^2 != A
        ShapeViolation: If some reduction matches none of the three shapes
    """
    if not mat_is_idempotent(A):
        raise NotIdempotent(f"Matrix is not idempotent: {A}")

    ctx = A.context
    roles = tuple(local_role(A, Modulus.from_factors([factor])) for factor in ctx.modulus.factors)
    split = CoprimeSplit(modulus=ctx.modulus, roles=roles)
    logger.debug(f"classify: {split}")

    P_modulus = split.part_modulus(Role.P)
    if P_modulus is None:
        return IdempotentSpec(split=split, context=ctx)
    return IdempotentSpec(
        split=split,
        context=ctx,
        alpha=A.a11.reduce(P_modulus),
        beta=A.a12.reduce(P_modulus),
        gamma=A.a21.reduce(P_modulus),
    )
