"""Shorthand for building specs in tests."""
from typing import Optional, Union

from idem2.arith.split import CoprimeSplit, Role
from idem2.core.spec import IdempotentSpec
from idem2.series.tseries import Series, TruncationContext

Param = Union[int, Series]


def spec_of(
    ctx: TruncationContext,
    roles: dict[int, Role],
    alpha: Optional[Param] = None,
    beta: Optional[Param] = None,
    gamma: Optional[Param] = None,
) -> IdempotentSpec:
    split = CoprimeSplit.from_roles(ctx.modulus, roles)
    P_modulus = split.part_modulus(Role.P)
    if P_modulus is None:
        return IdempotentSpec(split=split, context=ctx)
    p_ctx = ctx.with_modulus(P_modulus)

    def as_series(v: Param) -> Series:
        return v if isinstance(v, Series) else Series.constant(p_ctx, v)

    return IdempotentSpec(split=split, context=ctx, alpha=as_series(alpha), beta=as_series(beta), gamma=as_series(gamma))
