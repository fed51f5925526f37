"""
Construction of idempotent matrices from their parameters.

Two independent paths produce the same matrix:

``construct_case`` evaluates the lifting formulas of the seven cases selected by
which of P, Q, R exceed 1, with scalar factors such as P^phi(Q) computed by
Euler-Fermat exponentiation in Z_n.

``construct_crt`` builds the matrix component by component: the parameter
shape mod every prime power of P, the identity mod Q and zero mod R, then fuses
every coefficient with the Chinese remainder theorem.

Diagonal entries are lifted towards 1 mod Q and off-diagonal entries towards 0,
so the bottom-right entry is the lift of 1 - alpha rather than 1 minus the lift
of alpha; the latter is 0 mod Q and 1 mod R.
"""
from __future__ import annotations

import logging
from typing import Mapping

from idem2.arith.split import CoprimeSplit, Role
from idem2.arith.zn import Modulus, Residue, crt_combine, mod_pow, totient
from idem2.core.spec import IdempotentSpec, validate_spec
from idem2.errors import InvalidSpec
from idem2.matrix.mat2 import Mat2
from idem2.series.tseries import Series, TruncationContext, series_scale

logger = logging.getLogger(__name__)


def _power(m: Modulus, base: int, exp: int) -> Residue:
    return mod_pow(m.residue(base), exp)


def _lifted_parameters(spec: IdempotentSpec) -> tuple[Series, Series, Series, Series]:
    """alpha, beta, gamma, 1 - alpha with their [0, P) representatives read in Z_n"""
    ctx = spec.context
    delta = 1 - spec.alpha
    return tuple(s.lift(ctx) for s in (spec.alpha, spec.beta, spec.gamma, delta))


def construct_case(spec: IdempotentSpec) -> Mat2:
    """
    The idempotent matrix mod n for the given parameters.

    Raises:
        InvalidSpec: If the parameters violate alpha (1 - alpha) = beta gamma mod P
    """
    if not validate_spec(spec):
        raise InvalidSpec(f"alpha (1 - alpha) != beta gamma mod {spec.split.P} for {spec}")

    ctx = spec.context
    m = ctx.modulus
    P, Q, R = spec.split.P, spec.split.Q, spec.split.R
    case = spec.split.case
    logger.debug(f"construct_case: case ({case}) for {spec.split}")

    if case == "vi":
        return Mat2.identity(ctx)
    if case == "vii":
        return Mat2.zero(ctx)
    if case == "iv":
        # 1 mod Q, 0 mod R on the diagonal
        a = Series.one(ctx) - Series.constant(ctx, _power(m, Q, totient(R)))
        zero = Series.zero(ctx)
        return Mat2(a, zero, zero, a)

    alpha, beta, gamma, delta = _lifted_parameters(spec)

    if case == "v":
        return Mat2(alpha, beta, gamma, delta)

    if case == "ii":
        e = _power(m, P, totient(Q))
        one_minus_e = 1 - e
        return Mat2(
            alpha + series_scale(e, 1 - alpha),
            series_scale(one_minus_e, beta),
            series_scale(one_minus_e, gamma),
            delta + series_scale(e, 1 - delta),
        )

    if case == "iii":
        f = 1 - _power(m, P, totient(R))
        return Mat2(series_scale(f, alpha), series_scale(f, beta), series_scale(f, gamma), series_scale(f, delta))

    # case (i): P, Q, R > 1
    e = _power(m, P, totient(Q))
    f = 1 - _power(m, P * Q, totient(R))
    g = 1 - _power(m, P, totient(Q) * totient(R))
    return Mat2(
        series_scale(f, alpha + series_scale(e, 1 - alpha)),
        series_scale(g, beta),
        series_scale(g, gamma),
        series_scale(f, delta + series_scale(e, 1 - delta)),
    )


def local_matrix(spec: IdempotentSpec, prime_power: Modulus, role: Role) -> Mat2:
    """The component of the idempotent in M_2 over Z_{p^d}"""
    local_ctx = spec.context.with_modulus(prime_power)
    if role == Role.Q:
        return Mat2.identity(local_ctx)
    if role == Role.R:
        return Mat2.zero(local_ctx)
    return Mat2(*(s.reduce(prime_power) for s in (spec.alpha, spec.beta, spec.gamma, 1 - spec.alpha)))


def fuse_components(context: TruncationContext, components: list[Mat2]) -> Mat2:
    """CRT-combine one matrix per prime-power factor of n, coefficient by coefficient"""
    keys = [c.canonical_key() for c in components]
    m = context.modulus
    vector = [crt_combine(m, column).value for column in zip(*keys)]
    return Mat2.from_coefficients(context, vector)


def construct_crt(spec: IdempotentSpec) -> Mat2:
    """
    Same matrix as ``construct_case``, assembled from its prime-power components.

    Raises:
        InvalidSpec: If the parameters violate the constraint
    """
    if not validate_spec(spec):
        raise InvalidSpec(f"alpha (1 - alpha) != beta gamma mod {spec.split.P} for {spec}")
    ctx = spec.context
    components = [
        local_matrix(spec, Modulus.from_factors([factor]), role)
        for factor, role in zip(ctx.modulus.factors, spec.split.roles)
    ]
    return fuse_components(ctx, components)


def lift_components(
    split: CoprimeSplit,
    context: TruncationContext,
    components: Mapping[int, tuple[Series, Series, Series]],
) -> IdempotentSpec:
    """
    Assemble alpha, beta, gamma mod P from per-factor parameters.

    Args:
        split: The coprime split
        context: Truncation window over Z_n
        components: For every prime power q with role P, (alpha_q, beta_q, gamma_q) over Z_q

    Raises:
        InvalidSpec: If a P-factor is missing or a component violates the constraint
    """
    P_modulus = split.part_modulus(Role.P)
    if P_modulus is None:
        return IdempotentSpec(split=split, context=context)

    powers = P_modulus.prime_powers
    if set(components) != set(powers):
        raise InvalidSpec(f"Expected parameters for prime powers {list(powers)}, got {sorted(components)}")

    for q in powers:
        for s in components[q]:
            if s.context.n != q or not s.context.same_window(context):
                raise InvalidSpec(f"Component for {q} must be a series over Z_{q} in the window of {context}")

    p_ctx = context.with_modulus(P_modulus)
    fused = []
    for k in range(3):
        columns = zip(*(components[q][k].coefficients() for q in powers))
        fused.append(Series.from_coefficients(p_ctx, [crt_combine(P_modulus, col).value for col in columns]))

    spec = IdempotentSpec(split=split, context=context, alpha=fused[0], beta=fused[1], gamma=fused[2])
    if not validate_spec(spec):
        raise InvalidSpec(f"Component parameters violate the constraint for {split}")
    return spec
