"""Random valid parameters for randomized checks."""
from __future__ import annotations

import numpy as np

from idem2.arith.split import Role, all_splits
from idem2.core.spec import IdempotentSpec, solve_gamma, validate_spec
from idem2.series.tseries import Series, TruncationContext


def random_series(rng: np.random.Generator, context: TruncationContext) -> Series:
    return Series.from_coefficients(context, rng.integers(0, context.n, size=context.size).tolist())


def random_context(rng: np.random.Generator, max_n: int = 1000, max_vars: int = 2, max_degree: int = 3) -> TruncationContext:
    n = int(rng.integers(2, max_n + 1))
    return TruncationContext.of(n, int(rng.integers(0, max_vars + 1)), int(rng.integers(0, max_degree + 1)))


def random_spec(rng: np.random.Generator, context: TruncationContext, max_attempts: int = 32) -> IdempotentSpec:
    """
    A uniformly chosen split with random valid parameters.

    alpha and beta are drawn uniformly. A unit constant term of beta determines
    gamma; otherwise gamma is drawn at random up to ``max_attempts`` times before
    alpha and beta are redrawn.
    """
    splits = all_splits(context.modulus)
    split = splits[int(rng.integers(len(splits)))]
    P_modulus = split.part_modulus(Role.P)
    if P_modulus is None:
        return IdempotentSpec(split=split, context=context)

    p_ctx = context.with_modulus(P_modulus)
    while True:
        alpha = random_series(rng, p_ctx)
        beta = random_series(rng, p_ctx)
        if beta.constant_term().is_unit():
            gamma = solve_gamma(alpha, beta)
            return IdempotentSpec(split=split, context=context, alpha=alpha, beta=beta, gamma=gamma)
        for _ in range(max_attempts):
            spec = IdempotentSpec(split=split, context=context, alpha=alpha, beta=beta, gamma=random_series(rng, p_ctx))
            if validate_spec(spec):
                return spec
