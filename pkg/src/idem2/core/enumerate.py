"""Exhaustive enumeration of the idempotents of M_2 over a truncated series ring."""
from __future__ import annotations

import itertools
import logging
import math
from collections import defaultdict
from typing import Iterator, Optional

from idem2.arith.split import CoprimeSplit, Role, all_splits
from idem2.arith.zn import Modulus
from idem2.config import settings
from idem2.core.construct import construct_case
from idem2.core.spec import ClassifiedIdempotent, IdempotentSpec
from idem2.errors import BudgetExceeded
from idem2.series.tseries import Series, TruncationContext

logger = logging.getLogger(__name__)


def all_series(context: TruncationContext) -> list[Series]:
    return [Series.from_coefficients(context, c) for c in itertools.product(range(context.n), repeat=context.size)]


def specs_for_split(split: CoprimeSplit, context: TruncationContext) -> Iterator[IdempotentSpec]:
    """
    Every valid parameter triple for one split.

    Walks all triples mod P but groups the (beta, gamma) pairs by their product
    first, so each alpha only meets the pairs whose product equals alpha (1 - alpha).
    """
    P_modulus = split.part_modulus(Role.P)
    if P_modulus is None:
        yield IdempotentSpec(split=split, context=context)
        return

    candidates = all_series(context.with_modulus(P_modulus))
    by_product: dict[tuple[int, ...], list[tuple[Series, Series]]] = defaultdict(list)
    for beta in candidates:
        for gamma in candidates:
            by_product[(beta * gamma).coefficients()].append((beta, gamma))

    for alpha in candidates:
        for beta, gamma in by_product.get((alpha * (1 - alpha)).coefficients(), ()):
            yield IdempotentSpec(split=split, context=context, alpha=alpha, beta=beta, gamma=gamma)


def enumerate_all(context: TruncationContext, budget: Optional[int] = None) -> list[ClassifiedIdempotent]:
    """
    All idempotents of M_2(Z_n[x_1..x_v] / deg > D), sorted by canonical key.

    Raises:
        BudgetExceeded: If P^(3M) exceeds the budget for the largest P
    """
    budget = settings.BUDGET if budget is None else budget
    BudgetExceeded.check(context.n, 3 * context.size, budget, what="parameter space")

    found: dict[tuple[int, ...], ClassifiedIdempotent] = {}
    for split in all_splits(context.modulus):
        count = 0
        for spec in specs_for_split(split, context):
            matrix = construct_case(spec)
            key = matrix.canonical_key()
            if key in found:
                logger.warning(f"Duplicate idempotent {matrix} from {spec} and {found[key].spec}")
                continue
            found[key] = ClassifiedIdempotent(spec=spec, matrix=matrix)
            count += 1
        logger.info(f"{context}: {count} idempotent(s) for split {split}")

    return [found[key] for key in sorted(found)]


def census(items: list[ClassifiedIdempotent]) -> list[tuple[CoprimeSplit, int]]:
    """Number of idempotents per split, in ``all_splits`` order; empty when no items"""
    if not items:
        return []
    counts: dict[CoprimeSplit, int] = defaultdict(int)
    for item in items:
        counts[item.spec.split] += 1
    return [(split, counts[split]) for split in all_splits(items[0].spec.split.modulus)]


def count_by_factor(context: TruncationContext, budget: Optional[int] = None) -> int:
    """
    Product over the prime powers q of n of the number of idempotents over Z_q.
    Equals len(enumerate_all(context)) since M_2 over Z_n splits along the factors.
    """
    return math.prod(
        len(enumerate_all(context.with_modulus(Modulus.from_factors([factor])), budget))
        for factor in context.modulus.factors
    )
