"""
Brute-force ground truth for idempotents over tiny truncated rings.

Candidates are numbered by an odometer over their flattened coefficient vector
(entries a11, a12, a21, a22, each in graded-lex monomial order, most
significant digit first), so walking indices in increasing order yields
results already sorted by canonical key. Each batch of candidates is decoded
into a numpy array and squared with the window's monomial product table.

Nothing here knows how idempotents are parameterized.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from idem2.config import settings
from idem2.errors import BudgetExceeded
from idem2.matrix.mat2 import Mat2, mat_is_idempotent
from idem2.series.tseries import (
    Series, TruncationContext, graded_monomials, product_table, series_is_idempotent,
)

logger = logging.getLogger(__name__)


class SearchSpace(BaseModel):
    """Size of an exhaustive search over one truncation window"""
    model_config = ConfigDict(frozen=True)

    context: TruncationContext
    width: int  # coefficients per candidate

    @classmethod
    def matrices(cls, context: TruncationContext) -> SearchSpace:
        return cls(context=context, width=4 * context.size)

    @classmethod
    def series(cls, context: TruncationContext) -> SearchSpace:
        return cls(context=context, width=context.size)

    @property
    def total(self) -> int:
        return self.context.n ** self.width

    def check(self, budget: int) -> None:
        BudgetExceeded.check(self.context.n, self.width, budget, what=f"oracle search over {self.context}")


def _decode(start: int, stop: int, n: int, width: int) -> np.ndarray:
    """Coefficient vectors of candidates start..stop-1, shape (stop - start, width)"""
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((stop - start, width), dtype=np.int64)
    for pos in range(width - 1, -1, -1):
        digits[:, pos] = idx % n
        idx //= n
    return digits


def _product(f: np.ndarray, g: np.ndarray, table) -> np.ndarray:
    out = np.zeros_like(f)
    for i, j, k in table:
        out[:, k] += f[:, i] * g[:, j]
    return out


def _scan_matrices(n: int, num_vars: int, max_degree: int, start: int, stop: int) -> list[tuple[int, ...]]:
    table = product_table(num_vars, max_degree)
    m = len(graded_monomials(num_vars, max_degree))
    c = _decode(start, stop, n, 4 * m)
    a, b, g, d = c[:, :m], c[:, m:2 * m], c[:, 2 * m:3 * m], c[:, 3 * m:]
    mask = (
        (((_product(a, a, table) + _product(b, g, table)) % n) == a).all(axis=1)
        & (((_product(a, b, table) + _product(b, d, table)) % n) == b).all(axis=1)
        & (((_product(g, a, table) + _product(d, g, table)) % n) == g).all(axis=1)
        & (((_product(g, b, table) + _product(d, d, table)) % n) == d).all(axis=1)
    )
    return [tuple(row) for row in c[mask].tolist()]


def _ranges(total: int, chunk: int) -> list[tuple[int, int]]:
    return [(start, min(start + chunk, total)) for start in range(0, total, chunk)]


def brute_force_idempotents(
    context: TruncationContext,
    budget: Optional[int] = None,
    chunk: Optional[int] = None,
    jobs: int = 1,
) -> list[Mat2]:
    """
    Every idempotent of M_2 over the window, in canonical order.

    Args:
        context: Truncation window
        budget: Largest admissible number of candidates (default: settings.BUDGET)
        chunk: Candidates per vectorized batch (default: settings.ORACLE_CHUNK)
        jobs: Worker processes scanning index ranges

    Raises:
        BudgetExceeded: If n^(4M) exceeds the budget
    """
    space = SearchSpace.matrices(context)
    space.check(settings.BUDGET if budget is None else budget)
    chunk = chunk or settings.ORACLE_CHUNK
    n, v, D = context.n, context.num_vars, context.max_degree
    ranges = _ranges(space.total, chunk)
    logger.info(f"Oracle: scanning {space.total} matrices over {context} in {len(ranges)} batch(es)")

    if jobs > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            k = len(ranges)
            starts, stops = zip(*ranges)
            batches = list(pool.map(_scan_matrices, [n] * k, [v] * k, [D] * k, starts, stops))
    else:
        batches = [_scan_matrices(n, v, D, s, e) for s, e in ranges]

    found = [Mat2.from_coefficients(context, key) for batch in batches for key in batch]
    for A in found:
        if not mat_is_idempotent(A):
            raise RuntimeError(f"Vectorized oracle reported a non-idempotent matrix {A}")
    logger.info(f"Oracle: {len(found)} idempotent matrices over {context}")
    return found


def brute_force_series_idempotents(context: TruncationContext, budget: Optional[int] = None) -> list[Series]:
    """
    Every f with f^2 = f in the window, in canonical order.

    Raises:
        BudgetExceeded: If n^M exceeds the budget
    """
    space = SearchSpace.series(context)
    space.check(settings.BUDGET if budget is None else budget)
    n = context.n
    table = product_table(context.num_vars, context.max_degree)

    found = []
    for start, stop in _ranges(space.total, settings.ORACLE_CHUNK):
        f = _decode(start, stop, n, space.width)
        mask = ((_product(f, f, table) % n) == f).all(axis=1)
        found.extend(Series.from_coefficients(context, row) for row in f[mask].tolist())

    for s in found:
        if not series_is_idempotent(s):
            raise RuntimeError(f"Vectorized oracle reported a non-idempotent series {s}")
    return found
