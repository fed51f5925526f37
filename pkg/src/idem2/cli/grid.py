"""
The acceptance grid: for every (n, v, D) cell the constructive enumeration must
match the brute-force oracle exactly, classification must invert construction,
and both construction paths must agree.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from pydantic import BaseModel

from idem2.core.classify import classify
from idem2.core.construct import construct_crt
from idem2.core.enumerate import enumerate_all
from idem2.datamodel.model import ErrorDoc, GridCell, GridConfig
from idem2.errors import Idem2Error
from idem2.oracle.brute import brute_force_idempotents
from idem2.oracle.report import compare_sets

logger = logging.getLogger(__name__)


class CellResult(BaseModel):
    n: int
    vars: int
    trunc: int
    passed: bool
    count: Optional[int] = None
    oracle_passed: Optional[bool] = None
    roundtrip: Optional[bool] = None
    paths_agree: Optional[bool] = None
    error: Optional[ErrorDoc] = None


class GridResult(BaseModel):
    passed: bool
    cells: list[CellResult]


def run_cell(cell: GridCell, budget: int) -> CellResult:
    logger.info(f"Cell {cell}: start")
    base = dict(n=cell.n, vars=cell.vars, trunc=cell.trunc)
    try:
        ctx = cell.context()
        items = enumerate_all(ctx, budget)
        report = compare_sets([i.matrix for i in items], brute_force_idempotents(ctx, budget))
        roundtrip = all(classify(i.matrix) == i.spec for i in items)
        paths_agree = all(construct_crt(i.spec) == i.matrix for i in items)
    except Idem2Error as e:
        logger.error(f"Cell {cell}: {e.kind}: {e.detail}")
        return CellResult(**base, passed=False, error=ErrorDoc(kind=e.kind, detail=e.detail))

    passed = report.passed and roundtrip and paths_agree
    logger.info(f"Cell {cell}: {len(items)} idempotent(s), {'pass' if passed else 'FAIL'}")
    return CellResult(
        **base,
        passed=passed,
        count=len(items),
        oracle_passed=report.passed,
        roundtrip=roundtrip,
        paths_agree=paths_agree,
    )


def run_grid(grid: GridConfig, jobs: int = 1) -> GridResult:
    """Run every cell; results come back in grid order regardless of ``jobs``"""
    cells = grid.cells
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_cell, cells, [grid.budget] * len(cells)))
    else:
        results = [run_cell(cell, grid.budget) for cell in cells]
    return GridResult(passed=all(r.passed for r in results), cells=results)
