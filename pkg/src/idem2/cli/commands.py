"""
Subcommand implementations. Each takes already-parsed JSON data and returns a
JSON-ready dict; domain failures are raised as Idem2Error subclasses.
"""
from __future__ import annotations

import logging
from typing import Any, Optional, Type, TypeVar

from pydantic import BaseModel, ValidationError

from idem2.cli.grid import run_grid
from idem2.core.classify import classify
from idem2.core.construct import construct_case
from idem2.core.enumerate import census, enumerate_all
from idem2.datamodel.model import GridConfig, MatrixDoc
from idem2.datamodel.spec import ClassifiedDoc, SpecDoc
from idem2.errors import ParseError
from idem2.matrix.mat2 import Mat2, cayley_hamilton_residual, mat_is_idempotent
from idem2.oracle.brute import brute_force_idempotents
from idem2.oracle.report import compare_sets
from idem2.series.tseries import TruncationContext

logger = logging.getLogger(__name__)

DocT = TypeVar("DocT", bound=BaseModel)


def load_doc(model: Type[DocT], data: Any) -> DocT:
    """Validate JSON data into a wire model; errors carry the failing location"""
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise ParseError(location, first["msg"])


def load_matrix(data: Any) -> Mat2:
    doc = load_doc(MatrixDoc, data)
    try:
        return doc.to_mat2()
    except ValueError as e:
        raise ParseError("entries", str(e))


def cmd_construct(data: Any) -> dict:
    doc = load_doc(SpecDoc, data)
    try:
        spec = doc.to_spec()
    except ValueError as e:
        raise ParseError("alpha/beta/gamma", str(e))
    matrix = construct_case(spec)
    logger.info(f"Constructed case ({spec.split.case}) idempotent for {spec.split}")
    return {
        "case": spec.split.case,
        "matrix": MatrixDoc.from_mat2(matrix).model_dump(mode="json"),
        "verified": mat_is_idempotent(matrix),
    }


def cmd_verify(data: Any) -> dict:
    A = load_matrix(data)
    return {
        "idempotent": mat_is_idempotent(A),
        "cayley_hamilton": cayley_hamilton_residual(A).is_zero(),
    }


def cmd_classify(data: Any) -> dict:
    A = load_matrix(data)
    return SpecDoc.from_spec(classify(A)).model_dump(mode="json")


def cmd_enumerate(n: int, num_vars: int, max_degree: int, with_oracle: bool, budget: int,
                  jobs: int = 1, list_items: bool = False) -> tuple[dict, bool]:
    """Census of all idempotents; the flag is False when the oracle disagrees"""
    ctx = TruncationContext.of(n, num_vars, max_degree)
    items = enumerate_all(ctx, budget)
    result: dict[str, Any] = {
        "n": n,
        "vars": num_vars,
        "trunc": max_degree,
        "count": len(items),
        "by_split": [
            {
                "roles": {str(q): r.value for q, r in split.role_map().items()},
                "P": split.P,
                "Q": split.Q,
                "R": split.R,
                "case": split.case,
                "count": count,
            }
            for split, count in census(items)
        ],
        "oracle": None,
    }
    passed = True
    if with_oracle:
        report = compare_sets([i.matrix for i in items], brute_force_idempotents(ctx, budget, jobs=jobs))
        result["oracle"] = report.model_dump(mode="json")
        passed = report.passed
    if list_items:
        result["idempotents"] = [ClassifiedDoc.from_classified(i).model_dump(mode="json") for i in items]
    return result, passed


def cmd_selftest(grid: GridConfig, jobs: int = 1, budget: Optional[int] = None) -> tuple[dict, bool]:
    if budget is not None:
        grid = grid.model_copy(update={"budget": budget})
    outcome = run_grid(grid, jobs=jobs)
    return outcome.model_dump(mode="json"), outcome.passed
