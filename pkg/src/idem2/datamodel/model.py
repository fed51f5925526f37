from __future__ import annotations

import json
from pathlib import Path

from pydantic import BaseModel, Field, field_validator

from idem2.config import DEFAULT_BUDGET
from idem2.errors import ContextMismatch
from idem2.matrix.mat2 import Mat2
from idem2.series.tseries import Series, TruncationContext, grlex_key


class TermDoc(BaseModel):
    exp: list[int]
    coef: int


class SeriesDoc(BaseModel):
    n: int
    vars: int = Field(default=0, ge=0)
    trunc: int = Field(default=0, ge=0)
    terms: list[TermDoc] = []

    def context(self) -> TruncationContext:
        return TruncationContext.of(self.n, self.vars, self.trunc)

    def to_series(self) -> Series:
        ctx = self.context()
        terms: dict[tuple[int, ...], int] = {}
        for t in self.terms:
            exp = tuple(t.exp)
            terms[exp] = terms.get(exp, 0) + t.coef
        return Series(ctx, terms)

    @classmethod
    def from_series(cls, s: Series) -> SeriesDoc:
        ctx = s.context
        return SeriesDoc(
            n=ctx.n,
            vars=ctx.num_vars,
            trunc=ctx.max_degree,
            terms=[TermDoc(exp=list(e), coef=s.terms[e]) for e in sorted(s.terms, key=grlex_key)],
        )


class MatrixDoc(BaseModel):
    entries: list[list[SeriesDoc]]

    @field_validator("entries")
    @classmethod
    def _two_by_two(cls, v: list[list[SeriesDoc]]) -> list[list[SeriesDoc]]:
        if len(v) != 2 or any(len(row) != 2 for row in v):
            raise ValueError("entries must be a 2x2 array of series")
        return v

    def to_mat2(self) -> Mat2:
        (a, b), (c, d) = self.entries
        series = [s.to_series() for s in (a, b, c, d)]
        ctx = series[0].context
        for s in series[1:]:
            if s.context != ctx:
                raise ContextMismatch(f"Matrix entries over {ctx} and {s.context}")
        return Mat2(*series)

    @classmethod
    def from_mat2(cls, A: Mat2) -> MatrixDoc:
        a, b, c, d = (SeriesDoc.from_series(s) for s in A.entries)
        return MatrixDoc(entries=[[a, b], [c, d]])

    def to_json(self):
        return self.model_dump_json()


class ErrorDoc(BaseModel):
    kind: str
    detail: str


class GridCell(BaseModel):
    n: int = Field(gt=1)
    vars: int = Field(default=0, ge=0)
    trunc: int = Field(default=0, ge=0)

    def context(self) -> TruncationContext:
        return TruncationContext.of(self.n, self.vars, self.trunc)

    def __str__(self) -> str:
        return f"(n={self.n}, v={self.vars}, D={self.trunc})"


# (n, v, D) cells certified by the selftest when no grid file is given
DEFAULT_GRID_CELLS = [
    (2, 0, 0), (3, 0, 0), (4, 0, 0), (5, 0, 0), (6, 0, 0), (8, 0, 0), (9, 0, 0),
    (10, 0, 0), (12, 0, 0), (2, 1, 2), (3, 1, 1), (4, 1, 1), (6, 1, 1), (2, 2, 1),
]


class GridConfig(BaseModel):
    """Cells of the acceptance grid and the oracle budget applied to each"""
    cells: list[GridCell]
    budget: int = DEFAULT_BUDGET

    @classmethod
    def default(cls, budget: int = DEFAULT_BUDGET) -> GridConfig:
        return cls(cells=[GridCell(n=n, vars=v, trunc=d) for n, v, d in DEFAULT_GRID_CELLS], budget=budget)

    @classmethod
    def from_json_file(cls, filepath: str) -> GridConfig:
        """Load grid configuration from JSON file"""
        with open(Path(filepath), 'r') as f:
            data = json.load(f)
        return cls(**data)

    def save_to_json_file(self, filepath: str):
        with open(Path(filepath), 'w') as f:
            json.dump(self.model_dump(), f, indent=2)
