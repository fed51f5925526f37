"""Parameters of an idempotent of M_2(Z_n[[X]]) and the constraint they satisfy."""
from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator

from idem2.arith.split import CoprimeSplit
from idem2.errors import InvalidSpec
from idem2.matrix.mat2 import Mat2
from idem2.series.tseries import Series, TruncationContext, series_inverse


class IdempotentSpec(BaseModel):
    """
    A coprime split n = PQR plus power series alpha, beta, gamma over Z_P.

    The series live in the same truncation window as ``context`` but with
    modulus P, so their coefficients are already the canonical
    representatives in [0, P). When P = 1 there are no parameters.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    split: CoprimeSplit
    context: TruncationContext
    alpha: Optional[Series] = None
    beta: Optional[Series] = None
    gamma: Optional[Series] = None

    @model_validator(mode="after")
    def _check_parameters(self) -> IdempotentSpec:
        if self.split.modulus != self.context.modulus:
            raise InvalidSpec(f"Split of {self.split.modulus.n} used with series over Z_{self.context.n}")
        params = (self.alpha, self.beta, self.gamma)
        P = self.split.P
        if P == 1:
            if any(s is not None for s in params):
                raise InvalidSpec("alpha, beta, gamma must be absent when P = 1")
            return self
        if any(s is None for s in params):
            raise InvalidSpec(f"alpha, beta, gamma are required when P = {P} > 1")
        for name, s in zip(("alpha", "beta", "gamma"), params):
            if s.context.n != P or not s.context.same_window(self.context):
                raise InvalidSpec(f"{name} must be a series over Z_{P} in the window of {self.context}, got {s.context}")
        return self

    def __str__(self) -> str:
        if self.alpha is None:
            return f"[{self.split}]"
        return f"[{self.split}; alpha={self.alpha}, beta={self.beta}, gamma={self.gamma}]"


class ClassifiedIdempotent(BaseModel):
    """An idempotent matrix together with the parameters that construct it"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    spec: IdempotentSpec
    matrix: Mat2


def validate_spec(spec: IdempotentSpec) -> bool:
    """alpha (1 - alpha) = beta gamma mod P within the window; vacuous when P = 1"""
    if spec.alpha is None:
        return True
    return spec.alpha * (1 - spec.alpha) == spec.beta * spec.gamma


def solve_gamma(alpha: Series, beta: Series) -> Series:
    """
    gamma = beta^-1 alpha (1 - alpha) over Z_P, so that the constraint holds.

    Raises:
        NonUnitError: If the constant term of beta is not a unit mod P
    """
    return alpha * (1 - alpha) * series_inverse(beta)
