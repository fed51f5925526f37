"""JSON form of idempotent parameters and classified idempotents."""
from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field

from idem2.arith.split import CoprimeSplit, Role
from idem2.core.spec import ClassifiedIdempotent, IdempotentSpec
from idem2.datamodel.model import MatrixDoc, SeriesDoc
from idem2.errors import InvalidSpec
from idem2.series.tseries import TruncationContext


class SpecDoc(BaseModel):
    n: int
    vars: int = Field(default=0, ge=0)
    trunc: int = Field(default=0, ge=0)
    roles: dict[str, Role]
    alpha: Optional[SeriesDoc] = None
    beta: Optional[SeriesDoc] = None
    gamma: Optional[SeriesDoc] = None

    def to_spec(self) -> IdempotentSpec:
        """
        Raises:
            InvalidSpec: If a role key is not a prime power of n or parameters are missing
        """
        ctx = TruncationContext.of(self.n, self.vars, self.trunc)
        try:
            roles = {int(k): r for k, r in self.roles.items()}
        except ValueError:
            raise InvalidSpec(f"Role keys must be prime powers of {self.n}, got {sorted(self.roles)}")
        if set(roles) != set(ctx.modulus.prime_powers):
            raise InvalidSpec(f"Roles must name exactly the prime powers {list(ctx.modulus.prime_powers)}")
        split = CoprimeSplit.from_roles(ctx.modulus, roles)

        docs = (self.alpha, self.beta, self.gamma)
        if split.P == 1:
            if any(d is not None for d in docs):
                raise InvalidSpec("alpha, beta, gamma must be absent when no factor has role P")
            return IdempotentSpec(split=split, context=ctx)
        if any(d is None for d in docs):
            raise InvalidSpec(f"alpha, beta, gamma are required when P = {split.P}")
        alpha, beta, gamma = (d.to_series() for d in docs)
        return IdempotentSpec(split=split, context=ctx, alpha=alpha, beta=beta, gamma=gamma)

    @classmethod
    def from_spec(cls, spec: IdempotentSpec) -> SpecDoc:
        ctx = spec.context
        params = {}
        if spec.alpha is not None:
            params = {name: SeriesDoc.from_series(s)
                      for name, s in (("alpha", spec.alpha), ("beta", spec.beta), ("gamma", spec.gamma))}
        return cls(
            n=ctx.n,
            vars=ctx.num_vars,
            trunc=ctx.max_degree,
            roles={str(q): r for q, r in spec.split.role_map().items()},
            **params,
        )


class ClassifiedDoc(SpecDoc):
    matrix: MatrixDoc

    @classmethod
    def from_classified(cls, item: ClassifiedIdempotent) -> ClassifiedDoc:
        return cls(**SpecDoc.from_spec(item.spec).model_dump(), matrix=MatrixDoc.from_mat2(item.matrix))
