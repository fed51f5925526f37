"""Coprime splits n = PQR of a modulus into the three idempotent roles."""
from __future__ import annotations

import itertools
import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator

from idem2.arith.zn import Modulus
from idem2.errors import ModulusError


class Role(str, Enum):
    """Role of a prime-power component of an idempotent matrix"""
    P = "P"  # (alpha, beta; gamma, 1 - alpha)
    Q = "Q"  # identity
    R = "R"  # zero


# Case labels keyed by (P > 1, Q > 1, R > 1)
_CASES = {
    (True, True, True): "i",
    (True, True, False): "ii",
    (True, False, True): "iii",
    (False, True, True): "iv",
    (True, False, False): "v",
    (False, True, False): "vi",
    (False, False, True): "vii",
}


class CoprimeSplit(BaseModel):
    """Assignment of each prime-power factor of n to exactly one role"""
    model_config = ConfigDict(frozen=True)

    modulus: Modulus
    roles: tuple[Role, ...]

    @model_validator(mode="after")
    def _check_roles(self) -> CoprimeSplit:
        if len(self.roles) != len(self.modulus.factors):
            raise ModulusError(
                f"Expected {len(self.modulus.factors)} roles for modulus {self.modulus.n}, got {len(self.roles)}"
            )
        P, Q, R = self.P, self.Q, self.R
        assert P * Q * R == self.modulus.n
        assert math.gcd(P, Q) == math.gcd(P, R) == math.gcd(Q, R) == 1
        return self

    @classmethod
    def from_roles(cls, modulus: Modulus, roles: dict[int, Role]) -> CoprimeSplit:
        """Build a split from a mapping prime power -> role"""
        missing = set(modulus.prime_powers) ^ set(roles)
        if missing:
            raise ModulusError(
                f"Roles must name exactly the prime powers {list(modulus.prime_powers)}, got {sorted(roles)}"
            )
        return cls(modulus=modulus, roles=tuple(Role(roles[q]) for q in modulus.prime_powers))

    def part(self, role: Role) -> int:
        return math.prod(q for q, r in zip(self.modulus.prime_powers, self.roles) if r == role)

    @property
    def P(self) -> int:
        return self.part(Role.P)

    @property
    def Q(self) -> int:
        return self.part(Role.Q)

    @property
    def R(self) -> int:
        return self.part(Role.R)

    def part_modulus(self, role: Role) -> Optional[Modulus]:
        """Z_P (resp. Z_Q, Z_R) as a Modulus, or None when that part is 1"""
        factors = [f for f, r in zip(self.modulus.factors, self.roles) if r == role]
        return Modulus.from_factors(factors) if factors else None

    @property
    def case(self) -> str:
        return _CASES[(self.P > 1, self.Q > 1, self.R > 1)]

    def role_map(self) -> dict[int, Role]:
        return dict(zip(self.modulus.prime_powers, self.roles))

    def __str__(self) -> str:
        return f"P={self.P}, Q={self.Q}, R={self.R}"


def all_splits(m: Modulus) -> list[CoprimeSplit]:
    """All 3**omega(n) splits, odometer over the factors with role order P, Q, R"""
    return [CoprimeSplit(modulus=m, roles=roles) for roles in itertools.product(list(Role), repeat=m.omega)]
