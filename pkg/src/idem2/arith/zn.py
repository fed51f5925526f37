"""
Exact arithmetic in Z_n.

Moduli are carried together with their prime-power factorization so that
totients and CRT data never have to be recomputed. Residues are small value
objects; mixing residues of different rings is an error, not a coercion.
"""
from __future__ import annotations

import itertools
import logging
import math
from functools import lru_cache
from typing import Sequence, Union

from pydantic import BaseModel, ConfigDict, model_validator

from idem2.config import settings
from idem2.errors import ModulusError, ModulusMismatch, NonUnitError

logger = logging.getLogger(__name__)


def is_prime(p: int) -> bool:
    """Primality by trial division (desk-scale moduli only)"""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % k for k in range(3, math.isqrt(p) + 1, 2))


class Modulus(BaseModel):
    """A modulus n > 1 together with its prime-power factorization"""
    model_config = ConfigDict(frozen=True)

    n: int
    factors: tuple[tuple[int, int], ...]

    @model_validator(mode="after")
    def _check_factorization(self) -> Modulus:
        if self.n <= 1:
            raise ModulusError(f"Modulus must be greater than 1, got {self.n}")
        product = 1
        previous = 1
        for p, d in self.factors:
            if p <= previous:
                raise ModulusError(f"Primes must be strictly increasing, got {p} after {previous}")
            if d < 1:
                raise ModulusError(f"Exponent of {p} must be positive, got {d}")
            if not is_prime(p):
                raise ModulusError(f"Factor {p} is not prime")
            product *= p**d
            previous = p
        if product != self.n:
            raise ModulusError(f"Factors {list(self.factors)} multiply to {product}, not {self.n}")
        return self

    @classmethod
    def from_factors(cls, factors: Sequence[tuple[int, int]]) -> Modulus:
        return cls(n=math.prod(p**d for p, d in factors), factors=tuple(factors))

    @property
    def prime_powers(self) -> tuple[int, ...]:
        return tuple(p**d for p, d in self.factors)

    @property
    def omega(self) -> int:
        """Number of distinct prime divisors"""
        return len(self.factors)

    def residue(self, value: int) -> Residue:
        return Residue(value, self)

    def to_json(self) -> list[list[int]]:
        return [[p, d] for p, d in self.factors]

    def __str__(self) -> str:
        return " * ".join(f"{p}^{d}" if d > 1 else str(p) for p, d in self.factors)


class Residue:
    """An element of Z_n, stored as its representative in [0, n)"""
    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: Modulus):
        self.value = value % modulus.n
        self.modulus = modulus

    def _coerce(self, other: Union[Residue, int]) -> int:
        if isinstance(other, Residue):
            if other.modulus.n != self.modulus.n:
                raise ModulusMismatch(
                    f"Cannot combine residues mod {self.modulus.n} and mod {other.modulus.n}"
                )
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> Residue:
        return Residue(-self.value, self.modulus)

    def __pow__(self, exp: int) -> Residue:
        return mod_pow(self, exp)

    def __eq__(self, other) -> bool:
        if isinstance(other, Residue):
            return self.modulus.n == other.modulus.n and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus.n
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus.n))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Residue({self.value} mod {self.modulus.n})"

    def is_unit(self) -> bool:
        return math.gcd(self.value, self.modulus.n) == 1

    def inverse(self) -> Residue:
        if not self.is_unit():
            raise NonUnitError(f"{self.value} is not invertible mod {self.modulus.n}")
        return Residue(pow(self.value, -1, self.modulus.n), self.modulus)

    def reduce(self, modulus: Modulus) -> Residue:
        """Image under Z_n -> Z_m for a divisor m of n"""
        if self.modulus.n % modulus.n:
            raise ModulusMismatch(f"{modulus.n} does not divide {self.modulus.n}")
        return Residue(self.value, modulus)


@lru_cache(maxsize=4096)
def factorize(n: int) -> Modulus:
    """Complete prime-power factorization of n by trial division up to sqrt(n)"""
    if n <= 1:
        raise ModulusError(f"Modulus must be greater than 1, got {n}")
    if n > settings.MAX_MODULUS:
        raise ModulusError(f"Modulus {n} exceeds the configured limit {settings.MAX_MODULUS}")

    factors = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            d = 0
            while rest % p == 0:
                rest //= p
                d += 1
            factors.append((p, d))
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append((rest, 1))

    logger.debug(f"factorize({n}) = {factors}")
    return Modulus(n=n, factors=tuple(factors))


def totient(m: Union[int, Modulus]) -> int:
    """Euler's phi; phi(1) is 1 by convention"""
    if isinstance(m, int):
        if m < 1:
            raise ModulusError(f"totient is defined for m >= 1, got {m}")
        if m == 1:
            return 1
        m = factorize(m)
    return math.prod(p ** (d - 1) * (p - 1) for p, d in m.factors)


def mod_pow(base: Residue, exp: int) -> Residue:
    """base**exp in Z_n by square-and-multiply"""
    if exp < 0:
        raise ValueError(f"Exponent must be non-negative, got {exp}")
    result = 1
    square = base.value
    n = base.modulus.n
    while exp:
        if exp & 1:
            result = result * square % n
        square = square * square % n
        exp >>= 1
    return Residue(result, base.modulus)


def crt_combine(modulus: Modulus, residues: Sequence[int]) -> Residue:
    """
    The unique residue mod n reducing to ``residues[i]`` mod the i-th prime power.

    Args:
        modulus: Target ring Z_n
        residues: One value per prime-power factor, in factor order

    Raises:
        ModulusError: If the number of residues does not match the factor list
    """
    powers = modulus.prime_powers
    if len(residues) != len(powers):
        raise ModulusError(
            f"Expected {len(powers)} residues for modulus {modulus.n}, got {len(residues)}"
        )
    n = modulus.n
    total = 0
    for value, q in zip(residues, powers):
        others = n // q
        total += value * others * pow(others, -1, q)
    return Residue(total, modulus)


def idempotents_of_zn(m: Modulus) -> list[Residue]:
    """
    All idempotents of Z_n, sorted ascending.

    Z_{p^d} only has the trivial idempotents 0 and 1, so by CRT every choice of
    0/1 per prime-power component gives one idempotent: 2**omega(n) in total.
    """
    found = {crt_combine(m, choice) for choice in itertools.product((0, 1), repeat=m.omega)}
    return sorted(found, key=lambda r: r.value)
