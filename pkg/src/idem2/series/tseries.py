"""
Truncated multivariate formal power series over Z_n.

A series lives in a truncation window: ``num_vars`` commuting variables and all
monomials of total degree at most ``max_degree``. Products drop every term of
higher degree, i.e. we compute in the quotient of Z_n[[x_1..x_v]] by the ideal
of terms of degree > D.

Coefficients are stored sparsely as ``{exponent tuple: int}`` with every value
in [1, n); zero coefficients are never stored.
"""
from __future__ import annotations

import itertools
import logging
import math
from functools import lru_cache
from typing import Mapping, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field

from idem2.arith.zn import Modulus, Residue, factorize
from idem2.errors import ContextMismatch, ModulusMismatch

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]


def grlex_key(m: Monomial) -> tuple:
    # lower degree first, then x1 before x2 before ...
    return (sum(m), tuple(-e for e in m))


def window_size(num_vars: int, max_degree: int) -> int:
    """Number of monomials of total degree <= max_degree in num_vars variables"""
    return math.comb(num_vars + max_degree, max_degree)


@lru_cache(maxsize=256)
def graded_monomials(num_vars: int, max_degree: int) -> tuple[Monomial, ...]:
    """All monomials of the window in graded-lex order"""
    window = [e for e in itertools.product(range(max_degree + 1), repeat=num_vars) if sum(e) <= max_degree]
    return tuple(sorted(window, key=grlex_key))


@lru_cache(maxsize=256)
def monomial_index(num_vars: int, max_degree: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(graded_monomials(num_vars, max_degree))}


@lru_cache(maxsize=256)
def product_table(num_vars: int, max_degree: int) -> tuple[tuple[int, int, int], ...]:
    """
    Triples (i, j, k) with monomial_i * monomial_j = monomial_k inside the window.
    Pairs whose product leaves the window are absent.
    """
    monomials = graded_monomials(num_vars, max_degree)
    index = monomial_index(num_vars, max_degree)
    table = []
    for i, a in enumerate(monomials):
        for j, b in enumerate(monomials):
            if sum(a) + sum(b) <= max_degree:
                table.append((i, j, index[tuple(x + y for x, y in zip(a, b))]))
    return tuple(table)


class TruncationContext(BaseModel):
    """The ring Z_n[[x_1..x_v]] / (degree > D)"""
    model_config = ConfigDict(frozen=True)

    modulus: Modulus
    num_vars: int = Field(ge=0)
    max_degree: int = Field(ge=0)

    @classmethod
    def of(cls, n: int, num_vars: int = 0, max_degree: int = 0) -> TruncationContext:
        return cls(modulus=factorize(n), num_vars=num_vars, max_degree=max_degree)

    @property
    def n(self) -> int:
        return self.modulus.n

    @property
    def monomials(self) -> tuple[Monomial, ...]:
        return graded_monomials(self.num_vars, self.max_degree)

    @property
    def size(self) -> int:
        """Number of monomials in the window"""
        return window_size(self.num_vars, self.max_degree)

    def with_modulus(self, modulus: Modulus) -> TruncationContext:
        return TruncationContext(modulus=modulus, num_vars=self.num_vars, max_degree=self.max_degree)

    def with_degree(self, max_degree: int) -> TruncationContext:
        return TruncationContext(modulus=self.modulus, num_vars=self.num_vars, max_degree=max_degree)

    def same_window(self, other: TruncationContext) -> bool:
        return self.num_vars == other.num_vars and self.max_degree == other.max_degree

    def __str__(self) -> str:
        return f"Z_{self.n}[{self.num_vars} vars]/deg>{self.max_degree}"


class Series:
    """A truncated power series; immutable"""
    __slots__ = ("context", "terms")

    def __init__(self, context: TruncationContext, terms: Optional[Mapping[Monomial, int]] = None):
        n = context.modulus.n
        clean: dict[Monomial, int] = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != context.num_vars:
                raise ValueError(f"Monomial {exp} does not have {context.num_vars} exponents")
            if any(e < 0 for e in exp):
                raise ValueError(f"Monomial {exp} has a negative exponent")
            if sum(exp) > context.max_degree:
                raise ValueError(f"Monomial {exp} lies outside the truncation window of degree {context.max_degree}")
            c = (clean.get(exp, 0) + int(coef)) % n
            if c:
                clean[exp] = c
            else:
                clean.pop(exp, None)
        self.context = context
        self.terms = clean

    @classmethod
    def _raw(cls, context: TruncationContext, terms: dict[Monomial, int]) -> Series:
        # caller guarantees canonical form
        s = object.__new__(cls)
        s.context = context
        s.terms = terms
        return s

    @classmethod
    def zero(cls, context: TruncationContext) -> Series:
        return cls._raw(context, {})

    @classmethod
    def constant(cls, context: TruncationContext, c: Union[int, Residue]) -> Series:
        if isinstance(c, Residue) and c.modulus.n != context.modulus.n:
            raise ModulusMismatch(f"Cannot embed a residue mod {c.modulus.n} into series over {context}")
        c = int(c) % context.modulus.n
        return cls._raw(context, {(0,) * context.num_vars: c} if c else {})

    @classmethod
    def one(cls, context: TruncationContext) -> Series:
        return cls.constant(context, 1)

    @classmethod
    def variable(cls, context: TruncationContext, i: int) -> Series:
        """The series x_{i+1}; zero when the window has degree 0"""
        if not 0 <= i < context.num_vars:
            raise ValueError(f"Variable index {i} out of range for {context.num_vars} variables")
        if context.max_degree == 0:
            return cls.zero(context)
        exp = tuple(1 if k == i else 0 for k in range(context.num_vars))
        return cls._raw(context, {exp: 1 % context.modulus.n})

    @classmethod
    def from_coefficients(cls, context: TruncationContext, coefficients: Sequence[int]) -> Series:
        """Dense coefficient vector in graded-lex window order"""
        monomials = context.monomials
        if len(coefficients) != len(monomials):
            raise ValueError(f"Expected {len(monomials)} coefficients, got {len(coefficients)}")
        n = context.modulus.n
        terms = {}
        for m, c in zip(monomials, coefficients):
            c = int(c) % n
            if c:
                terms[m] = c
        return cls._raw(context, terms)

    def coefficients(self) -> tuple[int, ...]:
        return tuple(self.terms.get(m, 0) for m in self.context.monomials)

    def coefficient(self, exp: Monomial) -> Residue:
        return Residue(self.terms.get(tuple(exp), 0), self.context.modulus)

    def _coerce(self, other) -> Series:
        if isinstance(other, Series):
            if other.context is not self.context and other.context != self.context:
                raise ContextMismatch(f"Cannot combine series over {self.context} and {other.context}")
            return other
        if isinstance(other, Residue):
            if other.modulus.n != self.context.modulus.n:
                raise ModulusMismatch(f"Cannot combine a residue mod {other.modulus.n} with series over {self.context}")
            return Series.constant(self.context, other.value)
        if isinstance(other, int):
            return Series.constant(self.context, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.context.modulus.n
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = (terms.get(exp, 0) + c) % n
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return Series._raw(self.context, terms)

    __radd__ = __add__

    def __neg__(self) -> Series:
        n = self.context.modulus.n
        return Series._raw(self.context, {exp: n - c for exp, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Residue)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.context.modulus.n
        bound = self.context.max_degree
        right = [(exp, sum(exp), c) for exp, c in other.terms.items()]
        out: dict[Monomial, int] = {}
        for ea, ca in self.terms.items():
            da = sum(ea)
            for eb, db, cb in right:
                if da + db > bound:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = (out.get(e, 0) + ca * cb) % n
        return Series._raw(self.context, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c: Union[int, Residue]) -> Series:
        if isinstance(c, Residue) and c.modulus.n != self.context.modulus.n:
            raise ModulusMismatch(f"Cannot scale series over {self.context} by a residue mod {c.modulus.n}")
        n = self.context.modulus.n
        k = int(c) % n
        terms = {}
        for exp, a in self.terms.items():
            v = a * k % n
            if v:
                terms[exp] = v
        return Series._raw(self.context, terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Series):
            return (self.context is other.context or self.context == other.context) and self.terms == other.terms
        if isinstance(other, (int, Residue)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.context, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Residue:
        return Residue(self.terms.get((0,) * self.context.num_vars, 0), self.context.modulus)

    def homogeneous_component(self, i: int) -> Series:
        if not 0 <= i <= self.context.max_degree:
            raise ValueError(f"Degree {i} outside the truncation window 0..{self.context.max_degree}")
        return Series._raw(self.context, {e: c for e, c in self.terms.items() if sum(e) == i})

    def reduce(self, modulus: Modulus) -> Series:
        """Image under Z_n -> Z_m coefficientwise, for a divisor m of n"""
        if self.context.modulus.n % modulus.n:
            raise ModulusMismatch(f"{modulus.n} does not divide {self.context.modulus.n}")
        m = modulus.n
        terms = {}
        for e, c in self.terms.items():
            if c % m:
                terms[e] = c % m
        return Series._raw(self.context.with_modulus(modulus), terms)

    def lift(self, context: TruncationContext) -> Series:
        """Reinterpret the representatives in [0, m) as coefficients in a larger ring"""
        if not self.context.same_window(context):
            raise ContextMismatch(f"Cannot lift series over {self.context} into {context}")
        return Series(context, self.terms)

    def truncate(self, max_degree: int) -> Series:
        """Drop all components above ``max_degree`` (a smaller window)"""
        if max_degree > self.context.max_degree:
            raise ValueError(f"Cannot widen window from {self.context.max_degree} to {max_degree}")
        return Series._raw(self.context.with_degree(max_degree),
                           {e: c for e, c in self.terms.items() if sum(e) <= max_degree})

    def __repr__(self) -> str:
        return f"Series({self}, {self.context})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=grlex_key):
            c = self.terms[exp]
            mono = "*".join(f"x{k + 1}" + (f"^{e}" if e > 1 else "") for k, e in enumerate(exp) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def _same_context(*series: Series) -> None:
    first = series[0].context
    for s in series[1:]:
        if s.context is not first and s.context != first:
            raise ContextMismatch(f"Cannot combine series over {first} and {s.context}")


def series_add(f: Series, g: Series) -> Series:
    _same_context(f, g)
    return f + g


def series_sub(f: Series, g: Series) -> Series:
    _same_context(f, g)
    return f - g


def series_neg(f: Series) -> Series:
    return -f


def series_scale(c: Union[int, Residue], f: Series) -> Series:
    return f.scale(c)


def series_mul(f: Series, g: Series) -> Series:
    _same_context(f, g)
    return f * g


def constant_term(f: Series) -> Residue:
    return f.constant_term()


def homogeneous_component(f: Series, i: int) -> Series:
    return f.homogeneous_component(i)


def series_is_idempotent(f: Series) -> bool:
    return f * f == f


def idempotent_defect_degree(f: Series) -> Optional[int]:
    """
    Lowest degree i with (f^2)_i != f_i, or None when f is idempotent.

    For a non-constant idempotent candidate over a ring without non-trivial
    idempotents this is where a_0^2 = a_0 and 2 a_0 a_k = a_k break down.
    """
    square = f * f
    for i in range(f.context.max_degree + 1):
        if square.homogeneous_component(i) != f.homogeneous_component(i):
            return i
    return None


def series_inverse(f: Series) -> Series:
    """
    Inverse of a series with unit constant term, by Newton iteration g <- g(2 - fg).
    Each step doubles the number of correct degrees.

    Raises:
        NonUnitError: If the constant term is not a unit
    """
    g = Series.constant(f.context, f.constant_term().inverse())
    precision = 1
    while precision <= f.context.max_degree:
        g = g * (2 - f * g)
        precision *= 2
    return g
