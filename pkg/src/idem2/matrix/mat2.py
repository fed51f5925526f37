"""
2x2 matrices over truncated power series.

Besides the ring operations this module exposes the Cayley-Hamilton residual
A^2 - tr(A) A + det(A) I_2 and the trace/determinant dichotomy that sorts an
idempotent over a ring without non-trivial idempotents into one of the three
shapes I_2, 0_2 and (alpha, beta; gamma, 1 - alpha).
"""
from __future__ import annotations

from enum import Enum
from typing import Optional, Sequence, Union

from idem2.arith.zn import Modulus, Residue
from idem2.errors import ContextMismatch
from idem2.series.tseries import Series, TruncationContext


class Shape(str, Enum):
    IDENTITY = "identity"
    ZERO = "zero"
    COMPLEMENTARY = "complementary"  # (alpha, beta; gamma, 1 - alpha)


class Mat2:
    """Immutable 2x2 matrix with Series entries sharing one context"""
    __slots__ = ("a11", "a12", "a21", "a22")

    def __init__(self, a11: Series, a12: Series, a21: Series, a22: Series):
        ctx = a11.context
        for s in (a12, a21, a22):
            if s.context is not ctx and s.context != ctx:
                raise ContextMismatch(f"Matrix entries over {ctx} and {s.context}")
        self.a11 = a11
        self.a12 = a12
        self.a21 = a21
        self.a22 = a22

    @property
    def context(self) -> TruncationContext:
        return self.a11.context

    @property
    def entries(self) -> tuple[Series, Series, Series, Series]:
        return (self.a11, self.a12, self.a21, self.a22)

    @classmethod
    def identity(cls, context: TruncationContext) -> Mat2:
        one, zero = Series.one(context), Series.zero(context)
        return cls(one, zero, zero, one)

    @classmethod
    def zero(cls, context: TruncationContext) -> Mat2:
        zero = Series.zero(context)
        return cls(zero, zero, zero, zero)

    @classmethod
    def from_ints(cls, context: TruncationContext, rows: Sequence[Sequence[int]]) -> Mat2:
        """Constant matrix ((a, b), (c, d))"""
        (a, b), (c, d) = rows
        return cls(*(Series.constant(context, x) for x in (a, b, c, d)))

    @classmethod
    def from_coefficients(cls, context: TruncationContext, vector: Sequence[int]) -> Mat2:
        """Inverse of ``canonical_key``"""
        m = context.size
        if len(vector) != 4 * m:
            raise ValueError(f"Expected {4 * m} coefficients, got {len(vector)}")
        return cls(*(Series.from_coefficients(context, vector[k * m:(k + 1) * m]) for k in range(4)))

    def canonical_key(self) -> tuple[int, ...]:
        """Flattened coefficient vector: a11, a12, a21, a22 each in graded-lex order"""
        return self.a11.coefficients() + self.a12.coefficients() + self.a21.coefficients() + self.a22.coefficients()

    def _check(self, other: Mat2) -> None:
        if other.context is not self.context and other.context != self.context:
            raise ContextMismatch(f"Cannot combine matrices over {self.context} and {other.context}")

    def __add__(self, other: Mat2) -> Mat2:
        self._check(other)
        return Mat2(*(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: Mat2) -> Mat2:
        self._check(other)
        return Mat2(*(x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> Mat2:
        return Mat2(*(-x for x in self.entries))

    def __mul__(self, other: Mat2) -> Mat2:
        self._check(other)
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def scale(self, c: Union[int, Residue, Series]) -> Mat2:
        return Mat2(*(x * c for x in self.entries))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def trace(self) -> Series:
        return self.a11 + self.a22

    def det(self) -> Series:
        return self.a11 * self.a22 - self.a12 * self.a21

    def is_identity(self) -> bool:
        return self == Mat2.identity(self.context)

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries)

    def reduce(self, modulus: Modulus) -> Mat2:
        return Mat2(*(x.reduce(modulus) for x in self.entries))

    def lift(self, context: TruncationContext) -> Mat2:
        return Mat2(*(x.lift(context) for x in self.entries))

    def __repr__(self) -> str:
        return f"Mat2(({self.a11}, {self.a12}; {self.a21}, {self.a22}) over {self.context})"


def mat_add(A: Mat2, B: Mat2) -> Mat2:
    return A + B


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    return A * B


def mat_scale(c: Union[int, Residue], A: Mat2) -> Mat2:
    return A.scale(c)


def trace(A: Mat2) -> Series:
    return A.trace()


def det(A: Mat2) -> Series:
    return A.det()


def cayley_hamilton_residual(A: Mat2) -> Mat2:
    """A^2 - tr(A) A + det(A) I_2; always the zero matrix"""
    identity = Mat2.identity(A.context)
    return A * A - A.scale(A.trace()) + identity.scale(A.det())


def mat_is_idempotent(A: Mat2) -> bool:
    return A * A == A


def local_shape(A: Mat2) -> Optional[Shape]:
    """
    Shape of an idempotent over a ring without non-trivial idempotents.

    From Cayley-Hamilton, (tr(A) - 1) A = det(A) I_2 for an idempotent A and
    det(A) is itself idempotent, hence 0 or 1:
      det = 1            -> A = I_2
      det = 0, tr = 0    -> A = 0_2
      det = 0, tr = 1    -> A = (alpha, beta; gamma, 1 - alpha)
    Returns None when A is not idempotent.
    """
    if not mat_is_idempotent(A):
        return None
    d = A.det()
    t = A.trace()
    if d == 1:
        return Shape.IDENTITY
    if d.is_zero():
        if t.is_zero():
            return Shape.ZERO
        if t == 1:
            return Shape.COMPLEMENTARY
    return None
