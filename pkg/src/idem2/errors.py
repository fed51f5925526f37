"""Exception hierarchy shared by all idem2 modules.

Every exception carries a stable ``kind`` which the CLI reports in its
``{"kind": ..., "detail": ...}`` error documents.
"""
import math


class Idem2Error(Exception):
    """Base class for all domain errors"""
    kind = "Idem2Error"

    @property
    def detail(self) -> str:
        return str(self)


class ModulusError(Idem2Error):
    """Raised for moduli outside the supported range or with a bad factor list"""
    kind = "InvalidModulus"


class ModulusMismatch(Idem2Error):
    """Raised when residues or series over different rings are combined"""
    kind = "ModulusMismatch"


class ContextMismatch(Idem2Error):
    """Raised when series or matrices from different truncation windows are combined"""
    kind = "ContextMismatch"


class NonUnitError(Idem2Error):
    """Raised when an inverse of a non-unit is requested"""
    kind = "NonUnit"


class InvalidSpec(Idem2Error):
    """Raised when idempotent parameters violate the constraint or are malformed"""
    kind = "InvalidSpec"


class NotIdempotent(Idem2Error):
    kind = "NotIdempotent"


class ShapeViolation(Idem2Error):
    """Raised when a reduction mod a prime power matches none of the three shapes"""
    kind = "ShapeViolation"

    def __init__(self, prime_power: int, message: str):
        super().__init__(message)
        self.prime_power = prime_power


class BudgetExceeded(Idem2Error):
    """
    Raised when a search space base^exponent is larger than the budget.
    The size is reported as a power; it is never expanded in the message.
    """
    kind = "BudgetExceeded"

    def __init__(self, base: int, exponent: int, budget: int, what: str = "search space"):
        super().__init__(f"{what} of size {base}^{exponent} exceeds budget {budget}")
        self.base = base
        self.exponent = exponent
        self.budget = budget

    @property
    def required(self) -> int:
        return self.base ** self.exponent

    @classmethod
    def check(cls, base: int, exponent: int, budget: int, what: str = "search space") -> None:
        """Raise unless base^exponent <= budget, without expanding a power far beyond the budget"""
        if budget < 1:
            raise cls(base, exponent, budget, what)
        # exponent <= log_base(budget) + 1 keeps the exact power below budget * base
        if base > 1 and exponent > math.log(budget, base) + 1:
            raise cls(base, exponent, budget, what)
        if base ** exponent > budget:
            raise cls(base, exponent, budget, what)


class ParseError(Idem2Error):
    """Raised for malformed JSON input; ``location`` points at the offending spot"""
    kind = "ParseError"

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
