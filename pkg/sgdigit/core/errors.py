"""
Exceptions for sgdigit.

Every operation of the package raises one of the classes below. Errors about
bad arguments are also ``ValueError`` subclasses; errors about exhausted
computation budgets are ``RuntimeError`` subclasses.
"""
from typing import Any, Optional


class SgdigitError(Exception):
    """Base class for all sgdigit errors."""


class InvalidBase(SgdigitError, ValueError):
    """The base is one of -1, 0 or 1."""


class NotRepresentable(SgdigitError, ValueError):
    """The integer has no expansion in the given base (or is outside Z_b)."""


class InvalidDigit(SgdigitError, ValueError):
    """A digit lies outside the digit set {0, ..., |b|-1}."""


class InvalidLength(SgdigitError, ValueError):
    """A digit length smaller than 1 was requested."""


class PreconditionViolated(SgdigitError, ValueError):
    """The arguments are outside the domain of the operation."""


class NotMember(SgdigitError, ValueError):
    """The integer does not belong to the submonoid."""


class InfiniteComplement(SgdigitError, ValueError):
    """The submonoid is not numerical, so its complement in N is infinite."""


class IsAllOfN(SgdigitError, ValueError):
    """The operation needs a gap but the monoid is N itself."""


class Overflow(SgdigitError, RuntimeError):
    """The closure algorithm ran out of iterations before converging."""

    def __init__(self, message: str, trace: Any = None):
        super().__init__(message)
        self.trace = trace


class ResourceLimit(SgdigitError, RuntimeError):
    """A table or a search frontier grew beyond its configured cap."""


class CapTooSmall(SgdigitError, RuntimeError):
    """A brute-force closure did not stabilise below its cap."""


class WitnessNotFound(SgdigitError, RuntimeError):
    """No pair of integers realises the requested product length."""

    def __init__(self, message: str, base: Optional[int] = None, n: Optional[int] = None,
                 m: Optional[int] = None, e: Optional[int] = None):
        super().__init__(message)
        self.base = base
        self.n = n
        self.m = m
        self.e = e


class CriterionMismatch(SgdigitError, RuntimeError):
    """A closed-form criterion disagreed with the direct recomputation."""
