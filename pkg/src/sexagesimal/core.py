"""Exact sexagesimal (base-60) values and their arithmetic.

Every value is the non-negative rational ``mantissa * 60**exponent``.
Keeping the mantissa free of factors of 60 gives exactly one
representation per value, so equality is field-wise, hashing is free,
and all arithmetic reduces to ordinary integer arithmetic.  Nothing here
rounds: results are exact or they raise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import TypeVar

BASE = 60


def _strip_base(mantissa: int, exponent: int) -> tuple[int, int]:
    """Move every factor of 60 out of the mantissa into the exponent."""
    if mantissa == 0:
        return 0, 0
    while mantissa % BASE == 0:
        mantissa //= BASE
        exponent += 1
    return mantissa, exponent


@total_ordering
@dataclass(frozen=True)
class SexNumber:
    """A non-negative base-60 value with a definite place value.

    Instances normalize themselves on construction: the stored mantissa
    is never divisible by 60, and zero is always ``(0, 0)``.  Negative
    mantissas are rejected; the domain has no negative numbers.
    """

    mantissa: int
    exponent: int = 0

    def __post_init__(self) -> None:
        if self.mantissa < 0:
            raise ValueError(f"mantissa must be non-negative, got {self.mantissa}")
        m, e = _strip_base(self.mantissa, self.exponent)
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", e)

    def __bool__(self) -> bool:
        return self.mantissa != 0

    def _at_exponent(self, exponent: int) -> int:
        # Mantissa rewritten for a lower-or-equal exponent; exact by construction.
        return self.mantissa * BASE ** (self.exponent - exponent)

    def __add__(self, other: "SexNumber") -> "SexNumber":
        if not isinstance(other, SexNumber):
            return NotImplemented
        e = min(self.exponent, other.exponent)
        return SexNumber(self._at_exponent(e) + other._at_exponent(e), e)

    def __mul__(self, other: "SexNumber") -> "SexNumber":
        if not isinstance(other, SexNumber):
            return NotImplemented
        return SexNumber(self.mantissa * other.mantissa, self.exponent + other.exponent)

    def __lt__(self, other: "SexNumber") -> bool:
        if not isinstance(other, SexNumber):
            return NotImplemented
        e = min(self.exponent, other.exponent)
        return self._at_exponent(e) < other._at_exponent(e)

    def double(self) -> "SexNumber":
        return SexNumber(self.mantissa * 2, self.exponent)

    def halve(self) -> "SexNumber":
        # Halving is exact: 1/2 is the regular value 30 * 60**-1.
        return SexNumber(self.mantissa * 30, self.exponent - 1)

    def to_floating(self) -> "FloatingSex":
        """Drop the place value.  Zero has no floating form and raises."""
        if self.mantissa == 0:
            raise ValueError("zero has no floating form")
        return FloatingSex(self.mantissa)

    def as_fraction(self) -> Fraction:
        return Fraction(self.mantissa) * Fraction(BASE) ** self.exponent


@dataclass(frozen=True)
class FloatingSex:
    """A bare digit string: an equivalence class under powers of 60.

    This is the convention of the clay tablets, which wrote reciprocal
    entries with no radix point and no trailing or leading zeros.  The
    canonical member is the mantissa with every factor of 60 removed,
    so equality is plain mantissa equality.  Zero is unrepresentable:
    no floating zero was ever written, and zero divides nothing.
    """

    mantissa: int

    def __post_init__(self) -> None:
        if self.mantissa <= 0:
            raise ValueError(f"floating mantissa must be positive, got {self.mantissa}")
        m, _ = _strip_base(self.mantissa, 0)
        object.__setattr__(self, "mantissa", m)

    def double(self) -> "FloatingSex":
        return FloatingSex(self.mantissa * 2)

    def halve(self) -> "FloatingSex":
        # Dividing by 2 multiplies the class representative by 30.
        return FloatingSex(self.mantissa * 30)

    def anchor(self, exponent: int) -> SexNumber:
        """Reattach a place value: the result is mantissa * 60**exponent."""
        return SexNumber(self.mantissa, exponent)


ZERO = SexNumber(0)
ONE = SexNumber(1)

_Doubleable = TypeVar("_Doubleable", SexNumber, FloatingSex)


def normalize(mantissa: int, exponent: int = 0) -> SexNumber:
    """Canonical SexNumber equal to mantissa * 60**exponent."""
    return SexNumber(mantissa, exponent)


def add(a: SexNumber, b: SexNumber) -> SexNumber:
    return a + b


def multiply(multiplicand: SexNumber, multiplier: SexNumber) -> SexNumber:
    """Exact product.

    The multiplicand is deliberately the first parameter, keeping the
    word order of Old Babylonian multiplication.  The value itself is
    commutative; the order is a naming convention only.
    """
    return multiplicand * multiplier


def double(a: _Doubleable) -> _Doubleable:
    return a.double()


def halve(a: _Doubleable) -> _Doubleable:
    return a.halve()


def compare(a: SexNumber, b: SexNumber) -> int:
    """-1, 0 or 1, ordering by exact rational value."""
    if a == b:
        return 0
    return -1 if a < b else 1


def to_floating(a: SexNumber) -> FloatingSex:
    return a.to_floating()


def anchor(f: FloatingSex, exponent: int) -> SexNumber:
    return f.anchor(exponent)
