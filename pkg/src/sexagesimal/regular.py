"""Regular (60-smooth) numbers, finite reciprocals, and exact division.

A number has a finite base-60 reciprocal exactly when its only prime
factors are 2, 3 and 5.  Scribes called such numbers' reciprocals into
being with a table lookup; for anything else the reciprocal simply does
not exist as a finite digit string, and division has to go through an
exact linear solve instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import BASE, FloatingSex, SexNumber


class IrregularError(ArithmeticError):
    """No finite reciprocal exists.

    ``residue`` is the witness: the mantissa with every factor of 2, 3
    and 5 divided out.  It is greater than 1 and coprime to 60.
    """

    def __init__(self, mantissa: int, residue: int):
        super().__init__(
            f"{mantissa} is irregular: no finite reciprocal exists"
            f" (residue {residue} is coprime to 60)"
        )
        self.mantissa = mantissa
        self.residue = residue


class NoFiniteSolutionError(ArithmeticError):
    """x * a = b has no finite sexagesimal x.

    Raised when the reduced denominator of b/a is irregular; ``residue``
    is that denominator's part coprime to 60.
    """

    def __init__(self, denominator: int, residue: int):
        super().__init__(
            f"no finite solution: reduced denominator {denominator}"
            f" is irregular (residue {residue})"
        )
        self.denominator = denominator
        self.residue = residue


@dataclass(frozen=True)
class Factorization235:
    """n split as 2**two * 3**three * 5**five * residue.

    The residue is coprime to 30; n is regular exactly when it is 1.
    """

    two: int
    three: int
    five: int
    residue: int

    @property
    def is_regular(self) -> bool:
        return self.residue == 1


def factor235(n: int) -> Factorization235:
    """Exact exponents of 2, 3 and 5 in n, plus the coprime residue."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    exponents = []
    for p in (2, 3, 5):
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        exponents.append(k)
    return Factorization235(*exponents, residue=n)


def is_regular(x: FloatingSex | int) -> bool:
    """True when x has a finite base-60 reciprocal."""
    mantissa = x.mantissa if isinstance(x, FloatingSex) else x
    return factor235(mantissa).residue == 1


def _reciprocal_power(f: Factorization235) -> int:
    # Smallest k with 2**two * 3**three * 5**five dividing 60**k;
    # 60**k carries 2**(2k), 3**k and 5**k.
    return max((f.two + 1) // 2, f.three, f.five)


def reciprocal(x: FloatingSex | int) -> FloatingSex:
    """The finite reciprocal of a regular number, as a floating value.

    Returns r with ``x.mantissa * r.mantissa == 60**k`` for the smallest
    possible k, which makes r canonical (not divisible by 60) and the
    operation an involution: ``reciprocal(reciprocal(x)) == x``.

    Raises IrregularError when no finite reciprocal exists.
    """
    if isinstance(x, int):
        x = FloatingSex(x)
    f = factor235(x.mantissa)
    if not f.is_regular:
        raise IrregularError(x.mantissa, f.residue)
    k = _reciprocal_power(f)
    return FloatingSex(BASE**k // x.mantissa)


def invert(a: SexNumber) -> SexNumber:
    """Exact 1/a with its true place value, for regular nonzero a."""
    if not a:
        raise ZeroDivisionError("zero has no reciprocal")
    f = factor235(a.mantissa)
    if not f.is_regular:
        raise IrregularError(a.mantissa, f.residue)
    k = _reciprocal_power(f)
    return SexNumber(BASE**k // a.mantissa, -k - a.exponent)


def solve_linear(a: SexNumber, b: SexNumber) -> SexNumber:
    """Solve x * a = b exactly.

    The fraction b/a is reduced first, so the divisor itself need not be
    regular: it is enough that the reduced denominator is.  Whenever a
    value is returned, ``multiply(x, a) == b`` holds exactly; otherwise
    NoFiniteSolutionError reports why x has no finite digit string.
    """
    if not a:
        raise ZeroDivisionError("division by zero")
    g = gcd(b.mantissa, a.mantissa)
    p, q = b.mantissa // g, a.mantissa // g
    f = factor235(q)
    if not f.is_regular:
        raise NoFiniteSolutionError(q, f.residue)
    k = _reciprocal_power(f)
    return SexNumber(p * (BASE**k // q), b.exponent - a.exponent - k)


def is_power_of_60(n: int) -> bool:
    if n < 1:
        return False
    while n % BASE == 0:
        n //= BASE
    return n == 1


def is_reciprocal_pair(x: FloatingSex, y: FloatingSex) -> bool:
    """True when the floating product of the two values is 1."""
    return is_power_of_60(x.mantissa * y.mantissa)


@dataclass(frozen=True)
class ReciprocalPair:
    """A regular value together with its finite reciprocal.

    The defining relation, checked on construction: the product of the
    two mantissas is a power of 60 (floating product is 1).
    """

    value: FloatingSex
    reciprocal: FloatingSex

    def __post_init__(self) -> None:
        if not is_reciprocal_pair(self.value, self.reciprocal):
            raise ValueError(
                f"{self.value.mantissa} and {self.reciprocal.mantissa}"
                " are not a reciprocal pair"
            )


def regular_numbers(limit: int) -> list[int]:
    """All regular integers in [2, limit], ascending."""
    found: list[int] = []
    p5 = 1
    while p5 <= limit:
        p35 = p5
        while p35 <= limit:
            p = p35
            while p <= limit:
                found.append(p)
                p *= 2
            p35 *= 3
        p5 *= 5
    return sorted(n for n in found if n >= 2)
