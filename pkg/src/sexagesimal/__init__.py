"""Exact Babylonian sexagesimal arithmetic, reciprocals, and table tools."""

from .core import (
    BASE,
    ONE,
    ZERO,
    FloatingSex,
    SexNumber,
    add,
    anchor,
    compare,
    double,
    halve,
    multiply,
    normalize,
    to_floating,
)
from .regular import (
    Factorization235,
    IrregularError,
    NoFiniteSolutionError,
    ReciprocalPair,
    factor235,
    invert,
    is_reciprocal_pair,
    is_regular,
    reciprocal,
    regular_numbers,
    solve_linear,
)
from .tables import (
    DoublingTable,
    Finding,
    TableRow,
    VerificationReport,
    generate_doubling,
    generate_standard,
    verify_table,
)
from .translit import DigitRangeError, ParseError, Transliteration, parse, to_number

__version__ = "0.1.0"

__all__ = [
    "BASE",
    "ONE",
    "ZERO",
    "FloatingSex",
    "SexNumber",
    "add",
    "anchor",
    "compare",
    "double",
    "halve",
    "multiply",
    "normalize",
    "to_floating",
    "Factorization235",
    "IrregularError",
    "NoFiniteSolutionError",
    "ReciprocalPair",
    "factor235",
    "invert",
    "is_reciprocal_pair",
    "is_regular",
    "reciprocal",
    "regular_numbers",
    "solve_linear",
    "DoublingTable",
    "Finding",
    "TableRow",
    "VerificationReport",
    "generate_doubling",
    "generate_standard",
    "verify_table",
    "DigitRangeError",
    "ParseError",
    "Transliteration",
    "parse",
    "to_number",
]
