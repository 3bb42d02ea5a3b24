"""Exact and floating values and the comparisons used across subind.

Exact families compute with ``Fraction``; floating ones with ``float``. Every
equality or inequality that could hold exactly goes through this module, so
exact inputs are compared exactly and floating inputs use the configured
relative tolerance ``|x - y| <= tol * max(1, |x|, |y|)``. Functions whose
values carry a fixed unit, such as entropies in bits, pass ``absolute=True``
and are compared with ``|x - y| <= tol``.
"""

from fractions import Fraction
from typing import TypeAlias

from subind.config import get_settings

Value: TypeAlias = Fraction | float

ZERO = Fraction(0)


def parse_number(raw: int | float | str | Fraction) -> Value:
    """Convert a file or CLI number to a Value.

    Integers, fraction strings ("3/8") and decimal strings ("0.25") become
    exact ``Fraction``; JSON floats stay floating.
    """
    if isinstance(raw, bool):
        raise ValueError("booleans are not numbers")
    if isinstance(raw, Fraction):
        return raw
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, float):
        return raw
    try:
        return Fraction(raw.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a number: {raw!r}") from exc


def is_exact(*values: Value) -> bool:
    return all(isinstance(v, Fraction) for v in values)


def format_value(value: Value) -> str:
    """Render a value for reports: fractions as "p/q" (or "p"), floats via repr."""
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else str(value)
    return repr(float(value))


def json_value(value: Value) -> str | float:
    """JSON form of a value: fraction string when exact, number when floating."""
    if isinstance(value, Fraction):
        return format_value(value)
    return float(value)


def _slack(x: Value, y: Value, tol: float | None, absolute: bool) -> float:
    tol = get_settings().tolerance if tol is None else tol
    if absolute:
        return tol
    return tol * max(1.0, abs(float(x)), abs(float(y)))


def values_equal(x: Value, y: Value, tol: float | None = None, *, absolute: bool = False) -> bool:
    if is_exact(x, y):
        return x == y
    return abs(float(x) - float(y)) <= _slack(x, y, tol, absolute)


def value_leq(x: Value, y: Value, tol: float | None = None, *, absolute: bool = False) -> bool:
    """x <= y, exactly or up to tolerance."""
    if is_exact(x, y):
        return x <= y
    return float(x) <= float(y) + _slack(x, y, tol, absolute)


def is_zero(x: Value, tol: float | None = None, *, absolute: bool = False) -> bool:
    return values_equal(x, ZERO, tol, absolute=absolute)


def is_positive(x: Value, tol: float | None = None, *, absolute: bool = False) -> bool:
    """x > 0, exactly or beyond tolerance."""
    return not value_leq(x, ZERO, tol, absolute=absolute)


def zero_for(exact: bool) -> Value:
    return ZERO if exact else 0.0
