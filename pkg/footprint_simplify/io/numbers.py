"""
Locale-free, shortest round-trip number formatting shared by the writers.
"""

from typing import Union

# Integral values at or above this magnitude are printed in float notation
INTEGRAL_LIMIT = 1e16


def json_number(value: float) -> Union[int, float]:
    """Integral coordinates as ints so they print without a trailing '.0'."""
    if value.is_integer() and abs(value) < INTEGRAL_LIMIT:
        return int(value)
    return value


def format_number(value: float) -> str:
    """
    Example:

        >>> format_number(10.0), format_number(0.1), format_number(-2.5e-07)
        ('10', '0.1', '-2.5e-07')
    """
    return repr(json_number(float(value)))
