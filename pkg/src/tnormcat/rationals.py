"""Exact truth values: rationals in [0,1].

All hom values and t-norm arguments in this package are `fractions.Fraction`
instances.  Fraction already guarantees the representation invariants
(reduced, positive denominator); this module adds the [0,1] range checks and
the "num/den" text form used by every JSON schema and CLI flag.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError

ZERO = Fraction(0)
ONE = Fraction(1)


def is_unit(value: Fraction) -> bool:
    return ZERO <= value <= ONE


def check_unit(value: Fraction, where: str = "value") -> Fraction:
    """Return value unchanged, or raise InputError if it lies outside [0,1]."""
    if not is_unit(value):
        raise InputError(f"{where} must lie in [0,1], got {value}")
    return value


def parse_rational(text, where: str = "rational") -> Fraction:
    """Parse a truth value from its text form.

    Accepts "num/den" and plain "num" strings (also bare ints, a leniency for
    hand-written JSON).  Rejects anything outside [0,1].
    """
    if isinstance(text, bool):
        raise InputError(f"{where}: expected a rational string, got {text!r}")
    if isinstance(text, int):
        return check_unit(Fraction(text), where)
    if not isinstance(text, str):
        raise InputError(f"{where}: expected a rational string, got {text!r}")
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: cannot parse rational {text!r}: {exc}") from exc
    return check_unit(value, where)


def format_rational(value: Fraction) -> str:
    """Render as "num/den", or plain "num" for integers (so 1 stays "1")."""
    return str(value)
