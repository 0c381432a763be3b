"""
Working-precision helpers shared by every app.

All high-precision arithmetic goes through mpmath's global context inside
``mp.workprec``; values are produced at the caller's precision and consumed
inside the consumer's own ``workprec`` block. The global context is not
thread-safe, so parallel work runs in separate processes (Celery workers).
"""
import math
from dataclasses import dataclass
from fractions import Fraction

from django.conf import settings
from mpmath import mp

LOG10_2 = math.log10(2)


def engine_setting(key):
    """Read one knob from ``settings.ENUMERATION_CONFIG``."""
    return settings.ENUMERATION_CONFIG[key]


def resolve_precision(precision_bits=None):
    """Explicit precision wins; otherwise the configured default."""
    bits = precision_bits if precision_bits is not None else engine_setting('PRECISION_BITS')
    return int(bits)


def decimal_digits(precision_bits):
    return max(int(precision_bits * LOG10_2), 15)


def to_mpf(value):
    """Convert ints, Fractions, floats, strings and mpf to mpf at the current precision."""
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / value.denominator
    return mp.mpf(value)


def to_fraction(value):
    """Exact rational for a user-facing real parameter ("2.5" -> 5/2)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


def format_real(value, precision_bits):
    """Deterministic decimal string carrying the full working precision."""
    if value is None:
        return None
    with mp.workprec(precision_bits):
        text = mp.nstr(to_mpf(value), decimal_digits(precision_bits))
    return text[:-2] if text.endswith('.0') else text


def log_int(value):
    """Natural log of a positive (possibly huge) integer as mpf."""
    if value <= 0:
        raise ValueError(f"log of nonpositive integer {value}")
    return mp.log(mp.mpf(value))


@dataclass(frozen=True)
class LogValue:
    """A positive magnitude stored as its natural logarithm."""

    log_e: object
    precision_bits: int = 128

    @classmethod
    def from_int(cls, value, precision_bits):
        with mp.workprec(precision_bits):
            return cls(log_int(value), precision_bits)

    @property
    def log10(self):
        with mp.workprec(self.precision_bits):
            return self.log_e / mp.ln10

    def relerr(self, other):
        """|A/B - 1| computed as |exp(log A - log B) - 1|."""
        bits = max(self.precision_bits, other.precision_bits)
        with mp.workprec(bits):
            return abs(mp.expm1(self.log_e - other.log_e))

    def abs_log_error(self, other):
        bits = max(self.precision_bits, other.precision_bits)
        with mp.workprec(bits):
            return abs(self.log_e - other.log_e)

    def __post_init__(self):
        if not mp.isfinite(self.log_e):
            raise ValueError(f"LogValue must be finite, got {self.log_e}")
