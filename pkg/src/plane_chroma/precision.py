"""Working precision for all geometric scalars.

Scalars are mpmath floats with at least 128 bits of mantissa by default.
Set PLANE_CHROMA_PRECISION to another bit count to override (minimum 100).
"""
import os

import mpmath

DEFAULT_BITS = 128
MIN_BITS = 100


def _bits_from_env():
    raw = os.environ.get("PLANE_CHROMA_PRECISION")
    if not raw:
        return DEFAULT_BITS
    try:
        bits = int(raw)
    except ValueError:
        return DEFAULT_BITS
    return max(bits, MIN_BITS)


mp = mpmath.MPContext()
mp.prec = _bits_from_env()

mpf = mp.mpf


def to_scalar(v):
    """Coerce ints, floats, Fractions, strings and mpf values to a scalar."""
    if isinstance(v, str):
        return mp.mpf(v)
    if hasattr(v, "numerator") and hasattr(v, "denominator") and not isinstance(v, (int, float)):
        return mp.mpf(v.numerator) / v.denominator
    return mp.mpf(v)


def scalar_str(v):
    """Full precision decimal string (round-trips through to_scalar)."""
    digits = int(mp.prec * 0.30103) + 3
    return mp.nstr(mp.mpf(v), digits, strip_zeros=True)


def eps2_default():
    return mp.mpf(2) ** -60
