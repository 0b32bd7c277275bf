"""Arbitrary precision value with a certified absolute error bound."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mpf

__all__ = ["BigFloat", "GUARD_BITS", "target_error", "to_fraction", "format_bound"]

# Post-conditions promise absolute error below 2**-(precision_bits - GUARD_BITS).
GUARD_BITS = 8


def target_error(precision_bits: int) -> mpf:
    return mpmath.ldexp(mpf(1), -(precision_bits - GUARD_BITS))


def to_fraction(x) -> Fraction:
    """Exact rational value of a finite mpf (Fractions and ints pass through)."""
    if isinstance(x, (Fraction, int)):
        return Fraction(x)
    if not hasattr(x, "_mpf_"):
        ctx = mpmath.MPContext()
        ctx.prec = 1024
        x = ctx.mpf(x)
    sign, man, exp, _ = x._mpf_
    if not man and exp:
        raise ValueError("cannot convert a non-finite mpf")
    q = Fraction(int(man)) * Fraction(2) ** exp
    return -q if sign else q


def format_bound(x, digits: int = 3) -> str:
    """Scientific notation rounded *up*, so the printed bound stays a bound."""
    q = to_fraction(x)
    if q == 0:
        return "0"
    e = len(str(q.numerator)) - len(str(q.denominator))
    while Fraction(10) ** e > q:
        e -= 1
    while Fraction(10) ** (e + 1) <= q:
        e += 1
    scale = Fraction(10) ** (e - digits + 1)
    mant = -(-q // scale)  # ceiling
    if mant == 10**digits:
        mant //= 10
        e += 1
    text = str(mant)
    return f"{text[0]}.{text[1:]}e{e:+d}" if digits > 1 else f"{text}e{e:+d}"


@dataclass(frozen=True)
class BigFloat:
    """``value`` is within ``error_bound`` (absolute) of the true number."""

    value: mpf
    precision_bits: int
    error_bound: mpf

    def __post_init__(self) -> None:
        if self.precision_bits <= 0:
            raise ValueError("precision_bits must be positive")
        bound = self.error_bound
        if not hasattr(bound, "_mpf_"):
            bound = mpmath.mp.make_mpf(mpmath.libmp.from_str(str(bound), 128, "u"))
        elif bound.context is not mpmath.mp:
            bound = mpmath.mp.make_mpf(bound._mpf_)
        if not mpmath.isfinite(bound) or bound < 0:
            raise ValueError(f"error bound must be finite and >= 0, got {bound}")
        object.__setattr__(self, "error_bound", bound)

    def digits(self) -> int:
        """Decimal digits justified by ``precision_bits``."""
        return max(1, int(self.precision_bits * 0.30103))

    def to_string(self, digits: int | None = None) -> str:
        n = self.digits() if digits is None else digits
        return mpmath.nstr(self.value, n, strip_zeros=False, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)

    def contains(self, x) -> bool:
        """True if ``x`` lies in ``[value - error_bound, value + error_bound]``."""
        x = x if isinstance(x, Fraction) else to_fraction(x)
        return abs(x - to_fraction(self.value)) <= to_fraction(self.error_bound)

    def distance(self, other: BigFloat) -> Fraction:
        return abs(to_fraction(self.value) - to_fraction(other.value))

    def agrees_with(self, other: BigFloat) -> bool:
        """Whether the two enclosures overlap, decided in exact arithmetic."""
        return self.distance(other) <= to_fraction(self.error_bound) + to_fraction(other.error_bound)

    def __str__(self) -> str:
        return self.to_string()
