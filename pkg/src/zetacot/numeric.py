"""Numeric zeta(s) for integer s > 1 from polygamma values at 1/4 and 3/4.

The two polygamma values combine as

    zeta(s) = (-1)**s * (psi^(s-1)(1/4) + psi^(s-1)(3/4)) / (2**s (2**s - 1) (s-1)!)

and each polygamma value comes from the Hurwitz zeta function through
``psi^(m)(a) = (-1)**(m+1) * m! * zeta(m+1, a)``.

All arithmetic runs in a private ``mpmath.MPContext`` per call so the global
mpmath precision is never touched.  Every result carries an absolute error
bound; bounds are assembled from exact rationals and rounded up.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .bigfloat import GUARD_BITS, BigFloat, to_fraction
from .exact import CotChain, PiPower, _DEFAULT_CHAIN, eval_at_one
from .oracle import bernoulli

__all__ = [
    "PolygammaOrder",
    "QUARTER",
    "THREE_QUARTERS",
    "hurwitz_zeta",
    "polygamma",
    "zeta_via_polygamma",
    "reflection_residual",
    "render_pi_power",
]

QUARTER = Fraction(1, 4)
THREE_QUARTERS = Fraction(3, 4)

# Bits above the requested precision used for intermediate rounding.
_EXTRA_BITS = 32


def _context(prec: int) -> mpmath.MPContext:
    ctx = mpmath.MPContext()
    ctx.prec = prec
    return ctx


def _export(x) -> mpmath.mpf:
    # rebinding to the global context keeps every mantissa bit
    return mpmath.mp.make_mpf(x._mpf_)


def _ulp_bound(magnitude_bits: int, prec: int, count: int) -> Fraction:
    """``count`` roundings of numbers below ``2**magnitude_bits`` at ``prec`` bits."""
    return Fraction(count) * Fraction(2) ** (magnitude_bits - prec + 1)


def _round_up(ctx: mpmath.MPContext, q: Fraction) -> mpmath.mpf:
    if q == 0:
        return _export(ctx.mpf(0))
    x = ctx.mpf(q.numerator) / q.denominator
    # one ulp of slack covers the two roundings above
    x = x + abs(x) * ctx.ldexp(1, 4 - ctx.prec)
    return _export(x)


@dataclass(frozen=True)
class PolygammaOrder:
    """``psi^(order)`` evaluated at ``point``, which must be 1/4 or 3/4."""

    order: int
    point: Fraction

    def __post_init__(self) -> None:
        point = Fraction(self.point)
        if point not in (QUARTER, THREE_QUARTERS):
            raise ValueError(f"polygamma point must be 1/4 or 3/4, got {point}")
        if self.order < 0:
            raise ValueError("polygamma order must be non-negative")
        object.__setattr__(self, "point", point)


def _check_precision(precision_bits: int) -> None:
    if precision_bits <= GUARD_BITS:
        raise ValueError(f"precision_bits must exceed {GUARD_BITS}, got {precision_bits}")


def _check_s(s: int, name: str) -> None:
    if s == 1:
        raise ValueError(f"{name}: s = 1 is the pole of zeta")
    if s < 2:
        raise ValueError(f"{name} needs s >= 2, got {s}")


def _hurwitz_rational(s: int, a: Fraction, precision_bits: int):
    """Value (mpf, private context) and rigorous rational error bound."""
    target = Fraction(1, 2 ** (precision_bits - GUARD_BITS))
    # zeta(s, a) < a**-s + zeta(s) <= a**-s + 2
    mag_bits = math.ceil(s * math.log2(1 / a)) + 2 if a < 1 else 2
    prec = precision_bits + mag_bits + _EXTRA_BITS + precision_bits.bit_length()
    ctx = _context(prec)

    N = max(precision_bits, 16)
    max_terms = max(precision_bits // 4, 8)
    while True:
        x = N + a
        tail = x ** (1 - s) / (s - 1) + x ** (-s) / 2
        last = None
        rising = 1
        for j in range(1, max_terms + 1):
            # rising factorial s (s+1) ... (s+2j-2)
            rising *= (s + 2 * j - 3) * (s + 2 * j - 2) if j > 1 else s
            term = bernoulli(2 * j) * rising / (math.factorial(2 * j) * x ** (s + 2 * j - 1))
            tail += term
            last = abs(term)
            if last < target / 64:
                break
        if last is not None and last < target / 64:
            break
        N *= 2

    p, q = a.numerator, a.denominator
    qs = ctx.mpf(q**s)
    head = ctx.mpf(0)
    for k in range(N):
        head += qs / (k * q + p) ** s
    value = head + ctx.mpf(tail.numerator) / tail.denominator
    # per head term: int conversion, division, addition; plus tail and final add
    rounding = _ulp_bound(mag_bits, prec, 3 * N + 4)
    return value, last + rounding


def hurwitz_zeta(s: int, a, precision_bits: int) -> BigFloat:
    """``sum_{k>=0} (k + a)**-s`` for rational ``0 < a <= 1``."""
    _check_s(s, "hurwitz_zeta")
    _check_precision(precision_bits)
    a = Fraction(a)
    if not 0 < a <= 1:
        raise ValueError(f"hurwitz_zeta needs 0 < a <= 1, got {a}")
    value, bound = _hurwitz_rational(s, a, precision_bits)
    return BigFloat(_export(value), precision_bits, _round_up(value.context, bound))


def _polygamma_rational(m: int, point: Fraction, precision_bits: int):
    fact = math.factorial(m)
    # ask for m! times more accuracy so the scaled result meets the target
    boost = fact.bit_length()
    h, hb = _hurwitz_rational(m + 1, point, precision_bits + boost)
    ctx = h.context
    sign = 1 if m % 2 == 1 else -1
    value = sign * fact * h
    mag_bits = math.ceil((m + 1) * math.log2(1 / point)) + 2 + boost
    bound = fact * hb + _ulp_bound(mag_bits, ctx.prec, 2)
    return value, bound


def polygamma(q: PolygammaOrder, precision_bits: int) -> BigFloat:
    """``psi^(m)`` at 1/4 or 3/4; order 0 (digamma) is not supported."""
    if q.order < 1:
        raise ValueError("polygamma order must be >= 1 (digamma is out of scope)")
    _check_precision(precision_bits)
    value, bound = _polygamma_rational(q.order, q.point, precision_bits)
    return BigFloat(_export(value), precision_bits, _round_up(value.context, bound))


def _zeta_parts(s: int, precision_bits: int):
    m = s - 1
    lo, lo_b = _polygamma_rational(m, QUARTER, precision_bits)
    hi, hi_b = _polygamma_rational(m, THREE_QUARTERS, precision_bits)
    return (lo, lo_b), (hi, hi_b)


def zeta_via_polygamma(s: int, precision_bits: int, parts: bool = False):
    """``zeta(s)`` for integer ``s >= 2`` from the quarter-point polygammas.

    With ``parts=True`` also returns the two polygamma values as
    ``(zeta, psi(1/4), psi(3/4))``.
    """
    _check_s(s, "zeta_via_polygamma")
    _check_precision(precision_bits)
    (lo, lo_b), (hi, hi_b) = _zeta_parts(s, precision_bits)
    ctx = lo.context
    denom = 2**s * (2**s - 1) * math.factorial(s - 1)
    sign = 1 if s % 2 == 0 else -1
    value = sign * (lo + hi) / denom
    # zeta(s) < 2; two roundings (sum, quotient) scaled down by denom
    bound = (lo_b + hi_b) / denom + _ulp_bound(1, min(lo.context.prec, hi.context.prec), 4)
    result = BigFloat(_export(value), precision_bits, _round_up(ctx, bound))
    if not parts:
        return result
    return (
        result,
        BigFloat(_export(lo), precision_bits, _round_up(ctx, lo_b)),
        BigFloat(_export(hi), precision_bits, _round_up(ctx, hi_b)),
    )


def _pi_power_rational(v: PiPower, precision_bits: int):
    q, k = v.coefficient, v.pi_exponent
    if q == 0:
        return _context(precision_bits).mpf(0), Fraction(0)
    mag_bits = q.numerator.bit_length() - q.denominator.bit_length() + 2 * k + 2
    prec = precision_bits + max(mag_bits, 0) + _EXTRA_BITS + k.bit_length()
    ctx = _context(prec)
    if k == 0:
        value = ctx.mpf(q.numerator) / q.denominator
        exact = to_fraction(value) == q
        return value, Fraction(0) if exact else _ulp_bound(mag_bits, prec, 2)
    # pi is correctly rounded; pi**k by binary powering costs < 2k roundings
    value = ctx.mpf(q.numerator) * ctx.pi**k / q.denominator
    return value, _ulp_bound(mag_bits, prec, 2 * k + 6)


def render_pi_power(v: PiPower, precision_bits: int) -> BigFloat:
    """Numeric value of ``coefficient * pi**pi_exponent``."""
    _check_precision(precision_bits)
    value, bound = _pi_power_rational(v, precision_bits)
    return BigFloat(_export(value), precision_bits, _round_up(value.context, bound))


def reflection_residual(s: int, precision_bits: int, chain: CotChain | None = None) -> BigFloat:
    """``|LHS - RHS|`` for the quarter-point reflection identity, even ``s``.

    LHS is ``-(psi^(s-1)(1/4) + psi^(s-1)(3/4))``; RHS is
    ``pi**s * Q_{s-1}(1)`` from the exact cotangent chain.  The returned
    ``error_bound`` is the propagated bound of the difference, so a correct
    identity gives ``value <= error_bound``.
    """
    if s < 2 or s % 2:
        raise ValueError(f"reflection_residual needs an even s >= 2, got {s}")
    _check_precision(precision_bits)
    chain = _DEFAULT_CHAIN if chain is None else chain
    (lo, lo_b), (hi, hi_b) = _zeta_parts(s, precision_bits)
    rhs, rhs_b = _pi_power_rational(PiPower(Fraction(eval_at_one(chain.get(s - 1))), s), precision_bits)
    ctx = _context(max(lo.context.prec, rhs.context.prec) + 8)
    lhs = -(ctx.mpf(lo) + ctx.mpf(hi))
    diff = abs(lhs - ctx.mpf(rhs))
    mag_bits = math.ceil(s * 2) + math.factorial(s - 1).bit_length() + 4
    bound = lo_b + hi_b + rhs_b + _ulp_bound(mag_bits, ctx.prec, 3)
    return BigFloat(_export(diff), precision_bits, _round_up(ctx, bound))
