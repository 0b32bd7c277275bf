"""Reference values that do not depend on the cotangent or polygamma routes.

* Bernoulli numbers from the defining recurrence, exact rationals.
* Euler's closed form ``zeta(2s) = (-1)**(s+1) B_2s (2 pi)**2s / (2 (2s)!)``.
* ``zeta(s)`` summed directly in fixed point integer arithmetic with an
  Euler-Maclaurin tail and a certified bound.
"""
from __future__ import annotations

import math
import os
import threading
from fractions import Fraction
from typing import List

import mpmath

from .bigfloat import GUARD_BITS, BigFloat
from .exact import PiPower

__all__ = [
    "BernoulliTable",
    "bernoulli",
    "recurrence_residual",
    "zeta_even_bernoulli",
    "zeta_dirichlet",
    "FAULT_ENV",
]

# Test hook: when set to an index n, bernoulli(n) returns -B_n.
FAULT_ENV = "ZETACOT_FAULT_FLIP_BERNOULLI"


class BernoulliTable:
    """Memoized ``B_0, B_1, ...`` with ``B_1 = -1/2``.

    Growth happens under a lock and entries are only ever appended, so
    concurrent readers never observe a partially computed value.
    """

    def __init__(self) -> None:
        self.values: List[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("Bernoulli index must be non-negative")
        if n >= len(self.values):
            self.extend(n)
        return self.values[n]

    def extend(self, n: int) -> None:
        with self._lock:
            vals = self.values
            for m in range(len(vals), n + 1):
                if m >= 3 and m % 2 == 1:
                    vals.append(Fraction(0))
                    continue
                # sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m
                acc = sum((math.comb(m + 1, j) * vals[j] for j in range(m)), Fraction(0))
                vals.append(-acc / (m + 1))


_TABLE = BernoulliTable()


def _fault_index() -> int | None:
    raw = os.environ.get(FAULT_ENV)
    if not raw:
        return None
    return int(raw)


def bernoulli(n: int) -> Fraction:
    b = _TABLE[n]
    if _fault_index() == n:
        return -b
    return b


def recurrence_residual(m: int, values=None) -> Fraction:
    """``sum_{j<=m} C(m+1, j) B_j``; zero for every ``m >= 1``."""
    get = bernoulli if values is None else values.__getitem__
    return sum((math.comb(m + 1, j) * get(j) for j in range(m + 1)), Fraction(0))


def zeta_even_bernoulli(s: int) -> PiPower:
    """Exact ``zeta(2s)`` from Euler's Bernoulli-number formula."""
    if s < 1:
        raise ValueError(f"zeta_even_bernoulli needs s >= 1, got {s}")
    n = 2 * s
    sign = 1 if s % 2 == 1 else -1
    coeff = sign * bernoulli(n) * 2**n / (2 * math.factorial(n))
    return PiPower(coeff, n)


def _tail_term(s: int, j: int, N: int) -> Fraction:
    # B_2j/(2j)! * s(s+1)...(s+2j-2) * N**(-s-2j+1)
    rising = math.prod(range(s, s + 2 * j - 1))
    return bernoulli(2 * j) * rising / (math.factorial(2 * j) * Fraction(N) ** (s + 2 * j - 1))


def zeta_dirichlet(s: int, precision_bits: int) -> BigFloat:
    """``sum_{n>=1} n**-s`` with absolute error below ``2**-(precision_bits-8)``.

    The head ``n < N`` is summed as floored fixed point integers at scale
    ``2**W``; the tail is the Euler-Maclaurin expansion evaluated exactly.
    The truncation error is bounded by the last correction term kept, which
    is rigorous because every derivative of ``x**-s`` has constant sign.
    """
    if s < 2:
        raise ValueError(f"zeta_dirichlet needs s >= 2 (s=1 is the pole), got {s}")
    if precision_bits <= GUARD_BITS:
        raise ValueError("precision_bits must exceed the guard margin")
    target = Fraction(1, 2 ** (precision_bits - GUARD_BITS))
    W = precision_bits + 16 + precision_bits.bit_length()
    N = max(precision_bits, 16)
    max_terms = max(precision_bits // 4, 8)

    while True:
        tail = Fraction(N) ** (1 - s) / (s - 1) + Fraction(1, 2 * N**s)
        last = None
        for j in range(1, max_terms + 1):
            term = _tail_term(s, j, N)
            tail += term
            last = abs(term)
            if last < target / 64:
                break
        if last is not None and last < target / 64:
            break
        N *= 2

    scale = 1 << W
    head = sum(scale // n**s for n in range(1, N))
    tail_fixed = tail.numerator * scale // tail.denominator
    total = head + tail_fixed
    # each floor loses less than one unit of 2**-W
    rounding = Fraction(N + 1, scale)
    bound = last + rounding

    ctx = mpmath.MPContext()
    ctx.prec = W + 64
    value = mpmath.mp.make_mpf(ctx.ldexp(ctx.mpf(total), -W)._mpf_)
    err = _upper_mpf(bound)
    return BigFloat(value, precision_bits, err)


def _upper_mpf(q: Fraction) -> mpmath.mpf:
    """An mpf no smaller than the non-negative rational ``q``."""
    if q == 0:
        return mpmath.mp.make_mpf(mpmath.mpf(0)._mpf_)
    # 2**e with e = ceil(log2 q), computed from integer bit lengths
    e = q.numerator.bit_length() - q.denominator.bit_length() + 1
    while Fraction(2) ** e < q:
        e += 1
    ctx = mpmath.MPContext()
    ctx.prec = 64
    return mpmath.mp.make_mpf(ctx.ldexp(ctx.mpf(1), e)._mpf_)
