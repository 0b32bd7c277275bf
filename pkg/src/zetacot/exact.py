"""Exact even zeta values from derivatives of cot(pi z).

Every derivative of ``cot(pi z)`` is ``pi**n * Q_n(cot(pi z))`` for an integer
polynomial ``Q_n``.  Starting from ``Q_0(c) = c`` the chain obeys

    Q_{n+1}(c) = -Q_n'(c) * (1 + c**2)

because ``d/dz cot(pi z) = -pi * (1 + cot(pi z)**2)``.  At ``z = 1/4`` the
cotangent is 1, so evaluating the derivative reduces to a coefficient sum and

    zeta(2s) = -Q_{2s-1}(1) * pi**(2s) / (2**(2s) * (2**(2s) - 1) * (2s-1)!)

Nothing here ever touches a floating point number; pi is carried as an
exponent on :class:`PiPower`.
"""
from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

__all__ = [
    "CotPoly",
    "PiPower",
    "CotChain",
    "diff_cot_poly",
    "eval_at_one",
    "factorial",
    "zeta_even_exact",
    "check_cot_poly",
]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(n)


@dataclass(frozen=True)
class CotPoly:
    """Integer polynomial in ``c = cot(pi z)``; ``coeffs[i]`` multiplies ``c**i``."""

    order: int
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be non-negative")
        coeffs = tuple(int(c) for c in self.coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def identity(cls) -> CotPoly:
        """``Q_0(c) = c``."""
        return cls(0, (0, 1))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, c: int | Fraction) -> int | Fraction:
        acc: int | Fraction = 0
        for coeff in reversed(self.coeffs):
            acc = acc * c + coeff
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power, coeff in enumerate(self.coeffs):
            if coeff == 0:
                continue
            if power == 0:
                terms.append(str(coeff))
            elif power == 1:
                terms.append(f"{coeff}*c")
            else:
                terms.append(f"{coeff}*c^{power}")
        return " + ".join(terms).replace("+ -", "- ")


def check_cot_poly(p: CotPoly) -> None:
    """Raise ``ValueError`` if ``p`` is not a genuine ``Q_n`` shape.

    Checks degree ``n + 1``, leading coefficient ``(-1)**n * n!`` and that only
    powers with the parity of ``n + 1`` appear.
    """
    n = p.order
    if p.degree != n + 1:
        raise ValueError(f"Q_{n} has degree {p.degree}, expected {n + 1}")
    lead = (-1) ** n * math.factorial(n)
    if p.coeffs[-1] != lead:
        raise ValueError(f"Q_{n} leading coefficient {p.coeffs[-1]}, expected {lead}")
    parity = (n + 1) % 2
    for power, coeff in enumerate(p.coeffs):
        if coeff and power % 2 != parity:
            raise ValueError(f"Q_{n} has a nonzero c^{power} term")


def diff_cot_poly(p: CotPoly) -> CotPoly:
    """Next derivative in the chain: ``-p'(c) * (1 + c**2)``, order + 1."""
    # p'(c) coefficients
    deriv = [k * p.coeffs[k] for k in range(1, len(p.coeffs))]
    out: List[int] = [0] * (len(deriv) + 2)
    for k, d in enumerate(deriv):
        if d:
            out[k] -= d
            out[k + 2] -= d
    return CotPoly(p.order + 1, tuple(out))


def eval_at_one(p: CotPoly) -> int:
    """``Q_n(1)``, the value at ``z = 1/4`` where ``cot(pi/4) = 1``."""
    return sum(p.coeffs)


_PI_POWER_RE = re.compile(
    r"^\s*\(?\s*(-?\d+)\s*(?:/\s*(\d+))?\s*\)?\s*(?:\*\s*pi\s*\^\s*(\d+))?\s*$"
)


@dataclass(frozen=True)
class PiPower:
    """The exact number ``coefficient * pi**pi_exponent``."""

    coefficient: Fraction
    pi_exponent: int

    def __post_init__(self) -> None:
        if self.pi_exponent < 0:
            raise ValueError("pi_exponent must be non-negative")
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))

    def format(self, compact: bool = False) -> str:
        q = self.coefficient
        sep = "*" if compact else " * "
        return f"({q.numerator}/{q.denominator}){sep}pi^{self.pi_exponent}"

    def __str__(self) -> str:
        return self.format()

    @classmethod
    def parse(cls, text: str) -> PiPower:
        """Inverse of :meth:`format` (either spacing style)."""
        m = _PI_POWER_RE.match(text)
        if m is None:
            raise ValueError(f"not a pi power: {text!r}")
        num, den, exp = m.groups()
        return cls(Fraction(int(num), int(den or 1)), int(exp or 0))


class CotChain:
    """Memoized sequence ``Q_0, Q_1, ...``.

    Extending the chain is guarded by a lock; readers only ever see fully
    built polynomials because the list is appended to after construction.
    """

    def __init__(self) -> None:
        self._polys: List[CotPoly] = [CotPoly.identity()]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._polys)

    def get(self, n: int) -> CotPoly:
        if n < 0:
            raise ValueError("derivative order must be non-negative")
        if n < len(self._polys):
            return self._polys[n]
        with self._lock:
            while len(self._polys) <= n:
                self._polys.append(diff_cot_poly(self._polys[-1]))
        return self._polys[n]


_DEFAULT_CHAIN = CotChain()


def zeta_even_exact(s: int, chain: CotChain | None = None) -> PiPower:
    """Exact ``zeta(2s)`` (note: the argument is ``s``, not ``2s``)."""
    if s < 1:
        raise ValueError(f"zeta_even_exact needs s >= 1, got {s}")
    chain = _DEFAULT_CHAIN if chain is None else chain
    n = 2 * s
    q_at_one = eval_at_one(chain.get(n - 1))
    denom = 2**n * (2**n - 1) * factorial(n - 1)
    return PiPower(Fraction(-q_at_one, denom), n)
