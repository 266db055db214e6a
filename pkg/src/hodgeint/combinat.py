"""Exact classical sequences and coefficient symbols.

Everything here returns ``fractions.Fraction`` or ``int``; no floating point
anywhere.  The bracket symbol ``[x]^k_i`` is the elementary-symmetric-function
coefficient

    sum_i [x]^k_i t^i = (t+x)(t+x+1)...(t+x+k),

which also packages ratios of Gamma functions at half-integers as rising
products, keeping all operator coefficients rational.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List, Sequence

__all__ = [
    "bernoulli",
    "bracket",
    "double_factorial",
    "harmonic",
    "multinomial",
    "stirling_s2",
]


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with the convention B_1 = -1/2.

    Computed from the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    s = Fraction(0)
    for k in range(n):
        s += comb(n + 1, k) * bernoulli(k)
    return -s / (n + 1)


@lru_cache(maxsize=None)
def _rising_poly(x: Fraction, k: int) -> tuple:
    # Coefficients (low to high) of prod_{j=0}^{k} (t + x + j); empty product for k = -1.
    coeffs = [Fraction(1)]
    for j in range(k + 1):
        root = x + j
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d] += c * root
            nxt[d + 1] += c
        coeffs = nxt
    return tuple(coeffs)


def bracket(x, k: int, i: int) -> Fraction:
    """The symbol [x]^k_i: coefficient of t^i in prod_{j=0}^{k}(t + x + j).

    Defined for k >= -1 (k = -1 gives the empty product, so only i = 0 is
    nonzero).  Out-of-range i returns 0; the Virasoro operator sums rely on
    that convention.
    """
    if k < -1:
        raise ValueError("k must be >= -1")
    if i < 0 or i > k + 1:
        return Fraction(0)
    return _rising_poly(Fraction(x), k)[i]


def stirling_s2(n: int) -> int:
    """|s(n, 2)| = (n-1)! * H_{n-1}, the unsigned Stirling number of the first kind."""
    if n < 2:
        raise ValueError("n must be >= 2")
    value = factorial(n - 1) * harmonic(n - 1)
    assert value.denominator == 1
    return value.numerator


def harmonic(n: int) -> Fraction:
    """H_n = sum_{k=1}^{n} 1/k."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / prod(parts_i!); rejects part lists that do not sum to n."""
    if any(p < 0 for p in parts):
        raise ValueError("parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def double_factorial(n: int) -> int:
    """n!! with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError("n must be >= -1")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out
