"""Pure psi intersection numbers on moduli of stable pointed curves.

Values are pinned down by the annihilation of the point partition function by
the half-integer-coefficient Virasoro operators: insertions of level 0 and 1
are removed by the string and dilaton identities (the k = -1 and k = 0
constraint coefficients), and a top insertion of level k+1 >= 2 is removed by
coefficient extraction from the level-k constraint, recursing on (g, n).

The extraction reads, with A(k, m) = [m + 1/2]^k_0:

    A(k,1) <tau_{k+1} K>_g =
        sum_{m in K} A(k,m) <tau_{m+k} K\\m>_g
        + 1/2 sum_{m=0}^{k-1} (-1)^{m+1} [-m-1/2]^k_0 (
              <tau_m tau_{k-m-1} K>_{g-1}
            + sum_{g1+g2=g, I+J=K} <tau_m I>_{g1} <tau_{k-m-1} J>_{g2} ).
"""

from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Iterable, List, Sequence, Tuple

from .combinat import bracket
from .errors import DomainError
from .phase_space import Caps, TruncatedSeries
from .store import TAG_PSI, lookup, record

__all__ = ["psi_integral", "psi_or_zero", "point_partition", "canonical_key"]

Half = Fraction(1, 2)


def canonical_key(g: int, ks: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    return g, tuple(sorted(ks, reverse=True))


def _check_stable(g: int, n: int) -> None:
    if g < 0:
        raise DomainError("genus must be >= 0")
    if g == 0 and n < 3:
        raise DomainError(f"(g, n) = (0, {n}) is unstable")
    if g == 1 and n == 0:
        raise DomainError("(g, n) = (1, 0) is unstable")


def _is_stable(g: int, n: int) -> bool:
    return g >= 0 and not (g == 0 and n < 3) and not (g == 1 and n == 0)


def psi_integral(g: int, ks: Sequence[int]) -> Fraction:
    """<tau_{k1} ... tau_{kn}>_g, exact.

    Returns 0 on dimension mismatch (sum k != 3g - 3 + n); raises DomainError
    for unstable (g, n).
    """
    ks = list(ks)
    _check_stable(g, len(ks))
    if any(k < 0 for k in ks):
        raise DomainError("exponents must be >= 0")
    return _psi(g, tuple(sorted(ks, reverse=True)))


def psi_or_zero(g: int, ks: Iterable[int]) -> Fraction:
    """Like psi_integral but unstable inputs count as 0 (used inside sums)."""
    ks = tuple(sorted(ks, reverse=True))
    if not _is_stable(g, len(ks)) or any(k < 0 for k in ks):
        return Fraction(0)
    return _psi(g, ks)


def _psi(g: int, ks: Tuple[int, ...]) -> Fraction:
    n = len(ks)
    if sum(ks) != 3 * g - 3 + n:
        return Fraction(0)
    key = (g, ks)
    cached = lookup(TAG_PSI, key)
    if cached is not None:
        return cached
    if g == 0 and ks == (0, 0, 0):
        return record(TAG_PSI, key, Fraction(1))
    if g == 1 and ks == (1,):
        return record(TAG_PSI, key, _one_point_genus_one())
    if ks[-1] == 0:
        rest = ks[:-1]
        val = sum(
            (_psi(g, _lowered(rest, i)) for i in range(len(rest)) if rest[i] >= 1),
            Fraction(0),
        )
    elif ks[-1] == 1:
        rest = ks[:-1]
        val = (2 * g - 2 + n - 1) * _psi(g, tuple(sorted(rest, reverse=True)))
    else:
        val = _top_reduction(g, ks)
    return record(TAG_PSI, key, val)


def _lowered(ks: Tuple[int, ...], i: int) -> Tuple[int, ...]:
    out = list(ks)
    out[i] -= 1
    return tuple(sorted(out, reverse=True))


def _one_point_genus_one() -> Fraction:
    # The level-1 constraint, coefficient of t_0 at order hbar^0: with
    # x = <tau_1>_1 (and <tau_0 tau_2>_1 = x by the string identity),
    #   [1/2]^1_0 x - [3/2]^1_0 x - (1/2) [-1/2]^1_0 <tau_0^3>_0 = 0.
    a0 = bracket(Half, 1, 0)
    a1 = bracket(Half + 1, 1, 0)
    c = -Fraction(1, 2) * bracket(-Half, 1, 0)  # times <tau_0^3>_0 = 1
    return c / (a1 - a0)


def _top_reduction(g: int, ks: Tuple[int, ...]) -> Fraction:
    k = ks[0] - 1  # >= 1 here
    rest = ks[1:]
    total = Fraction(0)
    for i, m in enumerate(rest):
        total += bracket(m + Half, k, 0) * _psi(g, _raised_drop(rest, i, k))
    for m in range(k):
        w = Fraction(1, 2) * Fraction(-1) ** (m + 1) * bracket(-m - Half, k, 0)
        if w == 0:
            continue
        if g >= 1:
            total += w * psi_or_zero(g - 1, rest + (m, k - m - 1))
        for bits in range(1 << len(rest)):
            left = tuple(rest[j] for j in range(len(rest)) if bits >> j & 1)
            right = tuple(rest[j] for j in range(len(rest)) if not bits >> j & 1)
            for g1 in range(g + 1):
                total += w * psi_or_zero(g1, (m,) + left) * psi_or_zero(
                    g - g1, (k - m - 1,) + right
                )
    return total / bracket(1 + Half, k, 0)


def _raised_drop(rest: Tuple[int, ...], i: int, k: int) -> Tuple[int, ...]:
    out = list(rest)
    out[i] += k
    return tuple(sorted(out, reverse=True))


def point_partition(weight_cap: int, genus_cap: int) -> TruncatedSeries:
    """The point generating function exp(sum_g hbar^{g-1} F_g), truncated.

    Monomials are kept up to the given descendent weight and with hbar powers
    in [-(weight_cap // 3), genus_cap - 1].  Within these caps the result is
    exact: a free-energy term of genus g carries weight at least 3g - 1, so
    genera beyond (weight_cap + 1) // 3 cannot touch any stored monomial.
    """
    caps = Caps(weight_cap, -(weight_cap // 3), genus_cap - 1)
    g_eff = min(genus_cap, (weight_cap + 1) // 3)
    free = TruncatedSeries(caps)
    terms = {}
    for g in range(g_eff + 1):
        n = 3 if g == 0 else 1
        while 3 * g - 3 + 2 * n <= weight_cap:
            d = 3 * g - 3 + n
            for part in _multisets(n, d):
                val = _psi(g, part)
                if val:
                    sym = prod(
                        _factorial(part.count(x)) for x in set(part)
                    )
                    mono = tuple(
                        ((0, x), part.count(x)) for x in sorted(set(part))
                    )
                    terms[(g - 1, mono)] = val / sym
            n += 1
    free = TruncatedSeries(caps, terms)
    return free.exp()


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _multisets(n: int, total: int) -> List[Tuple[int, ...]]:
    """Non-increasing n-tuples of nonnegative ints summing to total."""
    out: List[Tuple[int, ...]] = []

    def rec(remaining: int, slots: int, cap: int, acc: List[int]) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(tuple(acc))
            return
        for v in range(min(cap, remaining), -1, -1):
            if remaining - v > v * (slots - 1):
                break
            acc.append(v)
            rec(remaining - v, slots - 1, v, acc)
            acc.pop()

    rec(total, n, total, [])
    return out
