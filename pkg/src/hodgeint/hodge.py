"""Integrals of lambda classes against psi classes.

Four families are covered, named by the lambda-class factor paired with the
psi monomial:

* ``lambda_g``            -- closed multinomial form, genus constant b_g;
* ``lambda_g_gm1``        -- lambda_g lambda_{g-1}, closed double-factorial form;
* ``lambda_gm1``          -- lambda_{g-1} alone, no closed form is known; values
                             come from the n = 1 constants c_g and the curve
                             constraint relations (best effort, fails loudly);
* ``lambda_cube``         -- the n = 0 integrals of lambda_{g-1}^3.

Each closed form ships with an independent recursion solver
(``lambda_g_solver`` / ``lambda_g_gm1_solver``) that only ever uses the
constraint recursion together with the string/dilaton identities and the
one-point base value, never the closed formula.  Agreement of the two routes
is one of the package's acceptance gates.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterable, List, Sequence, Tuple

from .combinat import bernoulli, bracket, double_factorial, harmonic, multinomial
from .errors import DomainError, UnderdeterminedError
from .psi import psi_or_zero
from .series1d import b_closed_form
from .store import (
    TAG_LAMBDA_G,
    TAG_LAMBDA_G_GM1,
    TAG_LAMBDA_GM1,
    lookup,
    record,
)

__all__ = [
    "b_constant",
    "c_constant",
    "gg_const",
    "lambda_g",
    "lambda_g_solver",
    "lambda_g_gm1",
    "lambda_g_gm1_solver",
    "lambda_gm1",
    "lambda_cube",
    "lambda_g_or_zero",
    "lambda_g_gm1_or_zero",
    "lambda_g_gm2_or_none",
    "kappa_lambda_integral",
    "hodge_table",
]

Key = Tuple[int, ...]


def _canon(ks: Sequence[int]) -> Key:
    return tuple(sorted(ks, reverse=True))


def _check(g: int, ks: Sequence[int], gmin: int = 0) -> Key:
    if g < gmin:
        raise DomainError(f"genus must be >= {gmin}")
    if len(ks) < 1:
        raise DomainError("need at least one insertion")
    if g == 0 and len(ks) < 3:
        raise DomainError(f"(g, n) = (0, {len(ks)}) is unstable")
    if any(k < 0 for k in ks):
        raise DomainError("exponents must be >= 0")
    return _canon(ks)


# ---------------------------------------------------------------------------
# genus constants


def b_constant(g: int) -> Fraction:
    """One-point constant of the lambda_g family (Bernoulli closed form)."""
    return b_closed_form(g)


def c_constant(g: int) -> Fraction:
    """One-point constant of the lambda_{g-1} family:

    c_g = H_{2g-1} b_g - (1/2) sum_{g1+g2=g, gi>=1}
            (2g1-1)! (2g2-1)! / (2g-1)! * b_{g1} b_{g2}.

    The quadratic sum runs over ordered pairs with g1, g2 >= 1: the factorial
    weight is undefined at gi = 0 and genus-0 one-point terms vanish.
    """
    if g < 1:
        raise DomainError("g must be >= 1")
    total = harmonic(2 * g - 1) * b_constant(g)
    for g1 in range(1, g):
        g2 = g - g1
        w = Fraction(factorial(2 * g1 - 1) * factorial(2 * g2 - 1), factorial(2 * g - 1))
        total -= Fraction(1, 2) * w * b_constant(g1) * b_constant(g2)
    return total


def gg_const(g: int) -> Fraction:
    """One-point constant of the lambda_g lambda_{g-1} family:
    |B_{2g}| / (2^{2g-1} (2g-1)!! 2g)."""
    if g < 1:
        raise DomainError("g must be >= 1")
    return abs(bernoulli(2 * g)) / (
        2 ** (2 * g - 1) * double_factorial(2 * g - 1) * 2 * g
    )


def lambda_cube(g: int) -> Fraction:
    """Integral of lambda_{g-1}^3 over the unpointed moduli space, g >= 2."""
    if g < 2:
        raise DomainError("g must be >= 2")
    return (
        Fraction(1, factorial(2 * g - 2))
        * (abs(bernoulli(2 * g - 2)) / (2 * g - 2))
        * (abs(bernoulli(2 * g)) / (2 * g))
    )


# ---------------------------------------------------------------------------
# lambda_g family


def lambda_g(g: int, ks: Sequence[int]) -> Fraction:
    """<tau_{k1}...tau_{kn} | lambda_g>_g by the closed multinomial form."""
    key = _check(g, ks)
    n = len(key)
    if sum(key) != 2 * g - 3 + n:
        return Fraction(0)
    cached = lookup(TAG_LAMBDA_G, (g, key))
    if cached is not None:
        return cached
    val = Fraction(multinomial(2 * g + n - 3, key)) * b_constant(g)
    return record(TAG_LAMBDA_G, (g, key), val)


def lambda_g_or_zero(g: int, ks: Iterable[int]) -> Fraction:
    ks = tuple(ks)
    n = len(ks)
    if g < 0 or n < 1 or (g == 0 and n < 3) or any(k < 0 for k in ks):
        return Fraction(0)
    return lambda_g(g, ks)


_lambda_g_rec: Dict[Tuple[int, Key], Fraction] = {}


def lambda_g_solver(g: int, ks: Sequence[int]) -> Fraction:
    """Same values as :func:`lambda_g`, but via the constraint recursion only.

    Induction on n from the one-point base (g > 0) or the three-point genus-0
    base, using the string identity for zero exponents and the top-insertion
    reduction

        <tau_{k+1} tau_{k0} K> = C(k0+k+1, k0) <tau_{k0+k} K>
                                + sum_i C(k_i+k, k_i-1) <tau_{k0} .. k_i+k .. K>

    for a largest exponent k+1 >= 2.  Never consults the closed form.
    """
    key = _check(g, ks)
    return _lg_rec(g, key)


def _lg_rec(g: int, key: Key) -> Fraction:
    n = len(key)
    if sum(key) != 2 * g - 3 + n:
        return Fraction(0)
    cached = _lambda_g_rec.get((g, key))
    if cached is not None:
        return cached
    if g == 0 and key == (0, 0, 0):
        val = Fraction(1)
    elif g > 0 and n == 1:
        val = b_constant(g)  # base value of the induction, not the closed form
    elif key[-1] == 0:
        rest = key[:-1]
        val = sum(
            (_lg_rec(g, _lower(rest, i)) for i in range(len(rest)) if rest[i] >= 1),
            Fraction(0),
        )
    else:
        k = key[0] - 1  # >= 1: an all-ones multiset cannot meet the grading
        k0 = key[1]
        rest = key[2:]
        val = Fraction(comb(k0 + k + 1, k0)) * _lg_rec(g, _canon((k0 + k,) + rest))
        for i, ki in enumerate(rest):
            if ki >= 1:
                others = rest[:i] + rest[i + 1 :]
                val += Fraction(comb(ki + k, ki - 1)) * _lg_rec(
                    g, _canon((k0, ki + k) + others)
                )
    _lambda_g_rec[(g, key)] = val
    return val


def _lower(ks: Key, i: int) -> Key:
    out = list(ks)
    out[i] -= 1
    return _canon(out)


# ---------------------------------------------------------------------------
# lambda_g lambda_{g-1} family


def lambda_g_gm1(g: int, ks: Sequence[int]) -> Fraction:
    """<tau_{k1}...tau_{kn} | lambda_g lambda_{g-1}>_g, closed form.

    For all exponents positive:

        (2g+n-3)! (2g-1)!! / ((2g-1)! prod (2k_i-1)!!) * gg_const(g);

    zero exponents are removed by the string identity first.
    """
    key = _check(g, ks, gmin=1)
    n = len(key)
    if sum(key) != g - 2 + n:
        return Fraction(0)
    cached = lookup(TAG_LAMBDA_G_GM1, (g, key))
    if cached is not None:
        return cached
    if key and key[-1] == 0 and n > 1:
        rest = key[:-1]
        val = sum(
            (
                lambda_g_gm1_or_zero(g, _lower(rest, i))
                for i in range(len(rest))
                if rest[i] >= 1
            ),
            Fraction(0),
        )
    elif key == (0,):
        # only possible for g = 1 (grading); string down to nothing is not
        # available at n = 1, but the closed form with the (-1)!! convention
        # already covers k = 0
        val = _gg_closed(g, key)
    else:
        val = _gg_closed(g, key)
    return record(TAG_LAMBDA_G_GM1, (g, key), val)


def _gg_closed(g: int, key: Key) -> Fraction:
    n = len(key)
    denom = factorial(2 * g - 1)
    for k in key:
        denom *= double_factorial(2 * k - 1)
    return (
        Fraction(factorial(2 * g + n - 3) * double_factorial(2 * g - 1), denom)
        * gg_const(g)
    )


def lambda_g_gm1_or_zero(g: int, ks: Iterable[int]) -> Fraction:
    ks = tuple(ks)
    if g < 1 or len(ks) < 1 or any(k < 0 for k in ks):
        return Fraction(0)
    return lambda_g_gm1(g, ks)


_lambda_gg_rec: Dict[Tuple[int, Key], Fraction] = {}


def lambda_g_gm1_solver(g: int, ks: Sequence[int]) -> Fraction:
    """Oracle for :func:`lambda_g_gm1` via the double-factorial recursion.

    Base <tau_{g-1} | lambda_g lambda_{g-1}> = gg_const(g); zero exponents go
    through the string identity, an all-ones multiset through the dilaton
    identity, and a largest exponent k+1 >= 2 through

        <tau_{k+1} tau_{k0} K> =
            (2k+2k0+1)!! / ((2k+1)!! (2k0-1)!!) <tau_{k0+k} K>
          + sum_i (2k+2k_i-1)!! / ((2k+1)!! (2k_i-3)!!) <tau_{k0} .. k_i+k .. K>.
    """
    key = _check(g, ks, gmin=1)
    return _gg_rec(g, key)


def _gg_rec(g: int, key: Key) -> Fraction:
    n = len(key)
    if sum(key) != g - 2 + n:
        return Fraction(0)
    cached = _lambda_gg_rec.get((g, key))
    if cached is not None:
        return cached
    if n == 1:
        val = gg_const(g)  # key == (g-1,) by the grading
    elif key[-1] == 0:
        rest = key[:-1]
        val = sum(
            (_gg_rec(g, _lower(rest, i)) for i in range(len(rest)) if rest[i] >= 1),
            Fraction(0),
        )
    elif key[0] == 1:
        val = (2 * g - 2 + n - 1) * _gg_rec(g, key[1:])
    else:
        k = key[0] - 1  # >= 1
        k0 = key[1]  # >= 1 after string reduction
        rest = key[2:]
        val = Fraction(
            double_factorial(2 * k + 2 * k0 + 1),
            double_factorial(2 * k + 1) * double_factorial(2 * k0 - 1),
        ) * _gg_rec(g, _canon((k0 + k,) + rest))
        for i, ki in enumerate(rest):
            others = rest[:i] + rest[i + 1 :]
            val += Fraction(
                double_factorial(2 * k + 2 * ki - 1),
                double_factorial(2 * k + 1) * double_factorial(2 * ki - 3),
            ) * _gg_rec(g, _canon((k0, ki + k) + others))
    _lambda_gg_rec[(g, key)] = val
    return val


# ---------------------------------------------------------------------------
# lambda_{g-1} family (best effort)


def lambda_gm1(g: int, ks: Sequence[int]) -> Fraction:
    """<tau_{k1}...tau_{kn} | lambda_{g-1}>_g.

    No closed form is known.  n = 1 returns the constant c_g; otherwise zero
    and one exponents are removed by string/dilaton and a top insertion is
    removed by coefficient extraction from the curve constraint relations,
    which expresses it through lambda_{g-1} values with fewer insertions plus
    known lambda_g values.  Raises UnderdeterminedError if no relation applies.
    """
    key = _check(g, ks, gmin=1)
    return _gm1(g, key)


def _gm1(g: int, key: Key) -> Fraction:
    n = len(key)
    if sum(key) != 2 * g - 2 + n:
        return Fraction(0)
    if g == 1:
        # lambda_0 = 1: these are pure psi integrals (same grading)
        return psi_or_zero(1, key)
    cached = lookup(TAG_LAMBDA_GM1, (g, key))
    if cached is not None:
        return cached
    if n == 1:
        val = c_constant(g)  # the grading forces k = 2g-1
    elif key[-1] == 0:
        rest = key[:-1]
        val = sum(
            (_gm1(g, _lower(rest, i)) for i in range(len(rest)) if rest[i] >= 1),
            Fraction(0),
        )
    elif key[-1] == 1:
        val = (2 * g - 2 + n - 1) * _gm1(g, key[:-1])
    elif key[0] >= 2:
        k = key[0] - 1
        derivs = key[1:]
        val = _xcurve_partial(g, k, derivs) / bracket(1, k, 0)
    else:
        raise UnderdeterminedError(f"no reduction applies to {(g, key)}")
    return record(TAG_LAMBDA_GM1, (g, key), val)


def _gm1_or_zero(g: int, ks: Iterable[int]) -> Fraction:
    ks = tuple(sorted(ks, reverse=True))
    if g < 1 or len(ks) < 1 or any(k < 0 for k in ks):
        return Fraction(0)
    return _gm1(g, ks)


def _xcurve_partial(g: int, k: int, derivs: Key) -> Fraction:
    """All terms of the derivative of the curve x-constraint except the
    leading -[1]^k_0 <tau_{k+1} derivs | lambda_{g-1}> one, with x = 0 solved
    for that term.  See constraints.x_curve for the full expression."""
    total = Fraction(0)
    for i, m in enumerate(derivs):
        others = derivs[:i] + derivs[i + 1 :]
        total += bracket(m, k, 0) * _gm1_or_zero(g, (k + m,) + others)
    total += bracket(1, k, 1) * lambda_g_or_zero(g, (k,) + derivs)
    for i, m in enumerate(derivs):
        others = derivs[:i] + derivs[i + 1 :]
        total -= bracket(m, k, 1) * lambda_g_or_zero(g, (k + m - 1,) + others)
    total -= _xcurve_quadratic(g, k, derivs)
    return total


def _xcurve_quadratic(g: int, k: int, derivs: Key) -> Fraction:
    total = Fraction(0)
    nrest = len(derivs)
    for m in range(k - 1):
        w = Fraction(1, 2) * Fraction(-1) ** (m + 1) * bracket(-m - 1, k, 1)
        if w == 0:
            continue
        for bits in range(1 << nrest):
            left = tuple(derivs[j] for j in range(nrest) if bits >> j & 1)
            right = tuple(derivs[j] for j in range(nrest) if not bits >> j & 1)
            for g1 in range(g + 1):
                total += w * lambda_g_or_zero(g1, (m,) + left) * lambda_g_or_zero(
                    g - g1, (k - m - 2,) + right
                )
    return total


# ---------------------------------------------------------------------------
# lambda_g lambda_{g-2} family (best effort, used by the surface constraints)


def lambda_g_gm2_or_none(g: int, ks: Iterable[int]):
    """Value of <tau... | lambda_g lambda_{g-2}>_g when determinable, else None.

    g = 1 gives 0 (lambda_{-1} = 0); g = 2 reduces to the lambda_g family
    (lambda_0 = 1).  No closed form is known beyond that.
    """
    ks = tuple(sorted(ks, reverse=True))
    n = len(ks)
    if g < 1 or n < 1 or any(k < 0 for k in ks):
        return Fraction(0)
    if sum(ks) != g - 1 + n:
        return Fraction(0)
    if g == 1:
        return Fraction(0)
    if g == 2:
        return lambda_g_or_zero(2, ks)
    return None


# ---------------------------------------------------------------------------
# kappa classes


def kappa_lambda_integral(g: int, indices: Sequence[int]) -> Fraction:
    """Integral of kappa_{i1}...kappa_{im} lambda_g lambda_{g-1} over the
    unpointed genus-g moduli space.

    Obtained by inverting the symmetric-group sum relating psi and kappa
    monomials: summing over set partitions P of the index set with weight
    (-1)^{m-|P|} prod (|B|-1)! of the psi-side values with one insertion
    k_B + 1 per block (k_B the block sum).
    """
    if g < 1:
        raise DomainError("g must be >= 1")
    idx = list(indices)
    if any(i < 1 for i in idx):
        raise DomainError("kappa indices must be >= 1")
    if sum(idx) != g - 2:
        return Fraction(0)
    total = Fraction(0)
    for part in _set_partitions(len(idx)):
        weight = Fraction((-1) ** (len(idx) - len(part)))
        ks = []
        for block in part:
            weight *= factorial(len(block) - 1)
            ks.append(sum(idx[i] for i in block) + 1)
        total += weight * lambda_g_gm1_or_zero(g, ks)
    return total


def psi_side_from_kappa(g: int, indices: Sequence[int]) -> Fraction:
    """Forward direction of the same correspondence: sum over permutations,
    grouped by cycle type.  Used to cross-check the inversion."""
    idx = list(indices)
    total = Fraction(0)
    for part in _set_partitions(len(idx)):
        weight = 1
        kappas = []
        for block in part:
            weight *= factorial(len(block) - 1)  # cyclic orders of the block
        kappas = [[sum(idx[i] for i in block) for block in part]]
        total += weight * _kappa_monomial(g, kappas[0])
    return total


def _kappa_monomial(g: int, kappa_indices: List[int]) -> Fraction:
    return kappa_lambda_integral(g, kappa_indices)


def _set_partitions(n: int):
    if n == 0:
        yield []
        return
    first = 0
    for sub in _set_partitions_rest(list(range(1, n))):
        # place element 0 into each block or alone
        for i in range(len(sub)):
            yield [sorted([first] + sub[i])] + [b for j, b in enumerate(sub) if j != i]
        yield [[first]] + sub


def _set_partitions_rest(items: List[int]):
    if not items:
        yield []
        return
    head, tail = items[0], items[1:]
    for sub in _set_partitions_rest(tail):
        for i in range(len(sub)):
            yield [sorted([head] + sub[i])] + [b for j, b in enumerate(sub) if j != i]
        yield [[head]] + sub


# ---------------------------------------------------------------------------
# table emitter


def hodge_table(gmax: int) -> List[Tuple[int, Fraction, Fraction]]:
    """Rows (g, b_g, c_g) for g = 1..gmax."""
    if gmax < 1:
        raise DomainError("gmax must be >= 1")
    return [(g, b_constant(g), c_constant(g)) for g in range(1, gmax + 1)]
