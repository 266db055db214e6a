"""Constraint operators on the truncated large phase space.

A :class:`DifferentialOperator` is a finite normal-ordered sum of terms

    coefficient * hbar^h * (product of coordinates) * (product of derivatives),

with coordinates labelled ``(class index, descendent level)`` as in
:mod:`hodgeint.phase_space`.  Builders are provided for

* the point operators (half-integer coefficients, levels -1 and up);
* the general construction from target cohomology data
  (:class:`CohomologyData`): bracket coefficients, first-Chern-class
  multiplication matrix insertions, the quadratic zero mode, and the level-0
  constant;
* the curve and surface specializations written directly from their displayed
  coordinate forms (including odd classes for a positive-genus curve target,
  treated as commuting coordinates since the displays only ever pair them).

Infinite level sums are truncated at a level cap; all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .combinat import bracket
from .errors import DomainError
from .phase_space import Caps, Coord, Monomial, TruncatedSeries, monomial_weight

__all__ = [
    "CohomologyData",
    "DifferentialOperator",
    "point_data",
    "p1_data",
    "p2_data",
    "p3_data",
    "point_operator",
    "general_operator",
    "curve_operator",
    "surface_operator",
    "commutator",
    "apply_operator",
    "enumerate_keys",
]

Half = Fraction(1, 2)

TermKey = Tuple[int, Tuple[Coord, ...], Tuple[Coord, ...]]  # (hbar, mult, diff)


# ---------------------------------------------------------------------------
# target cohomology data


@dataclass(frozen=True)
class CohomologyData:
    """Even-degree cohomology of the target, in a fixed homogeneous basis.

    ``index 0 must be the identity class``.  ``c1`` is the matrix of
    multiplication by the first Chern class of the target: column ``a`` holds
    the expansion of ``c1 . basis[a]``.  ``chern_top`` and ``chern_mixed`` are
    the integrals of c_r and c_1 c_{r-1} over the target.
    """

    name: str
    dim: int  # complex dimension r
    p: Tuple[int, ...]  # holomorphic degrees p_a (= q_a)
    eta: Tuple[Tuple[Fraction, ...], ...]  # intersection pairing
    c1: Tuple[Tuple[Fraction, ...], ...]  # multiplication by c_1(X)
    chern_top: Fraction
    chern_mixed: Fraction

    def __post_init__(self):
        n = len(self.p)
        if len(self.eta) != n or any(len(row) != n for row in self.eta):
            raise DomainError("eta must be square of basis size")
        if len(self.c1) != n or any(len(row) != n for row in self.c1):
            raise DomainError("c1 must be square of basis size")
        for i in range(n):
            for j in range(n):
                if self.eta[i][j] != self.eta[j][i]:
                    raise DomainError("eta must be symmetric")
        # eta-self-adjointness of c1 multiplication: C^t eta = eta C
        for i in range(n):
            for j in range(n):
                lhs = sum(self.c1[k][i] * self.eta[k][j] for k in range(n))
                rhs = sum(self.eta[i][k] * self.c1[k][j] for k in range(n))
                if lhs != rhs:
                    raise DomainError("c1 multiplication must be eta-self-adjoint")

    @property
    def size(self) -> int:
        return len(self.p)

    def weight(self, a: int) -> Fraction:
        """Shifted weight b_a = p_a + (1 - r)/2."""
        return self.p[a] + Fraction(1 - self.dim, 2)

    def eta_inverse(self) -> List[List[Fraction]]:
        n = self.size
        aug = [
            [Fraction(x) for x in self.eta[i]]
            + [Fraction(int(i == j)) for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = Fraction(1) / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return [row[n:] for row in aug]

    def c1_power(self, i: int) -> List[List[Fraction]]:
        n = self.size
        out = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
        for _ in range(i):
            out = [
                [
                    sum(self.c1[r][m] * out[m][c] for m in range(n))
                    for c in range(n)
                ]
                for r in range(n)
            ]
        return out

    def constant(self) -> Fraction:
        """The level-0 additive constant (1/48) * integral of
        (3 - r) c_r - 2 c_1 c_{r-1}."""
        return Fraction(1, 48) * (
            (3 - self.dim) * self.chern_top - 2 * self.chern_mixed
        )


def _fr(rows: Sequence[Sequence[int]]) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def point_data() -> CohomologyData:
    return CohomologyData(
        "point", 0, (0,), _fr([[1]]), _fr([[0]]), Fraction(1), Fraction(0)
    )


def p1_data() -> CohomologyData:
    return CohomologyData(
        "P1",
        1,
        (0, 1),
        _fr([[0, 1], [1, 0]]),
        _fr([[0, 0], [2, 0]]),  # c_1 = 2 omega
        Fraction(2),
        Fraction(2),  # c_1 c_0
    )


def p2_data() -> CohomologyData:
    return CohomologyData(
        "P2",
        2,
        (0, 1, 2),
        _fr([[0, 0, 1], [0, 1, 0], [1, 0, 0]]),
        _fr([[0, 0, 0], [3, 0, 0], [0, 3, 0]]),  # c_1 = 3h
        Fraction(3),  # c_2
        Fraction(9),  # c_1^2
    )


def p3_data() -> CohomologyData:
    return CohomologyData(
        "P3",
        3,
        (0, 1, 2, 3),
        _fr([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]),
        _fr([[0, 0, 0, 0], [4, 0, 0, 0], [0, 4, 0, 0], [0, 0, 4, 0]]),
        Fraction(4),  # c_3
        Fraction(24),  # c_2 c_1
    )


# ---------------------------------------------------------------------------
# operators


class DifferentialOperator:
    """Normal-ordered operator: {(hbar, mult, diff): coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[TermKey, Fraction]] = None):
        self.terms: Dict[TermKey, Fraction] = {}
        if terms:
            for key, c in terms.items():
                self._add(key, c)

    def _add(self, key: TermKey, c: Fraction) -> None:
        if c == 0:
            return
        h, mult, diff = key
        key = (h, tuple(sorted(mult)), tuple(sorted(diff)))
        new = self.terms.get(key, Fraction(0)) + c
        if new == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = new

    def add_term(
        self,
        coeff: Fraction,
        hbar: int = 0,
        mult: Iterable[Coord] = (),
        diff: Iterable[Coord] = (),
    ) -> None:
        self._add((hbar, tuple(mult), tuple(diff)), coeff)

    def __add__(self, other: "DifferentialOperator") -> "DifferentialOperator":
        out = DifferentialOperator(dict(self.terms))
        for key, c in other.terms.items():
            out._add(key, c)
        return out

    def __sub__(self, other: "DifferentialOperator") -> "DifferentialOperator":
        return self + other.scale(Fraction(-1))

    def scale(self, c: Fraction) -> "DifferentialOperator":
        return DifferentialOperator({k: v * c for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def level_filter(self, level_cap: int) -> "DifferentialOperator":
        """Drop terms touching any coordinate of level above the cap."""
        out = DifferentialOperator()
        for (h, mult, diff), c in self.terms.items():
            if all(k <= level_cap for _, k in mult + diff):
                out._add((h, mult, diff), c)
        return out

    def __mul__(self, other: "DifferentialOperator") -> "DifferentialOperator":
        """Normal-ordered composition self . other.

        Derivatives of the left factor contract against coordinates of the
        right factor in all possible ways (Leibniz); the remaining pieces pass
        through to a single normal-ordered term.
        """
        out = DifferentialOperator()
        for (h1, m1, d1), c1 in self.terms.items():
            dcounts = _counts(d1)
            for (h2, m2, d2), c2 in other.terms.items():
                mcounts = _counts(m2)
                shared = [c for c in dcounts if c in mcounts]
                for choice in _contractions(shared, dcounts, mcounts):
                    ways = 1
                    for coord, s in choice.items():
                        dcnt, mcnt = dcounts[coord], mcounts[coord]
                        perm = 1
                        for j in range(s):
                            perm *= mcnt - j
                        ways *= comb(dcnt, s) * perm
                    newm = dict(mcounts)
                    newd = dict(dcounts)
                    for coord, s in choice.items():
                        newm[coord] -= s
                        newd[coord] -= s
                    mult = _expand(_counts(m1), newm)
                    diff = _expand(_counts(d2), newd)
                    out._add((h1 + h2, mult, diff), c1 * c2 * ways)
        return out

    def pretty(self) -> str:
        """Canonical text form, one term per line, for golden comparisons."""

        def fmt_coord(c: Coord) -> str:
            a, k = c
            return f"t[{a},{k}]"

        lines = []
        for (h, mult, diff) in sorted(self.terms):
            c = self.terms[(h, mult, diff)]
            parts = [str(c)]
            if h:
                parts.append(f"hbar^{h}")
            parts.extend(fmt_coord(x) for x in mult)
            parts.extend("d/d" + fmt_coord(x) for x in diff)
            lines.append(" * ".join(parts))
        return "\n".join(lines)

    def __repr__(self):
        return f"DifferentialOperator<{len(self.terms)} terms>"


def _counts(coords: Tuple[Coord, ...]) -> Dict[Coord, int]:
    out: Dict[Coord, int] = {}
    for c in coords:
        out[c] = out.get(c, 0) + 1
    return out


def _expand(base: Dict[Coord, int], extra: Dict[Coord, int]) -> Tuple[Coord, ...]:
    total = dict(base)
    for c, n in extra.items():
        total[c] = total.get(c, 0) + n
    out: List[Coord] = []
    for c, n in sorted(total.items()):
        out.extend([c] * n)
    return tuple(out)


def _contractions(shared, dcounts, mcounts):
    """All choices of how many derivative factors contract per shared coord."""
    if not shared:
        yield {}
        return
    head, rest = shared[0], shared[1:]
    for sub in _contractions(rest, dcounts, mcounts):
        for s in range(min(dcounts[head], mcounts[head]) + 1):
            out = dict(sub)
            out[head] = s
            yield out


def commutator(
    a: DifferentialOperator, b: DifferentialOperator
) -> DifferentialOperator:
    return a * b - b * a


# ---------------------------------------------------------------------------
# builders


def point_operator(k: int, level_cap: int) -> DifferentialOperator:
    """The point constraint operator of level k >= -1, truncated by level.

    Level -1: sum (t_m - d_{m1}) d_{m-1} + t_0^2 / 2 hbar;
    level 0:  sum (m + 1/2)(t_m - d_{m1}) d_m + 1/16;
    level k:  sum [m+1/2]^k_0 (t_m - d_{m1}) d_{m+k}
              + (hbar/2) sum_{m<k} (-1)^{m+1} [-m-1/2]^k_0 d_m d_{k-m-1},
    the Gamma-function ratios written as half-integer rising products.
    """
    if k < -1:
        raise DomainError("level must be >= -1")
    op = DifferentialOperator()
    if k == -1:
        for m in range(1, level_cap + 1):
            op.add_term(Fraction(1), mult=[(0, m)], diff=[(0, m - 1)])
        op.add_term(Fraction(-1), diff=[(0, 0)])
        op.add_term(Half, hbar=-1, mult=[(0, 0), (0, 0)])
        return op
    for m in range(level_cap + 1):
        if m + k > level_cap:
            break
        c = bracket(m + Half, k, 0)  # equals m + 1/2 when k = 0
        op.add_term(c, mult=[(0, m)], diff=[(0, m + k)])
        if m == 1:
            op.add_term(-c, diff=[(0, m + k)])
    if k == 0:
        op.add_term(Fraction(1, 16))
    for m in range(k):
        c = Half * Fraction(-1) ** (m + 1) * bracket(-m - Half, k, 0)
        op.add_term(c, hbar=1, diff=[(0, m), (0, k - m - 1)])
    return op


def general_operator(
    k: int, data: CohomologyData, level_cap: int
) -> DifferentialOperator:
    """The constraint operator of level k >= -1 for even-cohomology data.

    Assembled from the four displayed blocks: the linear block with bracket
    coefficients [b_a + m]^k_i and i-fold first-Chern multiplications, the
    order-hbar double-derivative block with coefficients [b_c - m - 1]^k_i
    (index c before the Chern multiplication, paired through eta), the
    1/(2 hbar) zero mode with the (k+1)-st Chern power, and the level-0
    constant.
    """
    if k < -1:
        raise DomainError("level must be >= -1")
    n = data.size
    eta_inv = data.eta_inverse()
    powers = [data.c1_power(i) for i in range(max(k + 2, 1))]
    op = DifferentialOperator()

    for i in range(k + 2):
        ci = powers[i]
        for m in range(max(0, i - k), level_cap + 1):
            if m + k - i > level_cap:
                break
            for a in range(n):
                coeff_base = bracket(data.weight(a) + m, k, i)
                if coeff_base == 0:
                    continue
                for b in range(n):
                    if ci[b][a] == 0:
                        continue
                    c = coeff_base * ci[b][a]
                    op.add_term(c, mult=[(a, m)], diff=[(b, m + k - i)])
                    if a == 0 and m == 1:
                        op.add_term(-c, diff=[(b, m + k - i)])

    for i in range(k + 2):
        ci = powers[i]
        for m in range(k - i):
            for cc in range(n):
                w = (
                    Half
                    * Fraction(-1) ** (m + 1)
                    * bracket(data.weight(cc) - m - 1, k, i)
                )
                if w == 0:
                    continue
                for b in range(n):
                    if ci[b][cc] == 0:
                        continue
                    for a in range(n):
                        if eta_inv[a][cc] == 0:
                            continue
                        op.add_term(
                            w * ci[b][cc] * eta_inv[a][cc],
                            hbar=1,
                            diff=[(a, m), (b, k - m - i - 1)],
                        )

    ck1 = powers[k + 1] if k + 1 >= 0 else None
    if ck1 is not None:
        for a in range(n):
            for b in range(n):
                c = Half * sum(data.eta[a][cc] * ck1[cc][b] for cc in range(n))
                if c:
                    op.add_term(c, hbar=-1, mult=[(a, 0), (b, 0)])

    if k == 0:
        op.add_term(data.constant())
    return op


# curve coordinates: class 0 = identity (t), class 1 = point class (s),
# classes 2..1+gamma = odd alpha block, 2+gamma..1+2*gamma = odd beta block
def curve_operator(k: int, gamma: int, level_cap: int) -> DifferentialOperator:
    """Level-k (k >= 1) operator for a genus-gamma curve target, written in
    the displayed t/s/alpha/beta coordinates with the Euler-characteristic
    prefactor (2 - 2 gamma) on its block.  Odd coordinates commute here; the
    display only ever pairs each alpha with a beta."""
    if k < 1:
        raise DomainError("level must be >= 1")
    if gamma < 0:
        raise DomainError("gamma must be >= 0")
    op = DifferentialOperator()
    alphas = [2 + i for i in range(gamma)]
    betas = [2 + gamma + i for i in range(gamma)]

    op.add_term(-bracket(1, k, 0), diff=[(0, k + 1)])
    for m in range(level_cap + 1):
        if m + k <= level_cap:
            c0 = bracket(m, k, 0)
            op.add_term(c0, mult=[(0, m)], diff=[(0, m + k)])
            for a in alphas:
                op.add_term(c0, mult=[(a, m)], diff=[(a, m + k)])
            c1 = bracket(m + 1, k, 0)
            op.add_term(c1, mult=[(1, m)], diff=[(1, m + k)])
            for b in betas:
                op.add_term(c1, mult=[(b, m)], diff=[(b, m + k)])

    chi = Fraction(2 - 2 * gamma)
    if chi != 0:
        op.add_term(-chi * bracket(1, k, 1), diff=[(1, k)])
        for m in range(level_cap + 1):
            if 0 <= m + k - 1 <= level_cap:
                op.add_term(
                    chi * bracket(m, k, 1), mult=[(0, m)], diff=[(1, m + k - 1)]
                )
        for m in range(k - 1):
            op.add_term(
                chi * Half * Fraction(-1) ** (m + 1) * bracket(-m - 1, k, 1),
                hbar=1,
                diff=[(1, m), (1, k - m - 2)],
            )
    return op


# surface coordinates: class 0 = identity (t), classes 1..d = (1,1)-block (s),
# class d+1 = point class (r), then odd a/b blocks of size p each
def surface_operator(
    k: int,
    cvec: Sequence[Fraction],
    gram: Sequence[Sequence[Fraction]],
    level_cap: int,
    odd_pairs: int = 0,
) -> DifferentialOperator:
    """Level-k (k >= 1) operator for a simply-connected surface target.

    ``cvec`` expands the first Chern class over the chosen (1,1) basis;
    ``gram`` is that basis's intersection matrix, so |c|^2 = c^t G c.  The
    scalar c-block derivatives contract the vector index through the basis.
    """
    if k < 1:
        raise DomainError("level must be >= 1")
    d = len(cvec)
    if len(gram) != d or any(len(row) != d for row in gram):
        raise DomainError("gram must be square of the (1,1)-basis size")
    cvec = [Fraction(x) for x in cvec]
    csq = sum(
        cvec[i] * gram[i][j] * cvec[j] for i in range(d) for j in range(d)
    )
    t_cls = 0
    s_cls = list(range(1, d + 1))
    r_cls = d + 1
    a_cls = [d + 2 + i for i in range(odd_pairs)]
    b_cls = [d + 2 + odd_pairs + i for i in range(odd_pairs)]
    op = DifferentialOperator()

    op.add_term(-bracket(Half, k, 0), diff=[(t_cls, k + 1)])
    for m in range(level_cap + 1):
        if m + k <= level_cap:
            cm = bracket(m - Half, k, 0)
            op.add_term(cm, mult=[(t_cls, m)], diff=[(t_cls, m + k)])
            for b in b_cls:
                op.add_term(cm, mult=[(b, m)], diff=[(b, m + k)])
            cs = bracket(m + Half, k, 0)
            for s in s_cls:
                op.add_term(cs, mult=[(s, m)], diff=[(s, m + k)])
            cr = bracket(m + Half + 1, k, 0)
            op.add_term(cr, mult=[(r_cls, m)], diff=[(r_cls, m + k)])
            for a in a_cls:
                op.add_term(cr, mult=[(a, m)], diff=[(a, m + k)])
    for m in range(k):
        sign = Fraction(-1) ** (m + 1)
        op.add_term(
            sign * bracket(-m - Half - 1, k, 0),
            hbar=1,
            diff=[(r_cls, m), (t_cls, k - m - 1)],
        )
        w = Half * sign * bracket(-m - Half, k, 0)
        # the s-block double derivative contracts through the inverse Gram
        ginv = _invert(gram)
        for i in range(d):
            for j in range(d):
                if ginv[i][j]:
                    op.add_term(
                        w * ginv[i][j],
                        hbar=1,
                        diff=[(s_cls[i], m), (s_cls[j], k - m - 1)],
                    )

    for i in range(d):
        ci = cvec[i]
        if ci == 0:
            continue
        op.add_term(-ci * bracket(Half, k, 1), diff=[(s_cls[i], k)])
        for m in range(level_cap + 1):
            if 0 <= m + k - 1 <= level_cap:
                op.add_term(
                    ci * bracket(m - Half, k, 1),
                    mult=[(t_cls, m)],
                    diff=[(s_cls[i], m + k - 1)],
                )
                op.add_term(
                    ci * bracket(m + Half, k, 1),
                    mult=[(s_cls[i], m)],
                    diff=[(r_cls, m + k - 1)],
                )
        for m in range(k - 1):
            op.add_term(
                ci * Fraction(-1) ** (m + 1) * bracket(-m - Half - 1, k, 1),
                hbar=1,
                diff=[(r_cls, m), (s_cls[i], k - m - 2)],
            )

    if csq != 0:
        if k - 1 <= level_cap:
            op.add_term(-csq * bracket(Half, k, 2), diff=[(r_cls, k - 1)])
        for m in range(level_cap + 1):
            if 0 <= m + k - 2 <= level_cap:
                op.add_term(
                    csq * bracket(m - Half, k, 2),
                    mult=[(t_cls, m)],
                    diff=[(r_cls, m + k - 2)],
                )
        for m in range(k - 2):
            op.add_term(
                csq * Half * Fraction(-1) ** (m + 1) * bracket(-m - Half - 1, k, 2),
                hbar=1,
                diff=[(r_cls, m), (r_cls, k - m - 3)],
            )
        if k == 1:
            op.add_term(csq * Half, hbar=-1, mult=[(t_cls, 0), (t_cls, 0)])
    return op


def _invert(mat: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    n = len(mat)
    aug = [
        [Fraction(x) for x in mat[i]]
        + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# action on truncated series


def apply_operator(
    op: DifferentialOperator,
    series: TruncatedSeries,
    source_vanishes: Optional[Callable[[int, Monomial], bool]] = None,
    basis_size: int = 1,
) -> Tuple[TruncatedSeries, Set[Tuple[int, Monomial]]]:
    """Apply an operator to a truncated series.

    Returns ``(result, indeterminate)``.  A result key is *indeterminate*
    when some operator term pulls it from a source coefficient lying outside
    the series' caps: truncation silently zeroed that source, so the computed
    value cannot be trusted.  ``source_vanishes(hbar, monomial)``, when given,
    certifies sources known to be zero on structural grounds (e.g. a grading),
    which removes them from the taint analysis.
    """
    caps = series.caps
    out = TruncatedSeries(caps)
    for (h, mono), coeff in series.terms.items():
        for (dh, mult, diff), c in op.terms.items():
            src, factor = _differentiate(mono, diff)
            if src is None:
                continue
            d = dict(src)
            for coord in mult:
                d[coord] = d.get(coord, 0) + 1
            out._add((h + dh, tuple(sorted(d.items()))), coeff * c * factor)

    tainted: Set[Tuple[int, Monomial]] = set()
    for h, mono in enumerate_keys(caps, basis_size):
        for (dh, mult, diff), _ in op.terms.items():
            src = _source_key(mono, mult, diff)
            if src is None:
                continue
            key = (h - dh, src)
            if caps.admits(*key):
                continue
            if source_vanishes is not None and source_vanishes(*key):
                continue
            tainted.add((h, mono))
            break
    return out, tainted


def _differentiate(mono: Monomial, diff: Tuple[Coord, ...]):
    d = dict(mono)
    factor = 1
    for coord in diff:
        e = d.get(coord, 0)
        if e == 0:
            return None, 0
        factor *= e
        if e == 1:
            del d[coord]
        else:
            d[coord] = e - 1
    return tuple(sorted(d.items())), factor


def _source_key(result: Monomial, mult, diff):
    """The monomial whose coefficient an operator term reads to produce the
    given result monomial, or None when the shapes do not match."""
    d = dict(result)
    for coord in mult:
        e = d.get(coord, 0)
        if e == 0:
            return None
        if e == 1:
            del d[coord]
        else:
            d[coord] = e - 1
    for coord in diff:
        d[coord] = d.get(coord, 0) + 1
    return tuple(sorted(d.items()))


def enumerate_keys(caps: Caps, basis_size: int):
    """All (hbar, monomial) keys admitted by the caps, over coordinates
    (a, level) with a < basis_size and level < weight cap."""
    coords = [
        (a, lvl)
        for a in range(basis_size)
        for lvl in range(caps.weight)  # weight of (a, lvl) is lvl + 1
    ]
    monos: List[Monomial] = []

    def rec2(idx: int, budget: int, acc: List[Tuple[Coord, int]]) -> None:
        if idx == len(coords):
            monos.append(tuple(acc))
            return
        w = coords[idx][1] + 1
        rec2(idx + 1, budget, acc)
        e = 1
        while e * w <= budget:
            acc.append((coords[idx], e))
            rec2(idx + 1, budget - e * w, acc)
            acc.pop()
            e += 1

    rec2(0, caps.weight, [])
    for h in range(caps.hbar_min, caps.hbar_max + 1):
        for m in monos:
            yield h, tuple(sorted(m))
