"""Exact comparison machinery for distances built from rational square roots.

Every geometric decision in this package reduces to the sign of a finite sum
``sum(c_i * sqrt(s_i))`` with rational coefficients and nonnegative rational
radicands.  :func:`sqrt_sum_sign` decides that sign exactly, by sign analysis
and repeated squaring, never by floating point.  :class:`ExactDistance` is
the value type carried by all distance computations: it represents
``max(sqrt(q1) - q2, 0)``, which covers both plain squared distances
(``q2 == 0``) and distances to solid balls (``q2`` = ball radius).
"""

from __future__ import annotations

import math
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Optional, Union

Rat = Union[int, Fraction]


def _sgn(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _norm_rat(q) -> Rat:
    """Normalize an exact rational to an int when integral (cheaper to store)."""
    if isinstance(q, int):
        return q
    if isinstance(q, Fraction):
        return q.numerator if q.denominator == 1 else q
    raise TypeError(f"expected an exact rational, got {type(q).__name__}")


def _num_den(q: Rat) -> tuple[int, int]:
    if isinstance(q, int):
        return q, 1
    return q.numerator, q.denominator


def perfect_square_root(q: Rat) -> Optional[Rat]:
    """Return sqrt(q) when rational, else None.  Requires q >= 0."""
    n, d = _num_den(q)
    if n < 0:
        raise ValueError("negative radicand")
    rn = math.isqrt(n)
    if rn * rn != n:
        return None
    rd = math.isqrt(d)
    if rd * rd != d:
        return None
    return _norm_rat(Fraction(rn, rd))


def sqrt_sum_sign(terms: Iterable[tuple[Rat, Rat]]) -> int:
    """Exact sign of ``sum(c * sqrt(s) for c, s in terms)``.

    Radicands must be nonnegative.  Terms with rational square roots fold
    into a rational constant; the rest are decided recursively: writing the
    value as P + Q*sqrt(s) over the remaining radicands, the sign follows
    from the signs of P and Q, with one squaring (P^2 - Q^2*s) when they
    disagree.  Works for any number of radicands, including multiplicatively
    dependent ones such as sqrt(2) and sqrt(8).
    """
    rational: Rat = 0
    radicals: dict[Rat, Rat] = {}
    for c, s in terms:
        if c == 0 or s == 0:
            continue
        root = perfect_square_root(s)
        if root is not None:
            rational += c * root
        else:
            key = _norm_rat(s) if not isinstance(s, int) else s
            radicals[key] = radicals.get(key, 0) + c
    radicals = {s: c for s, c in radicals.items() if c}
    if not radicals:
        return _sgn(rational)
    rads = list(radicals)
    elem: dict[frozenset, Rat] = {}
    if rational:
        elem[frozenset()] = rational
    for i, s in enumerate(rads):
        elem[frozenset([i])] = radicals[s]
    return _elem_sign(elem, len(rads), rads)


def _elem_mul(a, b, rads):
    out: dict[frozenset, Rat] = {}
    for sa, ca in a.items():
        for sb, cb in b.items():
            key = sa ^ sb
            c = ca * cb
            for i in sa & sb:
                c *= rads[i]
            if key in out:
                out[key] += c
            else:
                out[key] = c
    return {k: v for k, v in out.items() if v}


def _elem_sign(a, k: int, rads) -> int:
    # a: element of Q(sqrt(rads[0]), ..., sqrt(rads[k-1])) as a map from
    # index subsets to rational coefficients.
    if not a:
        return 0
    if k == 0:
        return _sgn(a.get(frozenset(), 0))
    i = k - 1
    p = {s: c for s, c in a.items() if i not in s}
    q = {s - {i}: c for s, c in a.items() if i in s}
    sp = _elem_sign(p, k - 1, rads)
    sq = _elem_sign(q, k - 1, rads)
    if sq == 0:
        return sp
    if sp == 0:
        return sq
    if sp == sq:
        return sp
    p2 = _elem_mul(p, p, rads)
    q2 = _elem_mul(q, q, rads)
    diff = dict(p2)
    for key, c in q2.items():
        diff[key] = diff.get(key, 0) - c * rads[i]
    diff = {key: c for key, c in diff.items() if c}
    return sp * _elem_sign(diff, k - 1, rads)


def int_sqrt_ceil(q: Rat) -> int:
    """Smallest integer k >= 0 with k*k >= q."""
    n, d = _num_den(q)
    if n <= 0:
        return 0
    k = math.isqrt(n // d)
    while k * k * d < n:
        k += 1
    return k


def sqrt_upper(q: Rat, digits: int = 6) -> Fraction:
    """A rational upper bound on sqrt(q), tight to about 10**-digits."""
    n, d = _num_den(q)
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return Fraction(0)
    scale = 10 ** digits
    return Fraction(math.isqrt(n * scale * scale // d) + 1, scale)


def _sqrt_floor_frac(q: Rat, prec_digits: int) -> Fraction:
    n, d = _num_den(q)
    scale = 10 ** prec_digits
    return Fraction(math.isqrt(n * scale * scale // d), scale)


def format_sig(value: Rat, sig: int = 12) -> str:
    """Decimal rendering of an exact rational at `sig` significant digits."""
    n, d = _num_den(value)
    with localcontext() as ctx:
        ctx.prec = sig
        out = Decimal(n) / Decimal(d)
    return str(out)


class ExactDistance:
    """An exact nonnegative distance value ``max(sqrt(q1) - q2, 0)``.

    Canonical form, enforced by the constructors:

    * the zero distance is ``(0, 0)``;
    * when the value has a rational square it is stored with ``q2 == 0``
      (so ``q1`` is the squared distance);
    * otherwise ``q1`` is not a perfect square, ``q2 > 0`` and
      ``sqrt(q1) > q2``.

    Canonical forms are unique, so ``==`` and ``hash`` are structural while
    still meaning value equality.  All order comparisons are exact.
    """

    __slots__ = ("q1", "q2")

    def __init__(self, q1: Rat, q2: Rat):
        # Assumes canonical input; use the factories for raw data.
        self.q1 = q1
        self.q2 = q2

    @classmethod
    def from_square(cls, q) -> "ExactDistance":
        """Distance with exact square q (q >= 0)."""
        q = _norm_rat(q if isinstance(q, (int, Fraction)) else Fraction(q))
        if q < 0:
            raise ValueError("negative squared distance")
        return cls(q, 0)

    @classmethod
    def from_ball(cls, q1, q2) -> "ExactDistance":
        """Distance ``max(sqrt(q1) - q2, 0)``: squared center distance q1,
        subtracted radius q2 (both >= 0)."""
        q1 = _norm_rat(q1 if isinstance(q1, (int, Fraction)) else Fraction(q1))
        q2 = _norm_rat(q2 if isinstance(q2, (int, Fraction)) else Fraction(q2))
        if q1 < 0 or q2 < 0:
            raise ValueError("negative parameter")
        if q1 <= q2 * q2:
            return cls(0, 0)
        if q2 == 0:
            return cls(q1, 0)
        root = perfect_square_root(q1)
        if root is not None:
            diff = root - q2
            return cls(_norm_rat(diff * diff), 0)
        return cls(q1, q2)

    def is_zero(self) -> bool:
        return self.q1 == 0

    def square(self) -> Optional[Rat]:
        """The exact squared value, or None when it is irrational."""
        return self.q1 if self.q2 == 0 else None

    def half(self) -> "ExactDistance":
        """Exactly half this distance (the form is closed under halving)."""
        return ExactDistance(_norm_rat(Fraction(self.q1) / 4), _norm_rat(Fraction(self.q2) / 2))

    def cmp(self, other: "ExactDistance") -> int:
        if self.q2 == 0 and other.q2 == 0:
            return _sgn(self.q1 - other.q1)
        return sqrt_sum_sign(
            [(1, self.q1), (-self.q2, 1), (-1, other.q1), (other.q2, 1)]
        )

    def cmp_square(self, r2: Rat) -> int:
        """Exact comparison of this value's square against a rational r2 >= 0."""
        if self.q2 == 0:
            return _sgn(self.q1 - r2)
        return sqrt_sum_sign([(1, self.q1), (-self.q2, 1), (-1, r2)])

    def approx(self) -> float:
        v = math.sqrt(float(self.q1)) - float(self.q2)
        return max(v, 0.0)

    def decimal_str(self, sig: int = 12) -> str:
        """Display-only decimal approximation at `sig` significant digits."""
        if self.is_zero():
            return "0"
        approx = _sqrt_floor_frac(self.q1, sig + 8) - self.q2
        return format_sig(approx, sig)

    def exact_str(self) -> str:
        """Exact textual form: a squared rational or ``sqrt(q1)-q2``."""
        if self.q2 == 0:
            return f"sqrt({self.q1})"
        return f"sqrt({self.q1})-{self.q2}"

    def __eq__(self, other):
        if not isinstance(other, ExactDistance):
            return NotImplemented
        return self.q1 == other.q1 and self.q2 == other.q2

    def __hash__(self):
        return hash((self.q1, self.q2))

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    def __repr__(self):
        if self.q2 == 0:
            return f"ExactDistance(sq={self.q1!s})"
        return f"ExactDistance(sqrt({self.q1!s})-{self.q2!s})"


ZERO_DISTANCE = ExactDistance(0, 0)
