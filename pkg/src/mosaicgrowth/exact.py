"""Exact-arithmetic toolbox: rational polynomials, Sturm-sequence root
isolation, square-free factorization, rational interval arithmetic and
deterministic decimal rendering.

Polynomials are tuples of coefficients in ascending degree order.  Root
isolation assumes monic integer polynomials, whose rational roots are
integers; every isolation endpoint is kept at a dyadic rational minus 1/3,
which can never be an integer, so endpoints are never roots and every
bracket carries a strict sign change.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence, Union

from .errors import InternalConsistencyError

Coeffs = tuple[Fraction, ...]
Number = Union[int, Fraction]

_THIRD = Fraction(1, 3)


# ---------------------------------------------------------------------------
# polynomial arithmetic over Fraction
# ---------------------------------------------------------------------------

def poly_trim(c: Sequence[Number]) -> Coeffs:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(Fraction(x) for x in c)


def poly_degree(c: Coeffs) -> int:
    return len(c) - 1


def poly_eval(c: Sequence[Number], x: Number):
    out = 0
    for coeff in reversed(c):
        out = out * x + coeff
    return out


def poly_derivative(c: Coeffs) -> Coeffs:
    return poly_trim([i * c[i] for i in range(1, len(c))])


def poly_sub(a: Coeffs, b: Coeffs) -> Coeffs:
    n = max(len(a), len(b))
    a = a + (Fraction(0),) * (n - len(a))
    b = b + (Fraction(0),) * (n - len(b))
    return poly_trim([x - y for x, y in zip(a, b)])


def poly_mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return poly_trim(out)


def poly_divmod(a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    db = len(b) - 1
    lead = b[-1]
    for i in range(len(rem) - 1, db - 1, -1):
        if rem[i] == 0:
            continue
        f = rem[i] / lead
        quot[i - db] = f
        for j in range(db + 1):
            rem[i - db + j] -= f * b[j]
    return poly_trim(quot), poly_trim(rem)


def poly_monic(c: Coeffs) -> Coeffs:
    if not c:
        return ()
    lead = c[-1]
    return tuple(x / lead for x in c)


def poly_gcd(a: Coeffs, b: Coeffs) -> Coeffs:
    """Monic gcd over the rationals."""
    a, b = poly_trim(a), poly_trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return poly_monic(a)


def squarefree_decomposition(c: Sequence[Number]) -> list[tuple[Coeffs, int]]:
    """Yun's algorithm: ``c = prod(factor ** multiplicity)`` with pairwise
    coprime square-free monic factors; constant factors are dropped."""
    p = poly_monic(poly_trim(c))
    if poly_degree(p) < 1:
        return []
    dp = poly_derivative(p)
    g = poly_gcd(p, dp)
    if poly_degree(g) == 0:
        return [(p, 1)]
    b = poly_divmod(p, g)[0]
    cpart = poly_divmod(dp, g)[0]
    d = poly_sub(cpart, poly_derivative(b))
    out = []
    k = 1
    while poly_degree(b) > 0:
        a = poly_gcd(b, d)
        if poly_degree(a) > 0:
            out.append((poly_monic(a), k))
        b = poly_divmod(b, a)[0]
        cpart = poly_divmod(d, a)[0]
        d = poly_sub(cpart, poly_derivative(b))
        k += 1
    # exactness cross-check
    prod: Coeffs = (Fraction(1),)
    for factor, mult in out:
        for _ in range(mult):
            prod = poly_mul(prod, factor)
    if prod != p:
        raise InternalConsistencyError("square-free factorization does not multiply back")
    return out


# ---------------------------------------------------------------------------
# Sturm sequences and real-root isolation
# ---------------------------------------------------------------------------

def sturm_chain(p: Coeffs) -> list[Coeffs]:
    chain = [poly_trim(p), poly_derivative(poly_trim(p))]
    while chain[-1]:
        rem = poly_divmod(chain[-2], chain[-1])[1]
        chain.append(tuple(-x for x in rem))
    chain.pop()
    return chain


def sign_variations(chain: list[Coeffs], x: Number) -> int:
    signs = []
    for p in chain:
        v = poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_root_bound(p: Coeffs) -> Fraction:
    lead = abs(p[-1])
    return 1 + max(abs(c) for c in p) / lead


def isolate_real_roots_squarefree(p: Coeffs) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals (lo, hi) for all real roots of a monic
    square-free integer polynomial, each with p(lo) * p(hi) < 0."""
    p = poly_trim(p)
    if poly_degree(p) < 1:
        return []
    if poly_degree(p) == 1:
        root = -p[0] / p[1]
        return [(root, root)]
    chain = sturm_chain(p)
    bound = cauchy_root_bound(p)
    b = int(bound) + 1
    lo, hi = -b - _THIRD, b + 1 - _THIRD
    if poly_eval(p, lo) == 0 or poly_eval(p, hi) == 0:
        raise InternalConsistencyError("isolation endpoint is a root; polynomial not monic-integer?")
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, sign_variations(chain, lo), sign_variations(chain, hi))]
    while stack:
        a, c, va, vc = stack.pop()
        count = va - vc
        if count == 0:
            continue
        if count == 1:
            if poly_eval(p, a) * poly_eval(p, c) >= 0:
                raise InternalConsistencyError("isolated root without sign change")
            out.append((a, c))
            continue
        mid = (a + c) / 2
        if poly_eval(p, mid) == 0:
            raise InternalConsistencyError("bisection midpoint is a root")
        vm = sign_variations(chain, mid)
        stack.append((a, mid, va, vm))
        stack.append((mid, c, vm, vc))
    out.sort()
    return out


def refine_bracket(p: Coeffs, lo: Fraction, hi: Fraction,
                   width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink a sign-change bracket below ``width`` by bisection."""
    if lo == hi:
        return lo, hi
    flo = poly_eval(p, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        fmid = poly_eval(p, mid)
        if fmid == 0:
            raise InternalConsistencyError("bisection midpoint is a root")
        if (flo > 0) != (fmid > 0):
            hi = mid
        else:
            lo, flo = mid, fmid
    return lo, hi


# ---------------------------------------------------------------------------
# rational interval arithmetic
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    """Closed interval with exact rational endpoints.

    Field operations are exact; only square roots round, and they round
    outward.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x: Number) -> "Interval":
        x = Fraction(x)
        return Interval(x, x)

    @staticmethod
    def _coerce(x: Union["Interval", Number]) -> "Interval":
        return x if isinstance(x, Interval) else Interval.point(x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Number) -> bool:
        return self.lo <= x <= self.hi

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def sign(self) -> Optional[int]:
        """+1 or -1 when certain, None when the interval straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def strictly_less(self, other: Union["Interval", Number]) -> bool:
        other = Interval._coerce(other)
        return self.hi < other.lo

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other):
        other = Interval._coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-Interval._coerce(other))

    def __rsub__(self, other):
        return Interval._coerce(other) + (-self)

    def __mul__(self, other):
        other = Interval._coerce(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Interval._coerce(other)
        if not other.excludes_zero():
            raise ZeroDivisionError(f"division by interval {other} containing zero")
        inv = Interval(1 / other.hi, 1 / other.lo)
        return self * inv

    def __rtruediv__(self, other):
        return Interval._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return Interval.point(1) / self ** (-n)
        out = Interval.point(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def abs(self) -> "Interval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(Fraction(0), max(-self.lo, self.hi))

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def sqrt_interval(x: Union[Interval, Number], bits: int = 128) -> Interval:
    """Outward-rounded square root; width at most 2**-bits times the scale."""
    iv = Interval._coerce(x)
    if iv.lo < 0:
        raise ValueError(f"square root of interval {iv} reaching below zero")

    def lower(f: Fraction) -> Fraction:
        t = f.numerator * f.denominator
        r = isqrt(t << (2 * bits))
        return Fraction(r, f.denominator << bits)

    def upper(f: Fraction) -> Fraction:
        t = f.numerator * f.denominator
        r = isqrt(t << (2 * bits))
        if r * r < t << (2 * bits):
            r += 1
        return Fraction(r, f.denominator << bits)

    return Interval(lower(iv.lo), upper(iv.hi))


def poly_eval_interval(c: Sequence[Number], x: Interval) -> Interval:
    out = Interval.point(0)
    for coeff in reversed(c):
        out = out * x + Interval.point(coeff)
    return out


def solve_interval_system(
    a: list[list[Interval]], b: list[Interval]
) -> Optional[list[Interval]]:
    """Gaussian elimination over intervals.

    Returns None when no pivot can be certified nonzero, in which case the
    caller should tighten its inputs and retry.
    """
    n = len(b)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        pivot_row, pivot_gap = None, Fraction(0)
        for r in range(col, n):
            cand = m[r][col]
            if cand.excludes_zero():
                gap = min(abs(cand.lo), abs(cand.hi))
                if pivot_row is None or gap > pivot_gap:
                    pivot_row, pivot_gap = r, gap
        if pivot_row is None:
            return None
        m[col], m[pivot_row] = m[pivot_row], m[col]
        for r in range(col + 1, n):
            if m[r][col].lo == 0 and m[r][col].hi == 0:
                continue
            f = m[r][col] / m[col][col]
            for j in range(col, n + 1):
                m[r][j] = m[r][j] - f * m[col][j]
    x: list[Interval] = [Interval.point(0)] * n
    for i in range(n - 1, -1, -1):
        acc = m[i][n]
        for j in range(i + 1, n):
            acc = acc - m[i][j] * x[j]
        x[i] = acc / m[i][i]
    return x


# ---------------------------------------------------------------------------
# exact integer determinant and decimal rendering
# ---------------------------------------------------------------------------

def int_det(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss elimination; exact for integer matrices."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def format_fixed(x: Number, places: int) -> str:
    """Round-half-even fixed-point rendering with exactly ``places`` decimals."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    scaled = abs(x) * 10**places
    q, r = divmod(scaled.numerator, scaled.denominator)
    twice = 2 * r
    if twice > scaled.denominator or (twice == scaled.denominator and q % 2 == 1):
        q += 1
    if q == 0:
        sign = ""
    digits = str(q)
    if places == 0:
        return sign + digits
    digits = digits.rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def render_interval_fixed(iv: Interval, places: int) -> Optional[str]:
    """Decimal string valid for every value in the interval, or None if the
    endpoints disagree at this precision."""
    lo = format_fixed(iv.lo, places)
    hi = format_fixed(iv.hi, places)
    return lo if lo == hi else None
