"""Exact and real-valued combinatorial primitives.

Everything countable is computed with arbitrary-precision integers, every
bound comparison with exact rationals.  Floats appear only in the real
binomial extension, the shadow bound, the Stirling approximation and the
error function, which are inherently approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Params:
    """A parameter pair (n, k) with its unique decomposition n = c*k + r."""

    n: int
    k: int
    c: int
    r: int

    def __post_init__(self):
        if self.k < 1 or self.n < self.k:
            raise ValueError(f"need n >= k >= 1, got n={self.n}, k={self.k}")
        if self.c * self.k + self.r != self.n or not 0 <= self.r < self.k:
            raise ValueError(f"inconsistent decomposition {self}")


def decompose(n: int, k: int) -> Params:
    """Split n = c*k + r with 0 <= r <= k-1."""
    if k < 1 or n < k:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    c, r = divmod(n, k)
    return Params(n, k, c, r)


def binom(x: int, y: int) -> int:
    """Exact binomial coefficient, 0 outside the range 0 <= y <= x."""
    if x < 0:
        raise ValueError(f"negative upper index {x}")
    if y < 0 or y > x:
        return 0
    return math.comb(x, y)


def _binom_real_raw(q: float, t: int) -> float:
    out = 1.0
    for i in range(t):
        out *= (q - i) / (i + 1)
    return out


def binom_real(q: float, t: int) -> float:
    """Real extension (1/t!) * prod_{i<t} (q - i), for q >= t >= 0."""
    if t < 0:
        raise ValueError(f"negative lower index {t}")
    if q < t:
        raise ValueError(f"need q >= t, got q={q}, t={t}")
    return _binom_real_raw(q, t)


def binom_frac(q: Fraction, t: int) -> Fraction:
    """binom_real computed exactly at a rational point."""
    out = Fraction(1)
    for i in range(t):
        out *= q - i
    return out / math.factorial(t)


def mms(params: Params) -> Fraction:
    """LYM-derived counting bound binom(n,c) / (k - r + r(c+1)/(n-c)), exact."""
    n, k, c, r = params.n, params.k, params.c, params.r
    if n <= c:
        raise ValueError(f"need n > c, got n={n}, c={c}")
    den = (k - r) * (n - c) + r * (c + 1)
    return Fraction(binom(n, c) * (n - c), den)


# --------------------------------------------------------------------------
# Shadow bound: given x many c-sets, binom(q, c-1) with binom(q, c) = x is a
# lower bound on the size of their (c-1)-shadow (Lovasz form).  The root q
# lives on the increasing branch q >= c - 1; for x >= 1 it satisfies q >= c.
# --------------------------------------------------------------------------

_ROOT_TOL = 1e-12


def shadow_root(c: int, x: float) -> float:
    """The unique q >= c - 1 with binom_real(q, c) = x, for x >= 0."""
    if c < 2:
        raise ValueError(f"need c >= 2, got {c}")
    if x < 0:
        raise ValueError(f"need x >= 0, got {x}")
    if c == 2:
        # q(q-1)/2 = x
        return (1.0 + math.sqrt(1.0 + 8.0 * x)) / 2.0
    lo, hi = float(c - 1), float(c + x + 2)
    # prod_{i<c}(q-i)/c! >= (x+3)(x+4)/2 > x at q = c+x+2, so hi brackets
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if _binom_real_raw(mid, c) < x:
            lo = mid
        else:
            hi = mid
        if hi - lo < _ROOT_TOL:
            break
    return (lo + hi) / 2.0


def shadow_bound(c: int, x: float) -> float:
    """binom(q, c-1) at the shadow root; the minimum shadow size of x c-sets."""
    q = shadow_root(c, x)
    return _binom_real_raw(q, max(c - 1, 0))


def shadow_root_int(c: int, x: int) -> int | None:
    """Integer q with binom(q, c) == x, if one exists on the branch q >= c-1."""
    if x == 0:
        return c - 1
    lo, hi = c, c + x + 2
    while lo < hi:
        mid = (lo + hi) // 2
        if binom(mid, c) < x:
            lo = mid + 1
        else:
            hi = mid
    return lo if binom(lo, c) == x else None


def shadow_cmp(c: int, x: int, y: Fraction | int) -> bool:
    """Decide shadow_bound(c, x) <= y exactly (x a nonnegative integer).

    Uses the closed integer form when the root is integral, else certifies
    the comparison by rational interval bisection around the root.
    """
    if c == 2:
        # root q = (1+sqrt(1+8x))/2, bound = q:  q <= y  <=>  1+8x <= (2y-1)^2
        y = Fraction(y)
        if y < 1:
            return False
        lhs = 1 + 8 * x
        t = 2 * y - 1
        return lhs <= t * t
    qi = shadow_root_int(c, x)
    if qi is not None:
        return binom(qi, c - 1) <= y
    y = Fraction(y)
    lo = Fraction(c)
    hi = Fraction(c + x + 2)
    for _ in range(300):
        blo = binom_frac(lo, c - 1)
        bhi = binom_frac(hi, c - 1)
        if bhi <= y:
            return True
        if blo > y:
            return False
        mid = (lo + hi) / 2
        if binom_frac(mid, c) < x:
            lo = mid
        else:
            hi = mid
    raise ArithmeticError(f"shadow comparison did not resolve (c={c}, x={x}, y={y})")


def stirling_binom_log(x: float, y: float) -> float:
    """Natural log of the Stirling approximation to binom(x, y)."""
    if not 0 < y < x:
        raise ValueError(f"need 0 < y < x, got x={x}, y={y}")
    return ((x + 0.5) * math.log(x)
            - 0.5 * math.log(2.0 * math.pi)
            - (y + 0.5) * math.log(y)
            - (x - y + 0.5) * math.log(x - y))


def stirling_binom(x: float, y: float) -> float:
    """Stirling approximation x^(x+1/2) / (sqrt(2 pi) y^(y+1/2) (x-y)^(x-y+1/2)).

    Values past the float range come back as inf; compare ratios through
    stirling_binom_log in that regime.
    """
    lg = stirling_binom_log(x, y)
    try:
        return math.exp(lg)
    except OverflowError:
        return math.inf


def erf(x: float) -> float:
    """Standard error function (2/sqrt(pi)) * int_0^x exp(-t^2) dt."""
    return math.erf(x)


def erf_inv(p: float) -> float:
    """Inverse of the standard error function on (-1, 1)."""
    if not -1.0 < p < 1.0:
        raise ValueError(f"need |p| < 1, got {p}")
    if p == 0.0:
        return 0.0
    lo, hi = -6.0, 6.0
    for _ in range(80):
        mid = (lo + hi) / 2.0
        if math.erf(mid) < p:
            lo = mid
        else:
            hi = mid
    x = (lo + hi) / 2.0
    # Newton polish; derivative of erf is 2/sqrt(pi) exp(-x^2)
    for _ in range(4):
        x -= (math.erf(x) - p) * math.sqrt(math.pi) / 2.0 * math.exp(x * x)
    return x
