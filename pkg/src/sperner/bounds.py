"""Upper and lower bounds on the maximum size of Sperner partition systems.

The refined upper bound combines the counting bound with a shadow bound:
SP(n, k) is at most the largest s for which

    ceil((1 - r(c+1)/n) * s) + shadow_bound(c, floor(r(c+1)/n * s))

stays within binom(n-1, c-1).  The left side is nondecreasing in s, so a
binary search finds the threshold.  For c = 2 the comparison reduces to an
integer square test, making every scan decision exact; for c >= 3 the
comparison is certified with rational interval arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import (Params, binom, decompose, mms, shadow_bound,
                       shadow_cmp)
from .construction import plan_grouped


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _in_domain(params: Params) -> bool:
    return params.k >= 4 and params.n >= 2 * params.k + 2 and params.r != 0


def _bound_satisfied(params: Params, s: int) -> bool:
    """Exact test of the counting-plus-shadow inequality at candidate size s."""
    n, c, r = params.n, params.c, params.r
    rhs = binom(n - 1, c - 1)
    num = r * (c + 1)
    ct = _ceil_div((n - num) * s, n)
    y = rhs - ct
    if y < 1:
        return False
    x = (num * s) // n
    if c == 2:
        return 1 + 8 * x <= (2 * y - 1) ** 2
    return shadow_cmp(c, x, Fraction(y))


def refined_upper_equals(params: Params, s: int) -> bool:
    """Whether the refined upper bound is exactly s (two predicate tests)."""
    if not _in_domain(params) or s < 0:
        return False
    return _bound_satisfied(params, s) and not _bound_satisfied(params, s + 1)


def refined_upper(params: Params) -> int | None:
    """Largest s passing the shadow-refined counting bound; None off-domain.

    Not applicable when k | n: the shadow term is then evaluated at zero
    where no root with q >= c exists, and the resolution construction
    already settles those cases exactly.
    """
    n, k, c, r = params.n, params.k, params.c, params.r
    if not _in_domain(params):
        return None
    num = r * (c + 1)
    lo = 0
    hi = max(int(mms(params)) + 2, 4)
    while _bound_satisfied(params, hi):
        hi *= 2
    tested = {lo: True, hi: False}
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _bound_satisfied(params, mid):
            lo = mid
        else:
            hi = mid
        tested[mid] = lo == mid
    if max(s for s, ok in tested.items() if ok) >= min(s for s, ok in tested.items() if not ok):
        raise AssertionError("bound predicate is not monotone on tested points")
    lhs_lo = (_ceil_div((n - num) * lo, n)
              + shadow_bound(c, (num * lo) // n))
    lhs_hi = (_ceil_div((n - num) * (lo + 1), n)
              + shadow_bound(c, (num * (lo + 1)) // n))
    assert lhs_lo <= lhs_hi * (1 + 1e-9) + 1e-9, \
        "bound left side decreased across the threshold"
    return lo


def small_r_ceiling(r: int) -> int:
    """ceil of the shadow root for 3r pairs: t = ceil(q), q(q-1)/2 = 3r."""
    disc = 1 + 24 * r
    s = _isqrt(disc)
    if s * s == disc and (1 + s) % 2 == 0:
        return (1 + s) // 2
    return (1 + s) // 2 + 1


def _isqrt(v: int) -> int:
    import math
    return math.isqrt(v)


def small_r_upper(k: int, r: int) -> int:
    """Upper bound 2k + 4r - t - 1 for SP(2k+r, k) with r at most sqrt(2k)/3."""
    if k < 4 or r < 1:
        raise ValueError(f"need k >= 4 and r >= 1, got k={k}, r={r}")
    if 9 * r * r > 2 * k:
        raise ValueError(f"hypothesis 3r <= sqrt(2k) fails for k={k}, r={r}")
    t = small_r_ceiling(r)
    return 2 * k + 4 * r - t - 1


def two_value_range(k: int) -> tuple[int, int]:
    """For even k >= 4 and n = 3k-2: SP(n,k) is binom(n/2,2) or binom(n/2,2)+1."""
    if k < 4 or k % 2:
        raise ValueError(f"need even k >= 4, got {k}")
    n = 3 * k - 2
    lo = binom(n // 2, 2)
    return lo, lo + 1


# --------------------------------------------------------------------------
# Scans
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ExactRow:
    n: int
    k: int
    m: int
    h: int
    sp: int


def best_grouped_lower(n: int, k: int, cases=("a", "b")):
    """Best grouped-construction size over all (m, h) splits; with witness."""
    params = decompose(n, k)
    c, r = params.c, params.r
    best = (0, None)
    if r == 0 or c < 2 or k < 3:
        return best
    for m in range(c, n, c):
        if n % m != 0:
            continue
        h = n // m
        for case in cases:
            try:
                plan = plan_grouped(n, k, m, h, case)
            except ValueError:
                continue
            if plan.p > 0 and plan.size > best[0]:
                best = (plan.size, (m, h, case))
    return best


def _exact_rows_for_n(n: int, c_max: int) -> list[ExactRow]:
    rows = []
    for k in range(4, (n - 2) // 2 + 1):
        params = decompose(n, k)
        c, r = params.c, params.r
        if c < 2 or c > c_max or r < 1:
            continue
        candidates = []
        for m in range(c, n, c):
            if n % m != 0:
                continue
            h = n // m
            try:
                plan = plan_grouped(n, k, m, h, "b")
            except ValueError:
                continue
            if plan.p > 0:
                candidates.append((m, h, plan.size))
        if not candidates:
            continue
        # only the best grouped size can meet the upper bound
        best = max(size for _, _, size in candidates)
        if refined_upper_equals(params, best):
            m, h, _ = next(cand for cand in candidates if cand[2] == best)
            rows.append(ExactRow(n, k, m, h, best))
    return rows


def scan_exact(n_max: int, c_max: int = 2, workers: int = 1) -> list[ExactRow]:
    """All (n, k) with n <= n_max where the case-(b) grouped construction
    meets the refined upper bound; one witnessing (m, h) each."""
    if n_max < 4:
        raise ValueError(f"need n_max >= 4, got {n_max}")
    ns = range(4, n_max + 1)
    rows: list[ExactRow] = []
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_exact_rows_for_n, ns, [c_max] * len(ns),
                                  chunksize=64):
                rows.extend(chunk)
    else:
        for n in ns:
            rows.extend(_exact_rows_for_n(n, c_max))
    rows.sort(key=lambda row: (row.n, row.k))
    return rows


@dataclass(frozen=True)
class SmallRRow:
    r: int
    k_threshold: int
    bound: str


def scan_small_r(r_lo: int = 3, r_hi: int = 10) -> list[SmallRRow]:
    """Minimal k from which the refined bound certifies 2k + 4r - t - 1.

    Certification is required for every k between the threshold and the
    point ceil(9 r^2 / 2) where the closed-form hypothesis takes over.
    """
    rows = []
    for r in range(r_lo, r_hi + 1):
        t = small_r_ceiling(r)
        add = 4 * r - t - 1
        k_cap = _ceil_div(9 * r * r, 2)
        ok = {}
        for k in range(4, k_cap + 1):
            upper = refined_upper(decompose(2 * k + r, k))
            ok[k] = upper is not None and upper <= 2 * k + add
        threshold = None
        good_tail = True
        for k in range(k_cap, 3, -1):
            if not ok[k]:
                break
            threshold = k
        if threshold is None:
            raise ArithmeticError(f"no certifying k found for r={r}")
        rows.append(SmallRRow(r, threshold, f"2k+{add}"))
    return rows


# --------------------------------------------------------------------------
# Per-instance report
# --------------------------------------------------------------------------

@dataclass
class BoundsReport:
    params: Params
    mms_value: Fraction
    refined: int | None
    small_r: int | None
    range_3k2: tuple | None
    best_lower: int
    witness: str


def bounds_report(n: int, k: int) -> BoundsReport:
    params = decompose(n, k)
    c, r = params.c, params.r
    mv = mms(params)
    upper = refined_upper(params)
    small = None
    if k >= 4 and n == 2 * k + r and 1 <= r and 9 * r * r <= 2 * k:
        small = small_r_upper(k, r)
    rng = None
    if k >= 4 and k % 2 == 0 and n == 3 * k - 2:
        rng = two_value_range(k)
    if r == 0:
        lower, witness = binom(n - 1, c - 1), "uniform resolution"
    else:
        lower, witness = 1, "single partition"
        lift = binom(c * k - 1, c - 1)
        if lift > lower:
            lower, witness = lift, f"lift of the uniform system at n={c * k}"
        size, wit = best_grouped_lower(n, k)
        if size > lower:
            m, h, case = wit
            lower, witness = size, f"grouped case ({case}) with m={m}, h={h}"
    if upper is not None and lower > upper:
        raise AssertionError(f"lower bound {lower} exceeds upper bound {upper}")
    return BoundsReport(params, mv, upper, small, rng, lower, witness)
