"""Exact rational linear programming via the revised simplex method.

Solves max c.x subject to A x <= b, x >= 0 entirely in Fractions.  The
basis inverse is maintained explicitly; entering columns follow Bland's
rule, which rules out cycling.  Problems whose right side is nonnegative
start from the slack basis; otherwise a phase-one round with artificial
variables finds a starting vertex.
"""

from __future__ import annotations

from fractions import Fraction


class SimplexError(Exception):
    pass


class Unbounded(SimplexError):
    pass


class Infeasible(SimplexError):
    pass


class LinearProgram:
    """max c.x  s.t.  A x <= b, x >= 0, with sparse rows {col: coef}."""

    def __init__(self, n_vars: int):
        self.n = n_vars
        self.rows: list[dict] = []
        self.b: list[Fraction] = []
        self.c: list[Fraction] = [Fraction(0)] * n_vars

    def set_objective(self, coefs) -> None:
        if len(coefs) != self.n:
            raise ValueError("objective length mismatch")
        self.c = [Fraction(v) for v in coefs]

    def add_constraint(self, row: dict, bound) -> None:
        self.rows.append({j: Fraction(v) for j, v in row.items() if v})
        self.b.append(Fraction(bound))

    def solve(self):
        return _solve(self.rows, self.b, self.c)


def _columns(rows, n):
    cols = [dict() for _ in range(n)]
    for i, row in enumerate(rows):
        for j, v in row.items():
            cols[j][i] = v
    return cols


def _simplex(cols, cost, basis, b_inv, x_b, artificial_from):
    """Run Bland-rule iterations in place; returns on optimality."""
    m = len(x_b)
    ncols = len(cols)
    in_basis = [False] * ncols
    for j in basis:
        in_basis[j] = True
    while True:
        # y = cost_B * B_inv
        y = [Fraction(0)] * m
        for krow in range(m):
            cb = cost[basis[krow]]
            if cb:
                row = b_inv[krow]
                for i in range(m):
                    if row[i]:
                        y[i] += cb * row[i]
        enter = -1
        for j in range(min(ncols, artificial_from)):
            if in_basis[j]:
                continue
            red = cost[j]
            for i, v in cols[j].items():
                if y[i]:
                    red -= y[i] * v
            if red > 0:
                enter = j
                break
        if enter < 0:
            return
        # w = B_inv * A_enter
        w = [Fraction(0)] * m
        for i, v in cols[enter].items():
            for krow in range(m):
                if b_inv[krow][i]:
                    w[krow] += b_inv[krow][i] * v
        leave = -1
        best = None
        for krow in range(m):
            ok = w[krow] > 0
            if not ok and basis[krow] >= artificial_from and x_b[krow] == 0 and w[krow] != 0:
                ok = True  # degenerate pivot that evicts an artificial
            if not ok:
                continue
            ratio = x_b[krow] / w[krow] if w[krow] > 0 else Fraction(0)
            if best is None or ratio < best or (ratio == best and basis[krow] < basis[leave]):
                best = ratio
                leave = krow
        if leave < 0:
            raise Unbounded("objective is unbounded above")
        piv = w[leave]
        inv_piv = Fraction(1) / piv
        row_l = b_inv[leave]
        for i in range(m):
            row_l[i] *= inv_piv
        x_b[leave] *= inv_piv
        for krow in range(m):
            if krow == leave or not w[krow]:
                continue
            f = w[krow]
            rk = b_inv[krow]
            for i in range(m):
                if row_l[i]:
                    rk[i] -= f * row_l[i]
            x_b[krow] -= f * x_b[leave]
        in_basis[basis[leave]] = False
        in_basis[enter] = True
        basis[leave] = enter


def _solve(rows, b, c):
    m = len(rows)
    n = len(c)
    if m == 0:
        if any(v > 0 for v in c):
            raise Unbounded("no constraints bound a profitable variable")
        return Fraction(0), [Fraction(0)] * n
    # equality form: row . x + s_i = b_i, rows with negative b are negated
    # and get an artificial variable.
    work_rows = []
    work_b = []
    art_rows = []
    for i, (row, bi) in enumerate(zip(rows, b)):
        if bi < 0:
            work_rows.append({j: -v for j, v in row.items()})
            work_b.append(-bi)
            art_rows.append(i)
        else:
            work_rows.append(dict(row))
            work_b.append(bi)
    n_slack = m
    slack_sign = [Fraction(-1) if i in set(art_rows) else Fraction(1) for i in range(m)]
    n_art = len(art_rows)
    ncols = n + n_slack + n_art
    cols = _columns(work_rows, n)
    for i in range(m):
        cols.append({i: slack_sign[i]})
    art_at = {}
    for idx, i in enumerate(art_rows):
        art_at[i] = n + n_slack + idx
        cols.append({i: Fraction(1)})

    basis = []
    for i in range(m):
        basis.append(art_at.get(i, n + i))
    b_inv = [[Fraction(1) if i == j else Fraction(0) for j in range(m)] for i in range(m)]
    x_b = [Fraction(v) for v in work_b]

    if n_art:
        phase1 = [Fraction(0)] * (n + n_slack) + [Fraction(-1)] * n_art
        _simplex(cols, phase1, basis, b_inv, x_b, n + n_slack)
        infeas = sum((x_b[k] for k in range(m) if basis[k] >= n + n_slack),
                     Fraction(0))
        if infeas != 0:
            raise Infeasible("no feasible point")
    cost = [Fraction(v) for v in c] + [Fraction(0)] * n_slack + [Fraction(0)] * n_art
    _simplex(cols, cost, basis, b_inv, x_b, n + n_slack)
    x = [Fraction(0)] * n
    for krow in range(m):
        if basis[krow] < n:
            x[basis[krow]] = x_b[krow]
    value = sum((c[j] * x[j] for j in range(n) if x[j]), Fraction(0))
    return value, x
