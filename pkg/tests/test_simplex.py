import itertools
import random
from fractions import Fraction

import pytest

from sperner.simplex import Infeasible, LinearProgram, Unbounded


def brute_force_optimum(rows, b, c):
    """Independent oracle: enumerate all basic points of {Ax <= b, x >= 0}.

    Every vertex of the polytope solves n of the constraints (including
    nonnegativity) with equality, so trying all n-subsets and keeping the
    feasible solutions finds the optimum of a bounded LP.
    """
    n = len(c)
    cons = []
    for row, bi in zip(rows, b):
        cons.append(([Fraction(row.get(j, 0)) for j in range(n)], Fraction(bi)))
    for j in range(n):
        cons.append(([Fraction(-(i == j)) for i in range(n)], Fraction(0)))
    best = None
    for subset in itertools.combinations(range(len(cons)), n):
        mat = [cons[i][0][:] + [cons[i][1]] for i in subset]
        # Gaussian elimination over the rationals
        x = _solve_square(mat, n)
        if x is None:
            continue
        ok = all(sum(a * v for a, v in zip(row, x)) <= bi for row, bi in cons)
        if not ok:
            continue
        val = sum(ci * xi for ci, xi in zip(c, x))
        if best is None or val > best:
            best = val
    return best


def _solve_square(mat, n):
    mat = [row[:] for row in mat]
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if piv is None:
            return None
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = Fraction(1) / mat[col][col]
        mat[col] = [v * inv for v in mat[col]]
        for r in range(n):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[col])]
    return [mat[r][n] for r in range(n)]


class TestSimplexKnown:
    def test_basic(self):
        lp = LinearProgram(2)
        lp.set_objective([3, 2])
        lp.add_constraint({0: 1, 1: 1}, 4)
        lp.add_constraint({0: 1, 1: 3}, 6)
        assert lp.solve() == (12, [4, 0])

    def test_interior_vertex(self):
        lp = LinearProgram(2)
        lp.set_objective([2, 3])
        lp.add_constraint({0: 2, 1: 1}, 10)
        lp.add_constraint({0: 1, 1: 3}, 15)
        assert lp.solve() == (18, [3, 4])

    def test_fractional_optimum(self):
        lp = LinearProgram(2)
        lp.set_objective([1, 1])
        lp.add_constraint({0: 2, 1: 1}, 3)
        lp.add_constraint({0: 1, 1: 2}, 3)
        value, x = lp.solve()
        assert value == 2 and x == [1, 1]
        lp = LinearProgram(1)
        lp.set_objective([2])
        lp.add_constraint({0: 3}, 2)
        assert lp.solve() == (Fraction(4, 3), [Fraction(2, 3)])

    def test_unbounded(self):
        lp = LinearProgram(2)
        lp.set_objective([1, 0])
        lp.add_constraint({1: 1}, 1)
        with pytest.raises(Unbounded):
            lp.solve()

    def test_negative_rhs_feasible(self):
        lp = LinearProgram(1)
        lp.set_objective([-1])
        lp.add_constraint({0: -1}, -1)
        assert lp.solve() == (-1, [1])

    def test_infeasible(self):
        lp = LinearProgram(1)
        lp.set_objective([1])
        lp.add_constraint({0: 1}, 1)
        lp.add_constraint({0: -1}, -2)
        with pytest.raises(Infeasible):
            lp.solve()

    def test_degenerate_cycling_guard(self):
        # Beale's classical cycling example; Bland's rule must terminate
        lp = LinearProgram(4)
        lp.set_objective([Fraction(3, 4), -150, Fraction(1, 50), -6])
        lp.add_constraint({0: Fraction(1, 4), 1: -60, 2: Fraction(-1, 25), 3: 9}, 0)
        lp.add_constraint({0: Fraction(1, 2), 1: -90, 2: Fraction(-1, 50), 3: 3}, 0)
        lp.add_constraint({2: 1}, 1)
        value, _ = lp.solve()
        assert value == Fraction(1, 20)

    def test_no_constraints(self):
        lp = LinearProgram(2)
        lp.set_objective([0, -1])
        assert lp.solve() == (0, [0, 0])


class TestSimplexAgainstEnumeration:
    def test_random_small_lps(self):
        rng = random.Random(20240817)
        for trial in range(40):
            n = rng.randint(1, 3)
            m = rng.randint(1, 3)
            rows = []
            b = []
            for _ in range(m):
                rows.append({j: rng.randint(0, 4) for j in range(n)})
                b.append(rng.randint(0, 9))
            c = [rng.randint(0, 5) for _ in range(n)]
            # ensure boundedness: cap every variable
            for j in range(n):
                rows.append({j: 1})
                b.append(rng.randint(1, 8))
            lp = LinearProgram(n)
            lp.set_objective(c)
            for row, bi in zip(rows, b):
                lp.add_constraint(row, bi)
            value, x = lp.solve()
            expect = brute_force_optimum(rows, b, c)
            assert value == expect, (trial, rows, b, c)
            assert all(xi >= 0 for xi in x)
            for row, bi in zip(rows, b):
                assert sum(row.get(j, 0) * x[j] for j in range(n)) <= bi
