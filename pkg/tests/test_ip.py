import itertools
from fractions import Fraction

import pytest

from sperner.combinat import binom, mms
from sperner.ip import (IpSolution, asymptotic_report, build_instance,
                        certificate, closed_form_solve, exact_solve,
                        greedy_gap_bound, greedy_solve, lp_relax,
                        realize_system, zero_solution)
from sperner.verify import (check_certificate, check_certificate_summary,
                            check_partition_system, check_sperner)


def family_sizes_by_enumeration(n, c):
    """Oracle: count c-sets and (c+1)-sets of a split n-set by first-half size."""
    half = n // 2
    e = {}
    estar = {}
    for size, out in ((c, e), (c + 1, estar)):
        for t in range(size + 1):
            count = 0
            for a in itertools.combinations(range(half), t):
                count += binom(half, size - t)
            out[t] = count
    return e, estar


class TestInstances:
    def test_secA_22_3(self):
        inst = build_instance(22, 3, "secA")
        assert inst.d == 3
        assert inst.e == (54450, 25410, 5082, 330)
        assert inst.estar == (108900, 76230, 25410, 3630, 165)
        assert inst.u == 0
        assert inst.q == 30822
        assert inst.eta == (30822,)
        assert inst.phi == ((1, 1), (2, 2), (3, 3))
        assert inst.cap_diag == 15411
        assert inst.cap_row == {1: 25410, 2: 5082, 3: 330}

    def test_secA_10_3(self):
        inst = build_instance(10, 3, "secA")
        assert inst.d == 1
        assert inst.e == (50, 10)
        assert inst.estar == (100, 50, 5)
        assert inst.u == 0 and inst.q == 10
        assert inst.phi == ((1, 1),)
        # family sizes against the enumeration oracle
        e_cnt, estar_cnt = family_sizes_by_enumeration(10, 3)
        assert e_cnt[inst.d - 0] == inst.e[0]
        assert e_cnt[inst.d - 1] == e_cnt[inst.d + 2] == inst.e[1]
        assert estar_cnt[inst.d + 1] == inst.estar[0]
        assert estar_cnt[inst.d] == estar_cnt[inst.d + 2] == inst.estar[1]

    def test_secA_16_3_shape(self):
        inst = build_instance(16, 3, "secA")
        assert inst.d == 2
        assert inst.u == 0
        a0 = 2 * sum(inst.e[1:])
        assert a0 <= 2 * inst.estar[0]

    def test_secB_26_3(self):
        inst = build_instance(26, 3, "secB")
        assert inst.d == 4
        assert inst.e == (511225, 368082, 133848, 22308, 1287)
        assert inst.estar == (920205, 490776, 133848, 16731, 715)
        assert inst.u == 0 and inst.q == 511224
        assert inst.phi == ((1, 1), (2, 2), (3, 3), (4, 4))

    def test_secB_trivial(self):
        inst = build_instance(24, 5, "secB")
        assert inst.u == -1 and inst.trivial and inst.q == 0
        inst = build_instance(14, 3, "secB")
        assert inst.u == -1 and inst.trivial

    def test_congruence_validation(self):
        with pytest.raises(ValueError):
            build_instance(24, 3, "secA")
        with pytest.raises(ValueError):
            build_instance(22, 3, "secB")
        with pytest.raises(ValueError):
            build_instance(22, 4, "secA")
        with pytest.raises(ValueError):
            build_instance(6, 3, "secA")

    def test_eta_identity_sweep(self):
        for n in range(10, 301):
            if n % 6 == 4:
                inst = build_instance(n, 3, "secA")
                assert inst.eta[0] // 2 + sum(inst.eta[1:]) == inst.q // 2
                if len(inst.eta) > 1 and inst.eta[0] != inst.estar[0]:
                    assert all(v == 0 for v in inst.eta[1:])

    def test_q_le_mms_both_variants(self):
        for n, k, variant in [(22, 3, "secA"), (26, 3, "secB"), (36, 5, "secA"),
                              (34, 5, "secB"), (100, 9, "secA")]:
            inst = build_instance(n, k, variant)
            assert Fraction(inst.q) <= mms(inst.params)

    def test_q_even(self):
        for n, k, variant in [(22, 3, "secA"), (26, 3, "secB"), (16, 5, "secA"),
                              (34, 5, "secB"), (44, 3, "secB")]:
            assert build_instance(n, k, variant).q % 2 == 0

    def test_dump_format(self):
        inst = build_instance(10, 3, "secA")
        sol, _ = exact_solve(inst)
        text = inst.to_text(sol)
        lines = text.splitlines()
        assert lines[0] == "IP secA 10 3 1 0 10"
        assert lines[1] == "cap D 5"
        assert "cap R 1 10" in lines
        assert "x 1 1 5" in lines


class TestGreedy:
    def test_attains_q_22_3(self):
        inst = build_instance(22, 3, "secA")
        sol = greedy_solve(inst)
        assert sol.objective == 30822 == inst.q
        assert sol.feasible()

    def test_single_variable(self):
        inst = build_instance(10, 3, "secA")
        sol = greedy_solve(inst)
        assert sol.x == {(1, 1): 5} and sol.objective == 10

    def test_zero_instance(self):
        inst = build_instance(24, 5, "secB")
        sol = zero_solution(inst)
        assert sol.objective == 0 and sol.feasible()

    def test_variant_guard(self):
        with pytest.raises(ValueError):
            greedy_solve(build_instance(26, 3, "secB"))

    def test_gap_bound_sweep(self):
        for k in (3, 5, 7):
            for n in range(2 * k + 1, 301):
                if n % (2 * k) == k + 1:
                    inst = build_instance(n, k, "secA")
                    sol = greedy_solve(inst)
                    assert Fraction(sol.objective) >= inst.q - greedy_gap_bound(inst)
                    assert sol.objective <= inst.q


class TestClosedForm:
    def test_26_3_infeasible(self):
        res = closed_form_solve(build_instance(26, 3, "secB"))
        assert not res.feasible
        assert res.violations == ["beta_1"]

    def test_u_zero_single_diagonal(self):
        inst = build_instance(26, 3, "secB")
        # with u = 0 the candidate is the single diagonal variable
        res = closed_form_solve(inst)
        assert not res.feasible  # k = 3 rejects it, but the shape is right

    def test_first_k5_instance_with_u1(self):
        # the first n = 4 (mod 10) with u >= 1 for k = 5; pinned regression
        inst = build_instance(174, 5, "secB")
        assert inst.u == 1
        res = closed_form_solve(inst)
        assert res.feasible
        assert res.solution.objective == inst.q
        assert res.solution.feasible()

    def test_trivial(self):
        res = closed_form_solve(build_instance(24, 5, "secB"))
        assert res.feasible and res.solution.objective == 0

    def test_variant_guard(self):
        with pytest.raises(ValueError):
            closed_form_solve(build_instance(22, 3, "secA"))


class TestExactAndLp:
    def test_exact_matches_q(self):
        inst = build_instance(22, 3, "secA")
        sol, optimal = exact_solve(inst)
        assert optimal and sol.objective == 30822

    def test_exact_secB(self):
        inst = build_instance(26, 3, "secB")
        sol, optimal = exact_solve(inst)
        assert optimal and sol.objective == 511224

    def test_trivial(self):
        sol, optimal = exact_solve(build_instance(24, 5, "secB"))
        assert optimal and sol.objective == 0

    def test_bb_agrees_with_diagonal_formula(self):
        for n, k, variant in [(22, 3, "secA"), (26, 3, "secB"), (16, 5, "secA")]:
            inst = build_instance(n, k, variant)
            fast, opt1 = exact_solve(inst)
            slow, opt2 = exact_solve(inst, method="bb")
            assert opt1 and opt2
            assert fast.objective == slow.objective

    def test_lp_values(self):
        assert lp_relax(build_instance(26, 3, "secB"))[0] == 511224
        assert lp_relax(build_instance(10, 3, "secA"))[0] == 10

    def test_lp_sandwich_sweep(self):
        cases = []
        for n in range(10, 141):
            if n % 6 == 4:
                cases.append((n, 3, "secA"))
            if n % 6 == 2 and n >= 26:
                cases.append((n, 3, "secB"))
        cases += [(16, 5, "secA"), (36, 5, "secA"), (174, 5, "secB")]
        for n, k, variant in cases:
            inst = build_instance(n, k, variant)
            if inst.trivial:
                continue
            sol, optimal = exact_solve(inst)
            assert optimal
            if variant == "secA":
                assert sol.objective >= greedy_solve(inst).objective
            lp_val, lp_x = lp_relax(inst)
            assert Fraction(sol.objective) <= lp_val <= inst.q
            assert lp_val <= sol.objective + 2 * len(inst.phi)
            floored = IpSolution(inst, {v: int(val) for v, val in lp_x.items()
                                        if int(val)})
            assert floored.feasible()
            assert floored.objective >= lp_val - 2 * len(inst.phi)

    def test_phi_limit(self):
        inst = build_instance(26, 3, "secB")
        with pytest.raises(ValueError):
            exact_solve(inst, phi_limit=2)
        with pytest.raises(ValueError):
            lp_relax(inst, phi_limit=2)


class TestRealization:
    def test_10_3_full(self):
        inst = build_instance(10, 3, "secA")
        sol, _ = exact_solve(inst)
        system = realize_system(inst, sol, seed=0)
        assert system.size == 10
        assert all(sorted(len(p) for p in parts) == [3, 3, 4]
                   for parts in system.partitions)
        assert check_partition_system(system).ok
        assert check_sperner(system).ok
        assert check_certificate(system).ok

    def test_zero_solution(self):
        inst = build_instance(10, 3, "secA")
        system = realize_system(inst, zero_solution(inst), seed=0)
        assert system.size == 0

    def test_truncated_26_3(self):
        inst = build_instance(26, 3, "secB")
        system = realize_system(inst, IpSolution(inst, {(1, 1): 3}), seed=1)
        assert system.size == 6
        assert check_partition_system(system).ok
        assert check_sperner(system).ok
        assert check_certificate(system).ok

    def test_16_5_padded_classes(self):
        inst = build_instance(16, 5, "secA")
        sol, _ = exact_solve(inst)
        system = realize_system(inst, sol, seed=0)
        assert system.size == 28
        assert all(len(parts) == 5 for parts in system.partitions)
        assert check_partition_system(system).ok
        assert check_sperner(system).ok
        assert check_certificate(system).ok

    def test_34_5_truncated_secB(self):
        inst = build_instance(34, 5, "secB")
        system = realize_system(inst, IpSolution(inst, {(1, 1): 2, (2, 2): 1}),
                                seed=0)
        assert system.size == 6
        assert check_partition_system(system).ok
        assert check_sperner(system).ok
        assert check_certificate(system).ok

    def test_materialization_guard(self):
        inst = build_instance(26, 3, "secB")
        sol, _ = exact_solve(inst)
        with pytest.raises(ValueError):
            realize_system(inst, sol)

    def test_certificate_of_full_solution(self):
        inst = build_instance(22, 3, "secA")
        sol = greedy_solve(inst)
        cert = certificate(inst, sol)
        assert cert.p == 30822
        rep = check_certificate_summary(cert)
        assert rep.ok, rep.summary()

    def test_certificate_of_full_secB(self):
        inst = build_instance(26, 3, "secB")
        sol, _ = exact_solve(inst)
        cert = certificate(inst, sol)
        assert cert.p == 511224
        assert check_certificate_summary(cert).ok


class TestAsymptotics:
    def test_26_3_ratios(self):
        rep = asymptotic_report(26, 3, "secB")
        assert rep.estar_ratios[0] == pytest.approx(920205 / 1022450)
        assert rep.gauss_ratios[0] == pytest.approx(1.0)
        # mms(26, 3) = binom(26, 8) / 2 = 781137.5 exactly
        assert mms(build_instance(26, 3, "secB").params) == Fraction(1562275, 2)
        assert rep.q_over_mms == pytest.approx(511224 / 781137.5, rel=1e-9)

    def test_gauss_ratio_at_zero_always_one(self):
        for n, k, variant in [(22, 3, "secA"), (26, 3, "secB"), (174, 5, "secB")]:
            rep = asymptotic_report(n, k, variant)
            assert rep.gauss_ratios[0] == pytest.approx(1.0)
