"""Structured integer programs whose optima size Sperner partition systems.

Two congruence classes of (n, k) with k odd get an integer program over
variables x_{i,j} on a banded index set Phi.  Variant "secA" covers
n = (2d+1)k + 1 and variant "secB" covers n = (2d+1)k - 1; both live on a
ground set split into two halves, with part families E_t (c-sets with t
points in the first half) and E*_t ((c+1)-sets likewise).  The caps are a
diagonal budget D, off-diagonal band budgets O_l and row budgets R_l; the
objective is 2 * sum x and its optimum is bounded by the even integer Q.

Solvers: a batched version of the slack-consuming greedy (variant secA),
the sparse closed-form candidate (variant secB), exact branch-and-bound
with rational LP bounds, and the exact-rational LP relaxation.
"""

from __future__ import annotations

import heapq
import math
import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .baranyai import partition_ground
from .combinat import Params, binom, decompose, erf_inv, mms
from .construction import PartitionSystem
from .simplex import Infeasible, LinearProgram
from .verify import SystemCertificate

VARIANTS = ("secA", "secB")


@dataclass(frozen=True)
class IpInstance:
    variant: str
    params: Params
    d: int
    u: int
    q: int
    e: tuple
    estar: tuple
    eta: tuple | None
    phi: tuple
    cap_diag: int
    cap_off: dict = field(hash=False)
    cap_row: dict = field(hash=False)

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def trivial(self) -> bool:
        return not self.phi

    def to_text(self, solution: "IpSolution | None" = None) -> str:
        lines = [f"IP {self.variant} {self.n} {self.k} {self.d} {self.u} {self.q}"]
        lines.append(f"cap D {self.cap_diag}")
        for ell in sorted(self.cap_off):
            lines.append(f"cap O {ell} {self.cap_off[ell]}")
        for ell in sorted(self.cap_row):
            lines.append(f"cap R {ell} {self.cap_row[ell]}")
        if solution is not None:
            for (i, j) in self.phi:
                v = solution.x.get((i, j), 0)
                if v:
                    lines.append(f"x {i} {j} {v}")
        return "\n".join(lines) + "\n"


def _phi(u: int, d: int) -> tuple:
    return tuple((i, j) for i in range(u + 1, d + 1)
                 for j in range(i, min(i + u, d) + 1))


def build_instance(n: int, k: int, variant: str) -> IpInstance:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if k < 3 or k % 2 == 0:
        raise ValueError(f"need odd k >= 3, got {k}")
    if n <= 2 * k:
        raise ValueError(f"need n > 2k, got n={n}, k={k}")
    params = decompose(n, k)
    half = n // 2
    if variant == "secA":
        if n % (2 * k) != (k + 1) % (2 * k):
            raise ValueError(f"variant secA needs n = k+1 (mod 2k), got n={n}, k={k}")
        d = (n - k - 1) // (2 * k)
        e = tuple(binom(half, d - ell) * binom(half, d + 1 + ell)
                  for ell in range(d + 1))
        estar = tuple(binom(half, d + 1 - ell) * binom(half, d + 1 + ell)
                      for ell in range(d + 2))

        def a(x):
            return 2 * sum(e[x + 1:])

        def b(x):
            return estar[0] + sum(estar[1:x + 1])

        u = next(x for x in range(d + 1) if a(x) <= (k - 1) * b(x))
        if u > d - 1:
            raise ArithmeticError(f"instance ({n},{k}): u = {u} exceeds d-1")
        q = 2 * (a(u) // (2 * (k - 1)))
        eta = _eta_sequence(q, estar, u)
        cap_diag = eta[0] // 2
        cap_off = {ell: eta[ell] for ell in range(1, u + 1)}
        cap_row = {ell: e[ell] for ell in range(u + 1, d + 1)}
        inst = IpInstance("secA", params, d, u, q, e, estar, eta, _phi(u, d),
                          cap_diag, cap_off, cap_row)
        assert Fraction(q) <= mms(params)
        return inst

    if n % (2 * k) != (k - 1) % (2 * k):
        raise ValueError(f"variant secB needs n = k-1 (mod 2k), got n={n}, k={k}")
    d = (n + 1 - k) // (2 * k)
    e = tuple(binom(half, d - ell) * binom(half, d + ell) for ell in range(d + 1))
    estar = tuple(binom(half, d - ell) * binom(half, d + 1 + ell)
                  for ell in range(d + 1))

    def a(x):
        return 0 if x < 0 else e[0] + 2 * sum(e[1:x + 1])

    def b(x):
        return binom(n, 2 * d + 1) if x < 0 else 2 * sum(estar[x + 1:])

    u = max(x for x in range(-1, d) if (k - 1) * a(x) <= b(x))
    au = a(u)
    q = au - (au & 1)
    cap_diag = e[0] // 2
    cap_off = {ell: e[ell] for ell in range(1, u + 1)}
    cap_row = {ell: estar[ell] for ell in range(u + 1, d + 1)}
    inst = IpInstance("secB", params, d, u, q, e, estar, None, _phi(u, d),
                      cap_diag, cap_off, cap_row)
    assert (k - 1) * binom(n, 2 * d) == binom(n, 2 * d + 1)
    assert 2 * au <= binom(n, 2 * d)
    assert mms(params) == Fraction(binom(n, 2 * d), 2)
    assert Fraction(q) <= mms(params)
    return inst


def _eta_sequence(q: int, estar: tuple, u: int) -> tuple:
    """The truncated prefix of the (c+1)-family sizes summing to q/2."""
    target = q // 2
    cand = 2 * target + (estar[0] & 1)
    if cand <= estar[0]:
        eta = [cand] + [0] * u
    else:
        eta = [estar[0]]
        rem = target - estar[0] // 2
        for ell in range(1, u + 1):
            take = min(rem, estar[ell])
            eta.append(take)
            rem -= take
        if rem:
            raise ArithmeticError(
                f"budget sequence cannot reach q/2 = {target} (short by {rem})")
    got = eta[0] // 2 + sum(eta[1:])
    if got != target:
        raise ArithmeticError(
            f"budget sequence sums to {got}, want q/2 = {target}")
    return tuple(eta)


# --------------------------------------------------------------------------
# Solutions
# --------------------------------------------------------------------------

@dataclass
class IpSolution:
    instance: IpInstance
    x: dict

    @property
    def objective(self) -> int:
        return 2 * sum(self.x.values())

    def slacks(self) -> dict:
        inst = self.instance
        out = {("D",): inst.cap_diag - sum(v for (i, j), v in self.x.items() if i == j)}
        for ell, cap in inst.cap_off.items():
            out[("O", ell)] = cap - sum(v for (i, j), v in self.x.items()
                                        if j - i == ell)
        for ell, cap in inst.cap_row.items():
            used = sum(v for (i, j), v in self.x.items() if i == ell)
            used += sum(v for (i, j), v in self.x.items() if j == ell)
            out[("R", ell)] = cap - used
        return out

    def feasible(self) -> bool:
        if any(v < 0 for v in self.x.values()):
            return False
        if any((i, j) not in set(self.instance.phi) for (i, j) in self.x):
            return False
        return all(s >= 0 for s in self.slacks().values())


def zero_solution(inst: IpInstance) -> IpSolution:
    return IpSolution(inst, {})


# --------------------------------------------------------------------------
# Greedy (variant secA)
# --------------------------------------------------------------------------

def greedy_gap_bound(inst: IpInstance) -> Fraction:
    """The guaranteed gap 2*binom(u,2) + 2(d-u+1)/(k-1) below q."""
    return (2 * binom(inst.u, 2)
            + Fraction(2 * (inst.d - inst.u + 1), inst.k - 1))


def greedy_solve(inst: IpInstance) -> IpSolution:
    """Slack-consuming greedy for variant secA, with batched steps.

    Each step picks the deepest off-diagonal budget y still worth y, the
    furthest row z with enough slack, and increments an anti-diagonal run
    of y variables; with y = 0 it grows the diagonal instead.  Steps are
    applied in the largest batch that leaves every intermediate unit step
    valid, so the trace matches the unit process exactly.
    """
    if inst.variant != "secA":
        raise ValueError("greedy_solve applies to variant secA")
    u, d, k = inst.u, inst.d, inst.k
    x: dict = defaultdict(int)
    beta = {0: inst.cap_diag}
    for ell in range(1, u + 1):
        beta[ell] = inst.cap_off[ell]
    alpha = {ell: inst.cap_row[ell] for ell in range(u + 1, d + 1)}
    if inst.trivial:
        return zero_solution(inst)
    while True:
        y = next((ell for ell in range(u, 0, -1) if beta[ell] >= ell), None)
        if y is None:
            if beta[0] * (k - 1) >= d - u + 1:
                y = 0
            else:
                break
        delta_req = 1 if y >= 1 else 2
        z = next((ell for ell in range(d, u, -1) if alpha[ell] >= delta_req), None)
        if z is None:
            raise AssertionError("no row with enough slack; greedy invariant broken")
        if z < u + 2 * y:
            raise AssertionError(f"z = {z} < u + 2y = {u + 2 * y}; greedy invariant broken")
        if y >= 1:
            window = range(z - 2 * y + 1, z + 1)
            if any(alpha[ell] < 1 for ell in window):
                raise AssertionError("slack run below 1; greedy invariant broken")
            step = min(beta[y] // y, min(alpha[ell] for ell in window))
            for i in range(y):
                x[(z - y - i, z - i)] += step
            beta[y] -= step * y
            for ell in window:
                alpha[ell] -= step
        else:
            by_beta = beta[0] - (-(-(d - u + 1) // (k - 1))) + 1
            step = min(by_beta, alpha[z] // 2)
            x[(z, z)] += step
            beta[0] -= step
            alpha[z] -= 2 * step
    # The termination threshold above is what makes the existence of z
    # provable, not what exhausts the budgets; keep improving while any
    # single move stays feasible.
    for y in range(u, 0, -1):
        for z in range(d, u + y, -1):
            while beta[y] >= 1 and alpha[z] >= 1 and alpha[z - y] >= 1:
                x[(z - y, z)] += 1
                beta[y] -= 1
                alpha[z] -= 1
                alpha[z - y] -= 1
    for z in range(d, u, -1):
        step = min(beta[0], alpha[z] // 2)
        if step:
            x[(z, z)] += step
            beta[0] -= step
            alpha[z] -= 2 * step
    sol = IpSolution(inst, dict(x))
    assert sol.feasible()
    assert sol.objective <= inst.q
    assert Fraction(sol.objective) >= inst.q - greedy_gap_bound(inst)
    return sol


# --------------------------------------------------------------------------
# Closed form (variant secB)
# --------------------------------------------------------------------------

@dataclass
class ClosedFormResult:
    solution: IpSolution | None
    violations: list

    @property
    def feasible(self) -> bool:
        return self.solution is not None


def closed_form_solve(inst: IpInstance) -> ClosedFormResult:
    """The sparse candidate that saturates every band and the diagonal.

    Feasible (with objective exactly q) whenever all row slacks stay
    nonnegative; otherwise the violated row slacks are reported.
    """
    if inst.variant != "secB":
        raise ValueError("closed_form_solve applies to variant secB")
    if inst.u < 0:
        return ClosedFormResult(zero_solution(inst), [])
    u, d = inst.u, inst.d
    phi = set(inst.phi)
    x: dict = defaultdict(int)
    bad_index = []
    assigns = []
    for i in range((u - 1) // 2 + 1):
        assigns.append(((u + 1 + i, 2 * u + 1 - i), inst.e[u - 2 * i]))
    for i in range((u - 2) // 2 + 1):
        assigns.append(((u + 1 + i, 2 * u - i), inst.e[u - 2 * i - 1]))
    assigns.append(((3 * u // 2 + 1, 3 * u // 2 + 1), inst.e[0] // 2))
    for (i, j), v in assigns:
        if (i, j) not in phi:
            bad_index.append(f"x_{i}_{j} outside the index set")
        else:
            x[(i, j)] += v
    if bad_index:
        return ClosedFormResult(None, bad_index)
    sol = IpSolution(inst, dict(x))
    violations = [f"beta_{key[1]}" for key, s in sol.slacks().items()
                  if key[0] == "R" and s < 0]
    violations += [f"alpha_{key[1] if len(key) > 1 else 0}"
                   for key, s in sol.slacks().items()
                   if key[0] in ("D", "O") and s < 0]
    if violations:
        return ClosedFormResult(None, violations)
    assert sol.objective == inst.q
    return ClosedFormResult(sol, [])


# --------------------------------------------------------------------------
# LP relaxation, exact solver
# --------------------------------------------------------------------------

def _build_lp(inst: IpInstance, lb=None, ub=None):
    phi = inst.phi
    idx = {v: i for i, v in enumerate(phi)}
    lb = lb or {}
    ub = ub or {}
    lp = LinearProgram(len(phi))
    lp.set_objective([2] * len(phi))
    shift = sum(lb.get(v, 0) for v in phi)

    def adj(row: dict, cap):
        red = cap - sum(coef * lb.get(phi[j], 0) for j, coef in row.items())
        lp.add_constraint(row, red)

    for ell, cap in sorted(inst.cap_off.items()):
        adj({idx[(i, j)]: 1 for (i, j) in phi if j - i == ell}, cap)
    adj({idx[(i, j)]: 1 for (i, j) in phi if i == j}, inst.cap_diag)
    for ell, cap in sorted(inst.cap_row.items()):
        row: dict = {}
        for (i, j) in phi:
            coef = (i == ell) + (j == ell)
            if coef:
                row[idx[(i, j)]] = coef
        if row:
            adj(row, cap)
    for v, bound in sorted(ub.items()):
        extra = bound - lb.get(v, 0)
        lp.add_constraint({idx[v]: 1}, extra)
    return lp, idx, shift


def lp_relax(inst: IpInstance, phi_limit: int = 20000):
    """Exact rational optimum of the LP relaxation; (value, solution dict)."""
    if len(inst.phi) > phi_limit:
        raise ValueError(f"|Phi| = {len(inst.phi)} exceeds the limit {phi_limit}")
    if inst.trivial:
        return Fraction(0), {}
    lp, idx, _ = _build_lp(inst)
    value, xs = lp.solve()
    sol = {v: xs[idx[v]] for v in inst.phi if xs[idx[v]]}
    assert value <= inst.q
    return value, sol


def _floor_improve(inst: IpInstance, base: dict) -> IpSolution:
    """Floor a fractional solution, then greedily grow any variable."""
    x = {v: int(val) for v, val in base.items() if int(val)}
    sol = IpSolution(inst, x)
    slack = sol.slacks()
    for (i, j) in inst.phi:
        gains = [slack[("O", j - i)] if i != j else slack[("D",)]]
        if i == j:
            gains.append(slack[("R", i)] // 2)
        else:
            gains.append(slack[("R", i)])
            gains.append(slack[("R", j)])
        inc = min(gains)
        if inc > 0:
            x[(i, j)] = x.get((i, j), 0) + inc
            if i == j:
                slack[("D",)] -= inc
                slack[("R", i)] -= 2 * inc
            else:
                slack[("O", j - i)] -= inc
                slack[("R", i)] -= inc
                slack[("R", j)] -= inc
    out = IpSolution(inst, x)
    assert out.feasible()
    return out


def exact_solve(inst: IpInstance, node_budget: int = 100000,
                phi_limit: int = 2000, method: str = "auto"):
    """Exact optimum by branch and bound; (solution, proved_optimal).

    Diagonal-only index sets decouple into min(D, sum floor(R_l / 2)) and
    are solved directly unless method="bb" forces the search.
    """
    if len(inst.phi) > phi_limit:
        raise ValueError(f"|Phi| = {len(inst.phi)} exceeds the limit {phi_limit}")
    if inst.trivial:
        return zero_solution(inst), True
    diag_only = all(i == j for (i, j) in inst.phi)
    if diag_only and method == "auto":
        x: dict = {}
        left = inst.cap_diag
        for (i, _) in inst.phi:
            take = min(inst.cap_row[i] // 2, left)
            if take:
                x[(i, i)] = take
            left -= take
        sol = IpSolution(inst, x)
        assert sol.feasible()
        return sol, True
    best = _floor_improve(inst, lp_relax(inst)[1])
    counter = 0
    heap = []

    def push(lb, ub):
        nonlocal counter
        try:
            lp, idx, shift = _build_lp(inst, lb, ub)
            value, xs = lp.solve()
        except Infeasible:
            return
        bound = value + 2 * shift
        ibound = math.floor(bound)
        ibound -= ibound & 1
        if ibound <= best.objective:
            return
        xfull = {v: xs[idx[v]] + lb.get(v, 0) for v in inst.phi}
        counter += 1
        heapq.heappush(heap, (-ibound, counter, lb, ub, xfull))

    push({}, {})
    expanded = 0
    optimal = True
    while heap:
        nbound, _, lb, ub, xfull = heapq.heappop(heap)
        if -nbound <= best.objective:
            continue
        if expanded >= node_budget:
            optimal = False
            break
        expanded += 1
        frac = {v: val for v, val in xfull.items()
                if val != int(val)}
        if not frac:
            cand = IpSolution(inst, {v: int(val) for v, val in xfull.items() if val})
            assert cand.feasible()
            if cand.objective > best.objective:
                best = cand
            continue
        cand = _floor_improve(inst, xfull)
        if cand.objective > best.objective:
            best = cand
        v = min(frac, key=lambda vv: (abs(frac[vv] - int(frac[vv]) - Fraction(1, 2)), vv))
        val = frac[v]
        ub1 = dict(ub)
        ub1[v] = math.floor(val)
        push(lb, ub1)
        lb1 = dict(lb)
        lb1[v] = math.floor(val) + 1
        push(lb1, ub)
    assert best.objective <= inst.q
    return best, optimal


# --------------------------------------------------------------------------
# Realization into partition systems
# --------------------------------------------------------------------------

def _class_profiles(inst: IpInstance, sol: IpSolution):
    """Per-class part profiles [(tag, x1_count), ...] including padding."""
    d, u, k = inst.d, inst.u, inst.k
    secA = inst.variant == "secA"
    profiles = []
    for (i, j) in sorted(sol.x):
        v = sol.x[(i, j)]
        if secA:
            forward = [("EA", d - i), ("EA", d + 1 + j), ("EB", d + 1 + i - j)]
            mirror = [("EA", d - j), ("EA", d + 1 + i), ("EB", d + 1 + j - i)]
        else:
            forward = [("EB", d - i), ("EB", d + 1 + j), ("EA", d + i - j)]
            mirror = [("EB", d - j), ("EB", d + 1 + i), ("EA", d + j - i)]
        profiles.extend(list(forward) for _ in range(v))
        profiles.extend(list(mirror) for _ in range(v))
    # padding from the untouched family pairs, (k-3)/2 pairs per class
    pads_needed = len(profiles) * (k - 3) // 2
    if pads_needed:
        slacks = sol.slacks()
        pad_tag = "EA" if secA else "EB"
        supply = {ell: slacks[("R", ell)] for ell in range(u + 1, d + 1)}
        assert sum(supply.values()) >= pads_needed
        levels = sorted(supply, key=lambda ell: -supply[ell])
        li = 0
        for prof in profiles:
            for _ in range((k - 3) // 2):
                while supply[levels[li % len(levels)]] <= 0:
                    li += 1
                ell = levels[li % len(levels)]
                supply[ell] -= 1
                li += 1
                prof.append((pad_tag, d - ell))
                prof.append((pad_tag, d + 1 + ell))
    return profiles


def realize_system(inst: IpInstance, sol: IpSolution, seed: int = 0,
                   part_limit: int = 6000, restarts: int = 20,
                   class_tries: int = 200) -> PartitionSystem:
    """Materialize a solution as an explicit partition system.

    Each class partitions both halves of the ground set; a part with
    first-side count t takes one side-one block of size t and one side-two
    block of size (part size - t).  Block sizes under heavy load are
    handed out by the staged flow allocator (globally distinct by
    construction); lightly loaded sizes are drawn by seeded sampling with
    a distinctness check and retries.  Distinct blocks per side and size
    make all parts distinct.
    """
    n, k = inst.n, inst.k
    half = n // 2
    c = 2 * inst.d + (1 if inst.variant == "secA" else 0)
    profiles = _class_profiles(inst, sol)
    p = len(profiles)
    if p * k > part_limit:
        raise ValueError(f"{p * k} parts exceed the materialization limit "
                         f"{part_limit}; use certificate() instead")
    sides = (list(range(half)), list(range(half, n)))
    if p == 0:
        return PartitionSystem(n, k, [], [list(sides[0]), list(sides[1])], [])
    size_of = {"EA": c, "EB": c + 1}
    side_sizes = [[], []]   # per side, per class: list of block sizes
    for prof in profiles:
        s1 = [t for _, t in prof if t]
        s2 = [size_of[tag] - t for tag, t in prof if size_of[tag] - t]
        assert sum(s1) == half and sum(s2) == half
        side_sizes[0].append(s1)
        side_sizes[1].append(s2)

    for restart in range(restarts):
        rng = random.Random(f"{seed}:{restart}:ip-realize")
        blocks = [[defaultdict(list) for _ in range(p)] for _ in range(2)]
        used = set()
        ok = True
        for side in (0, 1):
            load = defaultdict(int)
            for sizes in side_sizes[side]:
                for f in sizes:
                    load[f] += 1
            flow_sizes = {f for f, cnt in load.items()
                          if 2 * cnt > binom(half, f)}
            if flow_sizes:
                unit_lists = [[f for f in sizes if f in flow_sizes]
                              for sizes in side_sizes[side]]
                alloc = partition_ground(
                    sides[side], unit_lists, complete=True,
                    rng=random.Random(f"{seed}:{restart}:flow:{side}"))
                for ci, got in enumerate(alloc):
                    for blk in got:
                        blocks[side][ci][len(blk)].append(blk)
                        used.add((side, blk))
            for ci, sizes in enumerate(side_sizes[side]):
                rest = sorted(f for f in sizes if f not in flow_sizes)
                if not rest:
                    continue
                fixed_pts = set()
                for got in blocks[side][ci].values():
                    for blk in got:
                        fixed_pts |= blk
                placed = None
                for _ in range(class_tries):
                    avail = [e for e in sides[side] if e not in fixed_pts]
                    rng.shuffle(avail)
                    cand = []
                    pos = 0
                    good = True
                    for f in rest:
                        blk = frozenset(avail[pos:pos + f])
                        pos += f
                        if (side, blk) in used or blk in cand:
                            good = False
                            break
                        cand.append(blk)
                    if good:
                        placed = cand
                        break
                if placed is None:
                    ok = False
                    break
                for blk in placed:
                    blocks[side][ci][len(blk)].append(blk)
                    used.add((side, blk))
            if not ok:
                break
        if not ok:
            continue
        partitions, tags = [], []
        for ci, prof in enumerate(profiles):
            parts, ptags = [], []
            q1 = {f: list(v) for f, v in blocks[0][ci].items()}
            q2 = {f: list(v) for f, v in blocks[1][ci].items()}
            for tag, t in prof:
                sz = size_of[tag]
                b1 = q1[t].pop() if t else frozenset()
                b2 = q2[sz - t].pop() if sz - t else frozenset()
                parts.append(b1 | b2)
                ptags.append((tag, t))
            partitions.append(parts)
            tags.append(ptags)
        return PartitionSystem(n, k, partitions,
                               [list(sides[0]), list(sides[1])], tags)
    raise RuntimeError(f"could not realize the solution after {restarts} restarts")


def certificate(inst: IpInstance, sol: IpSolution) -> SystemCertificate:
    """Aggregated accounting certificate, independent of materialization."""
    half = inst.n // 2
    c = 2 * inst.d + (1 if inst.variant == "secA" else 0)
    size_of = {"EA": c, "EB": c + 1}
    profiles = _class_profiles(inst, sol)
    counts = defaultdict(int)
    for prof in profiles:
        key = tuple(sorted((tag, size_of[tag], (t, size_of[tag] - t))
                           for tag, t in prof))
        counts[key] += 1
    caps = {}
    for prof in profiles:
        for tag, t in prof:
            sz = size_of[tag]
            caps[(tag, t)] = binom(half, t) * binom(half, sz - t)
    # profile tags carry the first-side count, matching the checker's key
    keyed = []
    for key, cnt in sorted(counts.items()):
        prof = tuple(((tag, sig[0]), sz, sig) for tag, sz, sig in key)
        keyed.append((prof, cnt))
    return SystemCertificate(inst.n, inst.k, len(profiles), (half, half),
                             keyed, {(tag, t): cap for (tag, t), cap in caps.items()})


# --------------------------------------------------------------------------
# Asymptotic diagnostics
# --------------------------------------------------------------------------

@dataclass
class AsymptoticReport:
    n: int
    k: int
    variant: str
    d: int
    u: int
    q: int
    mms_value: Fraction
    estar_ratios: list    # estar_l / ((k-1) e_l) for l up to ceil(sqrt(d))
    gauss_ratios: list    # e_l / (e_0 exp(-k l^2 / (d (k-1))))
    u_ratio: float        # u / (erf_inv(1/2) sqrt(d (k-1) / k))
    q_over_mms: float


def asymptotic_report(n: int, k: int, variant: str) -> AsymptoticReport:
    inst = build_instance(n, k, variant)
    d, u, q = inst.d, inst.u, inst.q
    lmax = math.isqrt(d - 1) + 1 if d > 1 else 1
    lmax = min(lmax, len(inst.e) - 1, len(inst.estar) - 1)
    estar_ratios = [float(Fraction(inst.estar[ell], (k - 1) * inst.e[ell]))
                    for ell in range(lmax + 1)]
    gauss_ratios = [float(Fraction(inst.e[ell], inst.e[0]))
                    / math.exp(-k * ell * ell / (d * (k - 1)))
                    for ell in range(lmax + 1)]
    u_pred = erf_inv(0.5) * math.sqrt(d * (k - 1) / k)
    mv = mms(inst.params)
    return AsymptoticReport(n, k, variant, d, u, q, mv, estar_ratios,
                            gauss_ratios, u / u_pred if u_pred else float("nan"),
                            float(Fraction(q) / mv))
