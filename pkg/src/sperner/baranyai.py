"""Resolutions of complete uniform hypergraphs, built constructively.

`resolve(m, c)` arranges all c-subsets of {1..m} (for c | m) into
binom(m-1, c-1) classes, each class partitioning {1..m}.  The engine behind
it, `allocate_blocks`, solves the more general problem of splitting all
s-subsets of a ground set into units of prescribed sizes so that every
unit is almost regular (per-point degrees differ by at most one); with
s * size <= h that forces the unit's blocks to be pairwise disjoint.

Construction: ground elements are placed one at a time.  The multiset of
partial blocks with content A always numbers binom(h - j, s - |A|) after j
placements, and a staged circulation (exact per-content quotas, windowed
per-unit and per-parent intake) decides which blocks absorb the next
element.  A proportional fractional flow always satisfies the bounds, so
an integral one exists and each stage is solvable.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .combinat import binom
from .flows import feasible_circulation


class AllocationError(RuntimeError):
    """Raised when a staged allocation cannot be completed."""


def _window(total: int, h: int) -> tuple[int, int]:
    lo, rem = divmod(total, h)
    return lo, lo + (1 if rem else 0)


def _stage_bounds(alpha: int, beta: int, remaining: int, sigma: int) -> tuple[int, int]:
    return (max(alpha, remaining - beta * (sigma - 1)),
            min(beta, remaining - alpha * (sigma - 1)))


def partition_ground(points, unit_blocks, parents=None, rng=None,
                     complete: bool = False):
    """Hand every unit blocks of its prescribed sizes, one staged flow per point.

    unit_blocks lists, per unit, the sizes of the blocks it must receive.
    Blocks of equal size are globally distinct subsets, each unit's blocks
    are pairwise disjoint whenever its total block size is at most the
    ground size, and per-point degrees stay in the floor/ceil window of
    total/|ground| for every unit and every parent group.  For each block
    size the grand total must equal binom(h, size); with complete=True a
    slack unit per size is added to make it so.
    """
    points = list(points)
    h = len(points)
    unit_blocks = [sorted(bl) for bl in unit_blocks]
    nu_real = len(unit_blocks)
    if parents is None:
        parents = [0] * nu_real
    parents = list(parents)
    size_tot = defaultdict(int)
    for bl in unit_blocks:
        for f in bl:
            if not 0 < f <= h:
                raise ValueError(f"block size {f} outside 1..{h}")
            size_tot[f] += 1
    dummy_pad = []
    for f, cnt in sorted(size_tot.items()):
        pool = binom(h, f)
        if cnt > pool:
            raise ValueError(f"{cnt} blocks of size {f} exceed the pool {pool}")
        if cnt < pool:
            if not complete:
                raise ValueError(f"size {f} uses {cnt} of {pool} blocks; "
                                 "pass complete=True to pad")
            dummy_pad.append([f] * (pool - cnt))
    for pad in dummy_pad:
        unit_blocks.append(pad)
        parents.append(("slack", pad[0]))
    nu = len(unit_blocks)
    if rng is not None:
        rng.shuffle(points)

    totals = [sum(bl) for bl in unit_blocks]
    ptotal = defaultdict(int)
    for i in range(nu):
        ptotal[parents[i]] += totals[i]
    uwin = [_window(t, h) for t in totals]
    pwin = {p: _window(t, h) for p, t in ptotal.items()}

    # per unit: multiset of (target size, current content)
    blocks = [defaultdict(int) for _ in range(nu)]
    for i, bl in enumerate(unit_blocks):
        for f in bl:
            blocks[i][(f, frozenset())] += 1
    r_unit = list(totals)
    r_parent = dict(ptotal)

    for stage, pt in enumerate(points):
        sigma = h - stage
        gcount = defaultdict(int)
        for bl in blocks:
            for (f, content), cnt in bl.items():
                if len(content) < f:
                    gcount[(f, content)] += cnt
        needed = {}
        for (f, content), g in gcount.items():
            if g != binom(sigma, f - len(content)):
                raise AllocationError("content census out of balance")
            needed[(f, content)] = binom(sigma - 1, f - len(content) - 1)

        plist = sorted(pwin, key=str)
        nid = 0
        S = nid; nid += 1
        T = nid; nid += 1
        pnode = {}
        for p in plist:
            pnode[p] = nid; nid += 1
        unode = list(range(nid, nid + nu)); nid += nu
        ckeys = sorted(needed, key=lambda key: (key[0], sorted(key[1])))
        cnode = {}
        for key in ckeys:
            cnode[key] = nid; nid += 1

        arcs = []
        info = []
        for p in plist:
            lo, hi = _stage_bounds(*pwin[p], r_parent[p], sigma)
            arcs.append((S, pnode[p], lo, hi)); info.append(None)
        for i in range(nu):
            lo, hi = _stage_bounds(*uwin[i], r_unit[i], sigma)
            arcs.append((pnode[parents[i]], unode[i], lo, hi)); info.append(None)
            for key in sorted(blocks[i], key=lambda key: (key[0], sorted(key[1]))):
                f, content = key
                cnt = blocks[i][key]
                if len(content) < f:
                    forced = cnt if (f - len(content)) == sigma else 0
                    arcs.append((unode[i], cnode[key], forced, cnt))
                    info.append((i, key))
        for key in ckeys:
            arcs.append((cnode[key], T, needed[key], needed[key]))
            info.append(None)
        arcs.append((T, S, 0, 1 << 60)); info.append(None)

        flows = feasible_circulation(nid, arcs)
        if flows is None:
            raise AllocationError(f"stage {stage} infeasible")
        for fl, inf in zip(flows, info):
            if not fl or inf is None:
                continue
            i, (f, content) = inf
            blocks[i][(f, content)] -= fl
            if not blocks[i][(f, content)]:
                del blocks[i][(f, content)]
            blocks[i][(f, content | {pt})] += fl
            r_unit[i] -= fl
            r_parent[parents[i]] -= fl

    out = []
    for i in range(nu_real):
        unit = []
        for (f, content), cnt in blocks[i].items():
            unit.extend([content] * cnt)
        out.append(sorted(unit, key=lambda b: (len(b), sorted(b))))
    return out


def allocate_blocks(points, size, unit_sizes, parents=None, rng=None):
    """Partition all `size`-subsets of points into units of given sizes.

    Returns a list of block lists (frozensets), one per unit.  Each unit's
    per-point degree is floor or ceil of size*unit_size/len(points); the
    same window holds per parent group when `parents` labels units.  The
    rng only shuffles the placement order of points.
    """
    total = binom(len(list(points)), size)
    if sum(unit_sizes) != total:
        raise ValueError(f"unit sizes sum to {sum(unit_sizes)}, need {total}")
    return partition_ground(points, [[size] * cnt for cnt in unit_sizes],
                            parents=parents, rng=rng)


@dataclass
class Resolution:
    """All c-subsets of {1..m} arranged into parallel classes."""

    m: int
    c: int
    classes: list = field(repr=False)
    lookup: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if not self.lookup:
            for ell, cls in enumerate(self.classes):
                for i, block in enumerate(cls):
                    self.lookup[block] = (ell, i)

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def to_text(self) -> str:
        lines = []
        for cls in self.classes:
            lines.append(" | ".join(" ".join(str(e) for e in sorted(b)) for b in cls))
        return "\n".join(lines) + "\n"


def _resolve_pairs(m: int) -> list:
    """Round-robin (circle method) 1-factorization of K_m, m even."""
    if m == 2:
        return [[frozenset((1, 2))]]
    classes = []
    for rnd in range(m - 1):
        cls = [frozenset((m, rnd + 1))]
        for i in range(1, m // 2):
            a = (rnd + i) % (m - 1) + 1
            b = (rnd - i) % (m - 1) + 1
            cls.append(frozenset((a, b)))
        classes.append(cls)
    return classes


def _canon_classes(classes):
    out = []
    for cls in classes:
        out.append(sorted(cls, key=sorted))
    out.sort(key=lambda cls: [sorted(b) for b in cls])
    return out


def resolve(m: int, c: int) -> Resolution:
    """Index all c-subsets of {1..m} into binom(m-1,c-1) parallel classes."""
    if m < 1 or c < 1 or m % c != 0:
        raise ValueError(f"need c | m with m >= c >= 1, got m={m}, c={c}")
    if c == m:
        classes = [[frozenset(range(1, m + 1))]]
    elif c == 1:
        classes = [[frozenset((e,)) for e in range(1, m + 1)]]
    elif c == 2:
        classes = _resolve_pairs(m)
    else:
        n_classes = binom(m - 1, c - 1)
        per_class = m // c
        alloc = allocate_blocks(range(1, m + 1), c, [per_class] * n_classes)
        classes = alloc
    return Resolution(m, c, _canon_classes(classes))


def verify_resolution(res: Resolution) -> list[str]:
    """All violations of the resolution invariants; empty iff valid."""
    violations = []
    ground = frozenset(range(1, res.m + 1))
    expect_classes = binom(res.m - 1, res.c - 1)
    if len(res.classes) != expect_classes:
        violations.append(
            f"class count {len(res.classes)} != binom(m-1,c-1) = {expect_classes}")
    seen = {}
    for ell, cls in enumerate(res.classes):
        if len(cls) != res.m // res.c:
            violations.append(f"class {ell}: {len(cls)} blocks, want {res.m // res.c}")
        covered = []
        for block in cls:
            if len(block) != res.c:
                violations.append(f"class {ell}: block {sorted(block)} has size {len(block)}")
            if block in seen:
                violations.append(
                    f"block {sorted(block)} appears in classes {seen[block]} and {ell}")
            seen[block] = ell
            covered.extend(block)
        if sorted(covered) != sorted(ground):
            violations.append(f"class {ell} is not a partition of the ground set")
    if len(seen) != binom(res.m, res.c):
        violations.append(
            f"{len(seen)} distinct blocks, want binom(m,c) = {binom(res.m, res.c)}")
    return violations
