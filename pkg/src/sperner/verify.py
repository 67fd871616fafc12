"""Ground-truth validation of partition systems.

Brute force is the oracle of record here: the Sperner check tests every
pair of parts from distinct partitions, and the detecting-array check
re-derives the same property from the array side.  Certificate checking is
the scalable path for large systems and never does pairwise subset tests.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .combinat import Params, binom
from .construction import PartitionSystem

BRUTE_FORCE_PART_LIMIT = 6000


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def note(self, check: str):
        self.checks.append(check)

    def fail(self, msg: str):
        self.violations.append(msg)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        lines = [f"{status}: {len(self.checks)} checks, {len(self.violations)} violations"]
        lines.extend(f"  - {v}" for v in self.violations)
        return "\n".join(lines)


def check_partition_system(system: PartitionSystem) -> VerificationReport:
    """Each partition covers {0..n-1} disjointly with k nonempty parts."""
    rep = VerificationReport()
    rep.note("partition structure")
    ground = frozenset(range(system.n))
    for idx, parts in enumerate(system.partitions):
        if len(parts) != system.k:
            rep.fail(f"partition {idx}: {len(parts)} parts, want {system.k}")
        seen: set = set()
        for j, part in enumerate(parts):
            if not part:
                rep.fail(f"partition {idx}: part {j} is empty")
            if part & seen:
                dup = sorted(part & seen)
                rep.fail(f"partition {idx}: element(s) {dup} in more than one part")
            seen |= part
        if seen != ground:
            missing = sorted(ground - seen)
            extra = sorted(seen - ground)
            rep.fail(f"partition {idx}: bad cover (missing {missing}, extra {extra})")
    return rep


def check_sperner(system: PartitionSystem,
                  part_limit: int = BRUTE_FORCE_PART_LIMIT) -> VerificationReport:
    """Exhaustive pairwise subset test across parts of distinct partitions."""
    rep = VerificationReport()
    rep.note("pairwise subset test")
    masks = []
    for idx, parts in enumerate(system.partitions):
        for j, part in enumerate(parts):
            mask = 0
            for e in part:
                mask |= 1 << e
            masks.append((idx, j, mask))
    if len(masks) > part_limit:
        raise ValueError(
            f"{len(masks)} parts exceeds the brute-force limit {part_limit}; "
            "use certificate checking for systems this large")
    masks.sort(key=lambda t: bin(t[2]).count("1"))
    for ai in range(len(masks)):
        pa, ja, ma = masks[ai]
        for bi in range(ai + 1, len(masks)):
            pb, jb, mb = masks[bi]
            if pa == pb:
                continue
            if ma & ~mb == 0:
                rep.fail(f"part {ja} of partition {pa} is contained in "
                         f"part {jb} of partition {pb}")
    return rep


def check_almost_uniform(system: PartitionSystem, params: Params) -> VerificationReport:
    """Every partition has k-r parts of size c and r parts of size c+1."""
    rep = VerificationReport()
    rep.note("almost-uniform size profile")
    want = sorted([params.c] * (params.k - params.r) + [params.c + 1] * params.r)
    for idx, parts in enumerate(system.partitions):
        got = sorted(len(p) for p in parts)
        if got != want:
            rep.fail(f"partition {idx}: size profile {got}, want {want}")
    return rep


# --------------------------------------------------------------------------
# Detecting arrays
# --------------------------------------------------------------------------

@dataclass
class DetectingArray:
    """n x p array over symbols {1..k}; column j encodes partition j."""

    n: int
    k: int
    p: int
    rows: list  # n rows, each a tuple of p symbols

    def to_text(self) -> str:
        lines = [f"DA {self.n} {self.k} {self.p}"]
        for row in self.rows:
            lines.append(" ".join(str(s) for s in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "DetectingArray":
        lines = text.splitlines()
        if not lines:
            raise ValueError("empty input")
        head = lines[0].split()
        if len(head) != 4 or head[0] != "DA":
            raise ValueError(f"line 1: bad header {lines[0]!r}")
        n, k, p = (int(x) for x in head[1:])
        rows = []
        for ln, line in enumerate(lines[1:n + 1], start=2):
            row = tuple(int(s) for s in line.split())
            if len(row) != p:
                raise ValueError(f"line {ln}: {len(row)} entries, want {p}")
            if any(s < 1 or s > k for s in row):
                raise ValueError(f"line {ln}: symbol out of range 1..{k}")
            rows.append(row)
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, found {len(rows)}")
        return cls(n, k, p, rows)


def to_detecting_array(system: PartitionSystem) -> DetectingArray:
    """Column j gets symbol l on row i iff element i is in part l of partition j."""
    sys_c = system.canonical()
    rows = [[0] * len(sys_c.partitions) for _ in range(system.n)]
    for j, parts in enumerate(sys_c.partitions):
        for ell, part in enumerate(parts, start=1):
            for e in part:
                rows[e][j] = ell
    if any(0 in row for row in rows):
        raise ValueError("system does not cover the ground set")
    return DetectingArray(system.n, system.k, len(sys_c.partitions),
                          [tuple(row) for row in rows])


def from_detecting_array(arr: DetectingArray) -> PartitionSystem:
    partitions = []
    for j in range(arr.p):
        groups = defaultdict(set)
        for i in range(arr.n):
            groups[arr.rows[i][j]].add(i)
        missing = [s for s in range(1, arr.k + 1) if s not in groups]
        if missing:
            raise ValueError(f"column {j}: symbol(s) {missing} never appear")
        partitions.append([frozenset(groups[s]) for s in sorted(groups)])
    return PartitionSystem(arr.n, arr.k, partitions)


def check_detecting(arr: DetectingArray) -> VerificationReport:
    """Row sets of (column, symbol) pairs are pairwise incomparable."""
    rep = VerificationReport()
    rep.note("detecting-array row-set comparisons")
    rowsets = {}
    for j in range(arr.p):
        for s in range(1, arr.k + 1):
            mask = 0
            for i in range(arr.n):
                if arr.rows[i][j] == s:
                    mask |= 1 << i
            if mask == 0:
                rep.fail(f"column {j}: symbol {s} never appears")
            rowsets[(j, s)] = mask
    keys = sorted(rowsets)
    for ai in range(len(keys)):
        ka = keys[ai]
        ma = rowsets[ka]
        for bi in range(len(keys)):
            if ai == bi:
                continue
            kb = keys[bi]
            mb = rowsets[kb]
            if ma & ~mb == 0:
                rep.fail(f"rows of symbol {ka[1]} in column {ka[0]} are contained "
                         f"in rows of symbol {kb[1]} in column {kb[0]}")
    return rep


# --------------------------------------------------------------------------
# Certificates
# --------------------------------------------------------------------------

_SMALL_LAYER = ("A", "EA")   # the c-set layer
_LARGE_LAYER = ("B", "EB")   # the (c+1)-set layer


def _signature(part, groups):
    return tuple(len(part & g) for g in groups)


def _layer_separation(rep: VerificationReport, small_sigs, large_sigs):
    """No small-layer signature componentwise below a large-layer one.

    Containment of parts implies domination of group signatures, so this
    rules out cross-layer containments without any pairwise set tests.
    """
    rep.note("family layer separation")
    for sa in small_sigs:
        for sb in large_sigs:
            if all(x <= y for x, y in zip(sa, sb)):
                rep.fail(f"signature {sa} of a small part is dominated by "
                         f"signature {sb} of a large part")
                return


def check_certificate(system: PartitionSystem) -> VerificationReport:
    """Family-level validation without pairwise subset tests.

    Needs the construction metadata (groups and per-part family tags).
    Checks that every part matches its declared family shape, that the
    family layers are signature-separated (so no cross-layer containments
    exist), that no part is reused, that classes have k parts, and that
    per-group degree sums equal the group size.
    """
    rep = VerificationReport()
    if system.groups is None or system.part_tags is None:
        rep.fail("system carries no family metadata")
        return rep
    rep.note("family membership and usage")
    groups = [frozenset(g) for g in system.groups]
    seen: dict = {}
    small_sizes: set = set()
    large_sizes: set = set()
    small_sigs: set = set()
    large_sigs: set = set()
    usage = defaultdict(int)
    for idx, (parts, tags) in enumerate(zip(system.partitions, system.part_tags)):
        if len(parts) != system.k:
            rep.fail(f"class {idx}: {len(parts)} parts, want {system.k}")
        for part, tag in zip(parts, tags):
            if part in seen:
                rep.fail(f"part {sorted(part)} reused by classes {seen[part]} and {idx}")
            seen[part] = idx
            usage[tag] += 1
            sig = _signature(part, groups)
            if sum(sig) != len(part):
                rep.fail(f"class {idx}: part {sorted(part)} leaves the group cover")
            kind = tag[0]
            if kind == "B":
                w = tag[1]
                if not part <= groups[w - 1]:
                    rep.fail(f"class {idx}: block {sorted(part)} not inside group {w}")
            elif kind == "A":
                if any(x > 1 for x in sig):
                    rep.fail(f"class {idx}: transversal {sorted(part)} meets a group twice")
            elif kind == "EA":
                if sig[0] != tag[1]:
                    rep.fail(f"class {idx}: part {sorted(part)} has first-side size "
                             f"{sig[0]}, declared {tag[1]}")
            elif kind == "EB":
                if sig[0] != tag[1]:
                    rep.fail(f"class {idx}: part {sorted(part)} has first-side size "
                             f"{sig[0]}, declared {tag[1]}")
            else:
                rep.fail(f"class {idx}: unknown family tag {tag!r}")
            if kind in _SMALL_LAYER:
                small_sizes.add(len(part))
                small_sigs.add(sig)
            else:
                large_sizes.add(len(part))
                large_sigs.add(sig)
        for w, g in enumerate(groups, start=1):
            used = sum(len(part & g) for part in parts)
            if used != len(g):
                rep.fail(f"class {idx}: group {w} degree sum {used}, want {len(g)}")
    if small_sizes and large_sizes:
        if len(small_sizes) > 1 or len(large_sizes) > 1:
            rep.fail(f"mixed sizes within a layer: {small_sizes} / {large_sizes}")
        elif max(small_sizes) + 1 != min(large_sizes):
            rep.fail(f"layer sizes {small_sizes} / {large_sizes} are not c and c+1")
    _layer_separation(rep, small_sigs, large_sigs)
    rep.note("family capacities")
    for tag, cnt in usage.items():
        if tag[0] == "B":
            cap = binom(len(groups[tag[1] - 1]), next(iter(large_sizes)))
        elif tag[0] == "A":
            sz = next(iter(small_sizes))
            cap = len(groups[0]) ** sz
        elif tag[0] == "EA":
            sz = next(iter(small_sizes))
            cap = binom(len(groups[0]), tag[1]) * binom(len(groups[1]), sz - tag[1])
        else:
            sz = next(iter(large_sizes))
            cap = binom(len(groups[0]), tag[1]) * binom(len(groups[1]), sz - tag[1])
        if cnt > cap:
            rep.fail(f"family {tag}: {cnt} parts used, capacity {cap}")
    return rep


@dataclass
class SystemCertificate:
    """Aggregated accounting for systems too large to materialize.

    Classes are grouped by their profile: the multiset of (tag, size,
    signature) triples of their parts.  The checks mirror the proof
    obligations of the underlying colouring: exact class size, per-group
    degree sums, layer separation, and family usage within capacity.
    """

    n: int
    k: int
    p: int
    group_sizes: tuple
    profiles: list          # (profile, count); profile = tuple of (tag, size, sig)
    family_caps: dict       # tag -> capacity


def check_certificate_summary(cert: SystemCertificate) -> VerificationReport:
    rep = VerificationReport()
    rep.note("aggregated class profiles")
    total = 0
    usage = defaultdict(int)
    small_sigs, large_sigs = set(), set()
    small_sizes, large_sizes = set(), set()
    for profile, count in cert.profiles:
        total += count
        if len(profile) != cert.k:
            rep.fail(f"profile with {len(profile)} parts, want {cert.k}")
        for gi, gsz in enumerate(cert.group_sizes):
            used = sum(sig[gi] for _, _, sig in profile)
            if used != gsz:
                rep.fail(f"profile group-{gi + 1} degree sum {used}, want {gsz}")
        for tag, size, sig in profile:
            usage[tag] += count
            if sum(sig) != size:
                rep.fail(f"profile part {tag}: signature {sig} does not sum to {size}")
            if tag[0] in _SMALL_LAYER:
                small_sigs.add(sig)
                small_sizes.add(size)
            else:
                large_sigs.add(sig)
                large_sizes.add(size)
    if total != cert.p:
        rep.fail(f"profiles cover {total} classes, want {cert.p}")
    if small_sizes and large_sizes:
        if max(small_sizes) + 1 != min(large_sizes) or len(small_sizes) > 1:
            rep.fail(f"layer sizes {small_sizes} / {large_sizes} are not c and c+1")
    _layer_separation(rep, small_sigs, large_sigs)
    rep.note("family capacities")
    for tag, cnt in usage.items():
        cap = cert.family_caps.get(tag)
        if cap is None:
            rep.fail(f"family {tag} has no declared capacity")
        elif cnt > cap:
            rep.fail(f"family {tag}: {cnt} parts used, capacity {cap}")
    return rep
