"""Sign-reversing involution on (closed walk, linear subdigraph) pairs.

A pair (c, gamma) with L(c) + L(gamma) = r has signed weight
(-1)^(cycles of gamma) * w(c) * w(gamma).  Walking along c from its start,
the first event decides the pair's fate:

* the walk steps on a vertex y of gamma: splice the gamma-cycle through y
  into the walk at y and drop it from gamma (scenario 1);
* the walk closes a simple cycle before touching gamma: cut that cycle out
  of the walk and add it to gamma (scenario 2);
* neither happens because c itself is a simple cycle missing gamma: the
  pair is GOOD and is left alone.

Both moves change the cycle count of gamma by one and keep the multiset of
arcs, so they negate the signed weight, and each undoes the other.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Union

from . import kernels
from .enumeration import (
    ClosedWalk,
    Cycle,
    LinearSubdigraph,
    enumerate_closed_walks,
    enumerate_lsd,
    iter_lsd,
    lsd_weight,
    walk_weight,
)
from .graph import WeightedDigraph, arcs_to_dot
from .ring import RingElement, format_expr, normalize, ring_sum, scalar_times


@dataclass(frozen=True)
class WalkCyclePair:
    walk: ClosedWalk
    subdigraph: LinearSubdigraph

    @property
    def r(self) -> int:
        return self.walk.length + self.subdigraph.length

    def __str__(self) -> str:
        return f"({self.walk}, {self.subdigraph})"


@dataclass(frozen=True)
class Good:
    is_bad = False


@dataclass(frozen=True)
class BadScenario1:
    """Walk position ``position`` is the first one on a subdigraph vertex ``y``."""

    position: int
    y: int
    is_bad = True


@dataclass(frozen=True)
class BadScenario2:
    """x_open = x_close is the first repetition, reached without meeting gamma."""

    open: int
    close: int
    is_bad = True


PairClass = Union[Good, BadScenario1, BadScenario2]


def signed_weight(g: WeightedDigraph, p: WalkCyclePair) -> RingElement:
    w = walk_weight(g, p.walk) * lsd_weight(g, p.subdigraph)
    return -w if p.subdigraph.cycle_count % 2 else w


def _member_mask(p: WalkCyclePair) -> bytearray:
    size = max(max(p.walk.vertices), max(p.subdigraph.vertex_set, default=0)) + 1
    mask = bytearray(size)
    for v in p.subdigraph.vertex_set:
        mask[v] = 1
    return mask


def classify(p: WalkCyclePair) -> PairClass:
    code, a, b = kernels.classify_walk(p.walk.vertices, _member_mask(p))
    if code == kernels.GOOD:
        return Good()
    if code == kernels.SCENARIO_1:
        return BadScenario1(a, b)
    return BadScenario2(a, b)


def is_bad_by_definition(p: WalkCyclePair) -> bool:
    """BAD iff the walk meets the subdigraph or is not a simple cycle."""
    meets = bool(set(p.walk.vertices) & p.subdigraph.vertex_set)
    return meets or not p.walk.is_simple_cycle()


def phi(p: WalkCyclePair, cls: PairClass | None = None) -> WalkCyclePair:
    """Image of a BAD pair under the involution.  GOOD pairs are rejected."""
    cls = classify(p) if cls is None else cls
    vs = p.walk.vertices
    if isinstance(cls, BadScenario1):
        t, y = cls.position, cls.y
        cyc = p.subdigraph.cycle_through(y)
        loop = cyc.rotated_from(y)
        new_walk = vs[: t + 1] + loop[1:] + (y,) + vs[t + 1:]
        return WalkCyclePair(ClosedWalk(new_walk), p.subdigraph.without(cyc))
    if isinstance(cls, BadScenario2):
        s, t = cls.open, cls.close
        cyc = Cycle(vs[s:t])
        new_walk = vs[: s + 1] + vs[t + 1:]
        return WalkCyclePair(ClosedWalk(new_walk), p.subdigraph.with_cycle(cyc))
    raise ValueError(f"phi is undefined on GOOD pair {p}")


def iter_pairs(g: WeightedDigraph, r: int) -> Iterator[WalkCyclePair]:
    if r < 1:
        raise ValueError(f"total length must be >= 1, got {r}")
    for k in range(max(1, r - g.n), r + 1):
        lsds = enumerate_lsd(g, r - k)
        if not lsds:
            continue
        for walk in enumerate_closed_walks(g, k):
            for gam in lsds:
                yield WalkCyclePair(walk, gam)


def enumerate_pairs(g: WeightedDigraph, r: int) -> List[WalkCyclePair]:
    """All pairs with L(c) >= 1 and L(c) + L(gamma) = r, ordered by L(c),
    then walk, then subdigraph."""
    return list(iter_pairs(g, r))


def count_pairs(g: WeightedDigraph, r: int) -> int:
    """Pair count without building pairs (adjacency-power walk counts)."""
    if r < 1:
        raise ValueError(f"total length must be >= 1, got {r}")
    adj = g.adjacency()
    total = 0
    for k in range(max(1, r - g.n), r + 1):
        n_lsd = sum(1 for _ in iter_lsd(g, r - k))
        if n_lsd:
            total += kernels.int_walk_weight_sum(adj, g.n, k) * n_lsd
    return total


def good_pairs_of_lsd(gamma: LinearSubdigraph) -> List[WalkCyclePair]:
    """The r GOOD pairs marking an r-vertex linear subdigraph: for each vertex
    v, its cycle read as a walk from v, paired with the remaining cycles."""
    if gamma.length == 0:
        raise ValueError("the empty subdigraph has no GOOD pairs")
    out = []
    for v in sorted(gamma.vertex_set):
        cyc = gamma.cycle_through(v)
        out.append(WalkCyclePair(cyc.as_walk(v), gamma.without(cyc)))
    return out


@dataclass
class InvolutionReport:
    n: int
    r: int
    pair_count: int = 0
    bad_count: int = 0
    good_count: int = 0
    scenario1_count: int = 0
    scenario2_count: int = 0
    bad_sum: RingElement = 0
    good_sum: RingElement = 0
    total_weight: RingElement = 0
    lsd_count: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str, limit: int = 50):
        if len(self.failures) < limit:
            self.failures.append(msg)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"[{status}] n={self.n} r={self.r} pairs={self.pair_count} "
            f"BAD={self.bad_count} (S1={self.scenario1_count}, S2={self.scenario2_count}) "
            f"GOOD={self.good_count} from {self.lsd_count} subdigraphs"
        )


def verify_involution(g: WeightedDigraph, r: int, pairs: List[WalkCyclePair] | None = None) -> InvolutionReport:
    """Check every cancellation claim on the full pair set at total length r.

    (a) classification agrees with the BAD/GOOD definition;
    (b) phi is a fixed-point-free, weight-negating involution on BAD pairs
        that swaps the two scenarios;
    (c) BAD weights sum to zero;
    (d) GOOD pairs are exactly the r markings of each r-vertex subdigraph,
        each group weighing r * (-1)^(cycles - 1) * w;
    (e) no GOOD pairs when r > n.
    """
    rep = InvolutionReport(g.n, r)
    pairs = enumerate_pairs(g, r) if pairs is None else pairs
    rep.pair_count = len(pairs)
    pair_set = set(pairs)
    if len(pair_set) != len(pairs):
        rep.fail("pair enumeration produced duplicates")

    weights: Dict[WalkCyclePair, RingElement] = {}
    classes: Dict[WalkCyclePair, PairClass] = {}

    def weight_of(p):
        if p not in weights:
            weights[p] = signed_weight(g, p)
        return weights[p]

    def class_of(p):
        if p not in classes:
            classes[p] = classify(p)
        return classes[p]

    good: List[WalkCyclePair] = []
    bad_terms = []
    for p in pairs:
        if p.walk.length < 1 or p.r != r:
            rep.fail(f"malformed pair {p}")
        cls = class_of(p)
        if cls.is_bad != is_bad_by_definition(p):
            rep.fail(f"classification disagrees with definition on {p}: {cls}")
        if not cls.is_bad:
            good.append(p)
            continue
        rep.bad_count += 1
        if isinstance(cls, BadScenario1):
            rep.scenario1_count += 1
        else:
            rep.scenario2_count += 1
        w = weight_of(p)
        bad_terms.append(w)
        q = phi(p, cls)
        if q == p:
            rep.fail(f"phi fixes {p}")
            continue
        if q not in pair_set:
            rep.fail(f"phi({p}) = {q} is not an enumerated pair")
            continue
        qcls = class_of(q)
        if not qcls.is_bad:
            rep.fail(f"phi({p}) = {q} is GOOD")
            continue
        if phi(q, qcls) != p:
            rep.fail(f"phi(phi({p})) != {p}")
        if weight_of(q) != -w:
            rep.fail(f"W(phi({p})) != -W({p})")
        if isinstance(cls, BadScenario1):
            spliced = p.subdigraph.cycle_through(cls.y)
            ok = (isinstance(qcls, BadScenario2)
                  and qcls.open == cls.position
                  and Cycle(q.walk.vertices[qcls.open:qcls.close]) == spliced)
        else:
            cut = Cycle(p.walk.vertices[cls.open:cls.close])
            ok = (isinstance(qcls, BadScenario1)
                  and qcls.position == cls.open
                  and q.subdigraph.cycle_through(qcls.y) == cut)
        if not ok:
            rep.fail(f"scenario exchange broken: {p} [{cls}] -> {q} [{qcls}]")

    rep.good_count = len(good)
    rep.bad_sum = normalize(ring_sum(bad_terms))
    if rep.bad_sum != 0:
        rep.fail(f"BAD weights sum to {rep.bad_sum}, not 0")

    if r > g.n and good:
        rep.fail(f"{len(good)} GOOD pairs although r > n")

    # GOOD pairs grouped by the subdigraph they mark
    groups: Dict[LinearSubdigraph, List[WalkCyclePair]] = defaultdict(list)
    for p in good:
        try:
            walk_cycle = Cycle(p.walk.vertices[:-1])
            groups[p.subdigraph.with_cycle(walk_cycle)].append(p)
        except ValueError:
            rep.fail(f"GOOD pair {p} does not assemble into a linear subdigraph")
    expected = enumerate_lsd(g, r) if r <= g.n else []
    rep.lsd_count = len(expected)
    if set(groups) != set(expected):
        rep.fail("GOOD pairs do not correspond to the r-vertex linear subdigraphs")
    good_terms = []
    for gam in expected:
        marked = good_pairs_of_lsd(gam)
        if any(classify(m).is_bad for m in marked):
            rep.fail(f"a marking of {gam} is not GOOD")
        if sorted(groups.get(gam, []), key=str) != sorted(marked, key=str) or len(marked) != r:
            rep.fail(f"GOOD group of {gam} is not its {r} markings")
        group_w = ring_sum(weight_of(m) for m in marked)
        w = lsd_weight(g, gam)
        sign_w = w if (gam.cycle_count - 1) % 2 == 0 else -w
        if group_w != scalar_times(r, sign_w):
            rep.fail(f"GOOD group weight of {gam} is {group_w}, expected {r}*(-1)^(c-1)*w")
        good_terms.append(group_w)
    rep.good_sum = normalize(ring_sum(good_terms))
    rep.total_weight = normalize(ring_sum(weight_of(p) for p in pairs))
    return rep


def pair_weight_total(g: WeightedDigraph, r: int) -> RingElement:
    """Sum of W over all pairs at total length r."""
    return normalize(ring_sum(signed_weight(g, p) for p in iter_pairs(g, r)))


def report_to_dict(rep: InvolutionReport, aliases: bool = False) -> dict:
    fmt = lambda x: format_expr(x, rep.n, aliases=aliases)  # noqa: E731
    return {
        "n": rep.n,
        "r": rep.r,
        "pairs": rep.pair_count,
        "bad": rep.bad_count,
        "scenario1": rep.scenario1_count,
        "scenario2": rep.scenario2_count,
        "good": rep.good_count,
        "subdigraphs": rep.lsd_count,
        "bad_sum": fmt(rep.bad_sum),
        "good_sum": fmt(rep.good_sum),
        "total_weight": fmt(rep.total_weight),
        "passed": rep.passed,
        "failures": rep.failures,
    }


def pair_to_dot(g: WeightedDigraph, p: WalkCyclePair, name: str = "pair", aliases: bool = False,
                caption: str | None = None) -> str:
    """Walk arcs solid and numbered by step, subdigraph arcs red and dashed."""
    arcs = [(a, f'xlabel="{t + 1}"') for t, a in enumerate(p.walk.arcs())]
    arcs += [(a, "color=red, style=dashed") for a in p.subdigraph.arcs()]
    return arcs_to_dot(g, arcs, name=name, aliases=aliases, caption=caption or str(p))
