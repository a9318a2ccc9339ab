"""Exhaustive enumeration of linear subdigraphs and closed walks.

Both enumerations are exponential in their length parameter.  Linear
subdigraphs of length r number at most C(n, r) * r!; closed walks of length k
number at most n^k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Tuple

from . import kernels
from .graph import WeightedDigraph
from .ring import RingElement, ring_prod


@dataclass(frozen=True, order=True)
class Cycle:
    """Directed simple cycle, rotated so its smallest vertex comes first."""

    vertices: Tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if not vs:
            raise ValueError("a cycle needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError(f"cycle repeats a vertex: {vs}")
        k = vs.index(min(vs))
        object.__setattr__(self, "vertices", vs[k:] + vs[:k])

    def __len__(self) -> int:
        return len(self.vertices)

    def arcs(self) -> List[Tuple[int, int]]:
        vs = self.vertices
        return [(vs[t], vs[(t + 1) % len(vs)]) for t in range(len(vs))]

    def rotated_from(self, v: int) -> Tuple[int, ...]:
        """Vertices read along the cycle starting at ``v``."""
        k = self.vertices.index(v)
        return self.vertices[k:] + self.vertices[:k]

    def as_walk(self, start: int | None = None) -> "ClosedWalk":
        seq = self.rotated_from(self.vertices[0] if start is None else start)
        return ClosedWalk(seq + (seq[0],))

    def weight(self, g: WeightedDigraph) -> RingElement:
        return ring_prod(g.weight(i, j) for i, j in self.arcs())

    def is_in(self, g: WeightedDigraph) -> bool:
        return all(g.has_edge(i, j) for i, j in self.arcs())

    def __str__(self) -> str:
        return "(" + " ".join(f"v{v}" for v in self.vertices) + ")"


@dataclass(frozen=True)
class LinearSubdigraph:
    """Vertex-disjoint cycles, sorted by leading vertex.  May be empty."""

    cycles: Tuple[Cycle, ...] = ()

    def __post_init__(self):
        cycles = tuple(sorted(self.cycles))
        seen = set()
        for c in cycles:
            if seen.intersection(c.vertices):
                raise ValueError("cycles of a linear subdigraph must be vertex-disjoint")
            seen.update(c.vertices)
        object.__setattr__(self, "cycles", cycles)

    @property
    def length(self) -> int:
        return sum(len(c) for c in self.cycles)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    @property
    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(v for c in self.cycles for v in c.vertices)

    def cycle_through(self, v: int) -> Cycle:
        for c in self.cycles:
            if v in c.vertices:
                return c
        raise KeyError(v)

    def without(self, cycle: Cycle) -> "LinearSubdigraph":
        return LinearSubdigraph(tuple(c for c in self.cycles if c != cycle))

    def with_cycle(self, cycle: Cycle) -> "LinearSubdigraph":
        return LinearSubdigraph(self.cycles + (cycle,))

    def arcs(self) -> List[Tuple[int, int]]:
        return [a for c in self.cycles for a in c.arcs()]

    def __str__(self) -> str:
        return "".join(str(c) for c in self.cycles) or "()"


@dataclass(frozen=True)
class ClosedWalk:
    """Vertex sequence x_0, ..., x_k with x_k = x_0 and k >= 1.

    The start vertex is part of the identity.
    """

    vertices: Tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) < 2 or vs[0] != vs[-1]:
            raise ValueError(f"not a closed walk: {vs}")
        object.__setattr__(self, "vertices", vs)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    def arcs(self) -> List[Tuple[int, int]]:
        vs = self.vertices
        return [(vs[t], vs[t + 1]) for t in range(len(vs) - 1)]

    def is_in(self, g: WeightedDigraph) -> bool:
        return all(g.has_edge(i, j) for i, j in self.arcs())

    def is_simple_cycle(self) -> bool:
        inner = self.vertices[:-1]
        return len(set(inner)) == len(inner)

    def __str__(self) -> str:
        return "→".join(f"v{v}" for v in self.vertices)


def _cycles_from(g: WeightedDigraph, start: int, allowed: FrozenSet[int], length: int) -> Iterator[Tuple[int, ...]]:
    """Simple cycles through ``start`` of exactly ``length`` arcs, other
    vertices drawn from ``allowed``."""
    path = [start]
    used = {start}

    def grow():
        v = path[-1]
        if len(path) == length:
            if g.has_edge(v, start):
                yield tuple(path)
            return
        for w in g.successors(v):
            if w in allowed and w not in used:
                path.append(w)
                used.add(w)
                yield from grow()
                path.pop()
                used.discard(w)

    yield from grow()


def iter_lsd(g: WeightedDigraph, r: int) -> Iterator[LinearSubdigraph]:
    """Generate L_r in canonical order without duplicates.

    The smallest undecided vertex is either left uncovered or made the
    leading (minimum) vertex of a new cycle through larger free vertices.
    """
    n = g.n

    def rec(v: int, free: FrozenSet[int], remaining: int, acc: Tuple[Cycle, ...]):
        if remaining == 0:
            yield LinearSubdigraph(acc)
            return
        if v > n or len(free) < remaining:
            return
        if v not in free:
            yield from rec(v + 1, free, remaining, acc)
            return
        later = frozenset(u for u in free if u > v)
        # v starts a new cycle
        for size in range(1, remaining + 1):
            for verts in _cycles_from(g, v, later, size):
                yield from rec(v + 1, free - set(verts), remaining - size, acc + (Cycle(verts),))
        # v left uncovered
        yield from rec(v + 1, free - {v}, remaining, acc)

    yield from rec(1, frozenset(g.vertices), r, ())


def enumerate_lsd(g: WeightedDigraph, r: int) -> List[LinearSubdigraph]:
    """All linear subdigraphs of length r (0 <= r <= n)."""
    if not 0 <= r <= g.n:
        raise ValueError(f"subdigraph length must satisfy 0 <= r <= n={g.n}, got {r}")
    return list(iter_lsd(g, r))


def enumerate_closed_walks(g: WeightedDigraph, k: int) -> List[ClosedWalk]:
    """All closed walks of exactly k arcs, each start vertex counted separately."""
    if k < 1:
        raise ValueError(f"walk length must be >= 1, got {k}")
    return [ClosedWalk(seq) for seq in kernels.closed_walks(g._succ, g.n, k)]


def enumerate_walks_between(g: WeightedDigraph, i: int, j: int, k: int) -> List[Tuple[int, ...]]:
    """All walks i -> j with k arcs, as vertex tuples."""
    out = []
    path = [i]

    def grow():
        if len(path) == k + 1:
            if path[-1] == j:
                out.append(tuple(path))
            return
        for w in g.successors(path[-1]):
            path.append(w)
            grow()
            path.pop()

    grow()
    return out


def lsd_weight(g: WeightedDigraph, gamma: LinearSubdigraph) -> RingElement:
    return ring_prod(c.weight(g) for c in gamma.cycles)


def lsd_sign(gamma: LinearSubdigraph) -> int:
    return -1 if gamma.cycle_count % 2 else 1


def walk_weight(g: WeightedDigraph, walk: ClosedWalk) -> RingElement:
    return ring_prod(g.weight(i, j) for i, j in walk.arcs())
