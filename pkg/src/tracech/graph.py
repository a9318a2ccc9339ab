"""The weighted digraph D(A) of a square matrix."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Mapping, Sequence, Tuple

from .ring import Poly, RingElement, format_expr, is_zero, parse_expr

Edge = Tuple[int, int]


@dataclass(frozen=True)
class WeightedDigraph:
    """Vertices 1..n; ``edges[(i, j)]`` is the weight of the arc i -> j.

    Absent keys mean weight zero.  Self-loops are ordinary edges (1-cycles).
    """

    n: int
    edges: Mapping[Edge, RingElement]
    _succ: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("digraph needs at least one vertex")
        for i, j in self.edges:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge ({i},{j}) out of range for n={self.n}")
        succ = [()] + [
            tuple(sorted(j for (a, j) in self.edges if a == i)) for i in range(1, self.n + 1)
        ]
        object.__setattr__(self, "edges", dict(sorted(self.edges.items())))
        object.__setattr__(self, "_succ", tuple(succ))

    def weight(self, i: int, j: int) -> RingElement:
        return self.edges.get((i, j), 0)

    def successors(self, i: int) -> Tuple[int, ...]:
        return self._succ[i]

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def to_matrix(self) -> List[List[RingElement]]:
        return [[self.weight(i, j) for j in self.vertices] for i in self.vertices]

    def adjacency(self) -> List[List[int]]:
        """0/1 adjacency matrix (0-based lists)."""
        return [[1 if self.has_edge(i, j) else 0 for j in self.vertices] for i in self.vertices]

    def is_integral(self) -> bool:
        return all(isinstance(w, int) for w in self.edges.values())

    def is_symbolic(self) -> bool:
        return not self.is_integral()


def from_matrix(entries: Sequence[Sequence[RingElement]], keep_zero_edges: bool = False) -> WeightedDigraph:
    """Build D(A): an arc i -> j with weight a_ij for every nonzero entry.

    ``keep_zero_edges`` stores explicit zero-weight arcs as well; it exists
    only to check that dropping them never changes downstream sums.
    """
    n = len(entries)
    if n == 0 or any(len(row) != n for row in entries):
        raise ValueError("matrix must be square and non-empty")
    edges: Dict[Edge, RingElement] = {}
    for i, row in enumerate(entries, start=1):
        for j, w in enumerate(row, start=1):
            if keep_zero_edges or not is_zero(w):
                edges[(i, j)] = w
    return WeightedDigraph(n, edges)


def generic_digraph(n: int) -> WeightedDigraph:
    """All n^2 arcs, arc (i, j) weighted by the indeterminate a_i_j."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return WeightedDigraph(n, {(i, j): Poly.var(i, j) for i in range(1, n + 1) for j in range(1, n + 1)})


def generic_matrix(n: int) -> List[List[RingElement]]:
    return generic_digraph(n).to_matrix()


def complete_digraph(n: int) -> WeightedDigraph:
    """Complete digraph with loops, every weight 1 (the all-ones matrix)."""
    return from_matrix([[1] * n for _ in range(n)])


def to_dot(g: WeightedDigraph, name: str = "D", aliases: bool = False,
           highlight: Mapping[Edge, str] | None = None) -> str:
    """DOT text for the digraph; edges sorted by (i, j), weights as labels.

    ``highlight`` maps edges to a DOT style string such as ``color=red``.
    """
    lines = [f"digraph {name} {{"]
    for v in g.vertices:
        lines.append(f'  v{v} [label="v{v}"];')
    for (i, j), w in sorted(g.edges.items()):
        label = format_expr(w, g.n, aliases=aliases)
        extra = ""
        if highlight and (i, j) in highlight:
            extra = ", " + highlight[(i, j)]
        lines.append(f'  v{i} -> v{j} [label="{label}"{extra}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def arcs_to_dot(g: WeightedDigraph, arcs: Sequence[Tuple[Edge, str]], name: str = "D",
                aliases: bool = False, caption: str | None = None) -> str:
    """DOT text showing every vertex but only the listed arcs.

    Each arc comes with an extra DOT attribute string (may be empty); arcs
    may repeat, as they do along a closed walk.
    """
    lines = [f"digraph {name} {{"]
    if caption:
        lines.append(f'  label="{caption}";')
    for v in g.vertices:
        lines.append(f'  v{v} [label="v{v}"];')
    for (i, j), attrs in arcs:
        label = format_expr(g.weight(i, j), g.n, aliases=aliases)
        extra = f", {attrs}" if attrs else ""
        lines.append(f'  v{i} -> v{j} [label="{label}"{extra}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_matrix(data: Mapping) -> List[List[RingElement]]:
    """Entries from ``{"n": int, "entries": [[expr, ...], ...]}``.

    A cell holding ``"@"`` stands for the indeterminate a_i_j of that cell.
    Plain JSON integers are accepted as well as strings.
    """
    try:
        n = int(data["n"])
        rows = data["entries"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"matrix JSON needs 'n' and 'entries': {exc}") from None
    if n < 1 or len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"'entries' must be an {n}x{n} grid")
    out: List[List[RingElement]] = []
    for i, row in enumerate(rows, start=1):
        parsed = []
        for j, cell in enumerate(row, start=1):
            if isinstance(cell, bool):
                raise ValueError(f"cell ({i},{j}): booleans are not ring elements")
            if isinstance(cell, int):
                parsed.append(cell)
            elif isinstance(cell, str):
                parsed.append(Poly.var(i, j) if cell.strip() == "@" else parse_expr(cell, n))
            else:
                raise ValueError(f"cell ({i},{j}): expected string or integer, got {cell!r}")
        out.append(parsed)
    return out


def load_matrix(path: str | Path) -> List[List[RingElement]]:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(json.load(fh))


def matrix_to_json(entries: Sequence[Sequence[RingElement]]) -> dict:
    n = len(entries)
    return {"n": n, "entries": [[format_expr(w) for w in row] for row in entries]}
