"""Characteristic-polynomial coefficients and power traces.

Combinatorial definitions (subdigraph and walk sums) sit next to oracles
that never touch the enumeration code: Leibniz expansion of det(xI - A) and
repeated exact matrix multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, List, Sequence, Tuple

from . import kernels
from .enumeration import enumerate_closed_walks, enumerate_lsd, enumerate_walks_between, lsd_weight, walk_weight
from .graph import WeightedDigraph
from .ring import RingElement, normalize, ring_prod, ring_sum

LEIBNIZ_MAX_N = 8

Matrix = Sequence[Sequence[RingElement]]


@dataclass(frozen=True)
class CharPoly:
    """x^n + d_1 x^(n-1) + ... + d_n, with ``coeffs = (d_1, ..., d_n)``."""

    n: int
    coeffs: Tuple[RingElement, ...]

    def d(self, i: int) -> RingElement:
        """d_i with the leading coefficient d_0 = 1."""
        if i == 0:
            return 1
        return self.coeffs[i - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.n == other.n and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None


def _check_r(g: WeightedDigraph, r: int, lo: int = 0):
    if not lo <= r <= g.n:
        raise ValueError(f"index must satisfy {lo} <= r <= n={g.n}, got {r}")


def ell(g: WeightedDigraph, r: int) -> RingElement:
    """Sum over length-r linear subdigraphs of (-1)^(cycle count) * weight."""
    _check_r(g, r)
    return normalize(ring_sum(
        -lsd_weight(g, gam) if gam.cycle_count % 2 else lsd_weight(g, gam)
        for gam in enumerate_lsd(g, r)
    ))


def f_minor_sum(g: WeightedDigraph, i: int) -> RingElement:
    """Sum of order-i principal minors, read off i-vertex subdigraphs."""
    _check_r(g, i, lo=1)
    return normalize(ring_sum(
        -lsd_weight(g, gam) if (i - gam.cycle_count) % 2 else lsd_weight(g, gam)
        for gam in enumerate_lsd(g, i)
    ))


def det_via_lsd(g: WeightedDigraph) -> RingElement:
    """Determinant as the signed sum over spanning linear subdigraphs."""
    return f_minor_sum(g, g.n)


def char_poly(g: WeightedDigraph) -> CharPoly:
    return CharPoly(g.n, tuple(ell(g, i) for i in range(1, g.n + 1)))


def c_walks(g: WeightedDigraph, k: int) -> RingElement:
    """Total weight of closed walks with k arcs."""
    if k < 1:
        raise ValueError(f"walk length must be >= 1, got {k}")
    if g.is_integral():
        return kernels.int_walk_weight_sum(g.to_matrix(), g.n, k)
    return normalize(ring_sum(walk_weight(g, c) for c in enumerate_closed_walks(g, k)))


def walk_sum_matrix(g: WeightedDigraph, k: int) -> List[List[RingElement]]:
    """Entry (i, j): total weight of walks i -> j with k arcs (0-based lists)."""
    out = []
    for i in g.vertices:
        row = []
        for j in g.vertices:
            row.append(normalize(ring_sum(
                ring_prod(g.weight(p[t], p[t + 1]) for t in range(k))
                for p in enumerate_walks_between(g, i, j, k)
            )))
        out.append(row)
    return out


# ---------------------------------------------------------------------------
# oracles


def _perm_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for a, b in combinations(range(len(perm)), 2) if perm[a] > perm[b])
    return -1 if inversions % 2 else 1


def _upoly_mul(p: List[RingElement], q: List[RingElement]) -> List[RingElement]:
    """Product of polynomials in x given as coefficient lists (index = power)."""
    out: List[RingElement] = [0] * (len(p) + len(q) - 1)
    for a, x in enumerate(p):
        if x == 0:
            continue
        for b, y in enumerate(q):
            if y == 0:
                continue
            out[a + b] = out[a + b] + x * y
    return out


def _square(entries: Matrix) -> int:
    n = len(entries)
    if n == 0 or any(len(row) != n for row in entries):
        raise ValueError("matrix must be square and non-empty")
    return n


def char_poly_oracle(entries: Matrix) -> CharPoly:
    """Coefficients of det(xI - A) by Leibniz permutation expansion (n <= 8)."""
    n = _square(entries)
    if n > LEIBNIZ_MAX_N:
        raise ValueError(f"Leibniz oracle capped at n={LEIBNIZ_MAX_N}, got n={n}")
    total: List[RingElement] = [0] * (n + 1)
    for perm in permutations(range(n)):
        term: List[RingElement] = [_perm_sign(perm)]
        for i, j in enumerate(perm):
            # entry of xI - A as a polynomial in x
            factor = [-entries[i][j], 1] if i == j else [-entries[i][j]]
            term = _upoly_mul(term, factor)
            if all(c == 0 for c in term):
                break
        for power, c in enumerate(term):
            total[power] = total[power] + c
    # total[n] is the leading 1; d_i is the coefficient of x^(n-i)
    return CharPoly(n, tuple(normalize(total[n - i]) for i in range(1, n + 1)))


def leibniz_det(entries: Matrix) -> RingElement:
    n = _square(entries)
    if n > LEIBNIZ_MAX_N:
        raise ValueError(f"Leibniz oracle capped at n={LEIBNIZ_MAX_N}, got n={n}")
    return normalize(ring_sum(
        _perm_sign(perm) * ring_prod(entries[i][j] for i, j in enumerate(perm))
        for perm in permutations(range(n))
    ))


def mat_mul(x: Matrix, y: Matrix) -> List[List[RingElement]]:
    n = len(x)
    return [
        [normalize(ring_sum(x[i][t] * y[t][j] for t in range(n))) for j in range(n)]
        for i in range(n)
    ]


def mat_power(entries: Matrix, k: int) -> List[List[RingElement]]:
    if k < 1:
        raise ValueError("power must be >= 1")
    out = [list(row) for row in entries]
    for _ in range(k - 1):
        out = mat_mul(out, entries)
    return out


def trace_power_oracle(entries: Matrix, k: int) -> RingElement:
    """Tr(A^k) by exact repeated multiplication."""
    n = _square(entries)
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    pk = mat_power(entries, k)
    return normalize(ring_sum(pk[i][i] for i in range(n)))


class Quantities:
    """Memoised l_r and c_k for one digraph (shared by report builders)."""

    def __init__(self, g: WeightedDigraph):
        self.g = g
        self._ell: Dict[int, RingElement] = {}
        self._c: Dict[int, RingElement] = {}

    def ell(self, r: int) -> RingElement:
        if r not in self._ell:
            self._ell[r] = ell(self.g, r)
        return self._ell[r]

    def c(self, k: int) -> RingElement:
        if k not in self._c:
            self._c[k] = c_walks(self.g, k)
        return self._c[k]


class OracleQuantities:
    """Memoised d_k (Leibniz) and Tr(A^k) (matrix powers) for one matrix."""

    def __init__(self, entries: Matrix):
        self.entries = [list(row) for row in entries]
        self.n = _square(entries)
        self._cp: CharPoly | None = None
        self._powers: List[List[List[RingElement]]] = [self.entries]

    def d(self, k: int) -> RingElement:
        if self._cp is None:
            self._cp = char_poly_oracle(self.entries)
        return self._cp.d(k)

    def trace(self, k: int) -> RingElement:
        while len(self._powers) < k:
            self._powers.append(mat_mul(self._powers[-1], self.entries))
        pk = self._powers[k - 1]
        return normalize(ring_sum(pk[i][i] for i in range(self.n)))


__all__ = [
    "CharPoly", "ell", "f_minor_sum", "det_via_lsd", "char_poly", "c_walks",
    "walk_sum_matrix", "char_poly_oracle", "leibniz_det", "trace_power_oracle",
    "mat_mul", "mat_power", "Quantities", "OracleQuantities", "LEIBNIZ_MAX_N",
]
