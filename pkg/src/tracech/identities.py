"""The trace Cayley-Hamilton identities as exact zero tests.

For r > n:        c_r + c_{r-1} l_1 + ... + c_{r-n} l_n = 0
For 1 <= r <= n:  c_r + c_{r-1} l_1 + ... + c_1 l_{r-1} + r l_r = 0

The combinatorial form uses walk sums c_k and subdigraph sums l_k; the
matrix form uses Tr(A^k) and the Leibniz coefficients d_k.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from .graph import WeightedDigraph, from_matrix
from .involution import pair_weight_total
from .invariants import Matrix, OracleQuantities, Quantities
from .ring import RingElement, format_expr, normalize, ring_sum, scalar_times

ABOVE_N = "AboveN"
AT_MOST_N = "AtMostN"


@dataclass
class IdentityReport:
    n: int
    r: int
    branch: str
    form: str
    terms: List[Tuple[str, RingElement]]
    lhs: RingElement = field(init=False)

    def __post_init__(self):
        self.lhs = normalize(ring_sum(t for _, t in self.terms))

    @property
    def holds(self) -> bool:
        return self.lhs == 0

    def to_dict(self, aliases: bool = False) -> dict:
        fmt = lambda x: format_expr(x, self.n, aliases=aliases)  # noqa: E731
        return {
            "n": self.n,
            "r": self.r,
            "branch": self.branch,
            "form": self.form,
            "terms": [{"label": label, "expr": fmt(x)} for label, x in self.terms],
            "lhs": fmt(self.lhs),
            "holds": self.holds,
        }

    def to_json(self, aliases: bool = False) -> str:
        return json.dumps(self.to_dict(aliases), ensure_ascii=False)


def _branch(n: int, r: int) -> str:
    if r < 1:
        raise ValueError(f"identity index must be >= 1, got {r}")
    return ABOVE_N if r > n else AT_MOST_N


def _assemble(n: int, r: int, c, coeff, c_name: str, d_name: str, form: str) -> IdentityReport:
    branch = _branch(n, r)
    terms: List[Tuple[str, RingElement]] = [(f"{c_name}_{r}", c(r))]
    last = n if branch == ABOVE_N else r - 1
    for k in range(1, last + 1):
        terms.append((f"{c_name}_{r - k}*{d_name}_{k}", c(r - k) * coeff(k)))
    if branch == AT_MOST_N:
        terms.append((f"{r}*{d_name}_{r}", scalar_times(r, coeff(r))))
    return IdentityReport(n, r, branch, form, [(lab, normalize(x)) for lab, x in terms])


def trace_ch_lhs(g: WeightedDigraph, r: int, quantities: Quantities | None = None) -> IdentityReport:
    """Combinatorial left-hand side: walk sums times signed subdigraph sums."""
    q = quantities or Quantities(g)
    return _assemble(g.n, r, q.c, q.ell, "c", "l", "combinatorial")


def trace_ch_matrix_form(entries: Matrix, r: int, oracle: OracleQuantities | None = None) -> IdentityReport:
    """Same identity from Tr(A^k) and Leibniz coefficients only."""
    q = oracle or OracleQuantities(entries)
    return _assemble(q.n, r, q.trace, q.d, "tr", "d", "matrix")


@dataclass
class SuiteResult:
    n: int
    reports: List[IdentityReport]
    mismatches: List[str]

    @property
    def all_hold(self) -> bool:
        return all(rep.holds for rep in self.reports) and not self.mismatches

    def to_dict(self, aliases: bool = False) -> dict:
        return {
            "n": self.n,
            "all_hold": self.all_hold,
            "mismatches": self.mismatches,
            "reports": [rep.to_dict(aliases) for rep in self.reports],
        }


def verify_suite(g: WeightedDigraph, r_max: int, entries: Matrix | None = None) -> SuiteResult:
    """Both forms for r = 1..r_max, cross-checked term by term."""
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    entries = g.to_matrix() if entries is None else entries
    q = Quantities(g)
    oq = OracleQuantities(entries)
    reports: List[IdentityReport] = []
    mismatches: List[str] = []
    for r in range(1, r_max + 1):
        comb = trace_ch_lhs(g, r, q)
        mat = trace_ch_matrix_form(entries, r, oq)
        reports += [comb, mat]
        for (la, xa), (lb, xb) in zip(comb.terms, mat.terms):
            if xa != xb:
                mismatches.append(f"r={r}: {la} != {lb}")
        if len(comb.terms) != len(mat.terms):
            mismatches.append(f"r={r}: term count differs")
    return SuiteResult(g.n, reports, mismatches)


def verify_matrix(entries: Matrix, r_max: int) -> SuiteResult:
    return verify_suite(from_matrix(entries), r_max, entries)


def pair_sum_bridge(g: WeightedDigraph, r: int, pair_total: RingElement | None = None,
                    quantities: Quantities | None = None) -> Tuple[RingElement, RingElement]:
    """(sum of W over all pairs [+ r*l_r when r <= n], combinatorial lhs)."""
    q = quantities or Quantities(g)
    total = pair_weight_total(g, r) if pair_total is None else pair_total
    if r <= g.n:
        total = total + scalar_times(r, q.ell(r))
    return normalize(total), trace_ch_lhs(g, r, q).lhs


def random_integer_matrices(count: int, seed: int, n_max: int = 5, lo: int = -9, hi: int = 9,
                            n_min: int = 1, n: int | None = None) -> List[List[List[int]]]:
    """Seeded integer matrices; order drawn uniformly from n_min..n_max unless fixed."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        size = n if n is not None else rng.randint(n_min, n_max)
        out.append([[rng.randint(lo, hi) for _ in range(size)] for _ in range(size)])
    return out


__all__: Sequence[str] = [
    "IdentityReport", "SuiteResult", "trace_ch_lhs", "trace_ch_matrix_form", "verify_suite",
    "verify_matrix", "pair_sum_bridge", "random_integer_matrices", "ABOVE_N", "AT_MOST_N",
]
