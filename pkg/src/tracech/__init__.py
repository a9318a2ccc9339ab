"""Exact combinatorial verification of the trace Cayley-Hamilton identities.

Walk sums and signed linear-subdigraph sums of the weighted digraph of a
matrix are computed by enumeration and checked against the identities and
against independent matrix oracles, over Z or over Z[a_ij].
"""

from .enumeration import (
    ClosedWalk,
    Cycle,
    LinearSubdigraph,
    enumerate_closed_walks,
    enumerate_lsd,
    lsd_sign,
    lsd_weight,
    walk_weight,
)
from .graph import WeightedDigraph, complete_digraph, from_matrix, generic_digraph, to_dot
from .identities import IdentityReport, trace_ch_lhs, trace_ch_matrix_form, verify_suite
from .invariants import (
    CharPoly,
    c_walks,
    char_poly,
    char_poly_oracle,
    det_via_lsd,
    ell,
    f_minor_sum,
    trace_power_oracle,
)
from .involution import (
    WalkCyclePair,
    classify,
    enumerate_pairs,
    good_pairs_of_lsd,
    phi,
    verify_involution,
)
from .kernels import BACKEND_NAME
from .ring import Poly, RingElement, format_expr, parse_expr

__version__ = "0.1.0"
