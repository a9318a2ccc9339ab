import itertools

import pytest
from hypothesis import strategies as st

from tracech import kernels
from tracech.graph import from_matrix, generic_digraph
from tracech.ring import Poly, parse_expr


def P(text, n=2):
    return parse_expr(text, n)


@pytest.fixture
def g2():
    return generic_digraph(2)


@pytest.fixture
def g3():
    return generic_digraph(3)


BACKENDS = [kernels.python_backend]
if kernels.compiled_backend is not None:
    BACKENDS.append(kernels.compiled_backend)


@pytest.fixture(params=BACKENDS, ids=lambda b: b.__name__.rsplit(".", 1)[-1])
def backend(request):
    return request.param


def polys(n=2, max_terms=4, max_exp=2, coeff=5):
    """Hypothesis strategy for small polynomials in the entries of an n x n matrix."""
    variables = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    monomial = st.lists(st.sampled_from(variables), max_size=max_exp * 2).map(
        lambda vs: tuple(sorted((v, vs.count(v)) for v in set(vs)))
    )
    return st.dictionaries(monomial, st.integers(-coeff, coeff), max_size=max_terms).map(Poly)


def ring_elements(n=2):
    return st.one_of(st.integers(-50, 50), polys(n))


def random_digraphs(rng, n, density=0.6, lo=-9, hi=9):
    m = [[rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(n)] for _ in range(n)]
    return m, from_matrix(m)


def brute_lsd(g, r):
    """Length-r linear subdigraphs via permutations of r-subsets, as cycle sets."""
    found = set()
    for subset in itertools.combinations(g.vertices, r):
        for image in itertools.permutations(subset):
            sigma = dict(zip(subset, image))
            if not all(g.has_edge(i, sigma[i]) for i in subset):
                continue
            cycles, seen = [], set()
            for v in subset:
                if v in seen:
                    continue
                cyc, x = [], v
                while x not in seen:
                    seen.add(x)
                    cyc.append(x)
                    x = sigma[x]
                k = cyc.index(min(cyc))
                cycles.append(tuple(cyc[k:] + cyc[:k]))
            found.add(frozenset(cycles))
    return found


def brute_walks(g, k):
    """Closed walks of length k by checking every vertex sequence."""
    out = []
    for seq in itertools.product(g.vertices, repeat=k):
        path = seq + (seq[0],)
        if all(g.has_edge(path[t], path[t + 1]) for t in range(k)):
            out.append(path)
    return out


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
