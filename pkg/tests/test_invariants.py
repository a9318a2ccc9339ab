import itertools
import random

import pytest

from tracech.graph import complete_digraph, from_matrix, generic_digraph, generic_matrix
from tracech.identities import random_integer_matrices
from tracech.invariants import (
    CharPoly,
    c_walks,
    char_poly,
    char_poly_oracle,
    det_via_lsd,
    ell,
    f_minor_sum,
    leibniz_det,
    mat_power,
    trace_power_oracle,
    walk_sum_matrix,
)

from conftest import P


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def principal_minor_sum(m, i):
    n = len(m)
    total = 0
    for rows in itertools.combinations(range(n), i):
        total = total + leibniz_det([[m[r][s] for s in rows] for r in rows])
    return total


def expand_linear_factors(roots):
    """Coefficients of prod (x - root), highest power first."""
    coeffs = [1]
    for root in roots:
        coeffs = [a - root * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs


# -- ell ---------------------------------------------------------------------

def test_ell_generic_2x2(g2):
    assert ell(g2, 1) == P("-(a+d)")
    assert ell(g2, 2) == P("ad - bc")
    assert ell(g2, 0) == 1
    assert ell(from_matrix([[0, 0], [0, 0]]), 0) == 1


def test_ell_range(g2):
    with pytest.raises(ValueError):
        ell(g2, 3)


# -- principal minors and determinant -----------------------------------------

def test_f_minor_sum_examples(g2):
    assert f_minor_sum(g2, 1) == P("a + d")
    assert f_minor_sum(g2, 2) == leibniz_det(generic_matrix(2)) == P("ad - bc")
    assert f_minor_sum(from_matrix(identity(3)), 2) == 3
    with pytest.raises(ValueError):
        f_minor_sum(g2, 0)


def test_f_minor_sum_matches_principal_minors():
    for n in (1, 2, 3):
        m = generic_matrix(n)
        g = from_matrix(m)
        for i in range(1, n + 1):
            assert f_minor_sum(g, i) == principal_minor_sum(m, i)
    for m in random_integer_matrices(30, seed=8, n_max=5):
        g = from_matrix(m)
        for i in range(1, len(m) + 1):
            assert f_minor_sum(g, i) == principal_minor_sum(m, i)


def test_det_via_lsd():
    assert det_via_lsd(generic_digraph(2)) == P("ad - bc")
    for n in (1, 3, 4):
        assert det_via_lsd(from_matrix(identity(n))) == 1
        assert det_via_lsd(from_matrix([[0] * n for _ in range(n)])) == 0
    assert det_via_lsd(generic_digraph(3)) == leibniz_det(generic_matrix(3))
    for m in random_integer_matrices(30, seed=9, n_max=5):
        n = len(m)
        assert det_via_lsd(from_matrix(m)) == leibniz_det(m)
        # constant term of det(xI - A) is (-1)^n det(A)
        assert char_poly_oracle(m).d(n) * (-1) ** n == leibniz_det(m)


# -- characteristic polynomial ---------------------------------------------------

def test_char_poly_examples(g2):
    assert char_poly(g2) == CharPoly(2, (P("-(a+d)"), P("ad - bc")))
    assert char_poly(from_matrix(identity(2))).coeffs == (-2, 1)
    assert char_poly(complete_digraph(3)).coeffs == (-3, 0, 0)


def test_char_poly_oracle_examples():
    cp = char_poly_oracle(generic_matrix(2))
    assert cp.coeffs == (P("-a - d"), P("ad - bc"))
    diag = [[1, 0, 0], [0, 2, 0], [0, 0, 3]]
    assert list(char_poly_oracle(diag).coeffs) == expand_linear_factors([1, 2, 3])[1:] == [-6, 11, -6]
    assert char_poly_oracle([[0, 0], [0, 0]]).coeffs == (0, 0)
    assert char_poly_oracle([[1] * 3] * 3).coeffs == (-3, 0, 0)
    with pytest.raises(ValueError):
        char_poly_oracle(identity(9))


def test_triangular_matrices_have_diagonal_roots():
    rng = random.Random(12)
    for _ in range(20):
        n = rng.randint(1, 5)
        m = [[rng.randint(-9, 9) if j >= i else 0 for j in range(n)] for i in range(n)]
        expected = expand_linear_factors([m[i][i] for i in range(n)])[1:]
        assert list(char_poly(from_matrix(m)).coeffs) == expected
        assert list(char_poly_oracle(m).coeffs) == expected


def test_lemma1_symbolic():
    for n in (1, 2, 3):
        g = generic_digraph(n)
        cp, oracle = char_poly(g), char_poly_oracle(generic_matrix(n))
        assert cp == oracle
        for i in range(1, n + 1):
            assert cp.d(i) == (-1) ** i * f_minor_sum(g, i)


def test_lemma1_random_integer():
    for m in random_integer_matrices(60, seed=10, n_max=5):
        g = from_matrix(m)
        cp = char_poly(g)
        assert cp == char_poly_oracle(m)
        for i in range(1, len(m) + 1):
            assert cp.d(i) == (-1) ** i * f_minor_sum(g, i)


# -- walks and traces -----------------------------------------------------------

def test_c_walks_examples(g2):
    assert c_walks(g2, 1) == P("a + d")
    assert c_walks(g2, 2) == P("a^2 + d^2 + bc + cb")
    assert c_walks(g2, 3) == P("a^3 + d^3 + 3bc(a + d)")
    for n in (1, 2, 3, 4):
        for k in (1, 3, 6):
            assert c_walks(complete_digraph(n), k) == n ** k == trace_power_oracle([[1] * n] * n, k)
    with pytest.raises(ValueError):
        c_walks(g2, 0)


def test_trace_power_oracle_examples():
    assert trace_power_oracle(generic_matrix(2), 1) == P("a + d")
    for n in (1, 3):
        for k in (1, 4):
            assert trace_power_oracle(identity(n), k) == n
    assert trace_power_oracle([[0, 1], [0, 0]], 2) == 0


def test_lemma3_integer():
    rng = random.Random(13)
    for _ in range(40):
        n = rng.randint(1, 4)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        g = from_matrix(m)
        for k in range(1, 9):
            assert c_walks(g, k) == trace_power_oracle(m, k)


def test_lemma3_symbolic():
    for n in (1, 2, 3):
        g = generic_digraph(n)
        for k in range(1, 7):
            assert c_walks(g, k) == trace_power_oracle(generic_matrix(n), k)


def test_lemma2_entrywise():
    for n in (1, 2, 3):
        m = generic_matrix(n)
        g = from_matrix(m)
        for k in range(1, 6):
            assert walk_sum_matrix(g, k) == mat_power(m, k)
    m = [[2, -1, 0], [0, 3, 5], [-4, 0, 1]]
    assert walk_sum_matrix(from_matrix(m), 4) == mat_power(m, 4)
