import json

import pytest

from tracech.graph import (
    complete_digraph,
    from_matrix,
    generic_digraph,
    load_matrix,
    matrix_to_json,
    parse_matrix,
    to_dot,
)
from tracech.invariants import c_walks, ell
from tracech.ring import Poly, parse_expr

from conftest import P


def test_generic_2x2_is_figure_one():
    g = generic_digraph(2)
    assert g.n == 2
    assert g.edges == {(1, 1): P("a"), (1, 2): P("b"), (2, 1): P("c"), (2, 2): P("d")}
    assert from_matrix([[P("a"), P("b")], [P("c"), P("d")]]) == g


def test_zero_matrix_has_no_edges():
    g = from_matrix([[0, 0], [0, 0]])
    assert g.n == 2 and g.edges == {}


def test_identity_is_three_loops():
    g = from_matrix([[1 if i == j else 0 for j in range(3)] for i in range(3)])
    assert g.edges == {(1, 1): 1, (2, 2): 1, (3, 3): 1}


def test_generic_counts():
    assert generic_digraph(1).edges == {(1, 1): Poly.var(1, 1)}
    assert len(generic_digraph(3).edges) == 9


def test_non_square_rejected():
    with pytest.raises(ValueError):
        from_matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        from_matrix([])


def test_reconstructs_matrix():
    m = [[3, 0, -1], [0, 0, 2], [P("a_1_1", 3), 5, 0]]
    assert from_matrix(m).to_matrix() == m


def test_zero_edges_do_not_change_sums():
    m = [[2, 0, 1], [0, -3, 0], [4, 0, 0]]
    lean, padded = from_matrix(m), from_matrix(m, keep_zero_edges=True)
    assert len(padded.edges) == 9 and len(lean.edges) == 4
    for r in range(0, 4):
        assert ell(lean, r) == ell(padded, r)
    for k in range(1, 6):
        assert c_walks(lean, k) == c_walks(padded, k)


def test_dot_generic():
    text = to_dot(generic_digraph(2))
    assert text.count("->") == 4
    assert 'v1 [label="v1"]' in text and 'v2 [label="v2"]' in text
    lines = [ln for ln in text.splitlines() if "->" in ln]
    assert lines == sorted(lines)
    assert 'label="a_1_2"' in text


def test_dot_zero_and_identity():
    assert "->" not in to_dot(from_matrix([[0, 0], [0, 0]]))
    text = to_dot(from_matrix([[1, 0], [0, 1]]))
    assert 'v1 -> v1 [label="1"]' in text and 'v2 -> v2 [label="1"]' in text
    assert text.count("->") == 2


def test_json_matrix_with_generic_cells(tmp_path):
    spec = {"n": 2, "entries": [["@", "0"], ["a_1_1 + 1", 4]]}
    path = tmp_path / "m.json"
    path.write_text(json.dumps(spec))
    m = load_matrix(path)
    assert m == [[Poly.var(1, 1), 0], [parse_expr("a + 1", 2), 4]]
    assert parse_matrix(matrix_to_json(m)) == m


@pytest.mark.parametrize("bad", [
    {"entries": [[1]]},
    {"n": 2, "entries": [[1, 2]]},
    {"n": 1, "entries": [[True]]},
    {"n": 1, "entries": [[1.5]]},
    {"n": 1, "entries": [["a_2_2"]]},
])
def test_json_matrix_rejects(bad):
    with pytest.raises(ValueError):
        parse_matrix(bad)


def test_complete_digraph():
    g = complete_digraph(3)
    assert len(g.edges) == 9 and set(g.edges.values()) == {1}
    assert g.adjacency() == [[1] * 3] * 3
