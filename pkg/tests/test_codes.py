from itertools import combinations

import pytest

from oracles import chords_cross
from shufsq import (
    PreconditionError,
    Word,
    arborescence_count,
    circle_graph,
    enumerate_canonical_words,
    euler_number,
    euler_number_best,
    euler_number_up_to_rotation,
    euler_shuffle_scan,
    gauss_digraph,
)
from shufsq.formats import to_gml, to_networkx

# --- Digraph of consecutive letters ---


def test_gauss_digraph_arcs():
    digraph = gauss_digraph(Word("AABCBC"))
    assert digraph.arcs == ((0, 0), (0, 1), (1, 2), (2, 1), (1, 2), (2, 0))
    assert digraph.to_edge_list() == "A A\nA B\nB C\nC B\nB C\nC A\n"


def test_gauss_digraph_is_balanced():
    for word in enumerate_canonical_words(4):
        digraph = gauss_digraph(word)
        assert digraph.out_degree() == digraph.in_degree() == {v: 2 for v in range(4)}


def test_single_letter_loops():
    assert gauss_digraph(Word("AA")).arcs == ((0, 0), (0, 0))
    assert euler_number(Word("AA")) == 1
    assert euler_number_best(Word("AA")) == 1


# --- Euler numbers ---


@pytest.mark.parametrize("text", ["AABCBC", "AABB", "ABAB", "ABBA"])
def test_euler_number_one(text):
    assert euler_number(Word(text)) == 1
    assert euler_number_best(Word(text)) == 1


# Anchored count and count up to rotation for every canonical word over three letters.
EULER_NUMBERS_K3 = {
    "AABBCC": (1, 1),
    "AABCBC": (1, 1),
    "AABCCB": (1, 1),
    "ABABCC": (2, 1),
    "ABACBC": (3, 3),
    "ABACCB": (1, 1),
    "ABBACC": (1, 1),
    "ABBCAC": (1, 1),
    "ABBCCA": (1, 1),
    "ABCABC": (1, 1),
    "ABCACB": (3, 3),
    "ABCBAC": (3, 3),
    "ABCBCA": (1, 1),
    "ABCCAB": (2, 1),
    "ABCCBA": (1, 1),
}


@pytest.mark.parametrize("text, counts", sorted(EULER_NUMBERS_K3.items()))
def test_euler_numbers_k3(text, counts):
    word = Word(text)
    assert (euler_number(word), euler_number_up_to_rotation(word)) == counts
    assert euler_number_best(word) == counts[0]


def test_shuffle_square_with_two_anchored_circuits():
    # ABCCAB is a rotation of ABABCC and also leaves the anchor arc AB
    assert euler_number(Word("ABABCC")) == 2
    assert euler_number_up_to_rotation(Word("ABABCC")) == 1


def test_arborescence_count():
    assert arborescence_count(Word("AABCBC"), 0) == 2
    assert arborescence_count(Word("ABAB"), 0) == 2


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_best_theorem_agrees_with_backtracking(k):
    for word in enumerate_canonical_words(k):
        assert euler_number_best(word) == euler_number(word), str(word)


@pytest.mark.slow
def test_best_theorem_agrees_with_backtracking_k5():
    for word in enumerate_canonical_words(5):
        assert euler_number_best(word) == euler_number(word), str(word)


def test_euler_number_of_empty_word():
    with pytest.raises(PreconditionError):
        euler_number(Word(""))


def test_euler_scan_flags_the_nested_pair():
    scan = euler_shuffle_scan(2, workers=1)
    assert [str(row.word) for row in scan.violations] == ["ABBA"]
    assert scan.disagreements == []
    assert [str(word) for word in scan.with_euler_number(1)] == ["AABB", "ABAB", "ABBA"]


def test_euler_scan_k3_counters_agree():
    scan = euler_shuffle_scan(3, workers=1)
    assert len(scan.rows) == 15
    assert scan.disagreements == []
    assert sum(row.is_shuffle_square for row in scan.rows) == 5


def test_euler_scan_k3_violations():
    scan = euler_shuffle_scan(3, workers=1)
    assert len(scan.with_euler_number(1)) == 10
    assert [str(row.word) for row in scan.violations] == [
        "AABCCB", "ABABCC", "ABACBC", "ABACCB", "ABBACC", "ABBCAC", "ABBCCA", "ABCBCA", "ABCCBA",
    ]
    assert [str(row.word) for row in scan.rotation_violations] == [
        "AABCCB", "ABACBC", "ABACCB", "ABBACC", "ABBCAC", "ABBCCA", "ABCBCA", "ABCCAB", "ABCCBA",
    ]
    assert {str(row.word): (row.euler_number, row.rotation_number) for row in scan.rows} == EULER_NUMBERS_K3


def test_euler_scan_k4_violation_counts():
    scan = euler_shuffle_scan(4, workers=1)
    assert len(scan.rows) == 105
    assert sum(row.is_shuffle_square for row in scan.rows) == 14
    assert len(scan.with_euler_number(1)) == 36
    assert len(scan.violations) == 40
    assert len(scan.rotation_violations) == 45
    assert scan.disagreements == []
    for row in scan.rows:
        assert 1 <= row.rotation_number <= row.euler_number


# --- Chord diagrams ---


def test_circle_graph_example():
    diagram = circle_graph(Word("ABCADCBD"))
    assert diagram.edges() == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert diagram.to_edge_list() == "A B\nA C\nB D\nC D\n"


def test_circle_graph_small():
    assert circle_graph(Word("AABB")).edges() == []
    assert circle_graph(Word("ABAB")).edges() == [(0, 1)]
    assert circle_graph(Word("ABBA")).edges() == []


@pytest.mark.parametrize("k", [2, 3, 4])
def test_circle_graph_matches_geometry(k):
    for word in enumerate_canonical_words(k):
        diagram = circle_graph(word)
        expected = {
            (i, j)
            for i, j in combinations(range(k), 2)
            if chords_cross(diagram.chords[i], diagram.chords[j], len(word))
        }
        assert set(diagram.edges()) == expected, str(word)


def test_circle_graph_needs_double_occurrences():
    with pytest.raises(PreconditionError):
        circle_graph(Word("AAAB"))


# --- Graph exports ---


def test_networkx_export():
    digraph = to_networkx(gauss_digraph(Word("ABAB")))
    assert sorted(digraph.nodes) == ["A", "B"]
    assert digraph.number_of_edges() == 4
    chords = to_networkx(circle_graph(Word("ABCADCBD")))
    assert chords.number_of_edges() == 4
    assert chords.has_edge("A", "B") and not chords.has_edge("A", "D")


def test_gml_export():
    text = to_gml(gauss_digraph(Word("ABAB")))
    assert "directed 1" in text
    assert "multigraph 1" in text
    assert 'label "A"' in text
