import itertools

import pytest

from aslamcheck.errors import InvalidInputError
from aslamcheck.matching import (
    BipartiteGraph,
    Edge,
    Matching,
    Permutation,
    Transposition,
    compose_transpositions,
    decompose,
    edges,
    format_transpositions,
    is_perfect_matching,
    matching_from_permutation,
    parse_transpositions,
)

FIG1_PRODUCT = "(9,9)(8,9)(7,8)(6,9)(5,7)(4,9)(3,9)(2,4)(1,9)"


def test_compose_small_example():
    p = compose_transpositions([(5, 5), (4, 5), (3, 5), (2, 3), (1, 5)], 5)
    assert p.image == (5, 3, 1, 2, 4)
    assert p == Permutation.parse("(2,3,1,5,4)")


def test_compose_nine_cycle():
    p = compose_transpositions(parse_transpositions(FIG1_PRODUCT, 9), 9)
    assert p == Permutation.parse("(1,9,5,7,8,6,2,4,3)")
    assert [p(x) for x in (1, 9, 5, 7, 8, 6, 2, 4, 3)] == [9, 5, 7, 8, 6, 2, 4, 3, 1]


def test_compose_identity():
    assert compose_transpositions([(i, i) for i in range(1, 7)], 6) == Permutation.identity(6)


@pytest.mark.parametrize("bad", [[(0, 1)], [(2, 1)], [(1, 6)]])
def test_compose_rejects_out_of_range(bad):
    with pytest.raises(InvalidInputError):
        compose_transpositions(bad, 5)


def test_decompose_examples():
    assert decompose(Permutation.parse("(2,3,1,5,4)")) == [(5, 5), (4, 5), (3, 5), (2, 3), (1, 5)]
    assert decompose(Permutation.identity(3)) == [(3, 3), (2, 2), (1, 1)]
    assert format_transpositions(decompose(Permutation.parse("(1,9,5,7,8,6,2,4,3)"))) == FIG1_PRODUCT


def test_decompose_round_trip_and_unique_on_s5():
    seen = set()
    for img in itertools.permutations(range(1, 6)):
        p = Permutation(img)
        ts = decompose(p)
        assert all(isinstance(t, Transposition) and t.i <= t.k for t in ts)
        assert [t.i for t in ts] == [5, 4, 3, 2, 1]
        assert compose_transpositions(ts, 5) == p
        seen.add(tuple(ts))
    assert len(seen) == 120


def test_matching_from_permutation():
    assert matching_from_permutation(Permutation.parse("(2,3,1)")).edges == edges("12", "23", "31")
    assert matching_from_permutation(Permutation.parse("(2,3,1,5,4)")).edges == edges(
        "15", "23", "31", "42", "54"
    )
    assert matching_from_permutation(Permutation.identity(4)).edges == edges("11", "22", "33", "44")


def test_is_perfect_matching():
    assert is_perfect_matching(Matching(edges("19", "24", "31", "43", "57", "62", "78", "86", "95"), 9))
    assert not is_perfect_matching(Matching(edges("11", "22"), 3))
    rejected = edges("19", "31", "26", "72", "43", "64", "57", "95", "86", "78")
    assert len(rejected) == 10
    assert not is_perfect_matching(Matching(rejected, 9))
    assert not is_perfect_matching(Matching(edges("11", "21", "33"), 3))


def test_cycle_text_round_trip():
    p = Permutation.parse("(1,3)(2,4)")
    assert str(p) == "(1,3)(2,4)"
    assert Permutation.parse(str(p), 4) == p
    assert str(Permutation.identity(3)) == "()"
    with pytest.raises(InvalidInputError):
        Permutation.parse("(1,2")


def test_permutation_validates():
    with pytest.raises(InvalidInputError):
        Permutation((1, 1, 3))


def test_edge_labels():
    assert Edge(7, 6).label() == "76"
    assert Edge(10, 2).label(12) == "(10,2)"


def test_bipartite_graph_shape():
    with pytest.raises(InvalidInputError):
        BipartiteGraph(2, ((True, False),))
    g = BipartiteGraph.from_edges(3, [(1, 2), (3, 3)])
    assert (1, 2) in g and (2, 1) not in g
    assert g.edges() == [Edge(1, 2), Edge(3, 3)]
    with pytest.raises(InvalidInputError):
        BipartiteGraph.from_edges(3, [(4, 1)])
