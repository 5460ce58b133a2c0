import json
import random

import pytest

from cayleyaut.errors import InvalidParameters
from cayleyaut.graphcore import SimpleGraph
from cayleyaut.perm import Perm, transposition
from cayleyaut.transposition import (
    FAMILY_ORDER,
    TranspositionSet,
    complete_bipartite_set,
    complete_set,
    cycle_set,
    from_graph,
    generates_full_symmetric,
    is_minimal_generating,
    matching_set,
    parse_transpositions,
    path_set,
    recognize_family,
    spider_set,
    star_set,
    transposition_graph,
)


def test_construction_normalises_pairs():
    s = TranspositionSet(4, [(2, 1), (3, 4), transposition(1, 2, 4)])
    assert len(s) == 2
    assert s.sorted_pairs() == [(1, 2), (3, 4)]
    assert (2, 1) in s
    assert str(s) == "(1,2)(3,4)"


@pytest.mark.parametrize("bad", [[(1, 1)], [(0, 2)], [(1, 5)]])
def test_rejects_bad_pairs(bad):
    with pytest.raises(ValueError):
        TranspositionSet(4, bad)


def test_parse():
    s = parse_transpositions("(1,2)(2,3)(3,4)")
    assert s == path_set(4)
    assert parse_transpositions("(1,2)", 5).n == 5
    with pytest.raises(ValueError):
        parse_transpositions("(1,2,3)")


def test_json_roundtrip():
    s = cycle_set(5)
    assert TranspositionSet.from_json(s.to_json()) == s
    assert TranspositionSet.from_json(json.dumps([[1, 2], [2, 3]])).sorted_pairs() == [(1, 2), (2, 3)]


def test_graph_roundtrip():
    s = star_set(5)
    g = transposition_graph(s)
    assert g.vertex_count == 5 and g.degree(0) == 4
    assert from_graph(g) == s


def test_generation():
    assert generates_full_symmetric(path_set(5))
    assert not generates_full_symmetric(matching_set(2))
    assert is_minimal_generating(star_set(5))
    assert not is_minimal_generating(cycle_set(5))
    assert not is_minimal_generating(matching_set(2))


@pytest.mark.parametrize("s,kind", [
    (star_set(5), "Star"),
    (star_set(2), "Star"),
    (path_set(5), "Path"),
    (cycle_set(5), "Cycle"),
    (cycle_set(3), "Cycle"),
    (matching_set(3), "Matching"),
    (complete_set(5), "Complete"),
    (complete_bipartite_set(2, 5), "CompleteBipartite"),
    (cycle_set(4), "Cycle"),
    (spider_set(1, 2, 3), "Tree"),
    (TranspositionSet(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 4)]), "Other"),
    (TranspositionSet(5, [(1, 2), (3, 4)]), "Other"),
])
def test_family_recognition(s, kind):
    assert recognize_family(s).kind == kind
    assert kind in FAMILY_ORDER


def test_triangle_square_free():
    # 6-cycle with a pendant point: no triangles, no 4-cycles, not a tree
    s = TranspositionSet(7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 7)])
    assert recognize_family(s).kind == "TriangleAndSquareFree"


def test_family_invariant_under_relabelling():
    rng = random.Random(3)
    for s in (spider_set(1, 2, 2), cycle_set(6), complete_bipartite_set(2, 5), path_set(6)):
        for _ in range(5):
            a = list(range(1, s.n + 1))
            rng.shuffle(a)
            assert recognize_family(s.relabel(Perm(a))) == recognize_family(s)


def test_standard_sets():
    assert matching_set(2).sorted_pairs() == [(1, 2), (3, 4)]
    assert len(complete_set(5)) == 10
    assert spider_set(1, 2).sorted_pairs() == [(1, 2), (1, 3), (3, 4)]
    with pytest.raises(InvalidParameters):
        cycle_set(2)
    with pytest.raises(InvalidParameters):
        spider_set(0, 1)
