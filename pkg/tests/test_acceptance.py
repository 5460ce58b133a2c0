"""Acceptance checks, one marker per criterion.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import random
import time
from itertools import combinations, permutations

import pytest

from cayleyaut.autsearch import automorphism_group, is_automorphism
from cayleyaut.cayley import build_cayley
from cayleyaut.graphcore import (
    NAMED_FAMILIES,
    build_named,
    complement,
    count_cliques,
    disjoint_copies,
    is_isomorphic,
    line_graph,
)
from cayleyaut.perm import Perm, compose, cycle_count, inverse, product_of, transposition
from cayleyaut.permgroup import PermGroup, symmetric_group, wreath
from cayleyaut.theoremlab import (
    cayley_automorphisms,
    check_normal,
    feng_condition,
    four_cycle_census,
    predict_aut,
    six_cycle_census,
    verify_prediction,
)
from cayleyaut.transposition import (
    TranspositionSet,
    cycle_set,
    generates_full_symmetric,
    path_set,
    spider_set,
    star_set,
    transposition_graph,
)

from conftest import closure, labeled_trees, naive_aut_count


def timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


def check_orbit_stabilizer(res):
    assert res.order == res.stabilizer_order * res.orbit_size
    assert res.group.order() == res.order


# -- criterion 1 ---------------------------------------------------------------------

C1 = pytest.mark.criterion(1, "worked-example automorphism orders")

WORKED = [
    ("cycle12", lambda: build_named("cycle", 12), 24),
    ("petersen", lambda: build_named("petersen"), 120),
    ("three_K2", lambda: disjoint_copies(build_named("complete", 2), 3), 48),
    ("K4_minus_edge", lambda: build_named("complete_minus_edge", 4), 4),
    ("K_1_4", lambda: build_named("star", 4), 24),
    ("Q2", lambda: build_named("hypercube", 2), 8),
    ("Q3", lambda: build_named("hypercube", 3), 48),
    ("Q4", lambda: build_named("hypercube", 4), 384),
]


@C1
@pytest.mark.parametrize("name,make,expected", WORKED, ids=[w[0] for w in WORKED])
def test_worked_example_orders(name, make, expected):
    g = make()
    res, elapsed = timed(automorphism_group, g)
    assert res.order == expected
    check_orbit_stabilizer(res)
    assert elapsed < 5.0
    for p in res.group.generators:
        assert is_automorphism(g, p)


@C1
@pytest.mark.parametrize("name,make,expected",
                         [w for w in WORKED if w[0] != "Q4"],
                         ids=[w[0] for w in WORKED if w[0] != "Q4"])
def test_worked_example_orders_match_naive_oracle(name, make, expected):
    g = make()
    assert naive_aut_count(g.vertex_count, g.edge_list()) == expected


@C1
def test_hypercube_formula():
    from math import factorial

    for n in (2, 3, 4):
        assert automorphism_group(build_named("hypercube", n)).order == 2**n * factorial(n)


# -- criterion 2 ---------------------------------------------------------------------

C2 = pytest.mark.criterion(2, "wreath-product agreement")


@C2
def test_three_K2_equals_wreath_as_sets():
    t0 = time.perf_counter()
    g = disjoint_copies(build_named("complete", 2), 3)
    aut = automorphism_group(g).group
    w = wreath(symmetric_group(3), symmetric_group(2))
    assert aut.equals(w)
    assert w.equals(aut)
    # element-by-element as well
    assert aut.elements(100) == w.elements(100)
    assert time.perf_counter() - t0 < 5.0


@C2
def test_two_triangles_vs_wreath_order():
    t0 = time.perf_counter()
    c3 = build_named("cycle", 3)
    two = disjoint_copies(c3, 2)
    aut_c3 = automorphism_group(c3).group
    w = wreath(symmetric_group(2), aut_c3)
    res = automorphism_group(two)
    assert res.order == w.order() == 72
    assert res.group.equals(w)
    assert time.perf_counter() - t0 < 5.0


# -- criterion 3 ---------------------------------------------------------------------

C3 = pytest.mark.criterion(3, "line graph of K5")


@C3
def test_line_graph_k5_four_cliques():
    lk5 = line_graph(build_named("complete", 5))
    assert lk5.vertex_count == 10 and lk5.edge_count == 30
    assert count_cliques(lk5, 4) == 5


@C3
def test_complement_line_graph_k5_is_petersen():
    lk5 = line_graph(build_named("complete", 5))
    assert is_isomorphic(complement(lk5), build_named("petersen"))


# -- criterion 4 ---------------------------------------------------------------------

C4 = pytest.mark.criterion(4, "MBS diameter floor(n^2/4)")


@C4
def test_mbs_diameter_small():
    t0 = time.perf_counter()
    for n in range(3, 8):
        g = build_cayley(cycle_set(n))
        assert g.diameter() == n * n // 4, n
    assert time.perf_counter() - t0 < 10.0


@C4
def test_mbs_diameter_n8():
    g, elapsed = timed(lambda: build_cayley(cycle_set(8)).diameter())
    assert g == 16
    assert elapsed < 120.0


@C4
def test_mbs_diameter_matches_independent_bfs():
    from conftest import cayley_bfs

    for n in range(3, 7):
        dist = cayley_bfs(n, cycle_set(n).sorted_pairs())
        assert max(dist.values()) == n * n // 4


@pytest.mark.extended
@pytest.mark.parametrize("n", [9, 10])
def test_mbs_diameter_extended(n):
    assert build_cayley(cycle_set(n)).diameter() == n * n // 4


# -- criterion 5 ---------------------------------------------------------------------

C5 = pytest.mark.criterion(5, "cycle censuses")


@C5
def test_bs4_four_cycle_sweep():
    g = build_cayley(path_set(4))
    for t, k in combinations(path_set(4).sorted_pairs(), 2):
        commute = not set(t) & set(k)
        assert four_cycle_census(g, t, k) == (1 if commute else 0), (t, k)


@C5
def test_mbs4_six_cycle_census():
    s = cycle_set(4)
    g = build_cayley(s)
    adjacent = [(t, k) for t, k in combinations(s.sorted_pairs(), 2) if set(t) & set(k)]
    assert len(adjacent) == 4
    for t, k in adjacent:
        c = six_cycle_census(g, t, k)
        assert (c.six_cycles, c.distance3_vertices) == (8, 6), (t, k)


@C5
@pytest.mark.parametrize("s", [cycle_set(5), path_set(5)], ids=["MBS5", "BS5"])
def test_six_cycle_unique_for_noncommuting(s):
    g = build_cayley(s)
    for t, k in combinations(s.sorted_pairs(), 2):
        if set(t) & set(k):
            assert six_cycle_census(g, t, k).six_cycles == 1, (t, k)


# -- criterion 6 ---------------------------------------------------------------------

C6 = pytest.mark.criterion(6, "theorem table vs brute force")

TABLE = [
    ("star4", star_set(4), 144, True),
    ("path4", path_set(4), 48, True),
    ("cycle4", cycle_set(4), 768, False),
    ("cycle5", cycle_set(5), 1200, True),
    ("star5", star_set(5), 2880, True),
    ("path5", path_set(5), 240, True),
    ("spider123", spider_set(1, 2, 3), 5040, True),
]


@C6
@pytest.mark.parametrize("name,s,order,normal", TABLE, ids=[t[0] for t in TABLE])
def test_table_entry(name, s, order, normal):
    pred = predict_aut(s)
    assert pred.predicted_order == order
    assert pred.normal is normal
    rep, elapsed = timed(verify_prediction, s)
    assert rep.computed_order == order
    assert rep.computed_normal is normal
    assert rep.agree
    if name == "cycle5":
        assert elapsed < 120.0


@C6
def test_asymmetric_tree_is_asymmetric_and_smallest():
    s = spider_set(1, 2, 3)
    assert s.n == 7
    assert automorphism_group(transposition_graph(s)).order == 1
    # every tree on six points has a non-trivial automorphism
    for edges in labeled_trees(6):
        assert naive_aut_count(6, edges) > 1


@C6
@pytest.mark.parametrize("n", [4, 5])
def test_brute_force_cross_check_small(n):
    # independent backtracking count for the n = 4 Cayley graphs
    if n == 5:
        s = cycle_set(5)
        g = build_cayley(s)
        assert naive_aut_count(g.vertex_count, g.to_simple_graph().edge_list()) == 1200
        return
    for s, expected in ((star_set(4), 144), (path_set(4), 48), (cycle_set(4), 768)):
        g = build_cayley(s)
        assert naive_aut_count(g.vertex_count, g.to_simple_graph().edge_list()) == expected


# -- criterion 7 ---------------------------------------------------------------------

C7 = pytest.mark.criterion(7, "Feng condition gate")

FENG = [
    ("MBS4", cycle_set(4), False),
    ("MBS5", cycle_set(5), True),
    ("BS4", path_set(4), True),
    ("BS5", path_set(5), True),
]


@C7
@pytest.mark.parametrize("name,s,expected", FENG, ids=[f[0] for f in FENG])
def test_feng(name, s, expected):
    g = build_cayley(s)
    res = feng_condition(g)
    assert res.holds is expected
    if res.holds:
        rep = verify_prediction(s)
        assert rep.agree and rep.computed_normal
        assert not rep.computed_only
    else:
        assert res.witnesses


# -- criterion 8 ---------------------------------------------------------------------

C8 = pytest.mark.criterion(8, "property suites")


def _rand_perm(rng, n):
    a = list(range(1, n + 1))
    rng.shuffle(a)
    return Perm(a)


@C8
def test_perm_bijectivity_and_associativity():
    rng = random.Random(1234)
    for _ in range(10_000):
        n = rng.randint(1, 9)
        p, q, r = (_rand_perm(rng, n) for _ in range(3))
        pq = compose(p, q)
        assert sorted(pq.images) == list(range(1, n + 1))
        assert all(pq(i) == q(p(i)) for i in range(1, n + 1))
        assert compose(pq, r) == compose(p, compose(q, r))
        assert compose(p, inverse(p)).is_identity()


@C8
def test_tree_iff_full_cycle_product():
    for n in range(2, 7):
        trees = {tuple(sorted(e)) for e in labeled_trees(n)}
        for edges in trees:
            pairs = [(u + 1, v + 1) for u, v in edges]
            for order in permutations(pairs):
                assert cycle_count(product_of(order, n)) == 1
        all_pairs = list(combinations(range(n), 2))
        for chosen in combinations(all_pairs, n - 1):
            if tuple(sorted(chosen)) in trees:
                continue
            pairs = [(u + 1, v + 1) for u, v in chosen]
            assert any(cycle_count(product_of(o, n)) != 1 for o in permutations(pairs))


@C8
def test_cycle_count_changes_by_one():
    rng = random.Random(99)
    for _ in range(10_000):
        n = rng.randint(2, 10)
        p = _rand_perm(rng, n)
        i, j = rng.sample(range(1, n + 1), 2)
        t = transposition(i, j, n)
        delta = cycle_count(compose(p, t)) - cycle_count(p)
        assert abs(delta) == 1
        # merges exactly when i and j lie in different cycles of p
        same = any(i in c and j in c for c in p.cycles())
        assert delta == (-1 if not same else 1)


def _generation_agrees(n, pairs):
    s = TranspositionSet(n, pairs)
    gens = [tuple(transposition(i, j, n).arr) for i, j in pairs] or [tuple(range(n))]
    from math import factorial

    full = len(closure(gens, n)) == factorial(n)
    assert generates_full_symmetric(s) == full, pairs
    if pairs:
        assert (PermGroup(s.perms(), n).order() == factorial(n)) == full


@C8
def test_connectivity_iff_generation():
    for n in range(1, 5):
        all_pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        for k in range(len(all_pairs) + 1):
            for chosen in combinations(all_pairs, k):
                _generation_agrees(n, list(chosen))
    rng = random.Random(7)
    all5 = [(i, j) for i in range(1, 6) for j in range(i + 1, 6)]
    for _ in range(200):
        chosen = [p for p in all5 if rng.random() < 0.4]
        _generation_agrees(5, chosen)


NAMED_CASES = [
    ("cycle", (7,)), ("path", (6,)), ("complete", (5,)), ("empty", (4,)),
    ("star", (5,)), ("complete_bipartite", (2, 3)), ("hypercube", (3,)),
    ("kneser", (5, 2, 0)), ("odd", (3,)), ("petersen", ()), ("octahedron", ()),
    ("complete_minus_edge", (4,)),
]


@C8
def test_named_cases_cover_all_families():
    assert {name for name, _ in NAMED_CASES} == set(NAMED_FAMILIES)


@C8
@pytest.mark.parametrize("family,params", NAMED_CASES, ids=[c[0] for c in NAMED_CASES])
def test_orbit_stabilizer_and_complement(family, params):
    g = build_named(family, *params)
    a = automorphism_group(g)
    b = automorphism_group(complement(g))
    check_orbit_stabilizer(a)
    check_orbit_stabilizer(b)
    assert a.order == b.order
    assert a.group.equals(b.group)


@C8
@pytest.mark.parametrize("s", [star_set(4), path_set(4), cycle_set(4), cycle_set(5)],
                         ids=["star4", "path4", "cycle4", "cycle5"])
def test_orbit_stabilizer_cayley(s):
    g = build_cayley(s)
    check_orbit_stabilizer(cayley_automorphisms(g))
