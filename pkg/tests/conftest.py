"""Shared oracles and the acceptance-criterion reporter.

The oracles here deliberately avoid the package's own machinery: group
closure instead of stabilizer chains, plain backtracking instead of
refinement search, dict-based BFS over permutation tuples instead of
Lehmer-ranked arrays.
"""

import os
from collections import deque
from itertools import combinations, permutations

import pytest


# -- oracles --------------------------------------------------------------------


def closure(gens, degree):
    """All elements of <gens> as 0-based image tuples (left-to-right products)."""
    ident = tuple(range(degree))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g[x[i]] for i in range(degree))
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def naive_aut_count(n, edges):
    """Count automorphisms by extending a vertex map along a BFS order."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    order, parent = [], {}
    seen = set()
    for root in range(n):
        if root in seen:
            continue
        seen.add(root)
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(adj[u]):
                if w not in seen:
                    seen.add(w)
                    parent[w] = u
                    queue.append(w)
    image = {}
    used = set()

    def extend(pos):
        if pos == n:
            return 1
        v = order[pos]
        p = parent[v]
        cands = adj[image[p]] if p is not None else range(n)
        total = 0
        for c in cands:
            if c in used or len(adj[c]) != len(adj[v]):
                continue
            if all((w in adj[v]) == (image[w] in adj[c]) for w in image):
                image[v] = c
                used.add(c)
                total += extend(pos + 1)
                del image[v]
                used.discard(c)
        return total

    return extend(0)


def brute_aut_perms(n, edges):
    """Every vertex permutation preserving the edge set (tiny graphs only)."""
    es = {frozenset(e) for e in edges}
    return [p for p in permutations(range(n))
            if {frozenset((p[u], p[v])) for u, v in edges} == es]


def cayley_bfs(n, pairs):
    """Distances from the identity in Cay(S_n, S) over permutation tuples."""
    start = tuple(range(n))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for i, j in pairs:
            h = list(g)
            h[i - 1], h[j - 1] = h[j - 1], h[i - 1]
            h = tuple(h)
            if h not in dist:
                dist[h] = dist[g] + 1
                queue.append(h)
    return dist


def cayley_edges_by_tuple(n, pairs):
    """Cay(S_n, S) as (vertex list, edge list) with vertices = sorted tuples."""
    verts = sorted(cayley_bfs(n, pairs))
    index = {v: k for k, v in enumerate(verts)}
    edges = set()
    for g in verts:
        for i, j in pairs:
            h = list(g)
            h[i - 1], h[j - 1] = h[j - 1], h[i - 1]
            a, b = index[g], index[tuple(h)]
            edges.add((min(a, b), max(a, b)))
    return verts, sorted(edges)


def cycles_containing(n_vertices, edges, length, must):
    """Brute-force vertex cycles of a given length containing all of ``must``."""
    adj = [set() for _ in range(n_vertices)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    start = min(must)
    found = set()

    def walk(path):
        if len(path) == length:
            if start in adj[path[-1]]:
                cyc = tuple(path)
                rev = (cyc[0],) + tuple(reversed(cyc[1:]))
                found.add(min(cyc, rev))
            return
        for w in adj[path[-1]]:
            if w not in path:
                walk(path + [w])

    walk([start])
    return [c for c in found if all(m in c for m in must)]


def labeled_trees(n):
    """All labelled trees on 0..n-1 via Pruefer sequences (n >= 2)."""
    from itertools import product

    if n == 2:
        yield [(0, 1)]
        return
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(v for v in range(n) if degree[v] == 1)
            edges.append((min(leaf, x), max(leaf, x)))
            degree[leaf] -= 1
            degree[x] -= 1
        u, w = [v for v in range(n) if degree[v] == 1]
        edges.append((u, w))
        yield edges


@pytest.fixture
def oracles():
    class O:
        pass

    o = O()
    for f in (closure, naive_aut_count, brute_aut_perms, cayley_bfs,
              cayley_edges_by_tuple, cycles_containing, labeled_trees):
        setattr(o, f.__name__, staticmethod(f))
    return o


# -- extended tests and criterion reporting ------------------------------------------


def pytest_collection_modifyitems(config, items):
    if os.environ.get("CAYLEYAUT_EXTENDED") == "1":
        return
    skip = pytest.mark.skip(reason="extended check; set CAYLEYAUT_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")
    config._criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        num, title = marker.args
        results = item.config._criteria.setdefault(num, [title, []])
        results[1].append((item.name, report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    criteria = getattr(config, "_criteria", {})
    if not criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(criteria):
        title, runs = criteria[num]
        ok = all(outcome == "passed" for _, outcome in runs)
        failed = [name for name, outcome in runs if outcome != "passed"]
        line = f"criterion {num} ({title}): {'PASS' if ok else 'FAIL'} [{len(runs)} checks]"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
