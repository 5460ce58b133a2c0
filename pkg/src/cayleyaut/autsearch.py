"""Exact automorphism groups of small graphs by individualise-and-refine search.

The engine is a small nauty-style backtracker:

* colourings are refined to the coarsest equitable colouring by repeated
  neighbour-colour counting; new colour labels are the ranks of sorted
  signatures, so equivalent colourings receive identical labels;
* a vertex of the first smallest non-singleton cell is individualised and
  the search recurses, building a stabilizer chain of the automorphism group
  level by level (orbit of the individualised vertex times the order of its
  stabilizer);
* single automorphisms between two colourings are found by a second
  backtracker whose leaves are checked edge by edge.

Every generator returned has been verified to map the edge set onto itself.
Groups act on points 1..n where point ``v+1`` is vertex ``v``.
"""

from __future__ import annotations

import json
import sys
from collections import Counter, deque
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidParameters, SearchBoundExceeded
from .graphcore import SimpleGraph
from .perm import Perm, format_cycles
from .permgroup import PermGroup

__all__ = [
    "AutResult",
    "automorphism_group",
    "vertex_stabilizer",
    "is_vertex_transitive",
    "is_automorphism",
    "find_isomorphism",
    "DEFAULT_SEARCH_BOUND",
]

DEFAULT_SEARCH_BOUND = 5000


def _refine(adj: Sequence[Sequence[int]], colors: list[int]) -> tuple[list[int], tuple]:
    """Coarsest equitable refinement of ``colors`` plus a trace of the splits."""
    n = len(colors)
    ncolors = len(set(colors))
    trace = []
    while True:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in adj[v]]))) for v in range(n)]
        counts = Counter(sigs)
        if len(counts) == ncolors:
            if not trace:
                trace.append(hash(tuple(sorted(counts.items()))))
            return colors, tuple(trace)
        uniq = sorted(counts)
        index = {s: i for i, s in enumerate(uniq)}
        colors = [index[s] for s in sigs]
        ncolors = len(uniq)
        trace.append(hash(tuple((s, counts[s]) for s in uniq)))


def _individualize(colors: list[int], v: int) -> list[int]:
    out = [2 * c for c in colors]
    out[v] += 1
    return out


def _target_cell(colors: list[int]) -> list[int] | None:
    """Vertices of the smallest non-singleton cell (lowest label on ties)."""
    counts = Counter(colors)
    best = None
    for label, size in counts.items():
        if size > 1 and (best is None or (size, label) < best):
            best = (size, label)
    if best is None:
        return None
    return [v for v, c in enumerate(colors) if c == best[1]]


def _maps_edges(mapping: Sequence[int], edges_from, edges_to) -> bool:
    for u, v in edges_from:
        a, b = mapping[u], mapping[v]
        if ((a, b) if a < b else (b, a)) not in edges_to:
            return False
    return True


class _Searcher:
    def __init__(self, g1: SimpleGraph, g2: SimpleGraph | None = None):
        self.g1 = g1
        self.g2 = g1 if g2 is None else g2

    # one map carrying colouring c1 of g1 onto colouring c2 of g2
    def find(self, c1: list[int], c2: list[int]) -> list[int] | None:
        cell = _target_cell(c1)
        if cell is None:
            if _target_cell(c2) is not None:
                return None
            where = {c: v for v, c in enumerate(c2)}
            mapping = [where.get(c, -1) for c in c1]
            if -1 in mapping:
                return None
            if _maps_edges(mapping, self.g1.edges, self.g2.edges):
                return mapping
            return None
        label = c1[cell[0]]
        v = cell[0]
        c1v, t1 = _refine(self.g1.adj, _individualize(c1, v))
        for w in (x for x, c in enumerate(c2) if c == label):
            c2w, t2 = _refine(self.g2.adj, _individualize(c2, w))
            if t1 != t2:
                continue
            found = self.find(c1v, c2w)
            if found is not None:
                return found
        return None

    def stabilizer(self, colors: list[int]) -> tuple[list[tuple], int]:
        cell = _target_cell(colors)
        if cell is None:
            return [], 1
        gens, sub_order, orbit_size = self.level(colors, cell, cell[0])
        return gens, sub_order * orbit_size

    def level(self, colors: list[int], cell: list[int], v: int) -> tuple[list[tuple], int, int]:
        """Generators for Aut(colors), the order of the stabilizer of v, and |orbit of v|."""
        cv, tv = _refine(self.g1.adj, _individualize(colors, v))
        gens, sub_order = self.stabilizer(cv)
        orbit = {v}
        for w in cell:
            if w in orbit:
                continue
            cw, tw = _refine(self.g1.adj, _individualize(colors, w))
            if tw != tv:
                continue
            pi = self.find(cv, cw)
            if pi is not None:
                gens.append(tuple(pi))
                orbit = _orbit(v, gens)
        return gens, sub_order, len(orbit)


def _orbit(v: int, gens: Sequence[Sequence[int]]) -> set[int]:
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _check_size(g: SimpleGraph, bound: int) -> None:
    if g.vertex_count == 0:
        raise InvalidParameters("automorphism search needs at least one vertex")
    if g.vertex_count > bound:
        raise SearchBoundExceeded(f"{g.vertex_count} vertices exceeds search bound {bound}")
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * g.vertex_count + 1000))


def is_automorphism(g: SimpleGraph, p: Perm) -> bool:
    return p.degree == g.vertex_count and _maps_edges(p.arr, g.edges, g.edges)


@dataclass
class AutResult:
    group: PermGroup
    order: int
    stabilizer_order: int
    orbit_size: int
    base_vertex: int = 0

    def to_dict(self) -> dict:
        return {
            "order": str(self.order),
            "generators": [format_cycles(p) for p in self.group.generators],
            "stabilizer_order": str(self.stabilizer_order),
            "orbit_size": self.orbit_size,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def automorphism_group(g: SimpleGraph, *, bound: int = DEFAULT_SEARCH_BOUND,
                       transitive_generators: Sequence[Perm] | None = None) -> AutResult:
    """Full automorphism group of ``g`` with base vertex 0.

    ``transitive_generators`` are known automorphisms generating a
    transitive group (for a Cayley graph, the right translations).  They are
    checked, and then only the stabilizer of vertex 0 is searched.
    """
    _check_size(g, bound)
    n = g.vertex_count
    search = _Searcher(g)
    colors, _ = _refine(g.adj, [0] * n)
    if transitive_generators is not None:
        extra = list(transitive_generators)
        for p in extra:
            if not is_automorphism(g, p):
                raise ValueError(f"{format_cycles(p)} is not an automorphism")
        if len(_orbit(0, [p.arr for p in extra])) != n:
            raise ValueError("supplied generators are not transitive")
        c0, _ = _refine(g.adj, _individualize(colors, 0))
        stab_gens, stab_order = search.stabilizer(c0)
        orbit_size = n
        gens = [Perm._raw(t) for t in stab_gens] + extra
    else:
        cell = [v for v in range(n) if colors[v] == colors[0]]
        raw, stab_order, orbit_size = search.level(colors, cell, 0)
        gens = [Perm._raw(t) for t in raw]
    total = stab_order * orbit_size
    for p in gens:
        if not is_automorphism(g, p):
            raise AssertionError("search produced a non-automorphism")
    return AutResult(PermGroup(gens, n, order_hint=total), total, stab_order, orbit_size)


def vertex_stabilizer(g: SimpleGraph, v: int, *, bound: int = DEFAULT_SEARCH_BOUND) -> PermGroup:
    """All automorphisms fixing vertex ``v`` (0-based)."""
    _check_size(g, bound)
    colors, _ = _refine(g.adj, [0] * g.vertex_count)
    cv, _ = _refine(g.adj, _individualize(colors, v))
    gens, order = _Searcher(g).stabilizer(cv)
    return PermGroup([Perm._raw(t) for t in gens], g.vertex_count, order_hint=order)


def is_vertex_transitive(g: SimpleGraph, *, bound: int = DEFAULT_SEARCH_BOUND) -> bool:
    _check_size(g, bound)
    n = g.vertex_count
    if not g.is_regular():
        return False
    colors, _ = _refine(g.adj, [0] * n)
    if len(set(colors)) > 1:
        return False
    search = _Searcher(g)
    c0, t0 = _refine(g.adj, _individualize(colors, 0))
    gens: list[tuple] = []
    orbit = {0}
    for w in range(1, n):
        if w in orbit:
            continue
        cw, tw = _refine(g.adj, _individualize(colors, w))
        if tw != t0:
            return False
        pi = search.find(c0, cw)
        if pi is None:
            return False
        gens.append(tuple(pi))
        orbit = _orbit(0, gens)
    return True


def find_isomorphism(g1: SimpleGraph, g2: SimpleGraph) -> list[int] | None:
    """Vertex map from g1 onto g2 preserving edges, or None."""
    if g1.vertex_count != g2.vertex_count:
        return None
    if g1.vertex_count == 0:
        return []
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * g1.vertex_count + 1000))
    c1, t1 = _refine(g1.adj, [0] * g1.vertex_count)
    c2, t2 = _refine(g2.adj, [0] * g2.vertex_count)
    if t1 != t2:
        return None
    return _Searcher(g1, g2).find(c1, c2)
