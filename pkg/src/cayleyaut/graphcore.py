"""Simple undirected graphs, named families and small structural queries.

Vertices are 0-based indices.  Every graph keeps both a frozen edge set of
``(u, v)`` pairs with ``u < v`` and per-vertex sorted neighbour tuples; the
neighbour tuples are what the search and BFS code iterate over.

Canonical vertex orders for the named families:

* ``cycle``/``path``/``complete``: 0..n-1 in the obvious order.
* ``star`` (K_{1,n}): centre 0, leaves 1..n.
* ``hypercube``: bit strings in binary order, vertex ``x`` is the integer
  whose binary digits are the string.
* ``kneser``: k-subsets of {1..n} in lexicographic order.
* ``octahedron``: complement of 3K_2 with the matching {0,1},{2,3},{4,5}.
* ``petersen``: outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
  It is deliberately not built as kneser(5,2,0), so the two can be checked
  against each other.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidParameters, SizeLimitExceeded

__all__ = [
    "SimpleGraph",
    "GirthData",
    "build_named",
    "disjoint_copies",
    "complement",
    "line_graph",
    "count_cliques",
    "girth_data",
    "is_isomorphic",
    "DEFAULT_SIZE_LIMIT",
    "NAMED_FAMILIES",
]

DEFAULT_SIZE_LIMIT = 2000


class SimpleGraph:
    """A finite simple undirected graph on vertices 0..vertex_count-1."""

    __slots__ = ("vertex_count", "edges", "adj", "labels")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]],
                 labels: Sequence[str] | None = None):
        if vertex_count < 0:
            raise InvalidParameters("vertex_count must be >= 0")
        norm = set()
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise InvalidParameters(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidParameters(f"edge ({u},{v}) outside 0..{vertex_count - 1}")
            norm.add((u, v) if u < v else (v, u))
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is not None and len(labels) != vertex_count:
            raise InvalidParameters("one label per vertex is required")
        self.vertex_count = vertex_count
        self.edges = frozenset(norm)
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.labels = tuple(labels) if labels is not None else None

    def __len__(self) -> int:
        return self.vertex_count

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimpleGraph)
                and self.vertex_count == other.vertex_count
                and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(vertices={self.vertex_count}, edges={len(self.edges)})"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        return len(self.bfs_distances(0)) == self.vertex_count

    def components(self) -> list[list[int]]:
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            comp = sorted(self.bfs_distances(s))
            for v in comp:
                seen[v] = True
            comps.append(comp)
        return comps

    def bfs_distances(self, source: int) -> dict[int, int]:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def relabel(self, mapping: Sequence[int]) -> "SimpleGraph":
        """Image of the graph under the vertex map ``v -> mapping[v]``."""
        return SimpleGraph(self.vertex_count,
                           ((mapping[u], mapping[v]) for u, v in self.edges))

    # -- exports --------------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({
            "vertex_count": self.vertex_count,
            "labels": list(self.labels) if self.labels is not None else None,
            "edges": [list(e) for e in self.edge_list()],
        })

    @classmethod
    def from_json(cls, text: str) -> "SimpleGraph":
        data = json.loads(text)
        return cls(data["vertex_count"], [tuple(e) for e in data["edges"]],
                   data.get("labels"))

    def to_edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edge_list())

    @classmethod
    def from_edge_list(cls, text: str, vertex_count: int | None = None) -> "SimpleGraph":
        edges = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                u, v = line.split()
                edges.append((int(u), int(v)))
        if vertex_count is None:
            vertex_count = 1 + max((max(e) for e in edges), default=-1)
        return cls(vertex_count, edges)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.vertex_count):
            if self.labels is not None:
                label = self.labels[v].replace('"', '\\"')
                lines.append(f'  {v} [label="{label}"];')
            else:
                lines.append(f"  {v};")
        for u, v in self.edge_list():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


# -- named families -------------------------------------------------------------


def _cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise InvalidParameters("cycle needs n >= 3")
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def _path(n: int) -> SimpleGraph:
    if n < 1:
        raise InvalidParameters("path needs n >= 1")
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def _complete(n: int) -> SimpleGraph:
    if n < 1:
        raise InvalidParameters("complete graph needs n >= 1")
    return SimpleGraph(n, combinations(range(n), 2))


def _empty(n: int) -> SimpleGraph:
    return SimpleGraph(n, [])


def _star(n: int) -> SimpleGraph:
    if n < 1:
        raise InvalidParameters("star K_{1,n} needs n >= 1")
    return SimpleGraph(n + 1, [(0, i) for i in range(1, n + 1)])


def _complete_bipartite(a: int, b: int) -> SimpleGraph:
    if a < 1 or b < 1:
        raise InvalidParameters("complete bipartite needs both sides >= 1")
    return SimpleGraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _hypercube(n: int) -> SimpleGraph:
    if n < 1:
        raise InvalidParameters("hypercube needs n >= 1")
    size = 1 << n
    labels = [format(x, f"0{n}b") for x in range(size)]
    edges = [(x, x ^ (1 << b)) for x in range(size) for b in range(n) if x < x ^ (1 << b)]
    return SimpleGraph(size, edges, labels)


def _kneser(n: int, k: int, i: int = 0) -> SimpleGraph:
    """J(n,k,i): k-subsets of {1..n}, adjacent iff they meet in exactly i points."""
    if not (0 <= k <= n) or not (0 <= i < k or (i == 0 and k == 0)):
        raise InvalidParameters(f"invalid kneser parameters ({n},{k},{i})")
    subsets = list(combinations(range(1, n + 1), k))
    sets = [frozenset(s) for s in subsets]
    edges = [(a, b) for a, b in combinations(range(len(sets)), 2)
             if len(sets[a] & sets[b]) == i]
    labels = ["{" + ",".join(map(str, s)) + "}" for s in subsets]
    return SimpleGraph(len(sets), edges, labels)


def _odd(k: int) -> SimpleGraph:
    """Odd graph O_k = J(2k-1, k-1, 0); O_3 is the Petersen graph."""
    if k < 2:
        raise InvalidParameters("odd graph needs k >= 2")
    return _kneser(2 * k - 1, k - 1, 0)


def _petersen() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph(10, outer + spokes + inner)


def _octahedron() -> SimpleGraph:
    return complement(disjoint_copies(_complete(2), 3))


def _complete_minus_edge(n: int = 4) -> SimpleGraph:
    """K_n without the edge {1,3} (0-based), i.e. K_4 minus {2,4} in 1-based labels."""
    if n < 4:
        raise InvalidParameters("complete_minus_edge needs n >= 4")
    return SimpleGraph(n, [e for e in combinations(range(n), 2) if e != (1, 3)])


NAMED_FAMILIES = {
    "cycle": _cycle,
    "path": _path,
    "complete": _complete,
    "empty": _empty,
    "star": _star,
    "complete_bipartite": _complete_bipartite,
    "hypercube": _hypercube,
    "kneser": _kneser,
    "odd": _odd,
    "petersen": _petersen,
    "octahedron": _octahedron,
    "complete_minus_edge": _complete_minus_edge,
}


def build_named(family: str, *params: int) -> SimpleGraph:
    """Build a named graph, e.g. ``build_named("kneser", 5, 2, 0)``."""
    try:
        builder = NAMED_FAMILIES[family]
    except KeyError:
        raise InvalidParameters(f"unknown family {family!r}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise InvalidParameters(f"bad parameters for {family}: {exc}") from None


# -- operations ------------------------------------------------------------------


def disjoint_copies(g: SimpleGraph, n: int) -> SimpleGraph:
    """n copies of ``g``; copy ``c`` occupies indices ``c*|V| .. (c+1)*|V|-1``."""
    if n < 1:
        raise InvalidParameters("need at least one copy")
    size = g.vertex_count
    edges = [(u + c * size, v + c * size) for c in range(n) for u, v in g.edges]
    labels = None
    if g.labels is not None:
        labels = [f"{lab}#{c}" for c in range(n) for lab in g.labels]
    return SimpleGraph(size * n, edges, labels)


def complement(g: SimpleGraph) -> SimpleGraph:
    edges = [e for e in combinations(range(g.vertex_count), 2) if e not in g.edges]
    return SimpleGraph(g.vertex_count, edges, g.labels)


def line_graph(g: SimpleGraph) -> SimpleGraph:
    """Vertices are the edges of ``g`` in lexicographic order."""
    verts = g.edge_list()
    by_end: dict[int, list[int]] = {}
    for idx, (u, v) in enumerate(verts):
        by_end.setdefault(u, []).append(idx)
        by_end.setdefault(v, []).append(idx)
    edges = set()
    for group in by_end.values():
        edges.update(combinations(group, 2))
    labels = [f"{u}-{v}" for u, v in verts]
    return SimpleGraph(len(verts), edges, labels)


def count_cliques(g: SimpleGraph, k: int, limit: int = DEFAULT_SIZE_LIMIT) -> int:
    """Number of k-vertex complete subgraphs, by ordered backtracking."""
    if k < 1:
        raise InvalidParameters("clique size must be >= 1")
    if g.vertex_count > limit:
        raise SizeLimitExceeded(f"{g.vertex_count} vertices exceeds limit {limit}")
    later = [frozenset(w for w in g.adj[v] if w > v) for v in range(g.vertex_count)]

    def extend(cands: frozenset, depth: int) -> int:
        if depth == k:
            return 1
        return sum(extend(cands & later[v], depth + 1) for v in cands)

    return extend(frozenset(range(g.vertex_count)), 0)


@dataclass(frozen=True)
class GirthData:
    has_triangle: bool
    has_4cycle: bool
    girth: float  # math.inf for forests


def girth_data(g: SimpleGraph) -> GirthData:
    best = math.inf
    for root in range(g.vertex_count):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    has_triangle = any(set(g.adj[u]) & set(g.adj[v]) for u, v in g.edges)
    has_4cycle = False
    seen_pairs = set()
    for v in range(g.vertex_count):
        for pair in combinations(g.adj[v], 2):
            if pair in seen_pairs:
                has_4cycle = True
                break
            seen_pairs.add(pair)
        if has_4cycle:
            break
    return GirthData(has_triangle, has_4cycle, best)


def is_isomorphic(g1: SimpleGraph, g2: SimpleGraph,
                  limit: int = DEFAULT_SIZE_LIMIT) -> list[int] | None:
    """A vertex bijection carrying g1's edges onto g2's, or None.

    The returned list maps vertex ``v`` of ``g1`` to ``mapping[v]`` in ``g2``
    and is re-checked edge by edge before being returned.
    """
    from .autsearch import find_isomorphism

    if max(g1.vertex_count, g2.vertex_count) > limit:
        raise SizeLimitExceeded(
            f"isomorphism test limited to {limit} vertices")
    if (g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count
            or sorted(g1.degrees()) != sorted(g2.degrees())):
        return None
    mapping = find_isomorphism(g1, g2)
    if mapping is None:
        return None
    if {tuple(sorted((mapping[u], mapping[v]))) for u, v in g1.edges} != g2.edges:
        raise AssertionError("isomorphism search returned an invalid map")
    return mapping
