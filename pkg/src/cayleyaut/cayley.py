"""Cayley graphs Cay(Gr(S), S) for transposition sets S.

The neighbours of a group element g are the products s*g for s in S.  With
left-to-right composition s*g applies s first, so in image notation it is g
with the images at positions i and j swapped.  S is closed under inverses,
so the graph is simple and undirected.

Vertex ``v`` is the element of Gr(S) with Lehmer rank ``v``: one Lehmer
rank per connected component of T(S), combined in mixed radix with the
component holding point 1 most significant.  The identity is vertex 0.
Nothing maps elements to indices through a table, so S_10 (3,628,800
vertices) fits as flat numpy arrays.

Above ``implicit_threshold`` vertices the adjacency is not stored; neighbour
indices are recomputed from ranks on demand.  Both modes give identical BFS
output.
"""

from __future__ import annotations

import json
import os
from functools import cached_property
from math import factorial, prod

import numpy as np

from .errors import BudgetExceeded, DisconnectedGraph, InvalidParameters
from .graphcore import SimpleGraph
from .perm import Perm, format_cycles
from .permgroup import PermGroup
from .ranking import BlockRanker
from .transposition import TranspositionSet, recognize_family, transposition_graph

__all__ = [
    "CayleyGraph",
    "build_cayley",
    "distances_from_identity",
    "diameter",
    "sphere",
    "right_translations",
    "default_budget",
    "DEFAULT_IMPLICIT_THRESHOLD",
    "BUDGET_ENV_VAR",
]

DEFAULT_IMPLICIT_THRESHOLD = 10**6
BUDGET_ENV_VAR = "CAYLEYAUT_BUDGET_VERTICES"
_FALLBACK_BUDGET = 4_000_000
_CHUNK = 1 << 18


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return _FALLBACK_BUDGET
    value = int(raw)
    if value < 1:
        raise InvalidParameters(f"{BUDGET_ENV_VAR} must be positive")
    return value


class CayleyGraph:
    """Cay(Gr(S), S) with Lehmer-rank vertex indexing."""

    def __init__(self, base: TranspositionSet, *, implicit_threshold: int = DEFAULT_IMPLICIT_THRESHOLD):
        self.base = base
        self.n = base.n
        self.generator_pairs = base.sorted_pairs()
        self.generators = base.perms()
        comps = transposition_graph(base).components()
        self.components = comps
        self.ranker = BlockRanker(self.n, comps)
        self.group_order = self.ranker.size
        self.implicit = self.group_order > implicit_threshold
        self._perms = None
        self._adj = None
        if not self.implicit:
            self._perms = self.ranker.unrank(np.arange(self.group_order, dtype=np.int64))
            self._adj = self._neighbor_block(self._perms)

    def __repr__(self) -> str:
        return (f"CayleyGraph(S={self.base}, vertices={self.group_order}, "
                f"degree={self.degree})")

    @property
    def vertex_count(self) -> int:
        return self.group_order

    @property
    def degree(self) -> int:
        return len(self.generator_pairs)

    # -- element <-> index ----------------------------------------------------

    def _rows(self, idx: np.ndarray) -> np.ndarray:
        if self._perms is not None:
            return self._perms[idx]
        return self.ranker.unrank(idx)

    def element(self, v: int) -> Perm:
        if not 0 <= v < self.group_order:
            raise IndexError(f"vertex {v} outside 0..{self.group_order - 1}")
        row = self._rows(np.array([v]))[0]
        return Perm._raw(tuple(int(x) for x in row))

    def index_of(self, p: Perm) -> int:
        if p.degree != self.n or not self.ranker.preserves_blocks(p.arr):
            raise ValueError(f"{p} is not an element of Gr(S)")
        return int(self.ranker.rank(np.array([p.arr]))[0])

    # -- adjacency ------------------------------------------------------------

    def _neighbor_block(self, rows: np.ndarray) -> np.ndarray:
        """Neighbour indices for each row, one column per generator (sorted order)."""
        out = np.empty((rows.shape[0], self.degree), dtype=np.int64)
        for col, (i, j) in enumerate(self.generator_pairs):
            swapped = rows.copy()
            swapped[:, [i - 1, j - 1]] = rows[:, [j - 1, i - 1]]
            out[:, col] = self.ranker.rank(swapped)
        return out

    def neighbor_array(self, idx: np.ndarray) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        if self._adj is not None:
            return self._adj[idx]
        parts = [self._neighbor_block(self.ranker.unrank(idx[k:k + _CHUNK]))
                 for k in range(0, idx.size, _CHUNK)]
        if not parts:
            return np.empty((0, self.degree), dtype=np.int64)
        return np.concatenate(parts)

    def neighbors(self, v: int) -> list[int]:
        """Neighbours of vertex v, in generator order."""
        return [int(x) for x in self.neighbor_array(np.array([v]))[0]]

    def adjacency(self) -> np.ndarray:
        if self._adj is not None:
            return self._adj
        return self.neighbor_array(np.arange(self.group_order, dtype=np.int64))

    def to_simple_graph(self, labels: bool = False) -> SimpleGraph:
        adj = self.adjacency()
        edges = [(v, int(w)) for v in range(self.group_order) for w in adj[v] if v < w]
        names = None
        if labels:
            names = [format_cycles(self.element(v)) for v in range(self.group_order)]
        return SimpleGraph(self.group_order, edges, names)

    # -- distances --------------------------------------------------------------

    @cached_property
    def _distances(self) -> np.ndarray:
        dist = np.full(self.group_order, -1, dtype=np.int16)
        dist[0] = 0
        frontier = np.zeros(1, dtype=np.int64)
        level = 0
        while frontier.size:
            nb = self.neighbor_array(frontier).ravel()
            nb = np.unique(nb[dist[nb] < 0])
            level += 1
            dist[nb] = level
            frontier = nb
        return dist

    def distances_from_identity(self) -> np.ndarray:
        dist = self._distances
        if (dist < 0).any():
            raise DisconnectedGraph("some vertices are unreachable from the identity")
        return dist

    def diameter(self) -> int:
        return int(self.distances_from_identity().max())

    def sphere(self, d: int) -> set[int]:
        dist = self.distances_from_identity()
        return {int(v) for v in np.nonzero(dist == d)[0]}

    def level_counts(self) -> list[int]:
        return np.bincount(self.distances_from_identity()).tolist()

    # -- group actions on vertex indices -------------------------------------------

    def _index_map(self, rows: np.ndarray) -> Perm:
        return Perm._raw(tuple(int(x) for x in self.ranker.rank(rows)))

    def _all_rows(self) -> np.ndarray:
        if self._perms is not None:
            return self._perms
        return self.ranker.unrank(np.arange(self.group_order, dtype=np.int64))

    def right_translation(self, z: Perm) -> Perm:
        """r_z : g -> g*z as a permutation of vertex indices."""
        if z.degree != self.n or not self.ranker.preserves_blocks(z.arr):
            raise ValueError(f"{z} is not an element of Gr(S)")
        zarr = np.array(z.arr, dtype=np.uint8)
        return self._index_map(zarr[self._all_rows()])

    def conjugation_map(self, pi: Perm) -> Perm:
        """g -> pi^-1 * g * pi as a permutation of vertex indices."""
        piarr = np.array(pi.arr, dtype=np.uint8)
        inv = np.argsort(piarr)
        rows = self._all_rows()
        return self._index_map(piarr[rows[:, inv]])

    def right_translations(self) -> PermGroup:
        """R(Gr(S)) on vertex indices, generated by the translations r_s, s in S.

        The group is regular, so its order is the number of vertices; each
        generator is checked to preserve adjacency.
        """
        gens = [self.right_translation(s) for s in self.generators]
        adj = self.adjacency()
        for p in gens:
            if not preserves_adjacency(adj, p):
                raise AssertionError(f"right translation {p!r} is not an automorphism")
        return PermGroup(gens, self.group_order, order_hint=self.group_order)

    # -- exports ------------------------------------------------------------------

    def summary(self) -> dict:
        return {
            "family": str(recognize_family(self.base)),
            "n": self.n,
            "vertices": self.group_order,
            "degree": self.degree,
            "diameter": self.diameter(),
        }

    def to_json(self) -> str:
        return self.to_simple_graph(labels=True).to_json()

    def to_dot(self) -> str:
        return self.to_simple_graph(labels=True).to_dot("Cayley")


def preserves_adjacency(adj: np.ndarray, p: Perm) -> bool:
    """True iff the index map p sends every neighbour list onto the image's list."""
    arr = np.array(p.arr, dtype=np.int64)
    mapped = np.sort(arr[adj], axis=1)
    return bool((mapped == np.sort(adj[arr], axis=1)).all())


def build_cayley(s: TranspositionSet, limit: int | None = None, *,
                 implicit_threshold: int = DEFAULT_IMPLICIT_THRESHOLD) -> CayleyGraph:
    limit = default_budget() if limit is None else limit
    sizes = [len(c) for c in transposition_graph(s).components()]
    required = prod(factorial(k) for k in sizes)
    if required > limit:
        raise BudgetExceeded(f"Gr(S) has {required} elements, budget is {limit}", required)
    return CayleyGraph(s, implicit_threshold=implicit_threshold)


def distances_from_identity(g: CayleyGraph) -> np.ndarray:
    return g.distances_from_identity()


def diameter(g: CayleyGraph) -> int:
    return g.diameter()


def sphere(g: CayleyGraph, d: int) -> set[int]:
    return g.sphere(d)


def right_translations(g: CayleyGraph) -> PermGroup:
    return g.right_translations()
