"""Transposition sets S of S_n and their transposition graphs T(S).

Whether S generates S_n, and whether it does so minimally, is read off the
graph T(S): connected means generating, a tree means minimally generating.
No group closure is computed here.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InvalidParameters
from .graphcore import SimpleGraph, girth_data
from .perm import Perm, transposition

__all__ = [
    "TranspositionSet",
    "FamilyTag",
    "FAMILY_ORDER",
    "transposition_graph",
    "from_graph",
    "generates_full_symmetric",
    "is_minimal_generating",
    "recognize_family",
    "star_set",
    "path_set",
    "cycle_set",
    "matching_set",
    "complete_set",
    "complete_bipartite_set",
    "spider_set",
    "parse_transpositions",
]


@dataclass(frozen=True, init=False)
class TranspositionSet:
    """Transpositions of {1..n}, stored as sorted pairs ``(i, j)`` with ``i < j``."""

    n: int
    pairs: frozenset

    def __init__(self, n: int, pairs: Iterable = ()):
        if n < 1:
            raise InvalidParameters("n must be >= 1")
        norm = set()
        for p in pairs:
            if isinstance(p, Perm):
                moved = p.support()
                if len(moved) != 2:
                    raise InvalidParameters(f"{p} is not a transposition")
                i, j = moved
            else:
                i, j = p
            if i == j or not (1 <= i <= n and 1 <= j <= n):
                raise InvalidParameters(f"({i},{j}) is not a transposition of 1..{n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "pairs", frozenset(norm))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.sorted_pairs())

    def __contains__(self, pair) -> bool:
        i, j = pair
        return (min(i, j), max(i, j)) in self.pairs

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)

    def perms(self) -> list[Perm]:
        """The transpositions as permutations, in lexicographic pair order."""
        return [transposition(i, j, self.n) for i, j in self.sorted_pairs()]

    def relabel(self, point_map: Perm) -> "TranspositionSet":
        return TranspositionSet(self.n, [(point_map(i), point_map(j)) for i, j in self.pairs])

    def __str__(self) -> str:
        return "".join(f"({i},{j})" for i, j in self.sorted_pairs())

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "pairs": [list(p) for p in self.sorted_pairs()]})

    @classmethod
    def from_json(cls, text: str) -> "TranspositionSet":
        data = json.loads(text)
        if isinstance(data, list):
            pairs = [tuple(p) for p in data]
            return cls(max((max(p) for p in pairs), default=1), pairs)
        return cls(data["n"], [tuple(p) for p in data["pairs"]])


_PAIR_RE = re.compile(r"\(\s*(\d+)\s*[,\s]\s*(\d+)\s*\)")


def parse_transpositions(text: str, n: int | None = None) -> TranspositionSet:
    """Parse ``"(1,2) (2,3) (3,1)"``; n defaults to the largest point."""
    pairs = [(int(a), int(b)) for a, b in _PAIR_RE.findall(text)]
    leftover = _PAIR_RE.sub("", text).replace(",", " ").strip()
    if leftover:
        raise InvalidParameters(f"cannot parse transposition set {text!r}")
    if n is None:
        n = max((max(p) for p in pairs), default=1)
    return TranspositionSet(n, pairs)


def transposition_graph(s: TranspositionSet) -> SimpleGraph:
    """T(S) on vertices 0..n-1 (vertex ``i-1`` is point ``i``)."""
    return SimpleGraph(s.n, [(i - 1, j - 1) for i, j in s.pairs],
                       [str(i) for i in range(1, s.n + 1)])


def from_graph(g: SimpleGraph) -> TranspositionSet:
    return TranspositionSet(g.vertex_count, [(u + 1, v + 1) for u, v in g.edges])


def generates_full_symmetric(s: TranspositionSet) -> bool:
    return transposition_graph(s).is_connected()


def is_minimal_generating(s: TranspositionSet) -> bool:
    return len(s) == s.n - 1 and generates_full_symmetric(s)


FAMILY_ORDER = ("Star", "Path", "Cycle", "Matching", "Complete",
                "CompleteBipartite", "Tree", "TriangleAndSquareFree", "Other")


@dataclass(frozen=True)
class FamilyTag:
    kind: str
    params: tuple = ()

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}({','.join(map(str, self.params))})"


def _bipartition(g: SimpleGraph) -> tuple[list[int], list[int]] | None:
    side = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if side[s] != -1:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    return ([v for v in range(g.vertex_count) if side[v] == 0],
            [v for v in range(g.vertex_count) if side[v] == 1])


def recognize_family(s: TranspositionSet) -> FamilyTag:
    """Most specific family of T(S), tested in ``FAMILY_ORDER``.

    Parameters are isomorphism invariants, so the tag does not change when
    the points are relabelled.
    """
    g = transposition_graph(s)
    n, m = s.n, len(s)
    deg = g.degrees()
    connected = g.is_connected()
    if n >= 2 and connected and m == n - 1 and max(deg) == n - 1:
        return FamilyTag("Star", (n - 1,))
    if connected and m == n - 1 and max(deg, default=0) <= 2:
        return FamilyTag("Path", (n,))
    if n >= 3 and connected and m == n and all(d == 2 for d in deg):
        return FamilyTag("Cycle", (n,))
    if n >= 2 and n % 2 == 0 and all(d == 1 for d in deg):
        return FamilyTag("Matching", (n // 2,))
    if n >= 2 and m == n * (n - 1) // 2:
        return FamilyTag("Complete", (n,))
    if connected and n >= 2:
        parts = _bipartition(g)
        if parts is not None and m == len(parts[0]) * len(parts[1]):
            a, b = sorted((len(parts[0]), len(parts[1])))
            return FamilyTag("CompleteBipartite", (a, b))
    if connected and m == n - 1:
        return FamilyTag("Tree", (n,))
    if connected:
        gd = girth_data(g)
        if not gd.has_triangle and not gd.has_4cycle:
            return FamilyTag("TriangleAndSquareFree", (n,))
    return FamilyTag("Other", (n,))


# -- standard sets ------------------------------------------------------------------


def star_set(n: int) -> TranspositionSet:
    """{(1,j) : 2 <= j <= n}; T(S) = K_{1,n-1}."""
    return TranspositionSet(n, [(1, j) for j in range(2, n + 1)])


def path_set(n: int) -> TranspositionSet:
    """{(i,i+1)}; T(S) = P_n, the bubble-sort generators."""
    return TranspositionSet(n, [(i, i + 1) for i in range(1, n)])


def cycle_set(n: int) -> TranspositionSet:
    """Path plus (1,n); T(S) = C_n, the modified bubble-sort generators."""
    if n < 3:
        raise InvalidParameters("cycle set needs n >= 3")
    return TranspositionSet(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def matching_set(m: int) -> TranspositionSet:
    """{(2i-1, 2i)} on 2m points; T(S) = mK_2, the Cayley graph is Q_m."""
    return TranspositionSet(2 * m, [(2 * i - 1, 2 * i) for i in range(1, m + 1)])


def complete_set(n: int) -> TranspositionSet:
    return TranspositionSet(n, combinations(range(1, n + 1), 2))


def complete_bipartite_set(k: int, n: int) -> TranspositionSet:
    """{(i,j) : i <= k < j}; T(S) = K_{k,n-k}."""
    if not 1 <= k < n:
        raise InvalidParameters("need 1 <= k < n")
    return TranspositionSet(n, [(i, j) for i in range(1, k + 1) for j in range(k + 1, n + 1)])


def spider_set(*legs: int) -> TranspositionSet:
    """A spider: centre 1 with legs of the given lengths, points numbered leg by leg."""
    if any(length < 1 for length in legs):
        raise InvalidParameters("leg lengths must be positive")
    pairs = []
    nxt = 2
    for length in legs:
        prev = 1
        for _ in range(length):
            pairs.append((prev, nxt))
            prev = nxt
            nxt += 1
    return TranspositionSet(nxt - 1, pairs)
