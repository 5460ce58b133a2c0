"""Finite permutation groups given by generators.

Order and membership come from a stabilizer chain built with the
deterministic Schreier-Sims algorithm.  Base points are taken in increasing
order (the smallest point moved by a generator that fixes the current base)
and orbits are grown breadth-first over the generators in input order, so
the chain, and every order computed from it, is reproducible.

Transversals are stored as Schreier trees (parent pointer plus generator
label) rather than explicit coset representatives.  That keeps memory linear
in the degree for the regular groups of Cayley graphs, whose single orbit can
hold tens of thousands of points.

All products are left to right, as in :mod:`cayleyaut.perm`.
"""

from __future__ import annotations

import json
from collections import deque
from itertools import product
from typing import Iterable, Sequence

from .errors import NotASubgroup, OrderExceedsCap
from .perm import Perm, _compose_arr, _invert_arr, format_cycles, parse_cycles

__all__ = [
    "PermGroup",
    "order",
    "contains",
    "elements",
    "direct_sum",
    "wreath",
    "is_normal",
    "symmetric_group",
    "cyclic_group",
    "dihedral_group",
    "trivial_group",
    "generators_to_json",
    "group_from_json",
]


class _Level:
    """One step of the chain: a base point and its Schreier tree."""

    __slots__ = ("base", "gens", "gens_inv", "parent", "orbit", "checked")

    def __init__(self, base: int, gens: list[tuple]):
        self.base = base
        self.gens = gens
        self.gens_inv = [_invert_arr(g) for g in gens]
        self.parent: dict[int, tuple[int, int] | None] = {base: None}
        self.orbit = [base]
        self.checked: set[tuple[int, int]] = set()
        queue = deque([base])
        while queue:
            x = queue.popleft()
            for k, g in enumerate(gens):
                y = g[x]
                if y not in self.parent:
                    self.parent[y] = (x, k)
                    self.orbit.append(y)
                    queue.append(y)

    def rep(self, x: int, degree: int) -> tuple:
        """Coset representative u with u(base) == x."""
        path = []
        while True:
            step = self.parent[x]
            if step is None:
                break
            x, k = step
            path.append(k)
        u = tuple(range(degree))
        for k in reversed(path):
            u = _compose_arr(u, self.gens[k])
        return u


def _is_id(a: tuple) -> bool:
    return all(i == x for i, x in enumerate(a))


def _first_moved(a: tuple) -> int:
    for i, x in enumerate(a):
        if i != x:
            return i
    raise ValueError("identity moves no point")


class PermGroup:
    """A permutation group on {1..degree} given by generators.

    ``order_hint`` may carry the group order when it is already known from
    elsewhere (an exhaustive search, or a regular action).  The chain build
    then stops as soon as the product of its orbit sizes reaches the hint;
    this is exact provided the hint is the true order.
    """

    def __init__(self, generators: Iterable[Perm], degree: int | None = None,
                 *, order_hint: int | None = None):
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree is required for an empty generator list")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = gens
        self._order_hint = order_hint
        self._levels: list[_Level] | None = None

    def __repr__(self) -> str:
        gens = ", ".join(format_cycles(g) for g in self.generators)
        return f"PermGroup(degree={self.degree}, generators=[{gens}])"

    # -- stabilizer chain -------------------------------------------------

    def _chain(self) -> list[_Level]:
        if self._levels is None:
            self._levels = self._schreier_sims()
        return self._levels

    def _sift(self, h: tuple, start: int = 0) -> tuple[tuple, int]:
        """Strip ``h`` through levels ``start..``; return residue and the level it stopped at."""
        levels = self._levels
        for i in range(start, len(levels)):
            lv = levels[i]
            x = h[lv.base]
            if x not in lv.parent:
                return h, i
            while x != lv.base:
                x, k = lv.parent[x]
                h = _compose_arr(h, lv.gens_inv[k])
        return h, len(levels)

    def _schreier_sims(self) -> list[_Level]:
        n = self.degree
        strong: list[tuple] = []
        for g in self.generators:
            if not _is_id(g.arr) and g.arr not in strong:
                strong.append(g.arr)
        base: list[int] = []
        for s in strong:
            if all(s[b] == b for b in base):
                base.append(_first_moved(s))

        def gens_at(i: int) -> list[tuple]:
            fixed = base[:i]
            return [s for s in strong if all(s[b] == b for b in fixed)]

        self._levels = [_Level(b, gens_at(i)) for i, b in enumerate(base)]
        hint = self._order_hint

        def complete() -> bool:
            if hint is None:
                return False
            total = 1
            for lv in self._levels:
                total *= len(lv.orbit)
            return total == hint

        if complete():
            return self._levels
        i = len(self._levels) - 1
        while i >= 0:
            lv = self._levels[i]
            jumped = False
            for x in lv.orbit:
                u = None
                for k, s in enumerate(lv.gens):
                    if (x, k) in lv.checked:
                        continue
                    lv.checked.add((x, k))
                    y = s[x]
                    if lv.parent[y] == (x, k):
                        continue
                    if u is None:
                        u = lv.rep(x, n)
                    res, j = self._sift(_compose_arr(u, s), i)
                    if _is_id(res):
                        continue
                    strong.append(res)
                    if j == len(self._levels):
                        base.append(_first_moved(res))
                        self._levels.append(_Level(base[-1], gens_at(j)))
                    for lvl in range(i + 1, j + 1):
                        self._levels[lvl] = _Level(base[lvl], gens_at(lvl))
                    if complete():
                        return self._levels
                    i = j
                    jumped = True
                    break
                if jumped:
                    break
            if not jumped:
                i -= 1
        return self._levels

    # -- queries ------------------------------------------------------------

    def order(self) -> int:
        total = 1
        for lv in self._chain():
            total *= len(lv.orbit)
        return total

    def base(self) -> list[int]:
        """Base points of the chain, 1-based."""
        return [lv.base + 1 for lv in self._chain()]

    def transversal_sizes(self) -> list[int]:
        return [len(lv.orbit) for lv in self._chain()]

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} vs {self.degree}")
        self._chain()
        res, _ = self._sift(p.arr)
        return _is_id(res)

    __contains__ = contains

    def elements(self, cap: int) -> set[Perm]:
        total = self.order()
        if total > cap:
            raise OrderExceedsCap(f"group order {total} exceeds cap {cap}")
        n = self.degree
        # every element is u_k ... u_1 u_0 (left to right), one rep per level
        reps = [[lv.rep(x, n) for x in lv.orbit] for lv in self._chain()]
        out = set()
        for choice in product(*reversed(reps)):
            g = tuple(range(n))
            for u in choice:
                g = _compose_arr(g, u)
            out.add(Perm._raw(g))
        return out

    def orbit(self, point: int) -> list[int]:
        """Orbit of a 1-based point, in breadth-first discovery order."""
        start = point - 1
        seen = {start}
        order = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = g.arr[x]
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    queue.append(y)
        return [x + 1 for x in order]

    def is_transitive(self) -> bool:
        return len(self.orbit(1)) == self.degree

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def equals(self, other: "PermGroup") -> bool:
        """Equality as sets of permutations."""
        return (self.degree == other.degree
                and self.order() == other.order()
                and self.is_subgroup_of(other))

    def conjugate_points(self, mapping: Sequence[int]) -> "PermGroup":
        """Relabel points: point ``i`` becomes ``mapping[i-1]`` (1-based)."""
        to_new = Perm(mapping).arr
        to_old = _invert_arr(to_new)
        gens = [Perm._raw(_compose_arr(_compose_arr(to_old, g.arr), to_new))
                for g in self.generators]
        return PermGroup(gens, self.degree)


# -- module-level operations --------------------------------------------------


def order(g: PermGroup) -> int:
    return g.order()


def contains(g: PermGroup, p: Perm) -> bool:
    return g.contains(p)


def elements(g: PermGroup, cap: int) -> set[Perm]:
    return g.elements(cap)


def direct_sum(a: PermGroup, b: PermGroup) -> PermGroup:
    """The sum A+B on the disjoint union: a's points first, then b's shifted by ``a.degree``."""
    da, db = a.degree, b.degree
    gens = []
    for g in a.generators:
        gens.append(Perm._raw(g.arr + tuple(range(da, da + db))))
    for g in b.generators:
        gens.append(Perm._raw(tuple(range(da)) + tuple(x + da for x in g.arr)))
    return PermGroup(gens, da + db)


def wreath(a: PermGroup, b: PermGroup) -> PermGroup:
    """The wreath product A[B] acting on X x Y.

    The pair ``(x_i, y_j)`` is point ``(i-1)*|Y| + j``.  Generators are a's
    generators moving whole blocks, plus b's generators acting inside each
    of the ``d = |X|`` blocks in turn.
    """
    d, m = a.degree, b.degree
    gens = []
    for alpha in a.generators:
        arr = [0] * (d * m)
        for i in range(d):
            for j in range(m):
                arr[i * m + j] = alpha.arr[i] * m + j
        gens.append(Perm._raw(tuple(arr)))
    for i in range(d):
        for beta in b.generators:
            arr = list(range(d * m))
            for j in range(m):
                arr[i * m + j] = i * m + beta.arr[j]
            gens.append(Perm._raw(tuple(arr)))
    return PermGroup(gens, d * m)


def is_normal(h: PermGroup, g: PermGroup) -> bool:
    """True iff ``h`` is a normal subgroup of ``g``.

    Conjugates every generator of ``h`` by every generator of ``g`` and tests
    membership in ``h``; for finite groups this is sufficient.
    """
    if h.degree != g.degree:
        raise ValueError(f"degree mismatch: {h.degree} vs {g.degree}")
    if not h.is_subgroup_of(g):
        raise NotASubgroup("a generator of h is not in g")
    for x in g.generators:
        x_inv = _invert_arr(x.arr)
        for y in h.generators:
            conj = _compose_arr(_compose_arr(x_inv, y.arr), x.arr)
            if not h.contains(Perm._raw(conj)):
                return False
    return True


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup([], 1)
    gens = [Perm._raw((1, 0) + tuple(range(2, n)))]
    if n > 2:
        gens.append(Perm._raw(tuple(range(1, n)) + (0,)))
    return PermGroup(gens, n)


def cyclic_group(n: int) -> PermGroup:
    return PermGroup([Perm._raw(tuple(range(1, n)) + (0,))], n)


def dihedral_group(n: int) -> PermGroup:
    """D_2n on the vertices of an n-gon: rotation (1,...,n) and the reflection fixing 1."""
    r = Perm._raw(tuple(range(1, n)) + (0,))
    s = Perm._raw(tuple((-i) % n for i in range(n)))
    return PermGroup([r, s], n)


def trivial_group(n: int = 1) -> PermGroup:
    return PermGroup([], n)


def generators_to_json(g: PermGroup) -> str:
    return json.dumps([format_cycles(p) for p in g.generators])


def group_from_json(text: str, degree: int) -> PermGroup:
    return PermGroup([parse_cycles(s, degree) for s in json.loads(text)], degree)
