"""Predicted automorphism groups of Cay(S_n, S) and the checks behind them.

Summary table used by :func:`predict_aut` (A = Aut(Cay(S_n, S))):

=============================  =====================  ========
T(S)                           |A|                    normal
=============================  =====================  ========
star K_{1,n-1}                 (n-1)! * n!            yes
path P_n (n >= 3)              2 * n!                 yes
asymmetric tree                n!                     yes
any tree                       |Aut(T(S))| * n!       yes
cycle C_4                      8 * 4 * 24 = 768       no
cycle C_n (n >= 5)             2n * n!                yes
no triangles, no 4-cycles      |Aut(T(S))| * n!       yes
=============================  =====================  ========

The C_4 entry reads D_8 V_4 R(S_4) as a product of subgroups meeting
trivially; :func:`verify_prediction` checks that number against brute force
rather than relying on it.

Cycle censuses are local to the identity: a 6-cycle through e never leaves
the ball of radius 3, and a vertex on it is at distance 3 exactly when it is
outside the ball of radius 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import factorial

from .autsearch import AutResult, automorphism_group
from .cayley import CayleyGraph, build_cayley, preserves_adjacency
from .errors import DisconnectedTranspositionGraph, GeneratorNotInS, LiftVerificationFailed
from .perm import Perm, compose, transposition
from .permgroup import PermGroup, is_normal
from .transposition import FamilyTag, TranspositionSet, recognize_family, transposition_graph

__all__ = [
    "Prediction",
    "CycleCensus",
    "FengResult",
    "VerificationReport",
    "aut_group_fixing_S",
    "predict_aut",
    "four_cycle_census",
    "six_cycle_census",
    "feng_condition",
    "check_normal",
    "verify_prediction",
    "cycles_through_identity",
    "cayley_automorphisms",
]


@dataclass(frozen=True)
class Prediction:
    family: FamilyTag
    predicted_order: int | None
    description: str
    source: str
    normal: bool | None

    @property
    def known(self) -> bool:
        return self.predicted_order is not None

    def to_dict(self) -> dict:
        return {
            "family": str(self.family),
            "predicted_order": None if self.predicted_order is None else str(self.predicted_order),
            "description": self.description,
            "source": self.source,
            "normal": self.normal,
        }


@dataclass(frozen=True)
class CycleCensus:
    four_cycles: int
    six_cycles: int
    distance3_vertices: int


@dataclass(frozen=True)
class FengResult:
    holds: bool
    witnesses: list = field(default_factory=list)


@dataclass(frozen=True)
class VerificationReport:
    predicted: Prediction
    computed_order: int
    computed_normal: bool
    agree: bool
    computed_only: bool = False

    def to_dict(self) -> dict:
        return {
            "predicted": self.predicted.to_dict(),
            "computed_order": str(self.computed_order),
            "computed_normal": self.computed_normal,
            "agree": self.agree,
            "computed_only": self.computed_only,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# -- Aut(S_n, S) ------------------------------------------------------------------


def aut_group_fixing_S(s: TranspositionSet, g: CayleyGraph | None = None) -> PermGroup:
    """Aut(T(S)) lifted to conjugation maps on the vertices of Cay(S_n, S).

    Each automorphism pi of T(S) becomes x -> pi^-1 x pi, which fixes the
    identity and permutes S; every lifted map is checked against the Cayley
    adjacency.
    """
    tgraph = transposition_graph(s)
    if not tgraph.is_connected():
        raise DisconnectedTranspositionGraph(f"T(S) is disconnected for S = {s}")
    if g is None:
        g = build_cayley(s)
    aut_t = automorphism_group(tgraph)
    adj = g.adjacency()
    lifted = []
    for pi in aut_t.group.generators:
        m = g.conjugation_map(pi)
        if not preserves_adjacency(adj, m) or m.arr[0] != 0:
            raise LiftVerificationFailed(f"lift of {pi} is not an automorphism fixing e")
        lifted.append(m)
    return PermGroup(lifted, g.vertex_count)


# -- predictions ------------------------------------------------------------------


def predict_aut(s: TranspositionSet) -> Prediction:
    tag = recognize_family(s)
    tgraph = transposition_graph(s)
    n = s.n
    nf = factorial(n)
    if not tgraph.is_connected():
        return Prediction(tag, None, "unknown (S does not generate S_n)", "none", None)
    is_tree = len(s) == n - 1
    if tag.kind == "Star":
        return Prediction(tag, factorial(n - 1) * nf, "S_{n-1} R(S_n)", "table-star", True)
    if tag.kind == "Path" and n >= 3:
        return Prediction(tag, 2 * nf, "Z_2 R(S_n)", "table-path", True)
    if is_tree:
        aut_t = automorphism_group(tgraph).order
        if aut_t == 1:
            return Prediction(tag, nf, "R(S_n)", "table-asymmetric-tree", True)
        return Prediction(tag, aut_t * nf, "R(S_n) ⋊ Aut(S_n,S)", "table-tree", True)
    if tag.kind == "Cycle" and n == 4:
        return Prediction(tag, 8 * 4 * 24, "D_8 V_4 R(S_4)", "table-cycle", False)
    if tag.kind == "Cycle" and n >= 5:
        return Prediction(tag, 2 * n * nf, "D_2n R(S_n)", "table-cycle", True)
    if tag.kind == "TriangleAndSquareFree":
        aut_t = automorphism_group(tgraph).order
        return Prediction(tag, aut_t * nf, "R(S_n) ⋊ Aut(S_n,S)", "table-triangle-square-free", True)
    return Prediction(tag, None, "unknown", "none", None)


# -- cycle censuses -------------------------------------------------------------------


class _Local:
    """Neighbour lists around the identity, fetched lazily."""

    def __init__(self, g: CayleyGraph):
        self.g = g
        self._nbrs: dict[int, list[int]] = {}
        self._cycles: dict[int, list[tuple[int, ...]]] = {}
        self._ball2: set[int] | None = None

    def nbrs(self, v: int) -> list[int]:
        got = self._nbrs.get(v)
        if got is None:
            got = self._nbrs[v] = self.g.neighbors(v)
        return got

    def ball2(self) -> set[int]:
        if self._ball2 is None:
            ball = {0}
            for a in self.nbrs(0):
                ball.add(a)
                ball.update(self.nbrs(a))
            self._ball2 = ball
        return self._ball2

    def cycles(self, length: int) -> list[tuple[int, ...]]:
        if length not in self._cycles:
            self._cycles[length] = _enumerate_cycles(self.nbrs, length)
        return self._cycles[length]


def _enumerate_cycles(nbrs, length: int) -> list[tuple[int, ...]]:
    """Cycles through vertex 0 as vertex tuples starting at 0, one per cycle.

    A closed walk and its reversal give the same cycle; only the direction
    with the smaller second vertex is kept.
    """
    found = []
    path = [0]
    on_path = {0}

    def extend():
        last = path[-1]
        if len(path) == length:
            if path[1] < path[-1] and 0 in nbrs(last):
                found.append(tuple(path))
            return
        for w in nbrs(last):
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                extend()
                path.pop()
                on_path.discard(w)

    extend()
    return found


def cycles_through_identity(g: CayleyGraph, length: int) -> list[tuple[int, ...]]:
    return _enumerate_cycles(g.neighbors, length)


def _generator_vertex(g: CayleyGraph, t) -> tuple[Perm, int]:
    p = t if isinstance(t, Perm) else transposition(t[0], t[1], g.n)
    moved = p.support()
    if len(moved) != 2 or tuple(moved) not in g.base:
        raise GeneratorNotInS(f"{p} is not in S = {g.base}")
    return p, g.index_of(p)


def _pair(g: CayleyGraph, t, k) -> tuple[Perm, Perm, int, int]:
    pt, vt = _generator_vertex(g, t)
    pk, vk = _generator_vertex(g, k)
    if vt == vk:
        raise GeneratorNotInS("t and k must be distinct")
    return pt, pk, vt, vk


def _four(local: _Local, vt: int, vk: int) -> int:
    return sum(1 for c in local.cycles(4) if vt in c and vk in c)


def _six(local: _Local, vt: int, vk: int) -> tuple[int, int]:
    ball2 = local.ball2()
    count = 0
    far: set[int] = set()
    for c in local.cycles(6):
        if vt not in c or vk not in c:
            continue
        outside = [v for v in c if v not in ball2]
        if outside:
            count += 1
            far.update(outside)
    return count, len(far)


def four_cycle_census(g: CayleyGraph, t, k) -> int:
    """Distinct 4-cycles through e, t and k."""
    _, _, vt, vk = _pair(g, t, k)
    return _four(_Local(g), vt, vk)


def six_cycle_census(g: CayleyGraph, t, k) -> CycleCensus:
    """4-cycles through e,t,k and 6-cycles through e,t,k with a vertex at distance 3."""
    _, _, vt, vk = _pair(g, t, k)
    local = _Local(g)
    six, far = _six(local, vt, vk)
    return CycleCensus(_four(local, vt, vk), six, far)


def feng_condition(g: CayleyGraph) -> FengResult:
    """For all distinct t,k in S: tk = kt iff exactly one 4-cycle through e,t,k,
    and when tk != kt exactly one 6-cycle through e,t,k and a distance-3 vertex.

    ``witnesses`` lists the failing pairs as ``((i,j), (k,l))``.
    """
    local = _Local(g)
    failing = []
    for (a, b) in combinations(g.generator_pairs, 2):
        pt, pk, vt, vk = _pair(g, a, b)
        commute = compose(pt, pk) == compose(pk, pt)
        ok = commute == (_four(local, vt, vk) == 1)
        if ok and not commute:
            ok = _six(local, vt, vk)[0] == 1
        if not ok:
            failing.append((a, b))
    return FengResult(not failing, failing)


# -- normality and verification ---------------------------------------------------------


def cayley_automorphisms(g: CayleyGraph, *, bound: int | None = None) -> AutResult:
    """Brute-force Aut of a Cayley graph, using R(G) for transitivity."""
    sg = g.to_simple_graph()
    translations = g.right_translations().generators
    bound = max(g.vertex_count, 1) if bound is None else bound
    return automorphism_group(sg, bound=bound, transitive_generators=translations)


def check_normal(g: CayleyGraph, aut: AutResult) -> bool:
    """Is R(G) normal in the computed automorphism group?"""
    return is_normal(g.right_translations(), aut.group)


def verify_prediction(s: TranspositionSet, budget: int | None = None) -> VerificationReport:
    g = build_cayley(s, budget)
    predicted = predict_aut(s)
    aut = cayley_automorphisms(g)
    normal = check_normal(g, aut)
    if not predicted.known:
        return VerificationReport(predicted, aut.order, normal, True, computed_only=True)
    agree = aut.order == predicted.predicted_order and normal == predicted.normal
    return VerificationReport(predicted, aut.order, normal, agree)
