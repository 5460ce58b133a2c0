"""Permutations of {1..n} with left-to-right composition.

Points are 1-based in every public function and in both text formats
(cycle notation ``(1,5,4)(3,6)`` and one-line notation ``[5,2,6,1,4,3]``).
Internally a permutation is a tuple of 0-based images, exposed as
``Perm.arr`` for the graph and group code that works on vertex indices.

Composition is carried out left to right: ``compose(p, q)`` applies ``p``
first and then ``q``, so ``compose(p, q)(i) == q(p(i))``.  ``p * q`` means
the same thing.  With this rule ``(1,2)(2,3) == (1,3,2)``.
"""

from __future__ import annotations

import re
from operator import itemgetter
from typing import Iterable, Sequence

__all__ = [
    "Perm",
    "identity",
    "compose",
    "inverse",
    "cycle_decomposition",
    "cycle_count",
    "transposition",
    "product_of",
    "parse_cycles",
    "parse_oneline",
    "parse_perm",
    "format_cycles",
    "format_oneline",
]


def _compose_arr(a: tuple, b: tuple) -> tuple:
    """Images of "a then b" for 0-based image tuples."""
    if len(a) == 1:
        return (b[a[0]],)
    return itemgetter(*a)(b)


def _invert_arr(a: Sequence[int]) -> tuple:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


class Perm:
    """An immutable permutation of {1..degree}."""

    __slots__ = ("arr", "_hash")

    def __init__(self, images: Iterable[int], *, zero_based: bool = False):
        arr = tuple(images) if zero_based else tuple(x - 1 for x in images)
        n = len(arr)
        if n == 0:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(arr) != list(range(n)):
            shown = list(arr) if zero_based else [x + 1 for x in arr]
            raise ValueError(f"not a bijection of 1..{n}: {shown}")
        object.__setattr__(self, "arr", arr)
        object.__setattr__(self, "_hash", hash(arr))

    @classmethod
    def _raw(cls, arr: tuple) -> "Perm":
        # trusted constructor: arr is already a valid 0-based image tuple
        p = object.__new__(cls)
        object.__setattr__(p, "arr", arr)
        object.__setattr__(p, "_hash", hash(arr))
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @property
    def degree(self) -> int:
        return len(self.arr)

    @property
    def images(self) -> tuple:
        """1-based images: ``images[i-1] == p(i)``."""
        return tuple(x + 1 for x in self.arr)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.arr):
            raise ValueError(f"point {i} outside 1..{len(self.arr)}")
        return self.arr[i - 1] + 1

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __invert__(self) -> "Perm":
        return inverse(self)

    def __pow__(self, k: int) -> "Perm":
        base = self if k >= 0 else inverse(self)
        result = identity(self.degree)
        for _ in range(abs(k)):
            result = compose(result, base)
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.arr == other.arr

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Perm") -> bool:
        return self.arr < other.arr

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.arr))

    def support(self) -> list[int]:
        """Moved points, 1-based, ascending."""
        return [i + 1 for i, x in enumerate(self.arr) if i != x]

    def cycles(self) -> list[tuple[int, ...]]:
        return cycle_decomposition(self)

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Perm({format_oneline(self)})"


def identity(n: int) -> Perm:
    if n < 1:
        raise ValueError("identity needs n >= 1")
    return Perm._raw(tuple(range(n)))


def compose(p: Perm, q: Perm) -> Perm:
    """Left-to-right product: apply ``p`` first, then ``q``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Perm._raw(_compose_arr(p.arr, q.arr))


def inverse(p: Perm) -> Perm:
    return Perm._raw(_invert_arr(p.arr))


def cycle_decomposition(p: Perm) -> list[tuple[int, ...]]:
    """Canonical cycles of ``p``, fixed points included as 1-cycles.

    Each cycle starts at its smallest point and cycles are ordered by that
    point, e.g. ``[5,2,6,1,4,3]`` gives ``[(1,5,4), (2,), (3,6)]``.
    """
    seen = [False] * p.degree
    out = []
    for start in range(p.degree):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i + 1)
            i = p.arr[i]
        out.append(tuple(cyc))
    return out


def cycle_count(p: Perm) -> int:
    """Number of cycles of ``p`` counting fixed points."""
    return len(cycle_decomposition(p))


def transposition(i: int, j: int, n: int) -> Perm:
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"({i},{j}) is not a transposition of 1..{n}")
    arr = list(range(n))
    arr[i - 1], arr[j - 1] = j - 1, i - 1
    return Perm._raw(tuple(arr))


def product_of(ts: Sequence, n: int) -> Perm:
    """Left-to-right product of transpositions.

    ``ts`` may hold ``Perm`` objects or ``(i, j)`` pairs; anything that is
    not a transposition of {1..n} is rejected.
    """
    result = identity(n)
    for t in ts:
        if isinstance(t, Perm):
            if t.degree != n or len(t.support()) != 2:
                raise ValueError(f"{t} is not a transposition of 1..{n}")
        else:
            i, j = t
            t = transposition(i, j, n)
        result = compose(result, t)
    return result


_CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s*[,\s]\s*\d+)*)?\s*\)")
_CYCLES_RE = re.compile(r"(?:\s*" + _CYCLE_RE.pattern + r")+\s*")


def parse_cycles(text: str, n: int | None = None) -> Perm:
    """Parse cycle notation such as ``"(1,5,4)(3,6)"``.

    Cycles are multiplied left to right, so overlapping cycles are allowed:
    ``parse_cycles("(1,2)(2,3)") == parse_cycles("(1,3,2)")``.  The degree is
    ``n`` when given, else the largest point mentioned (at least 1).
    """
    stripped = text.strip()
    if not _CYCLES_RE.fullmatch(stripped):
        raise ValueError(f"cannot parse permutation {text!r}")
    cycles = [
        [int(x) for x in re.split(r"[,\s]+", m.group(1).strip())]
        for m in _CYCLE_RE.finditer(stripped)
        if m.group(1)
    ]
    top = max((max(c) for c in cycles), default=1)
    if n is None:
        n = top
    elif top > n:
        raise ValueError(f"point {top} exceeds degree {n}")
    result = identity(n)
    for cyc in cycles:
        if len(set(cyc)) != len(cyc) or min(cyc) < 1:
            raise ValueError(f"bad cycle {tuple(cyc)} in {text!r}")
        arr = list(range(n))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            arr[a - 1] = b - 1
        result = compose(result, Perm._raw(tuple(arr)))
    return result


def parse_oneline(text: str) -> Perm:
    """Parse one-line image notation such as ``"[5,2,6,1,4,3]"``."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"one-line notation must be bracketed: {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise ValueError("empty one-line permutation")
    return Perm(int(x) for x in re.split(r"[,\s]+", body))


def parse_perm(text: str, n: int | None = None) -> Perm:
    """Parse either notation, dispatching on the leading bracket."""
    s = text.strip()
    if s.startswith("["):
        p = parse_oneline(s)
        if n is not None and p.degree != n:
            raise ValueError(f"expected degree {n}, got {p.degree}")
        return p
    return parse_cycles(s, n)


def format_cycles(p: Perm, *, fixed_points: bool = False) -> str:
    """Cycle notation; 1-cycles are omitted unless ``fixed_points``.

    The identity prints as ``"()"`` when fixed points are omitted.
    """
    cycles = cycle_decomposition(p)
    if not fixed_points:
        cycles = [c for c in cycles if len(c) > 1]
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def format_oneline(p: Perm) -> str:
    return "[" + ",".join(str(x + 1) for x in p.arr) + "]"
