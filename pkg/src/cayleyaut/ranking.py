"""Lehmer-code ranking of permutations, vectorised over numpy rows.

A permutation of 0..k-1 with Lehmer digits ``d_i = #{j > i : p[j] < p[i]}``
has rank ``sum d_i * (k-1-i)!``, which is its position in lexicographic
order.  The identity has rank 0.

For a permutation that preserves a partition of the points into blocks
(an element of a product of symmetric groups) each block is ranked on its
own and the block ranks are combined in mixed radix, the first block most
significant.
"""

from __future__ import annotations

from math import factorial, prod
from typing import Sequence

import numpy as np

__all__ = ["lehmer_rank", "lehmer_unrank", "rank_perm", "unrank_perm", "BlockRanker"]


def lehmer_rank(rows: np.ndarray) -> np.ndarray:
    """Ranks of the permutations in the rows of an (N, k) array of 0..k-1."""
    rows = np.asarray(rows)
    count, k = rows.shape
    r = np.zeros(count, dtype=np.int64)
    for i in range(k):
        smaller = (rows[:, i + 1:] < rows[:, i:i + 1]).sum(axis=1)
        r = r * (k - i) + smaller
    return r


def lehmer_unrank(ranks: np.ndarray, k: int) -> np.ndarray:
    """Inverse of :func:`lehmer_rank`: an (N, k) uint8 array."""
    r = np.array(ranks, dtype=np.int64, copy=True).reshape(-1)
    count = r.size
    digits = np.empty((count, k), dtype=np.int64)
    for i in range(k - 1, -1, -1):
        base = k - i
        digits[:, i] = r % base
        r //= base
    avail = np.ones((count, k), dtype=bool)
    out = np.empty((count, k), dtype=np.uint8)
    rows = np.arange(count)
    for i in range(k):
        seen = np.cumsum(avail, axis=1)
        col = np.argmax(avail & (seen == digits[:, i:i + 1] + 1), axis=1)
        out[:, i] = col
        avail[rows, col] = False
    return out


def rank_perm(p: Sequence[int]) -> int:
    """Scalar rank of a 0-based image sequence."""
    k = len(p)
    r = 0
    for i in range(k):
        r = r * (k - i) + sum(1 for j in range(i + 1, k) if p[j] < p[i])
    return r


def unrank_perm(r: int, k: int) -> tuple[int, ...]:
    digits = []
    for base in range(1, k + 1):
        digits.append(r % base)
        r //= base
    digits.reverse()
    pool = list(range(k))
    return tuple(pool.pop(d) for d in digits)


class BlockRanker:
    """Ranks permutations of 0..n-1 that map each block onto itself."""

    def __init__(self, n: int, blocks: Sequence[Sequence[int]]):
        self.n = n
        self.blocks = [np.array(sorted(b), dtype=np.int64) for b in blocks]
        covered = sorted(int(x) for b in self.blocks for x in b)
        if covered != list(range(n)):
            raise ValueError("blocks must partition 0..n-1")
        self.radices = [factorial(len(b)) for b in self.blocks]
        self.size = prod(self.radices)
        # position of each point inside its block
        self._local = np.zeros(n, dtype=np.int64)
        for b in self.blocks:
            self._local[b] = np.arange(len(b))

    def rank(self, rows: np.ndarray) -> np.ndarray:
        rows = np.asarray(rows)
        r = np.zeros(rows.shape[0], dtype=np.int64)
        for b, radix in zip(self.blocks, self.radices):
            if len(b) == 1:
                continue
            local = self._local[rows[:, b]]
            r = r * radix + lehmer_rank(local)
        return r

    def unrank(self, ranks: np.ndarray) -> np.ndarray:
        r = np.array(ranks, dtype=np.int64, copy=True).reshape(-1)
        out = np.empty((r.size, self.n), dtype=np.uint8)
        for b, radix in zip(reversed(self.blocks), reversed(self.radices)):
            if len(b) == 1:
                out[:, b[0]] = b[0]
                continue
            local = lehmer_unrank(r % radix, len(b))
            r //= radix
            out[:, b] = b[local]
        return out

    def preserves_blocks(self, images: Sequence[int]) -> bool:
        return all(set(int(images[x]) for x in b) == set(int(x) for x in b) for b in self.blocks)
