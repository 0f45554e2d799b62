"""Exhaustive search for square-reduced triads with a+b+c below a bound.

Only sums that are perfect squares can qualify, so the outer loop runs over
u with s = u^2.  For each s and each a, the candidates b (with c = s-a-b) are
tested in one vectorised int64 pass for a square sum of squares; the rare
survivors are checked exactly for the sum of cubes.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .exactnum import largest_square_divisor, perfect_square
from .verify import Certificate, Triad

# a^2+b^2+c^2 <= s^2 must stay below 2^53 so the float sqrt guess is within one
# of the true root and int64 products cannot overflow.
FAST_PATH_MAX_SUM = 1 << 26


@dataclass(frozen=True)
class SearchHit:
    triad: Triad
    certificate: Certificate

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.triad.total, self.triad.a, self.triad.b)


def _hit(a: int, b: int, c: int, u: int, v: int) -> SearchHit | None:
    w = perfect_square(a**3 + b**3 + c**3)
    if w is None:
        return None
    if largest_square_divisor(math.gcd(a, b, c)) != 1:
        return None
    return SearchHit(Triad(a, b, c), Certificate(u, v, w))


def _scan_fast(u: int) -> list[SearchHit]:
    s = u * u
    hits = []
    for a in range(1, s // 3 + 1):
        b = np.arange(a, (s - a) // 2 + 1, dtype=np.int64)
        if b.size == 0:
            continue
        c = s - a - b
        sq = a * a + b * b + c * c
        r = np.sqrt(sq.astype(np.float64)).astype(np.int64)
        exact = (r * r == sq) | ((r + 1) * (r + 1) == sq) | ((r - 1) * (r - 1) == sq)
        for i in np.flatnonzero(exact):
            bi, ci = int(b[i]), int(c[i])
            v = perfect_square(a * a + bi * bi + ci * ci)
            hit = _hit(a, bi, ci, u, v)
            if hit is not None:
                hits.append(hit)
    return hits


def _scan_big(u: int) -> list[SearchHit]:
    s = u * u
    hits = []
    for a in range(1, s // 3 + 1):
        for b in range(a, (s - a) // 2 + 1):
            c = s - a - b
            v = perfect_square(a * a + b * b + c * c)
            if v is not None:
                hit = _hit(a, b, c, u, v)
                if hit is not None:
                    hits.append(hit)
    return hits


def scan_sum(u: int) -> list[SearchHit]:
    """All hits with a+b+c = u^2, sorted by (a, b)."""
    if u * u <= FAST_PATH_MAX_SUM:
        return _scan_fast(u)
    return _scan_big(u)


def iter_search(max_sum: int, jobs: int = 1) -> Iterator[SearchHit]:
    """Yield hits with a+b+c < max_sum in (sum, a, b) order.

    Work is sharded by u; results come back in u order whatever ``jobs`` is.
    """
    if max_sum < 3:
        raise ValueError(f"max_sum must be at least 3, got {max_sum}")
    # u = 1 gives s = 1 < 3, which has no positive triad
    us = [u for u in range(2, math.isqrt(max_sum - 1) + 1)]
    if jobs <= 1 or len(us) < 2:
        for u in us:
            yield from scan_sum(u)
        return
    # largest sums first so the expensive shards start early
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = {u: pool.submit(scan_sum, u) for u in reversed(us)}
        for u in us:
            yield from futures[u].result()


def search(max_sum: int, jobs: int = 1) -> list[SearchHit]:
    return list(iter_search(max_sum, jobs))


@dataclass(frozen=True)
class SearchSummary:
    count: int
    elapsed: float
    max_sum: int
    jobs: int


def run_search(max_sum: int, jobs: int = 1, on_hit=None) -> tuple[list[SearchHit], SearchSummary]:
    start = time.perf_counter()
    hits = []
    for hit in iter_search(max_sum, jobs):
        hits.append(hit)
        if on_hit is not None:
            on_hit(hit)
    return hits, SearchSummary(len(hits), time.perf_counter() - start, max_sum, jobs)
