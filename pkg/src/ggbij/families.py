"""The three partition families of the Göllnitz-Gordon identities.

* A: partitions with adjacent gaps >= 2, and > 2 when the larger part is even.
* B: partitions into parts congruent to 1, 4 or 7 mod 8.
* C: signed partitions with ``j`` positive parts, all even and >= 2j, and
  distinct odd negative parts < 2j.

``G(n, j)`` and ``S(n, j)`` are the length-``j`` slices of A and C.  All
enumerators yield in lexicographically decreasing order; the ``count_*``
functions walk the same search trees with memoisation instead of listing.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import combinations
from math import isqrt
from typing import Iterator

from .partitions import Partition, SignedPartition

B_RESIDUES = frozenset({1, 4, 7})
B_MODULUS = 8


class FamilyId(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    G = "G"
    S = "S"

    @property
    def needs_length(self) -> bool:
        return self in (FamilyId.G, FamilyId.S)


def min_gap(part: int) -> int:
    """Smallest allowed difference between `part` and the next smaller part."""
    return 3 if part % 2 == 0 else 2


def is_gollnitz_gordon(p: Partition) -> bool:
    parts = p.parts
    return all(parts[i] - parts[i + 1] >= min_gap(parts[i]) for i in range(len(parts) - 1))


def is_signed_gg(s: SignedPartition, j: int) -> bool:
    pos, neg = s.positive.parts, s.negative.parts
    if len(pos) != j or len(neg) > j:
        return False
    if any(p % 2 or p < 2 * j for p in pos):
        return False
    if any(v % 2 == 0 or v > 2 * j - 1 for v in neg):
        return False
    return all(neg[i] - neg[i + 1] >= 2 for i in range(len(neg) - 1))


def _max_length(n: int) -> int:
    # both G(n, j) and S(n, j) are empty unless n >= j*j: a G element is at
    # least 1 + 3 + ... + (2j-1), and an S element has |pos| >= 2j^2 while
    # |neg| <= j^2
    return isqrt(n) if n >= 0 else -1


# -- G(n, j) ----------------------------------------------------------------


def iter_G(n: int, j: int) -> Iterator[Partition]:
    if n < 0 or j < 0:
        return

    def rec(remaining: int, slots: int, cap: int, prefix: list[int]):
        if slots == 0:
            if remaining == 0:
                yield Partition(prefix)
            return
        # with largest part x the tail sums to at most x + (x-2) + (x-4) + ...
        # and its smallest part is at least 1, so x >= 2*slots - 1
        for x in range(min(cap, remaining), 0, -1):
            if x * slots - slots * (slots - 1) < remaining:
                break
            if x < 2 * slots - 1:
                break
            prefix.append(x)
            yield from rec(remaining - x, slots - 1, x - min_gap(x), prefix)
            prefix.pop()

    yield from rec(n, j, n, [])


def enumerate_G(n: int, j: int) -> list[Partition]:
    return list(iter_G(n, j))


@lru_cache(maxsize=None)
def count_G(n: int, j: int, cap: int | None = None) -> int:
    """Size of G(n, j), restricted to largest part <= `cap` when given."""
    if n < 0 or j < 0:
        return 0
    if cap is None:
        cap = n
    if j == 0:
        return 1 if n == 0 else 0
    total = 0
    for x in range(min(cap, n), 0, -1):
        if x * j - j * (j - 1) < n or x < 2 * j - 1:
            break
        total += count_G(n - x, j - 1, x - min_gap(x))
    return total


def iter_A(n: int) -> Iterator[Partition]:
    for j in range(_max_length(n) + 1):
        yield from iter_G(n, j)


def count_A(n: int) -> int:
    return sum(count_G(n, j) for j in range(_max_length(n) + 1))


# -- B(n) -------------------------------------------------------------------


def is_B_part(m: int) -> bool:
    return m >= 1 and m % B_MODULUS in B_RESIDUES


def iter_B(n: int) -> Iterator[Partition]:
    if n < 0:
        return
    allowed = [m for m in range(n, 0, -1) if is_B_part(m)]

    def rec(remaining: int, start: int, prefix: list[int]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for idx in range(start, len(allowed)):
            m = allowed[idx]
            if m > remaining:
                continue
            prefix.append(m)
            yield from rec(remaining - m, idx, prefix)
            prefix.pop()

    yield from rec(n, 0, [])


def count_B(n: int) -> int:
    """Coin-change count of partitions of `n` into parts = 1, 4, 7 (mod 8)."""
    if n < 0:
        return 0
    ways = [1] + [0] * n
    for m in range(1, n + 1):
        if is_B_part(m):
            for t in range(m, n + 1):
                ways[t] += ways[t - m]
    return ways[n]


# -- S(n, j) ----------------------------------------------------------------


def _odd_subsets(j: int) -> Iterator[tuple[int, ...]]:
    odds = [2 * i - 1 for i in range(j, 0, -1)]
    for r in range(len(odds) + 1):
        yield from combinations(odds, r)


def _parts_at_least(total: int, k: int, low: int) -> Iterator[tuple[int, ...]]:
    """Partitions of `total` into exactly `k` parts, each >= `low`."""

    def rec(remaining: int, slots: int, cap: int, prefix: list[int]):
        if slots == 0:
            if remaining == 0:
                yield tuple(prefix)
            return
        hi = min(cap, remaining - (slots - 1) * low)
        for x in range(hi, low - 1, -1):
            if x * slots < remaining:
                break
            prefix.append(x)
            yield from rec(remaining - x, slots - 1, x, prefix)
            prefix.pop()

    if total >= 0 and k >= 0:
        yield from rec(total, k, total, [])


def iter_S(n: int, j: int) -> Iterator[SignedPartition]:
    """Elements of S(n, j), positive parts descending then negative descending."""
    if j < 0 or n < j * j:
        return
    found = []
    for neg in _odd_subsets(j):
        pos_weight = n + sum(neg)
        if pos_weight < 0 or pos_weight % 2:
            continue
        # halve the even parts: j parts >= j summing to pos_weight / 2
        for half in _parts_at_least(pos_weight // 2, j, j):
            found.append((tuple(2 * x for x in half), neg))
    found.sort(reverse=True)
    for pos, neg in found:
        yield SignedPartition(Partition(pos), Partition(neg))


def enumerate_S(n: int, j: int) -> list[SignedPartition]:
    return list(iter_S(n, j))


@lru_cache(maxsize=None)
def _count_parts_at_least(total: int, k: int, low: int, cap: int) -> int:
    if k == 0:
        return 1 if total == 0 else 0
    count = 0
    for x in range(min(cap, total - (k - 1) * low), low - 1, -1):
        if x * k < total:
            break
        count += _count_parts_at_least(total - x, k - 1, low, x)
    return count


def count_S(n: int, j: int) -> int:
    if j < 0 or n < j * j:
        return 0
    total = 0
    for neg in _odd_subsets(j):
        pos_weight = n + sum(neg)
        if pos_weight >= 0 and pos_weight % 2 == 0:
            half = pos_weight // 2
            total += _count_parts_at_least(half, j, j, half)
    return total


def iter_C(n: int) -> Iterator[SignedPartition]:
    for j in range(_max_length(n) + 1):
        yield from iter_S(n, j)


def count_C(n: int) -> int:
    return sum(count_S(n, j) for j in range(_max_length(n) + 1))


def feasible_lengths(n: int) -> range:
    """Every j for which G(n, j) or S(n, j) can be nonempty."""
    return range(_max_length(n) + 1)
