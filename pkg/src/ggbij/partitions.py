"""Ordinary and signed partitions.

A :class:`Partition` is stored as a tuple of positive integers in
nonincreasing order, so two partitions compare equal exactly when they have
the same multiset of parts.  A :class:`SignedPartition` is a pair of ordinary
partitions ``(positive, negative)``; the negative parts are kept as positive
magnitudes and the weight is ``|positive| - |negative|``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


class PartitionError(ValueError):
    """Raised for malformed partition data (nonpositive parts, bad JSON, ...)."""


def parity(k: int) -> int:
    """Return 0 if `k` is even and 1 if `k` is odd (also for negative `k`)."""
    return k & 1


@dataclass(frozen=True, order=False)
class Partition:
    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int):
                raise PartitionError(f"part {p!r} is not an integer")
            if p < 1:
                raise PartitionError(f"part {p} is not positive")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.parts)) + ")"

    def to_json(self) -> dict:
        return {"parts": list(self.parts)}

    @classmethod
    def from_json(cls, obj) -> "Partition":
        if not isinstance(obj, dict) or set(obj) != {"parts"}:
            raise PartitionError('expected an object of the form {"parts": [...]}')
        return cls(_int_list(obj["parts"], "parts"))


@dataclass(frozen=True)
class SignedPartition:
    positive: Partition = Partition()
    negative: Partition = Partition()

    def __post_init__(self):
        for name in ("positive", "negative"):
            value = getattr(self, name)
            if not isinstance(value, Partition):
                object.__setattr__(self, name, Partition(value))

    @property
    def weight(self) -> int:
        return self.positive.weight - self.negative.weight

    def __str__(self) -> str:
        return f"{self.positive} - {self.negative}"

    def to_json(self) -> dict:
        return {"positive": list(self.positive.parts), "negative": list(self.negative.parts)}

    @classmethod
    def from_json(cls, obj) -> "SignedPartition":
        if not isinstance(obj, dict) or set(obj) != {"positive", "negative"}:
            raise PartitionError(
                'expected an object of the form {"positive": [...], "negative": [...]}'
            )
        return cls(
            Partition(_int_list(obj["positive"], "positive")),
            Partition(_int_list(obj["negative"], "negative")),
        )


def _int_list(value, field: str) -> list[int]:
    if not isinstance(value, list):
        raise PartitionError(f"field {field!r} must be a list of integers")
    return value


def weight(p: Partition) -> int:
    return p.weight


def length(p: Partition) -> int:
    return len(p.parts)


def signed_weight(s: SignedPartition) -> int:
    return s.weight


def to_frequencies(p: Partition) -> dict[int, int]:
    """Multiplicity form of `p`, keyed by part value in increasing order.

    >>> to_frequencies(Partition((4, 4, 1)))
    {1: 1, 4: 2}
    """
    freqs: dict[int, int] = {}
    for part in reversed(p.parts):
        freqs[part] = freqs.get(part, 0) + 1
    return freqs


def from_frequencies(freqs: Mapping[int, int]) -> Partition:
    """Inverse of :func:`to_frequencies`; zero multiplicities are ignored."""
    parts: list[int] = []
    for value, mult in freqs.items():
        if isinstance(mult, bool) or not isinstance(mult, int):
            raise PartitionError(f"multiplicity {mult!r} of {value} is not an integer")
        if mult < 0:
            raise PartitionError(f"negative multiplicity {mult} for part {value}")
        parts.extend([value] * mult)
    return Partition(parts)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of `n` in lexicographically decreasing order.

    Plain unrestricted enumeration; used as the brute-force ground truth the
    family-specific generators are checked against.
    """
    if n < 0:
        return
    if max_part is None:
        max_part = n

    def rec(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, prefix)
            prefix.pop()

    yield from rec(n, max_part, [])


def dumps(obj: Partition | SignedPartition) -> str:
    """Compact, deterministic JSON line for a partition or signed partition."""
    return json.dumps(obj.to_json(), separators=(",", ":"))
