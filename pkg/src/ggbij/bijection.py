"""The map between G(n, j) and S(n, j), its inverse, and exhaustive checking.

Forward map, for gamma = (g_1 >= ... >= g_j) in G(n, j)::

    pi_k = g_k + 4k - 2j - 2 + P(g_k) + 2 * sum_{i>k} P(g_i)
    nu   = the odd numbers 2k-1 for which g_k is odd

Inverse, with f_{2k-1} = 1 when 2k-1 is a negative part::

    g_k = pi_k - 4k + 2j + 2 - f_{2k-1} - 2 * sum_{i>k} f_{2i-1}
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .families import enumerate_G, enumerate_S, feasible_lengths, is_gollnitz_gordon, is_signed_gg
from .partitions import Partition, SignedPartition, parity

STAGES = ("forward-membership", "weight", "roundtrip-gh", "roundtrip-hg", "cardinality")


class MembershipError(ValueError):
    """The input is not in the domain of the map (a caller error)."""


class ConsistencyError(AssertionError):
    """The formula produced something the theorem says it cannot."""


def _suffix_sums(bits: list[int]) -> list[int]:
    # out[k] = sum(bits[k+1:])
    out = [0] * len(bits)
    acc = 0
    for k in range(len(bits) - 1, -1, -1):
        out[k] = acc
        acc += bits[k]
    return out


def forward_raw(gamma: Partition, j: int) -> tuple[list[int], list[int]]:
    """Positive parts in formula order (k = 1..j) and the negative parts.

    No precondition checks and no reordering; the result is exactly what the
    formula gives so that its ordering can be inspected.
    """
    bits = [parity(g) for g in gamma.parts]
    tail = _suffix_sums(bits)
    pi = [g + 4 * k - 2 * j - 2 + bits[k - 1] + 2 * tail[k - 1]
          for k, g in enumerate(gamma.parts, start=1)]
    nu = [2 * k - 1 for k in range(len(bits), 0, -1) if bits[k - 1]]
    return pi, nu


def forward_g(gamma: Partition, j: int) -> SignedPartition:
    if len(gamma) != j:
        raise MembershipError(f"{gamma} has length {len(gamma)}, expected j={j}")
    if not is_gollnitz_gordon(gamma):
        raise MembershipError(f"{gamma} is not a Göllnitz-Gordon partition")
    pi, nu = forward_raw(gamma, j)
    if any(pi[k] < pi[k + 1] for k in range(len(pi) - 1)):
        raise ConsistencyError(f"image of {gamma} is not nonincreasing: {pi}")
    return SignedPartition(Partition(pi), Partition(nu))


def inverse_h(sigma: SignedPartition, j: int) -> Partition:
    if not is_signed_gg(sigma, j):
        raise MembershipError(f"{sigma} is not a signed Göllnitz-Gordon partition with j={j}")
    negs = set(sigma.negative.parts)
    f = [1 if 2 * k - 1 in negs else 0 for k in range(1, j + 1)]
    tail = _suffix_sums(f)
    gamma = [p - 4 * k + 2 * j + 2 - f[k - 1] - 2 * tail[k - 1]
             for k, p in enumerate(sigma.positive.parts, start=1)]
    if any(g < 1 for g in gamma) or any(gamma[k] < gamma[k + 1] for k in range(len(gamma) - 1)):
        raise ConsistencyError(f"preimage of {sigma} is not a partition: {gamma}")
    return Partition(gamma)


@dataclass(frozen=True)
class Failure:
    n: int
    j: int
    input: str
    stage: str
    detail: str

    def to_json(self) -> dict:
        return {"n": self.n, "j": self.j, "input": self.input,
                "stage": self.stage, "detail": self.detail}


@dataclass
class BijectionReport:
    n_max: int
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    cells: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "BijectionReport") -> None:
        self.checked += other.checked
        self.cells += other.cells
        self.failures.extend(other.failures)

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "ok": self.ok,
            "checked": self.checked,
            "cells": self.cells,
            "failures": [f.to_json() for f in self.failures],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def check_cell(n: int, j: int) -> BijectionReport:
    """Check the bijection on the single cell G(n, j) <-> S(n, j).

    Each gamma contributes two checks (image membership with weight, and
    h(g(gamma)) == gamma); each sigma contributes one (g(h(sigma)) == sigma).
    """
    report = BijectionReport(n_max=n, cells=1)
    G = enumerate_G(n, j)
    S = enumerate_S(n, j)
    S_set = set(S)

    def fail(obj, stage, detail):
        report.failures.append(Failure(n, j, str(obj), stage, detail))

    images = set()
    for gamma in G:
        report.checked += 2
        try:
            sigma = forward_g(gamma, j)
        except (MembershipError, ConsistencyError) as exc:
            fail(gamma, "forward-membership", str(exc))
            continue
        images.add(sigma)
        if sigma.weight != n:
            fail(gamma, "weight", f"image {sigma} has weight {sigma.weight}")
        if sigma not in S_set:
            fail(gamma, "forward-membership", f"image {sigma} is not in S({n}, {j})")
        try:
            back = inverse_h(sigma, j)
        except (MembershipError, ConsistencyError) as exc:
            fail(gamma, "roundtrip-gh", str(exc))
            continue
        if back != gamma:
            fail(gamma, "roundtrip-gh", f"h(g(gamma)) = {back}")

    for sigma in S:
        report.checked += 1
        try:
            again = forward_g(inverse_h(sigma, j), j)
        except (MembershipError, ConsistencyError) as exc:
            fail(sigma, "roundtrip-hg", str(exc))
            continue
        if again != sigma:
            fail(sigma, "roundtrip-hg", f"g(h(sigma)) = {again}")

    if not (len(G) == len(S) == len(images)):
        fail(f"G({n},{j})", "cardinality",
             f"|G|={len(G)} |S|={len(S)} distinct images={len(images)}")
    return report


def _check_weight(n: int) -> BijectionReport:
    report = BijectionReport(n_max=n)
    for j in feasible_lengths(n):
        report.merge(check_cell(n, j))
    return report


def verify_bijection(n_max: int, workers: int = 1) -> BijectionReport:
    """Exhaustively check the bijection for every weight 0..n_max and every j.

    Failures are collected, never raised, and sorted by (n, j, input).
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    report = BijectionReport(n_max=n_max)
    weights = range(n_max + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_check_weight, weights))
    else:
        parts = [_check_weight(n) for n in weights]
    for part in parts:
        report.merge(part)
    report.failures.sort(key=lambda f: (f.n, f.j, f.input, f.stage))
    return report
