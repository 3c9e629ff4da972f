"""Truncated power series in q with exact integer coefficients.

Both sides of the Ramanujan-Slater identity

    sum_j q^{j^2} (-q; q^2)_j / (q^2; q^2)_j  =  prod_{m = 1,4,7 mod 8} 1/(1 - q^m)

are expanded here, together with the variant of the left side in which
``q^{2j^2}`` multiplies ``(1 + q^-1)(1 + q^-3)...(1 + q^-(2j-1))``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import isqrt
from typing import Mapping, Sequence

from .families import B_MODULUS, B_RESIDUES, count_B


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 q + ... + c_N q^N, everything of degree > N discarded."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], order: int | None = None) -> "TruncatedSeries":
        """Pad with zeros or truncate `coeffs` to length ``order + 1``."""
        if order is None:
            order = max(len(coeffs) - 1, 0)
        c = list(coeffs[: order + 1])
        c += [0] * (order + 1 - len(c))
        return cls(order, tuple(c))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int], order: int) -> "TruncatedSeries":
        """Build from ``{exponent: coefficient}``; exponents must be >= 0."""
        c = [0] * (order + 1)
        for e, v in terms.items():
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e <= order:
                c[e] += v
        return cls(order, tuple(c))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_terms({0: 1}, order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, (0,) * (order + 1))

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the order of a truncated series")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": list(self.coeffs)}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    return TruncatedSeries(order, tuple(a.coeffs[i] + b.coeffs[i] for i in range(order + 1)))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    out = [0] * (order + 1)
    for i, x in enumerate(a.coeffs[: order + 1]):
        if x == 0:
            continue
        for k, y in enumerate(b.coeffs[: order + 1 - i]):
            if y:
                out[i + k] += x * y
    return TruncatedSeries(order, tuple(out))


def geometric_inverse_factor(k: int, N: int) -> TruncatedSeries:
    """1 / (1 - q^k) = 1 + q^k + q^2k + ... through q^N."""
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    return TruncatedSeries(N, tuple(1 if n % k == 0 else 0 for n in range(N + 1)))


def _binomial_factor(e: int, N: int) -> TruncatedSeries:
    # 1 + q^e
    return TruncatedSeries.from_terms({0: 1, e: 1}, N)


def _inverse_even_pochhammer(j: int, N: int) -> TruncatedSeries:
    # 1 / ((1-q^2)(1-q^4)...(1-q^2j))
    s = TruncatedSeries.one(N)
    for i in range(1, j + 1):
        s = s * geometric_inverse_factor(2 * i, N)
    return s


def lhs_slater(N: int) -> TruncatedSeries:
    total = TruncatedSeries.zero(N)
    for j in range(isqrt(N) + 1):
        term = TruncatedSeries.from_terms({j * j: 1}, N)
        for i in range(1, j + 1):
            term = term * _binomial_factor(2 * i - 1, N)
        total = total + term * _inverse_even_pochhammer(j, N)
    return total


def _laurent_numerator(j: int) -> dict[int, int]:
    """q^{2j^2} (1 + q^-1)(1 + q^-3)...(1 + q^-(2j-1)) as {exponent: coeff}.

    The product is expanded over Laurent exponents first, then shifted; the
    most negative exponent is -j^2 so every shifted exponent is >= j^2.
    """
    poly = {0: 1}
    for i in range(1, j + 1):
        step: dict[int, int] = {}
        for e, c in poly.items():
            step[e] = step.get(e, 0) + c
            step[e - (2 * i - 1)] = step.get(e - (2 * i - 1), 0) + c
        poly = step
    return {e + 2 * j * j: c for e, c in poly.items()}


def lhs_rewritten(N: int) -> TruncatedSeries:
    total = TruncatedSeries.zero(N)
    for j in range(isqrt(N) + 1):
        numerator = TruncatedSeries.from_terms(_laurent_numerator(j), N)
        total = total + numerator * _inverse_even_pochhammer(j, N)
    return total


def rhs_product(N: int) -> TruncatedSeries:
    s = TruncatedSeries.one(N)
    for m in range(1, N + 1):
        if m % B_MODULUS in B_RESIDUES:
            s = s * geometric_inverse_factor(m, N)
    return s


@dataclass(frozen=True)
class IdentityReport:
    order: int
    ok: bool
    first_mismatch: int | None
    values: dict[str, int] | None

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "ok": self.ok,
            "first_mismatch": self.first_mismatch,
            "values": self.values,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def verify_identity(N: int) -> IdentityReport:
    """Compare both left sides, the product, and direct B(n) counts through q^N."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    columns = {
        "lhs_slater": lhs_slater(N).coeffs,
        "lhs_rewritten": lhs_rewritten(N).coeffs,
        "rhs_product": rhs_product(N).coeffs,
        "count_B": tuple(count_B(n) for n in range(N + 1)),
    }
    for n in range(N + 1):
        row = {name: col[n] for name, col in columns.items()}
        if len(set(row.values())) > 1:
            return IdentityReport(N, False, n, row)
    return IdentityReport(N, True, None, None)
