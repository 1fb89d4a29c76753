"""Exact integer/rational building blocks: binomials, Catalan numbers,
harmonic numbers, Euler numbers and the one-parameter binomial summand
A(n, k, j) used by the identity checks.

Everything here is pure and exact (no floats); rationals are stdlib
Fractions, which are always stored in lowest terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

__all__ = [
    "binomial",
    "catalan",
    "harmonic",
    "EulerTable",
    "euler_numbers",
    "GouldTerm",
    "gould_term",
    "catalan_power_sum",
    "q_weighted_gould_sum",
]


def binomial(n: int, k: int) -> int:
    """binom(n, k), extended by 0 outside the Pascal triangle.

    The zero convention matters: A(n, k, j) relies on binom(2k, k+j)
    vanishing for small k (e.g. binom(0, 2) = 0).
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(k: int) -> int:
    """k-th Catalan number binom(2k, k) / (k + 1)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return math.comb(2 * k, k) // (k + 1)


def harmonic(k: int, r: int = 1) -> Fraction:
    """Harmonic number of order r: sum of 1/j^r for j = 1..k (0 for k = 0)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if r < 1:
        raise ValueError("r must be >= 1")
    total = Fraction(0)
    for j in range(1, k + 1):
        total += Fraction(1, j**r)
    return total


@dataclass(frozen=True)
class EulerTable:
    """Even-index Euler numbers E_0, E_2, ..., E_max_index.

    Odd-index Euler numbers are identically 0 and not stored.
    """

    max_index: int
    values: tuple

    def __getitem__(self, index: int) -> int:
        """E_index for an even index <= max_index."""
        if index % 2 != 0:
            return 0
        if not 0 <= index <= self.max_index:
            raise IndexError(f"index {index} outside table (max {self.max_index})")
        return self.values[index // 2]


def euler_numbers(max_index: int) -> EulerTable:
    """Euler numbers up to E_max_index via the secant recurrence

        sum_{j=0}^{n} binom(2n, 2j) E_{2j} = 0   (n >= 1),  E_0 = 1.
    """
    if max_index < 0 or max_index % 2 != 0:
        raise ValueError("max_index must be even and >= 0")
    values: List[int] = [1]
    for n in range(1, max_index // 2 + 1):
        acc = 0
        for j in range(n):
            acc += math.comb(2 * n, 2 * j) * values[j]
        values.append(-acc)
    return EulerTable(max_index=max_index, values=tuple(values))


@dataclass(frozen=True)
class GouldTerm:
    """One summand A(n, k, j) = binom(n,k) binom(n+k,k) binom(2k,k+j) (-4)^(n-k)."""

    n: int
    k: int
    j: int
    value: int


def gould_term(n: int, k: int, j: int) -> GouldTerm:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if j < 0:
        raise ValueError("j must be >= 0")
    value = (
        math.comb(n, k)
        * math.comb(n + k, k)
        * binomial(2 * k, k + j)
        * (-4) ** (n - k)
    )
    return GouldTerm(n=n, k=k, j=j, value=value)


def catalan_power_sum(n: int, d: int) -> Fraction:
    """Partial sum of (C_k / 4^k)^d for k = 0..n, exactly.

    Accumulated over the common denominator 4^(d*n) to avoid per-term
    gcd work; the final Fraction reduces once.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if d < 1:
        raise ValueError("d must be >= 1")
    numerator = 0
    for k in range(n + 1):
        numerator += catalan(k) ** d * 4 ** (d * (n - k))
    return Fraction(numerator, 4 ** (d * n))


def q_weighted_gould_sum(
    q_coeffs: Sequence[int], n: int, denom_power: int
) -> Fraction:
    """sum_{k=0}^{n} Q(k) binom(n,k) binom(n+k,k) binom(2k,k) / ((-4)^k (k+1)^denom_power)

    where Q has the given integer coefficients (ascending powers).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if denom_power not in (0, 1, 2, 3):
        raise ValueError("denom_power must be in {0, 1, 2, 3}")
    total = Fraction(0)
    for k in range(n + 1):
        q_val = 0
        for c in reversed(q_coeffs):
            q_val = q_val * k + c
        core = math.comb(n, k) * math.comb(n + k, k) * math.comb(2 * k, k)
        total += Fraction(q_val * core, (-4) ** k * (k + 1) ** denom_power)
    return total
