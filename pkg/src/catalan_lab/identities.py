"""Exact verification of the closed-form identities: the d=1,2 partial
sum formulas (CF1/CF2), the one-parameter binomial summation (BELL), the
three quotient expansions feeding it (QUOT1-QUOT3), the four weighted
sums (ID1-ID4) and the alternating cubed-binomial harmonic identity
(SHEN).

Both sides of every identity are computed by independent code paths and
compared for exact rational equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List

from .exact import binomial, catalan, gould_term

__all__ = ["IdentityId", "IdentityResult", "InvalidParams", "verify_identity"]


class InvalidParams(ValueError):
    """Parameters outside an identity's domain (e.g. n = 0 for ID3)."""


class IdentityId(str, Enum):
    CF1 = "CF1"
    CF2 = "CF2"
    BELL = "BELL"
    QUOT1 = "QUOT1"
    QUOT2 = "QUOT2"
    QUOT3 = "QUOT3"
    ID1 = "ID1"
    ID2 = "ID2"
    ID3 = "ID3"
    ID4 = "ID4"
    SHEN = "SHEN"


@dataclass(frozen=True)
class IdentityResult:
    id: IdentityId
    params: Dict[str, int]
    lhs: Fraction
    rhs: Fraction
    passed: bool


# growing cache of second-order harmonic numbers H_0^(2), H_1^(2), ...
_H2: List[Fraction] = [Fraction(0)]


def _h2(k: int) -> Fraction:
    while len(_H2) <= k:
        j = len(_H2)
        _H2.append(_H2[-1] + Fraction(1, j * j))
    return _H2[k]


def _central_square(n: int) -> Fraction:
    """binom(2*floor(n/2), floor(n/2))^2 / 16^floor(n/2)."""
    h = n // 2
    return Fraction(math.comb(2 * h, h) ** 2, 16**h)


def _weighted_sum(n: int, power: int, cubic_weight: bool = False) -> Fraction:
    """LHS of ID1-ID4: sum over k of
    w(k) binom(n,k) binom(n+k,k) binom(2k,k) / ((-4)^k (k+1)^power),
    with w(k) = k^3 when cubic_weight else 1.
    """
    total = Fraction(0)
    for k in range(n + 1):
        core = math.comb(n, k) * math.comb(n + k, k) * math.comb(2 * k, k)
        if cubic_weight:
            core *= k**3
        total += Fraction(core, (-4) ** k * (k + 1) ** power)
    return total


def _check_cf1(n: int):
    lhs = Fraction(0)
    for k in range(n + 1):
        lhs += Fraction(catalan(k), 4**k)
    rhs = 2 - Fraction(math.comb(2 * n + 1, n), 4**n)
    return lhs, rhs


def _check_cf2(n: int):
    lhs = Fraction(0)
    for k in range(n + 1):
        lhs += Fraction(catalan(k) ** 2, 16**k)
    rhs = -4 + (5 + 4 * n) * Fraction(math.comb(2 * n + 1, n) ** 2, 16**n)
    return lhs, rhs


def _check_bell(n: int, j: int):
    lhs = Fraction(sum(gould_term(n, k, j).value for k in range(n + 1)))
    if (n - j) % 2:
        rhs = Fraction(0)
    else:
        rhs = Fraction(
            binomial(n + j, (n + j) // 2) * binomial(n - j, (n - j) // 2)
        )
    return lhs, rhs


def _check_quot1(n: int, k: int):
    lhs = Fraction(gould_term(n, k, 1).value, gould_term(n, k, 0).value)
    rhs = 1 - Fraction(1, k + 1)
    return lhs, rhs


def _check_quot2(n: int, k: int):
    num = gould_term(n + 1, k + 1, 1).value - (n * n - n) * gould_term(n, k, 2).value
    lhs = Fraction(num, gould_term(n, k, 0).value)
    rhs = (
        4
        + n
        - n * n
        + Fraction(4 * n * n + 4 * n - 2, k + 1)
        - Fraction(2 * n * (n + 1), (k + 1) ** 2)
    )
    return lhs, rhs


def _check_quot3(n: int, k: int):
    lhs = Fraction(gould_term(n + 1, k + 1, 0).value, gould_term(n, k, 0).value)
    rhs = (
        4
        + Fraction(8 * n + 2, k + 1)
        + Fraction(4 * n * n - 2, (k + 1) ** 2)
        - Fraction(2 * n * (n + 1), (k + 1) ** 3)
    )
    return lhs, rhs


def _check_id1(n: int):
    lhs = _weighted_sum(n, 1)
    factor = Fraction(1) if n % 2 == 0 else Fraction(n, n + 1)
    return lhs, _central_square(n) * factor


def _check_id2(n: int):
    lhs = _weighted_sum(n, 2)
    if n % 2 == 0:
        factor = Fraction(2)
    else:
        factor = Fraction(2 * n * n + 2 * n - 1, (n + 1) ** 2)
    return lhs, _central_square(n) * factor


def _check_id3(n: int):
    lhs = _weighted_sum(n, 3)
    if n % 2 == 0:
        factor = Fraction((2 * n + 1) ** 2, n * (n + 1))
    else:
        factor = Fraction(
            4 * n**4 + 8 * n**3 + 3 * n * n - n + 1, n * (n + 1) ** 3
        )
    rhs = Fraction(-2, n * (n + 1)) + _central_square(n) * factor
    return lhs, rhs


def _check_id4(n: int):
    lhs = _weighted_sum(n, 0, cubic_weight=True)
    if n % 2 == 0:
        factor = Fraction(n * n * (n + 1) ** 2 * (2 * n + 1) ** 2, 15)
    else:
        factor = -Fraction(
            n * n * (4 * n**4 + 8 * n**3 + 3 * n * n - n + 1), 15
        )
    return lhs, _central_square(n) * factor


def _check_shen(m: int):
    # alternating sum of cubed binomials against H_k^(2); the cube on
    # binom(2m, k) is essential (the uncubed sum already fails at m = 1)
    lhs = Fraction(0)
    for k in range(2 * m + 1):
        lhs += (-1) ** k * math.comb(2 * m, k) ** 3 * _h2(k)
    multinomial = math.comb(3 * m, m) * math.comb(2 * m, m)
    rhs = Fraction((-1) ** m * multinomial, 2) * (_h2(m) + _h2(2 * m))
    return lhs, rhs


def verify_identity(id: IdentityId, **params: int) -> IdentityResult:
    """Evaluate both sides of the identity at the given parameters.

    Domains: BELL takes (n, j) with 0 <= j <= n; QUOT1-QUOT3 take (n, k)
    with 0 <= k <= n; CF1/CF2 and ID1-ID4 take n >= 1; SHEN takes m >= 1.
    """
    id = IdentityId(id)
    if id is IdentityId.BELL:
        n, j = params["n"], params["j"]
        if not 0 <= j <= n:
            raise InvalidParams(f"BELL needs 0 <= j <= n, got n={n}, j={j}")
        lhs, rhs = _check_bell(n, j)
    elif id in (IdentityId.QUOT1, IdentityId.QUOT2, IdentityId.QUOT3):
        n, k = params["n"], params["k"]
        if not 0 <= k <= n:
            raise InvalidParams(f"{id.value} needs 0 <= k <= n, got n={n}, k={k}")
        fn = {
            IdentityId.QUOT1: _check_quot1,
            IdentityId.QUOT2: _check_quot2,
            IdentityId.QUOT3: _check_quot3,
        }[id]
        lhs, rhs = fn(n, k)
    elif id is IdentityId.SHEN:
        m = params.get("m", params.get("n"))
        if m is None or m < 1:
            raise InvalidParams("SHEN needs m >= 1")
        params = {"m": m}
        lhs, rhs = _check_shen(m)
    else:
        n = params["n"]
        if n < 1:
            raise InvalidParams(f"{id.value} needs n >= 1 (RHS has 1/n terms)")
        fn = {
            IdentityId.CF1: _check_cf1,
            IdentityId.CF2: _check_cf2,
            IdentityId.ID1: _check_id1,
            IdentityId.ID2: _check_id2,
            IdentityId.ID3: _check_id3,
            IdentityId.ID4: _check_id4,
        }[id]
        lhs, rhs = fn(n)
    return IdentityResult(id=id, params=dict(params), lhs=lhs, rhs=rhs, passed=lhs == rhs)
