"""Morita's p-adic Gamma function at p-adic integer arguments, to a
requested precision p^m, plus the two derived quantities the congruence
checks need: Gamma_p(1/4)^4 and E_{p-3} mod p.

Evaluation is the defining product (-1)^n * prod_{0<=k<n, p∤k} k over an
integer representative of the argument.  The product of the units in any
window of p^m consecutive integers is -1 mod p^m (Wilson's theorem for
odd prime powers), so full windows collapse to a sign and the cost is at
most p^m multiplications however large the representative is.  No
reflection or multiplication formulas are used: the values stay an
independent oracle for the congruences under test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .modring import Modulus, ResidueClass, modular_inverse, reduce_precision

__all__ = [
    "ArgumentNotPAdicInteger",
    "GammaRequest",
    "gamma_p_int",
    "gamma_p",
    "gamma_quarter_pow4",
    "euler_mod_p",
    "DEFAULT_GUARD_DIGITS",
    "DEFAULT_COST_CEILING",
]

DEFAULT_GUARD_DIGITS = 2
# Largest working modulus p^(m+guard) we will pay for; above this the
# guard is trimmed (never below 0).  The Wilson window reduction makes
# the cost ~ p^(m+guard) multiplications.
DEFAULT_COST_CEILING = 1_000_000


class ArgumentNotPAdicInteger(ArithmeticError):
    """Gamma_p argument must have denominator coprime to p."""


@dataclass(frozen=True)
class GammaRequest:
    argument: Fraction
    modulus: Modulus
    guard_digits: int = DEFAULT_GUARD_DIGITS

    def __post_init__(self) -> None:
        if self.argument.denominator % self.modulus.p == 0:
            raise ArgumentNotPAdicInteger(
                f"{self.argument} is not a {self.modulus.p}-adic integer"
            )
        if self.guard_digits < 0:
            raise ValueError("guard_digits must be >= 0")


def _unit_product(limit: int, p: int, pm: int) -> int:
    """Product of k in [1, limit) with p∤k, mod pm.

    Runs between consecutive multiples of p contain no multiples, so the
    inner loop needs no divisibility test; factors are paired before the
    modular reduction since limit < pm fits comfortably in a machine word.
    """
    result = 1
    base = 0
    while base + 1 < limit:
        hi = min(base + p, limit)
        k = base + 1
        while k + 1 < hi:
            result = result * (k * (k + 1)) % pm
            k += 2
        if k < hi:
            result = result * k % pm
        base += p
    return result


def gamma_p_int(n: int, mod: Modulus) -> ResidueClass:
    """(-1)^n * prod_{0<=k<n, gcd(k,p)=1} k, reduced mod p^m.

    k = 0 never contributes (gcd(0, p) = p); each full window of p^m
    consecutive integers contributes a factor -1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    windows, rest = divmod(n, mod.pm)
    value = _unit_product(rest, mod.p, mod.pm)
    if windows % 2:
        value = -value
    if n % 2:
        value = -value
    return ResidueClass(mod, value)


def gamma_p(
    req: GammaRequest, cost_ceiling: int = DEFAULT_COST_CEILING
) -> ResidueClass:
    """Gamma_p(x) mod p^m for a p-adic integer rational x.

    The argument is replaced by its least non-negative representative
    mod p^(m+g); the defining product is evaluated at precision m+g and
    reduced back to m.  g starts at req.guard_digits and is trimmed so
    the working modulus stays under cost_ceiling (g = 0 always allowed).
    """
    p, m = req.modulus.p, req.modulus.m
    guard = req.guard_digits
    while guard > 0 and p ** (m + guard) > cost_ceiling:
        guard -= 1
    work_mod = Modulus(p, m + guard) if guard else req.modulus
    x = req.argument
    rep = (
        x.numerator * modular_inverse(x.denominator % work_mod.pm, work_mod.pm)
    ) % work_mod.pm
    value = gamma_p_int(rep, work_mod)
    return reduce_precision(value, m)


@lru_cache(maxsize=None)
def _gamma_quarter_pow4_value(p: int, m: int, guard: int) -> int:
    mod = Modulus(p, m)
    g = gamma_p(GammaRequest(Fraction(1, 4), mod, guard_digits=guard))
    return (g**4).value


def gamma_quarter_pow4(
    p: int, m: int, guard_digits: int = DEFAULT_GUARD_DIGITS
) -> ResidueClass:
    """Gamma_p(1/4)^4 mod p^m, memoized (several checks share it per prime)."""
    return ResidueClass(Modulus(p, m), _gamma_quarter_pow4_value(p, m, guard_digits))


@lru_cache(maxsize=None)
def _euler_mod_p_value(p: int) -> int:
    target = p - 3
    # binom(2n, 2j) mod p via factorials: all arguments are < p
    fact = [1] * (target + 1)
    for i in range(1, target + 1):
        fact[i] = fact[i - 1] * i % p
    inv_fact = [1] * (target + 1)
    inv_fact[target] = pow(fact[target], p - 2, p)
    for i in range(target, 0, -1):
        inv_fact[i - 1] = inv_fact[i] * i % p
    values = [1]  # E_0
    for n in range(1, target // 2 + 1):
        acc = 0
        for j in range(n):
            c = fact[2 * n] * inv_fact[2 * j] % p * inv_fact[2 * n - 2 * j] % p
            acc += c * values[j]
        values.append(-acc % p)
    return values[target // 2]


def euler_mod_p(p: int) -> ResidueClass:
    """E_{p-3} mod p by the secant recurrence carried out entirely in Z/p."""
    if p < 5:
        raise ValueError("need p >= 5")
    return ResidueClass(Modulus(p, 1), _euler_mod_p_value(p))
