"""Arithmetic in Z/p^m for odd primes p: the value domain of every
congruence check.  Residues are stored as canonical least non-negative
representatives; rationals with p-coprime denominators embed via the
modular inverse of the denominator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

__all__ = [
    "Modulus",
    "ResidueClass",
    "NotInvertible",
    "DenominatorDivisibleByP",
    "is_prime",
    "modular_inverse",
    "residue_of_rational",
    "reduce_precision",
]


class NotInvertible(ArithmeticError):
    """Attempted to invert a residue sharing a factor with the modulus."""


class DenominatorDivisibleByP(ArithmeticError):
    """A rational with p in its denominator has no image in Z/p^m."""


def is_prime(n: int) -> bool:
    """Deterministic trial division; adequate for desk-scale primes."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def modular_inverse(a: int, modulus: int) -> int:
    """Inverse of a mod modulus via extended Euclid."""
    r0, r1 = a % modulus, modulus
    s0, s1 = 1, 0
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise NotInvertible(f"{a} is not invertible mod {modulus}")
    return s0 % modulus


@dataclass(frozen=True)
class Modulus:
    """An odd prime power p^m, primality checked at construction."""

    p: int
    m: int
    pm: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.m < 1:
            raise ValueError("m must be >= 1")
        object.__setattr__(self, "pm", self.p**self.m)

    def __str__(self) -> str:
        return f"{self.p}^{self.m}"


@dataclass(frozen=True)
class ResidueClass:
    """An element of Z/p^m, canonical representative in [0, p^m)."""

    modulus: Modulus
    value: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.modulus.pm)

    def _check(self, other: "ResidueClass") -> None:
        if other.modulus != self.modulus:
            raise ValueError("mixed moduli")

    def __add__(self, other):
        if isinstance(other, int):
            return ResidueClass(self.modulus, self.value + other)
        self._check(other)
        return ResidueClass(self.modulus, self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        return ResidueClass(self.modulus, -self.value)

    def __sub__(self, other):
        return self + (-other if isinstance(other, ResidueClass) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return ResidueClass(self.modulus, self.value * other)
        self._check(other)
        return ResidueClass(self.modulus, self.value * other.value)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return inverse(self) ** (-exponent)
        return ResidueClass(self.modulus, pow(self.value, exponent, self.modulus.pm))

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def inverse(a: ResidueClass) -> ResidueClass:
    """Multiplicative inverse in Z/p^m; requires p coprime to the value."""
    if a.value % a.modulus.p == 0:
        raise NotInvertible(f"{a} is divisible by p = {a.modulus.p}")
    return ResidueClass(a.modulus, modular_inverse(a.value, a.modulus.pm))


def residue_of_rational(x: Fraction, mod: Modulus) -> ResidueClass:
    """Embed a rational with p-coprime denominator into Z/p^m."""
    if x.denominator % mod.p == 0:
        raise DenominatorDivisibleByP(
            f"denominator of {x} is divisible by p = {mod.p}"
        )
    inv_den = modular_inverse(x.denominator % mod.pm, mod.pm)
    return ResidueClass(mod, x.numerator * inv_den)


def reduce_precision(a: ResidueClass, m_new: int) -> ResidueClass:
    """Project Z/p^m -> Z/p^m_new for m_new <= m."""
    if not 1 <= m_new <= a.modulus.m:
        raise ValueError("need 1 <= m_new <= m")
    if m_new == a.modulus.m:
        return a
    new_mod = Modulus(a.modulus.p, m_new)
    return ResidueClass(new_mod, a.value % new_mod.pm)
