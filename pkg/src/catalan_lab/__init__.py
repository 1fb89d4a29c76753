"""Exact-arithmetic verification lab for Catalan-number identities and
supercongruences: exact rational / modular building blocks, Morita's
p-adic Gamma function, identity and congruence checkers, and a sweep
driver with JSON/CSV reporting.
"""

from .exact import (
    EulerTable,
    GouldTerm,
    binomial,
    catalan,
    catalan_power_sum,
    euler_numbers,
    gould_term,
    harmonic,
    q_weighted_gould_sum,
)
from .modring import (
    DenominatorDivisibleByP,
    Modulus,
    NotInvertible,
    ResidueClass,
    inverse,
    is_prime,
    reduce_precision,
    residue_of_rational,
)
from .gamma import (
    ArgumentNotPAdicInteger,
    GammaRequest,
    euler_mod_p,
    gamma_p,
    gamma_p_int,
    gamma_quarter_pow4,
)
from .identities import IdentityId, IdentityResult, InvalidParams, verify_identity
from .congruences import (
    CheckResult,
    CongruenceId,
    PrimeOutOfDomain,
    verify_congruence,
)
from .dixon import DixonResult, dixon_float_check, gamma_quarter_real
from .sweep import SweepConfig, SweepReport, primes_in, run_sweep

__version__ = "0.1.0"
