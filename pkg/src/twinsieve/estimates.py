"""Closed-form twin-prime count estimates and the density correction factor.

Every function here is a pure formula over a prime bound and an explicit
prime count.  The reproduction pipeline in :mod:`twinsieve.report` feeds
these the count of odd primes below p**2 (the 6n+-1 sieve never meets 2)
and measures density over the p**2 - p integers of [p, p**2]; that pairing
is what reproduces the published reference values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import exp, log

import numpy as np

from .primes import _primes_upto, is_prime

EULER_GAMMA = 0.577215664901533
HALF_E_GAMMA = exp(EULER_GAMMA) / 2  # ~0.8905, the limit of the correction factor

_LOG_SPACE_THRESHOLD = 100_000  # beyond this many factors, multiply in log space


def _require_prime(p: int, minimum: int = 5) -> None:
    if p < minimum or not is_prime(p):
        raise ValueError(f"expected a prime >= {minimum}, got {p}")


def _product(factors: np.ndarray) -> float:
    if len(factors) > _LOG_SPACE_THRESHOLD:
        return float(np.exp(np.sum(np.log(factors))))
    return float(np.prod(factors))


def _prime_array(lo: int, hi: int) -> np.ndarray:
    return np.array([q for q in _primes_upto(hi) if q >= lo], dtype=np.float64)


def density_eq1(p: int) -> Fraction:
    """Exact surviving density of the level-p wheel: prod (q-2)/q over odd primes q < p."""
    _require_prime(p)
    d = Fraction(1)
    for q in _primes_upto(p - 1):
        if q >= 3:
            d *= Fraction(q - 2, q)
    return d


def survivor_ratio(p: int) -> float:
    """prod (q-2)/(q-1) over primes 5 <= q <= p: the fraction of primes kept."""
    _require_prime(p)
    qs = _prime_array(5, p)
    return _product((qs - 2) / (qs - 1))


def survivor_ratio_exact(p: int) -> Fraction:
    _require_prime(p)
    out = Fraction(1)
    for q in _primes_upto(p):
        if q >= 5:
            out *= Fraction(q - 2, q - 1)
    return out


def estimate_eq7(p: int, pi_p2: int) -> float:
    """Survivor estimate: the kept fraction of the pi_p2 primes below p**2."""
    return survivor_ratio(p) * pi_p2


def estimate_eq7_exact(p: int, pi_p2: int) -> Fraction:
    return survivor_ratio_exact(p) * pi_p2


def deleted_estimate_eq5(p: int, p_k: int, pi_p2: int) -> float:
    """Predicted number of primes below p**2 deleted at the step that sifts by p_k.

    Equals prod_{5 <= q < p_k} (q-2)/(q-1) * pi_p2 / (p_k - 1): the share of
    primes landing in the residue classes the p_k step removes.
    """
    _require_prime(p)
    _require_prime(p_k)
    if p_k > p:
        raise ValueError(f"sieving prime {p_k} exceeds level {p}")
    qs = _prime_array(5, p_k - 1)
    return _product((qs - 2) / (qs - 1)) * pi_p2 / (p_k - 1)


def deleted_estimate_eq5_exact(p: int, p_k: int, pi_p2: int) -> Fraction:
    _require_prime(p)
    _require_prime(p_k)
    if p_k > p:
        raise ValueError(f"sieving prime {p_k} exceeds level {p}")
    out = Fraction(pi_p2, p_k - 1)
    for q in _primes_upto(p_k - 1):
        if q >= 5:
            out *= Fraction(q - 2, q - 1)
    return out


def telescoping_total_eq6(p: int, pi_p2: int) -> float:
    """Total predicted deletions below p**2: the per-step estimates telescope.

    Computed as [1 - prod (1 - 1/(q-1))] * pi_p2 over primes 5 <= q <= p;
    agrees with the sum of deleted_estimate_eq5 over those q, and with
    pi_p2 - estimate_eq7.
    """
    _require_prime(p)
    qs = _prime_array(5, p)
    return (1.0 - _product(1.0 - 1.0 / (qs - 1.0))) * pi_p2


def correction_r(p: int, pi_p2: int) -> float:
    """Observed-versus-predicted prime density ratio on [p, p**2].

    pi_p2 / (p**2 - p) is the observed density over the interval's integers;
    prod q/(q-1) undoes the density the wheel residues prescribe.  Tends to
    HALF_E_GAMMA from above as p grows.
    """
    _require_prime(p)
    qs = _prime_array(2, p)
    return pi_p2 / (p * p - p) * _product(qs / (qs - 1))


def estimate_eq15(p: int, pi_p2: int) -> float:
    """Corrected survivor estimate; algebraically correction_r * estimate_eq7."""
    _require_prime(p)
    qs = _prime_array(3, p)
    prod = _product(qs * (qs - 2) / (qs - 1) ** 2)
    return 4 * pi_p2 * pi_p2 / (p * p - p) * prod


def twin_product(bound: int, *, descending: bool = False) -> float:
    """prod q(q-2)/(q-1)**2 over odd primes q <= bound; converges to ~0.66016."""
    if bound < 3:
        raise ValueError(f"bound must be at least 3, got {bound}")
    qs = _prime_array(3, bound)
    factors = qs * (qs - 2) / (qs - 1) ** 2
    if descending:
        factors = factors[::-1]
    return _product(factors)


def asymptotic_eq16(x: float, product_bound: int) -> float:
    """4x/ln(x)**2 times the truncated twin product: individual-member count under x."""
    if x <= exp(2):
        raise ValueError(f"x must exceed e^2, got {x}")
    return 4 * x / log(x) ** 2 * twin_product(product_bound)


def mertens_check(p: int) -> float:
    """prod (1 - 1/q) over q <= p, against its slow 2e^-gamma/ln(p**2) limit.

    Tends to 1 as p grows; exposed as the convergence diagnostic for the
    correction factor approaching HALF_E_GAMMA.
    """
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    qs = _prime_array(2, p)
    return _product((qs - 1) / qs) * log(float(p) ** 2) / (2 * exp(-EULER_GAMMA))


@dataclass(frozen=True)
class Constants:
    """Fixed constants plus truncations of the twin product at chosen bounds."""

    euler_gamma: float
    half_e_gamma: float
    twin_product_truncations: dict[int, float]


def make_constants(bounds: tuple[int, ...] = (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6)) -> Constants:
    return Constants(
        euler_gamma=EULER_GAMMA,
        half_e_gamma=HALF_E_GAMMA,
        twin_product_truncations={b: twin_product(b) for b in sorted(bounds)},
    )
