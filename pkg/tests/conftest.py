"""Shared fixtures and independent oracles.

The oracles here (bytearray sieve, trial division, brute-force twin scans)
are deliberately separate implementations from the package code they check.
"""

import numpy as np
import pytest

from twinsieve import sieve_primes


def naive_flags(n: int) -> bytearray:
    """Plain bytearray sieve, flags[i] == 1 iff i is prime."""
    flags = bytearray([1]) * (n + 1)
    flags[0:2] = b"\x00\x00"
    i = 2
    while i * i <= n:
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
        i += 1
    return flags


def naive_primes(n: int) -> list:
    return [i for i, f in enumerate(naive_flags(n)) if f]


def trial_is_prime(n: int) -> bool:
    """Straight trial division, no wheel tricks."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def twin_partner(q: int) -> int:
    return q + 2 if q % 6 == 5 else q - 2


def brute_twin_members(p: int, bound: int) -> list:
    """Twin primes q in [p, bound) whose designated partner is prime and >= p."""
    flags = naive_flags(bound + 2)
    out = []
    for q in range(p, bound):
        if flags[q] and q % 6 in (1, 5):
            t = twin_partner(q)
            if t >= p and flags[t]:
                out.append(q)
    return out


def brute_pair_members(p: int, lo: int, hi: int) -> int:
    """Individual members of designated twin pairs intersecting [lo, hi]."""
    flags = naive_flags(hi + 4)
    pairs = 0
    for a in range(5, hi + 1, 2):
        if a % 6 == 5 and flags[a] and flags[a + 2] and a + 2 >= lo:
            pairs += 1
    return 2 * pairs


@pytest.fixture(scope="session")
def table_1m():
    """Covers 1009**2 + 2; enough for every non-acceptance test."""
    return sieve_primes(1009 * 1009 + 2)


@pytest.fixture(scope="session")
def full_table():
    """Covers 8009**2 + 2, the full reference-table range."""
    return sieve_primes(8009 * 8009 + 2)
