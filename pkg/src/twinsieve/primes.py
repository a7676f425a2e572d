"""Exact prime infrastructure: segmented sieve, prime counting, primorials.

Primality is stored odds-only (2 is handled specially), one flag per odd
number, so a 64M-range table costs ~32 MB.  The sieve is processed in
fixed-size segments; results are identical for any segment size.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt, log

import numpy as np

HARD_CAP = 2 ** 40
DEFAULT_SEGMENT = 1 << 21  # numbers per segment; keeps the working set cache-resident
_UINT64_MAX = 2 ** 64 - 1
_COUNT_BLOCK = 1 << 16  # odd indices per prefix-count block


def _odd_flags(limit: int) -> np.ndarray:
    """Plain (non-segmented) odds-only sieve; index i holds primality of 2i+1."""
    half = (limit + 1) // 2
    odd = np.ones(half, dtype=bool)
    odd[0] = False  # 1 is not prime
    for i in range(1, (isqrt(limit) - 1) // 2 + 1):
        if odd[i]:
            p = 2 * i + 1
            odd[p * p // 2 :: p] = False
    return odd


@dataclass(eq=False)
class PrimeTable:
    """Queryable primality map for every integer up to ``limit``.

    All public queries are read-only and safe for concurrent use.
    """

    limit: int
    segment_size: int
    _odd: np.ndarray = field(repr=False)
    _prefix: np.ndarray = field(repr=False)

    def _check_range(self, x: int) -> None:
        if x > self.limit:
            raise ValueError(f"{x} exceeds table limit {self.limit}")

    def is_prime(self, q: int) -> bool:
        """Exact primality of q, for any 0 <= q <= limit."""
        self._check_range(q)
        if q < 2:
            return False
        if q % 2 == 0:
            return q == 2
        return bool(self._odd[(q - 1) // 2])

    def is_prime_array(self, values: np.ndarray) -> np.ndarray:
        """Vectorised primality lookup for odd values >= 3."""
        values = np.asarray(values)
        if values.size and int(values.max()) > self.limit:
            raise ValueError(f"value {int(values.max())} exceeds table limit {self.limit}")
        return self._odd[(values - 1) // 2]

    def count_primes_up_to(self, x: int) -> int:
        """pi(x): number of primes <= x."""
        self._check_range(x)
        if x < 2:
            return 0
        hi = (x - 1) // 2  # largest odd index with value <= x
        block = hi // _COUNT_BLOCK
        partial = int(np.count_nonzero(self._odd[block * _COUNT_BLOCK : hi + 1]))
        return 1 + int(self._prefix[block]) + partial  # the 1 is the prime 2

    def primes_in_range(self, lo: int, hi: int) -> np.ndarray:
        """Sorted array of all primes p with lo <= p <= hi."""
        self._check_range(hi)
        if hi < lo or hi < 2:
            return np.empty(0, dtype=np.int64)
        first_odd = max(lo, 3) | 1  # first odd >= max(lo, 3)
        i_lo = (first_odd - 1) // 2
        i_hi = (hi - 1) // 2
        if i_hi >= i_lo:
            odd = np.flatnonzero(self._odd[i_lo : i_hi + 1]).astype(np.int64)
            odd = odd * 2 + 2 * i_lo + 1
        else:
            odd = np.empty(0, dtype=np.int64)
        if lo <= 2 <= hi:
            return np.concatenate(([2], odd))
        return odd


def sieve_primes(limit: int, *, segment_size: int = DEFAULT_SEGMENT,
                 hard_cap: int = HARD_CAP) -> PrimeTable:
    """Sieve all primes up to ``limit`` (inclusive), segment by segment.

    Parameters
    ----------
    limit : int
        Inclusive upper bound, 2 <= limit <= hard_cap.
    segment_size : int
        Numbers per segment.  Affects locality only, never the result.

    Returns
    -------
    PrimeTable
    """
    if limit < 2:
        raise ValueError(f"limit must be at least 2, got {limit}")
    if limit > hard_cap:
        raise ValueError(f"limit {limit} exceeds hard cap {hard_cap}")
    if segment_size < 8:
        raise ValueError(f"segment_size must be at least 8, got {segment_size}")

    half = (limit + 1) // 2
    odd = np.ones(half, dtype=bool)
    odd[0] = False

    root = isqrt(limit)
    base = [2 * i + 1 for i in np.flatnonzero(_odd_flags(root))] if root >= 3 else []

    seg = max(segment_size // 2, 4)  # odd indices per segment
    for a in range(0, half, seg):
        b = min(a + seg, half)
        seg_lo = 2 * a + 1
        seg_hi = 2 * b - 1
        for p in base:
            start = p * p
            if start > seg_hi:
                break
            if start < seg_lo:
                start = ((seg_lo + p - 1) // p) * p
                if start % 2 == 0:
                    start += p
                if start > seg_hi:
                    continue
            odd[start // 2 : b : p] = False

    blocks = np.arange(0, half, _COUNT_BLOCK)
    prefix = np.zeros(len(blocks), dtype=np.int64)
    if len(blocks) > 1:
        prefix[1:] = np.cumsum(np.add.reduceat(odd, blocks))[:-1]
    odd.flags.writeable = False
    prefix.flags.writeable = False
    return PrimeTable(limit=limit, segment_size=segment_size, _odd=odd, _prefix=prefix)


@lru_cache(maxsize=None)
def _primes_upto(limit: int) -> tuple[int, ...]:
    """Small cached prime list (plain sieve); intended for limit <= ~10**7."""
    if limit < 2:
        return ()
    odds = tuple(int(2 * i + 1) for i in np.flatnonzero(_odd_flags(limit)))
    return (2,) + odds


def is_prime(q: int) -> bool:
    """Trial-division primality for standalone use on small numbers."""
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    if q % 3 == 0:
        return q == 3
    f = 5
    while f * f <= q:
        if q % f == 0 or q % (f + 2) == 0:
            return False
        f += 6
    return True


def nth_prime(n: int) -> int:
    """The n-th prime, 1-indexed: nth_prime(1) == 2."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n < 6:
        return (2, 3, 5, 7, 11)[n - 1]
    bound = int(n * (log(n) + log(log(n)))) + 10
    while True:
        primes = _primes_upto(bound)
        if len(primes) >= n:
            return primes[n - 1]
        bound *= 2


def primorial(p: int) -> int:
    """Product of all primes <= p; rejects non-prime p and 64-bit overflow."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    out = 1
    for q in _primes_upto(p):
        out *= q
        if out > _UINT64_MAX:
            raise OverflowError(f"primorial of {p} exceeds 64 bits")
    return out


def phi_primorial(p: int) -> int:
    """Euler phi of the primorial of p: the product of (q - 1) over primes q <= p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    out = 1
    for q in _primes_upto(p):
        out *= q - 1
    return out
