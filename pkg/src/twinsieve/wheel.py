"""Residue wheels that delete multiples of each prime together with their twins.

The wheel at level p holds the residue classes, modulo the primorial of the
previous level, of every 6n+-1 number that survives sifting out multiples of
5, 7, ..., q < p and their designated twins.  Advancing a wheel expands the
classes over the next primorial, deletes the classes of multiples of the
current level and of their twins, and records exactly what was deleted.

Below (level^2 - 2) the surviving members are precisely the twin primes
whose partners are also at least the level; that is what the exact deletion
ledger accounts for, one sieving prime at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .primes import PrimeTable, _primes_upto, is_prime

DEFAULT_LEVEL_CAP = 23

#: Returned by :func:`deletion_step_of` when no sieving step removes the prime.
SURVIVES = None


class WheelCapExceeded(RuntimeError):
    """Raised when an advance would materialize a wheel past the level cap."""


def designated_twin(n: int) -> int:
    """The 6k-+1 partner of a 6k+-1 number: n+2 below a multiple of 6, n-2 above."""
    r = n % 6
    if r == 5:
        return n + 2
    if r == 1:
        return n - 2
    raise ValueError(f"{n} is not of the form 6k+-1")


def _next_prime(p: int) -> int:
    q = p + 2
    while not is_prime(q):
        q += 2
    return q


def _display(values: np.ndarray, period: int) -> np.ndarray:
    """Representatives as listed in the tables: smallest class member >= 5."""
    return np.where(values >= 5, values, values + period)


@dataclass(frozen=True, eq=False)
class DeletionRecord:
    """What one advance step removed: multiples of ``level`` and their twins."""

    level: int
    multiples: tuple[int, ...]
    twins: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class TwinWheel:
    """One sieve state: level, period, surviving residues, deletion history.

    ``residues`` are canonical representatives in [1, period], sorted.  The
    value 1 stands for the class whose smallest member >= 5 is period + 1
    (displayed that way, matching the table layout).  Instances are immutable;
    :func:`advance` returns a new wheel.
    """

    level: int
    period: int
    residues: np.ndarray
    history: tuple[DeletionRecord, ...] = ()

    def twin_residue(self, r: int) -> int:
        """Class of the designated twin, reduced to [1, period]."""
        t = (r + 2 if r % 6 == 5 else r - 2) % self.period
        return t if t else self.period

    def display_residues(self) -> np.ndarray:
        """Residues as the tables list them (class of 1 shown as period + 1)."""
        return np.sort(_display(self.residues, self.period))

    def density(self) -> Fraction:
        """Surviving fraction of the period, exact."""
        return Fraction(len(self.residues), self.period)

    def members_below(self, bound: int) -> np.ndarray:
        """All wheel members m with 5 <= m < bound, sorted.

        Members are the residue classes extended by multiples of the period.
        Intended for bounds near level**2; the array grows linearly in bound.
        """
        if bound < 1:
            raise ValueError(f"bound must be positive, got {bound}")
        starts = _display(self.residues, self.period)
        chunks = [np.arange(int(s), bound, self.period, dtype=np.int64)
                  for s in starts if s < bound]
        if not chunks:
            return np.empty(0, dtype=np.int64)
        return np.sort(np.concatenate(chunks))


def initial_wheel() -> TwinWheel:
    """The level-5 wheel: every 6n+-1 number, laid out over one period of 30."""
    values = sorted({v % 30 for n in range(1, 6) for v in (6 * n - 1, 6 * n + 1)})
    return TwinWheel(level=5, period=30,
                     residues=np.array(values, dtype=np.int64))


def advance(wheel: TwinWheel, *, level_cap: int = DEFAULT_LEVEL_CAP) -> TwinWheel:
    """Delete multiples of the current level and their twins; raise the level.

    The residue set is first expanded over level-many rows of the period
    (skipped for the initial wheel, whose period already covers its level),
    then every class divisible by the level, and the twin class of each, is
    removed.  Each surviving column of the expansion loses exactly two
    entries, so the count multiplies by (level - 2).
    """
    p = wheel.level
    nxt = _next_prime(p)
    if nxt > level_cap:
        raise WheelCapExceeded(
            f"advancing to level {nxt} exceeds the cap {level_cap}; "
            f"raise the cap to proceed")

    if wheel.period % p == 0:
        period = wheel.period
        expanded = wheel.residues
    else:
        period = wheel.period * p
        expanded = (wheel.residues[None, :]
                    + np.arange(p, dtype=np.int64)[:, None] * wheel.period).ravel()

    twins = np.where(expanded % 6 == 5, expanded + 2, expanded - 2) % period
    twins[twins == 0] = period

    is_mult = expanded % p == 0
    is_twin_of_mult = twins % p == 0
    keep = ~(is_mult | is_twin_of_mult)

    record = DeletionRecord(
        level=p,
        multiples=tuple(int(v) for v in np.sort(_display(expanded[is_mult], period))),
        twins=tuple(int(v) for v in np.sort(_display(expanded[is_twin_of_mult], period))),
    )
    return TwinWheel(level=nxt, period=period,
                     residues=np.sort(expanded[keep]),
                     history=wheel.history + (record,))


def build_wheel(level: int, *, level_cap: int = DEFAULT_LEVEL_CAP) -> TwinWheel:
    """Advance from the initial wheel up to the requested prime level."""
    if not is_prime(level) or level < 5:
        raise ValueError(f"level must be a prime >= 5, got {level}")
    w = initial_wheel()
    while w.level < level:
        w = advance(w, level_cap=level_cap)
    return w


def _smallest_factor_from_5(n: int) -> int:
    """Smallest prime factor >= 5 of an n coprime to 6 (n itself if prime)."""
    f = 5
    step = 2
    while f * f <= n:
        if n % f == 0:
            return f
        f += step
        step = 6 - step  # alternate +2, +4 over the 6k+-1 pattern
    return n


def deletion_step_of(q: int, max_level: int) -> int | None:
    """The sieving prime that removes q while building the level-``max_level`` wheel.

    A prime is removed either at its own step (as the one prime multiple of
    itself) or at the step of the smallest prime factor >= 5 of its designated
    twin, whichever comes first.  Returns ``SURVIVES`` (None) when that step
    is not below ``max_level``.
    """
    if q < 5 or not is_prime(q):
        raise ValueError(f"q must be a prime >= 5, got {q}")
    step = min(q, _smallest_factor_from_5(designated_twin(q)))
    return step if step < max_level else SURVIVES


@dataclass(frozen=True, eq=False)
class DeletionLedger:
    """Exact per-step deletion counts of primes below ``bound``.

    ``steps`` holds one (sieving prime, count) pair for every sieving prime
    below the level; ``survivors`` counts the primes never removed.  The
    primes 2 and 3 live outside the 6n+-1 universe and appear nowhere.
    """

    bound: int
    steps: tuple[tuple[int, int], ...]
    survivors: int

    @property
    def total_deleted(self) -> int:
        return sum(c for _, c in self.steps)


def exact_deletion_ledger(p: int, table: PrimeTable) -> DeletionLedger:
    """Classify every prime in [5, p^2) by the step that deletes it from the wheels."""
    if not is_prime(p) or p < 5:
        raise ValueError(f"p must be a prime >= 5, got {p}")
    bound = p * p
    if table.limit < bound:
        raise ValueError(f"table limit {table.limit} is below {bound}")

    qs = table.primes_in_range(5, bound - 1)
    twins = np.where(qs % 6 == 5, qs + 2, qs - 2)
    spf = np.zeros(len(qs), dtype=np.int64)
    for f in _primes_upto(isqrt(int(twins.max()) if len(twins) else 0)):
        if f < 5:
            continue
        hit = (spf == 0) & (twins % f == 0)
        spf[hit] = f
    spf[spf == 0] = twins[spf == 0]  # twin is prime: it is its own smallest factor

    step = np.minimum(qs, spf)
    sieving = [f for f in _primes_upto(p - 1) if f >= 5]
    steps = tuple((f, int(np.count_nonzero(step == f))) for f in sieving)
    survivors = int(np.count_nonzero(step >= p))
    return DeletionLedger(bound=bound, steps=steps, survivors=survivors)


def render_table(wheel: TwinWheel, fmt: str = "text") -> str:
    """Lay out level-many rows of the wheel as a headers-times-rows table.

    Rows extend each column header by the column period; cells divisible by
    the level are marked ``*`` (deleted at the next step as multiples) and
    cells whose designated twin is divisible are marked ``~`` (deleted as
    twins of multiples).
    """
    if wheel.level == 5:
        bases, col_period, nrows = [5, 7], 6, 5  # the two 6n-+1 columns
    else:
        bases = [int(b) for b in wheel.display_residues()]
        col_period, nrows = wheel.period, wheel.level

    grid = []
    for k in range(nrows):
        row = []
        for b in bases:
            v = b + col_period * k
            mark = "*" if v % wheel.level == 0 else \
                   "~" if designated_twin(v) % wheel.level == 0 else ""
            row.append(f"{v}{mark}")
        grid.append(row)

    if fmt == "csv":
        return "\n".join(",".join(row) for row in grid) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    width = max(len(c) for row in grid for c in row) + 1
    lines = ["".join(c.rjust(width) for c in row) for row in grid]
    lines.append(f"(* multiple of {wheel.level}, ~ twin of a multiple;"
                 f" both leave at the next step)")
    return "\n".join(lines) + "\n"
