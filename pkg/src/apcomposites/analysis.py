"""Numerical checks of the zero-density inequality chain, composite
densities in progressions, prime runs, and the normalized
distinct-prime-factor statistic.

The inequality checks are proven theorems: a single failure at any
admissible input is an implementation bug, and tests treat it as such.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .errors import CapacityError, DomainError
from .numcore import (
    PrimeTable,
    Progression,
    factorize,
    prime_count,
    sieve,
)

__all__ = [
    "BoundCheck",
    "DensityPoint",
    "RunRecord",
    "RunScan",
    "EKSample",
    "EKIntervalStat",
    "EKSummary",
    "central_binom_bound",
    "dyadic_gap_bound",
    "pi_power4_bound",
    "density_bound_check",
    "progression_composite_density",
    "longest_prime_run",
    "run_length_threshold",
    "ek_sample",
    "ek_sample_stream",
    "erdos_kac_samples",
    "gaussian_mass",
]

DEFAULT_SIEVE_CAP = 50_000_000


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated inequality: lhs < rhs must hold."""

    param: int
    lhs: float
    rhs: float
    holds: bool
    detail: tuple[tuple[str, float], ...] = ()


def central_binom_bound(n: int, table: PrimeTable | None = None) -> BoundCheck:
    """n^(pi(2n) - pi(n)) < 4^n, compared in log space."""
    if n < 2:
        raise DomainError("central_binom_bound requires n >= 2")
    gap = prime_count(2 * n, table) - prime_count(n, table)
    lhs = gap * math.log(n)
    rhs = n * math.log(4)
    return BoundCheck(n, lhs, rhs, lhs < rhs, (("gap", float(gap)),))


def dyadic_gap_bound(k: int, table: PrimeTable | None = None) -> BoundCheck:
    """pi(2^k) - pi(2^(k-1)) < 2^k / (k-1)."""
    if k < 2:
        raise DomainError("dyadic_gap_bound requires k >= 2")
    gap = prime_count(2**k, table) - prime_count(2 ** (k - 1), table)
    bound = 2**k / (k - 1)
    return BoundCheck(k, float(gap), bound, gap < bound)


def pi_power4_bound(m: int, table: PrimeTable | None = None) -> BoundCheck:
    """pi(4^m) < 1 + 2^(m+1) + 2^(2m+1)/m."""
    if m < 1:
        raise DomainError("pi_power4_bound requires m >= 1")
    pi_4m = prime_count(4**m, table)
    bound = 1 + 2 ** (m + 1) + 2 ** (2 * m + 1) / m
    return BoundCheck(m, float(pi_4m), bound, pi_4m < bound)


@dataclass(frozen=True)
class DensityPoint:
    """pi(x)/x against the closed-form bound 1/x + 4/sqrt(x) + 8/log4(x)."""

    x: int
    pi_x: int
    ratio: Fraction
    bound: float
    holds: bool


def density_bound_check(x: int, table: PrimeTable | None = None) -> DensityPoint:
    if x < 2:
        raise DomainError("density_bound_check requires x >= 2 (log4 x must be positive)")
    pi_x = prime_count(x, table)
    ratio = Fraction(pi_x, x)
    log4x = math.log(x) / math.log(4)
    bound = 1 / x + 4 / math.sqrt(x) + 8 / log4x
    return DensityPoint(x, pi_x, ratio, bound, float(ratio) < bound)


def _term_values(p: Progression, n_max: int) -> np.ndarray:
    n = np.arange(1, n_max + 1, dtype=np.int64)
    return np.abs(p.a * n + p.b)


def _value_table(p: Progression, n_max: int, sieve_cap: int) -> PrimeTable:
    vmax = int(max(abs(p.term(1)), abs(p.term(n_max)))) + 1
    vmax = max(vmax, 2)
    if vmax > sieve_cap:
        raise CapacityError(f"needs sieve to {vmax}, cap is {sieve_cap}")
    return sieve(vmax)


def progression_composite_density(
    p: Progression, x: int, sieve_cap: int = DEFAULT_SIEVE_CAP
) -> Fraction:
    """Exact fraction of n in [1, x] with |a*n + b| composite."""
    if p.a < 1:
        raise DomainError("progression_composite_density requires a >= 1")
    if x < 1:
        raise DomainError("x must be >= 1")
    table = _value_table(p, x, sieve_cap)
    v = _term_values(p, x)
    composite = (v > 1) & ~table.membership[v]
    return Fraction(int(np.count_nonzero(composite)), x)


@dataclass(frozen=True)
class RunRecord:
    """Maximal run of consecutive indices with prime progression values.

    Runs touching the scan boundary at n_max are flagged truncated;
    maximality at the right edge is then unknown.
    """

    progression: Progression
    start_n: int
    length: int
    values: tuple[int, ...]
    truncated: bool


@dataclass(frozen=True)
class RunScan:
    progression: Progression
    n_max: int
    max_length: int
    best: RunRecord | None
    max_runs: tuple[RunRecord, ...]


def run_length_threshold(p: Progression) -> int:
    """Index past which the unit-offset construction caps runs at a^2.

    n* = a*(a*m0 + b) + m0 with m0 the least m making |a*m + b| > 1;
    beyond n*, every window of a^2 indices contains a constructed
    composite, so only runs starting at n > n* are subject to the bound.
    """
    m0 = 1
    while abs(p.a * m0 + p.b) <= 1:
        m0 += 1
    return p.a * (p.a * m0 + p.b) + m0


def longest_prime_run(
    p: Progression, n_max: int, sieve_cap: int = DEFAULT_SIEVE_CAP
) -> RunScan:
    """Scan n in [1, n_max] for maximal runs of prime values."""
    if p.a < 1:
        raise DomainError("longest_prime_run requires a >= 1")
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    table = _value_table(p, n_max, sieve_cap)
    v = _term_values(p, n_max)
    prime_mask = table.membership[v]

    padded = np.concatenate(([False], prime_mask, [False]))
    diffs = np.diff(padded.astype(np.int8))
    starts = np.flatnonzero(diffs == 1) + 1  # 1-based n
    ends = np.flatnonzero(diffs == -1) + 1  # exclusive

    if len(starts) == 0:
        return RunScan(p, n_max, 0, None, ())
    lengths = ends - starts
    max_len = int(lengths.max())
    records = []
    for s, e in zip(starts, ends):
        if e - s != max_len:
            continue
        vals = tuple(int(p.term(n)) for n in range(int(s), int(e)))
        records.append(
            RunRecord(p, int(s), int(e - s), vals, truncated=bool(e == n_max + 1))
        )
    return RunScan(p, n_max, max_len, records[0], tuple(records))


@dataclass(frozen=True)
class EKSample:
    """Normalized distinct-prime-factor statistic for a single n."""

    n: int
    omega: int
    statistic: float

    def recompute(self) -> float:
        ll = math.log(math.log(self.n))
        return (self.omega - ll) / math.sqrt(ll)


@dataclass(frozen=True)
class EKIntervalStat:
    lo: float
    hi: float
    sample_fraction: float
    gaussian_mass: float


@dataclass(frozen=True)
class EKSummary:
    x: int
    sample_count: int
    mean_omega: float
    intervals: tuple[EKIntervalStat, ...]


def gaussian_mass(lo: float, hi: float) -> float:
    """Standard normal probability of [lo, hi]."""
    return 0.5 * (math.erf(hi / math.sqrt(2)) - math.erf(lo / math.sqrt(2)))


def ek_sample(n: int) -> EKSample:
    if n < 3:
        raise DomainError("statistic needs n >= 3 (log log n must be positive)")
    omega = factorize(n).omega
    ll = math.log(math.log(n))
    return EKSample(n, omega, (omega - ll) / math.sqrt(ll))


def _omega_array(x: int, table: PrimeTable | None = None) -> np.ndarray:
    """omega(n) for 0 <= n <= x by one strided pass per prime."""
    t = table if table is not None and table.limit >= x else sieve(max(x, 4))
    om = np.zeros(x + 1, dtype=np.int16)
    for prime in t.primes(x):
        prime = int(prime)
        om[prime::prime] += 1
    return om


def ek_sample_stream(x: int, table: PrimeTable | None = None) -> Iterator[EKSample]:
    """Yield EKSample for every 3 <= n <= x (bulk omega pass, not per-n
    factorization)."""
    if x < 3:
        raise DomainError("erdos_kac requires x >= 3")
    om = _omega_array(x, table)
    for n in range(3, x + 1):
        ll = math.log(math.log(n))
        yield EKSample(n, int(om[n]), (int(om[n]) - ll) / math.sqrt(ll))


def erdos_kac_samples(
    x: int,
    intervals: tuple[tuple[float, float], ...] = ((-1.0, 1.0),),
    table: PrimeTable | None = None,
) -> EKSummary:
    """Summary of the normalized statistic over 3 <= n <= x.

    Interval fractions normalize by log log x (the fixed-endpoint form
    of the limit theorem), which converges much faster at desk scale
    than the per-sample log log n used in EKSample; both forms have the
    same Gaussian limit. Counts use exact integer accumulators so the
    result is independent of any internal partitioning.
    """
    if x < 3:
        raise DomainError("erdos_kac requires x >= 3")
    om = _omega_array(x, table)[3:].astype(np.float64)
    llx = math.log(math.log(x))
    stat = (om - llx) / math.sqrt(llx)

    count = x - 2
    mean_omega = float(om.sum() / count)
    stats = []
    for lo, hi in intervals:
        inside = int(np.count_nonzero((stat >= lo) & (stat <= hi)))
        stats.append(EKIntervalStat(lo, hi, inside / count, gaussian_mass(lo, hi)))
    return EKSummary(x, count, mean_omega, tuple(stats))
