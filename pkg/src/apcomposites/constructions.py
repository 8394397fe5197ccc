"""Explicit composite constructions in arithmetic progressions.

Each generator returns witnesses that carry their own proof of
compositeness: either a full prime factorization or, for values past
the factorization cap, a pair of divisors both greater than 1. Every
witness re-verifies its defining identity on construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    CapacityError,
    DegenerateInputError,
    DomainError,
    WrongBranchError,
)
from .numcore import Factorization, Progression, factorize, is_prime

__all__ = [
    "DivisorPair",
    "CompositeWitness",
    "KCompositeWitness",
    "PolyCompositeRecord",
    "ConsecutiveResult",
    "Twin3Result",
    "witness_multiple_of_b",
    "witness_unit_b",
    "witness_power",
    "factorial_consecutive",
    "consecutive_in_progression",
    "k_composite_witnesses",
    "polynomial_composites",
    "three_composites_4n3",
]

# Full factorization is attempted below this; above it, witnesses carry
# a divisor pair instead (trial division would be too slow).
FACTORIZATION_CAP = 10**12


@dataclass(frozen=True)
class DivisorPair:
    """Compositeness proof by a nontrivial split value = d * cofactor."""

    value: int
    d: int
    cofactor: int

    def verify(self) -> bool:
        return self.d > 1 and self.cofactor > 1 and self.d * self.cofactor == self.value


@dataclass(frozen=True)
class CompositeWitness:
    """Index n in a progression whose term is provably composite."""

    progression: Progression
    n: int
    value: int
    proof: Factorization | DivisorPair
    construction_tag: str

    def verify(self) -> bool:
        if self.progression.term(self.n) != self.value:
            return False
        if isinstance(self.proof, Factorization):
            return (
                self.proof.value == abs(self.value)
                and self.proof.big_omega >= 2
                and self.proof.verify()
            )
        return self.proof.value == abs(self.value) and self.proof.verify()


@dataclass(frozen=True)
class KCompositeWitness:
    """Progression term with exactly k prime factors.

    mode "distinct" counts without multiplicity (omega), mode
    "multiplicity" counts with it (big omega). k = 1 terms are primes,
    not composites; compositeness starts at k = 2.
    """

    progression: Progression
    n: int
    value: int
    proof: Factorization
    k: int
    mode: str

    def verify(self) -> bool:
        if self.progression.term(self.n) != self.value:
            return False
        if not self.proof.verify() or self.proof.value != abs(self.value):
            return False
        count = self.proof.omega if self.mode == "distinct" else self.proof.big_omega
        return count == self.k


@dataclass(frozen=True)
class PolyCompositeRecord:
    """f(k + j*f(k)) is a multiple of f(k) and strictly larger."""

    coeffs: tuple[int, ...]
    k: int
    j: int
    index: int
    value: int
    divisor: int

    def verify(self) -> bool:
        return (
            self.index == self.k + self.j * self.divisor
            and self.value % self.divisor == 0
            and self.value > self.divisor > 1
        )


def _prove_composite(value: int, hint_divisor: int | None = None,
                     cap: int = FACTORIZATION_CAP) -> Factorization | DivisorPair:
    v = abs(value)
    if v <= 1:
        raise DegenerateInputError(f"|{value}| <= 1 is neither prime nor composite")
    if v <= cap:
        f = factorize(v)
        if f.big_omega < 2:
            raise DegenerateInputError(f"{value} is prime, not composite")
        return f
    if hint_divisor is None or hint_divisor <= 1 or v % hint_divisor != 0:
        raise CapacityError(f"{value} exceeds factorization cap and has no divisor hint")
    cof = v // hint_divisor
    if cof <= 1:
        raise DegenerateInputError(f"divisor hint {hint_divisor} gives a trivial cofactor")
    return DivisorPair(v, hint_divisor, cof)


def witness_multiple_of_b(p: Progression, m: int) -> CompositeWitness:
    """Composite term at n = b*m, where the value b*(a*m + 1) is divisible by b.

    Only applies when |b| > 1.
    """
    if abs(p.b) <= 1:
        raise WrongBranchError("witness_multiple_of_b needs |b| > 1; use witness_unit_b")
    if m < 1:
        raise DomainError("m must be >= 1")
    n = p.b * m
    value = p.term(n)
    if abs(value) <= 1 or abs(p.a * m + 1) <= 1:
        raise DegenerateInputError(
            f"value {value} degenerate at m={m}; raise m", minimal_m=m + 1
        )
    proof = _prove_composite(value, hint_divisor=abs(p.b))
    return CompositeWitness(p, n, value, proof, "multiple_of_b")


def _minimal_unit_m(p: Progression) -> int:
    m = 1
    while abs(p.a * m + p.b) <= 1:
        m += 1
    return m


def witness_unit_b(p: Progression, m: int) -> CompositeWitness:
    """Composite term for offsets b = +-1, via the identity

        a*(a*(a*m+b) + m) + b = (a^2 + 1)*(a*m + b).
    """
    if p.b not in (-1, 1):
        raise WrongBranchError("witness_unit_b needs b = +-1; use witness_multiple_of_b")
    if m < 1:
        raise DomainError("m must be >= 1")
    inner = p.a * m + p.b
    if abs(inner) <= 1:
        raise DegenerateInputError(
            f"|a*m + b| = {abs(inner)} <= 1 at m={m}; minimal admissible m is "
            f"{_minimal_unit_m(p)}",
            minimal_m=_minimal_unit_m(p),
        )
    n = p.a * inner + m
    value = p.term(n)
    assert value == (p.a * p.a + 1) * inner
    proof = _prove_composite(value, hint_divisor=p.a * p.a + 1)
    return CompositeWitness(p, n, value, proof, "unit_b")


def witness_power(a: int, sign: int, k: int) -> CompositeWitness:
    """Composite term (3a)^(2k+1) + sign at index n = 3^(2k+1) * a^(2k).

    (3a)^(2k+1) - 1 is divisible by 3a - 1; (3a)^(2k+1) + 1 by 3a + 1.
    """
    if a < 1:
        raise DomainError("a must be >= 1")
    if sign not in (-1, 1):
        raise DomainError("sign must be +-1")
    if k < 1:
        raise DomainError("k must be >= 1")
    n = 3 ** (2 * k + 1) * a ** (2 * k)
    value = (3 * a) ** (2 * k + 1) + sign
    prog = Progression(a, sign)
    assert prog.term(n) == value
    divisor = 3 * a + sign
    if divisor <= 1 or value // divisor <= 1:
        raise DegenerateInputError(f"divisor {divisor} trivial for a={a}, sign={sign}")
    proof = _prove_composite(value, hint_divisor=divisor)
    return CompositeWitness(prog, n, value, proof, "power")


def factorial_consecutive(
    m: int, cap: int = FACTORIZATION_CAP
) -> list[CompositeWitness]:
    """Witnesses for the m-1 consecutive composites m!+2, ..., m!+m.

    j divides m!+j for 2 <= j <= m. Values past the cap carry the
    divisor pair (j, m!/j + 1) instead of a full factorization.
    """
    if m < 3:
        raise DomainError("factorial_consecutive requires m >= 3")
    fact = math.factorial(m)
    prog = Progression(1, 0)
    out = []
    for j in range(2, m + 1):
        value = fact + j
        proof = _prove_composite(value, hint_divisor=j, cap=cap)
        out.append(CompositeWitness(prog, value, value, proof, "factorial"))
    return out


@dataclass(frozen=True)
class ConsecutiveResult:
    progression: Progression
    requested: int
    start_n: int
    witnesses: tuple[CompositeWitness, ...]
    # Sufficient m for the factorial construction to cover the request:
    # S_m contains N progression terms once m >= a*N + |b| + 2.
    factorial_m_bound: int


def consecutive_in_progression(
    p: Progression, N: int, scan_cap: int = 10**7
) -> ConsecutiveResult:
    """Least start index n0 with N consecutive composite terms.

    Terms with |value| <= 1 are neither prime nor composite and break a run.
    """
    if N < 1:
        raise DomainError("N must be >= 1")
    if p.a < 1:
        raise DomainError("consecutive_in_progression requires a >= 1")
    run_start = None
    run_len = 0
    for n in range(1, scan_cap + 1):
        v = abs(p.term(n))
        if v > 1 and not is_prime(v):
            if run_len == 0:
                run_start = n
            run_len += 1
            if run_len == N:
                witnesses = tuple(
                    CompositeWitness(
                        p, i, p.term(i), _prove_composite(p.term(i)), "consecutive"
                    )
                    for i in range(run_start, run_start + N)
                )
                return ConsecutiveResult(
                    p, N, run_start, witnesses, p.a * N + abs(p.b) + 2
                )
        else:
            run_len = 0
    raise CapacityError(
        f"no run of {N} composites found for n <= {scan_cap} "
        f"(longest partial run: {run_len})"
    )


def _next_prime_term(p: Progression, m_start: int, m_cap: int) -> tuple[int, int]:
    m = m_start
    while m <= m_cap:
        v = p.term(m)
        if v > 1 and is_prime(v):
            return m, v
        m += 1
    raise CapacityError(f"no prime term a*m+b found for m in [{m_start}, {m_cap}]")


def _extend_witness(
    w: KCompositeWitness, mode: str, s_cap: int
) -> KCompositeWitness:
    """One induction step: multiply by a prime s*a^2 + 1 via

        a*(s*a*(a*m+b) + m) + b = (s*a^2 + 1)*(a*m + b).
    """
    a = w.progression.a
    floor = w.proof.gpf if mode == "distinct" else 1
    s = 1
    while s <= s_cap:
        q = s * a * a + 1
        if q > floor and is_prime(q):
            break
        s += 1
    else:
        raise CapacityError(f"no admissible s <= {s_cap} with s*{a}^2+1 prime")
    n = s * a * w.value + w.n
    value = q * w.value
    assert w.progression.term(n) == value
    return KCompositeWitness(
        w.progression, n, value, factorize(value), w.k + 1, mode
    )


def k_composite_witnesses(
    p: Progression,
    k: int,
    count: int,
    mode: str = "distinct",
    m_cap: int = 10**6,
    s_cap: int = 10**6,
) -> list[KCompositeWitness]:
    """`count` distinct progression terms with exactly k prime factors.

    k = 1 terms are primes found by bounded scan; each k -> k+1 step
    multiplies by the smallest prime of the form s*a^2 + 1 (exceeding
    the previous greatest prime factor in distinct mode).
    """
    if math.gcd(abs(p.a), abs(p.b)) != 1:
        raise DomainError("k_composite_witnesses requires gcd(a, b) = 1")
    if k < 1 or count < 1:
        raise DomainError("k and count must be >= 1")
    if mode not in ("distinct", "multiplicity"):
        raise DomainError(f"unknown mode {mode!r}")

    bases: list[KCompositeWitness] = []
    m = 1
    while len(bases) < count:
        m, v = _next_prime_term(p, m, m_cap)
        bases.append(KCompositeWitness(p, m, v, factorize(v), 1, mode))
        m += 1

    if k == 1:
        return bases
    out = []
    for w in bases:
        for _ in range(k - 1):
            w = _extend_witness(w, mode, s_cap)
        out.append(w)
    return out


def _poly_eval(coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def polynomial_composites(
    coeffs: Sequence[int], count: int, k_scan_cap: int = 10**6
) -> list[PolyCompositeRecord]:
    """Composite values of an integer polynomial f (coefficients ascending,
    coeffs[i] is the x^i coefficient).

    Finds the least k >= 0 with f(k) > 1, then f(k + j*f(k)) is a
    multiple of f(k) for every j >= 1.
    """
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise DomainError("polynomial must be non-constant")
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]  # same |values|, positive leading coeff
    if count < 1:
        raise DomainError("count must be >= 1")

    k = 0
    while _poly_eval(coeffs, k) <= 1:
        k += 1
        if k > k_scan_cap:
            raise CapacityError(f"no k <= {k_scan_cap} with f(k) > 1")
    d = _poly_eval(coeffs, k)

    out = []
    j = 1
    while len(out) < count:
        idx = k + j * d
        value = _poly_eval(coeffs, idx)
        if value % d != 0:
            raise AssertionError("divisibility identity violated")
        if value > d:
            out.append(PolyCompositeRecord(tuple(coeffs), k, j, idx, value, d))
        j += 1
    return out


@dataclass(frozen=True)
class Twin3Result:
    witnesses: tuple[KCompositeWitness, ...]
    shortfall: bool


def three_composites_4n3(count: int, k_max: int) -> Twin3Result:
    """Terms 4n+3 with exactly three prime factors (with multiplicity),
    from twin-prime pairs: n = 5k^2 - 2 gives 4n+3 = 5*(2k-1)*(2k+1).

    If fewer than `count` twin pairs exist below k_max the partial list
    is returned with the shortfall flag set.
    """
    if count < 1:
        raise DomainError("count must be >= 1")
    prog = Progression(4, 3)
    out = []
    for k in range(2, k_max + 1):
        if len(out) == count:
            break
        lo, hi = 2 * k - 1, 2 * k + 1
        if is_prime(lo) and is_prime(hi):
            n = 5 * k * k - 2
            value = prog.term(n)
            assert value == 5 * lo * hi
            out.append(
                KCompositeWitness(prog, n, value, factorize(value), 3, "multiplicity")
            )
    return Twin3Result(tuple(out), shortfall=len(out) < count)
