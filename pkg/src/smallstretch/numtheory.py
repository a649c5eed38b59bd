"""Exact number theory behind the genus tables: Jacobsthal-style coprime
gaps, coprime intervals on a logarithmic scale, near-half coprime
residues, a CRT-combined shift, and coprime-floor sequences.

Conventions.  Logarithms are natural.  The Jacobsthal value j(n) is the
smallest window width w such that every w consecutive integers contain
one coprime to n; equivalently the largest gap between consecutive
integers coprime to n, which is what the period scan measures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


def smallest_prime_factor_sieve(limit: int) -> np.ndarray:
    """spf[m] = smallest prime factor of m for 2 <= m <= limit; spf[0..1] = 0."""
    if limit < 1:
        raise ValueError("sieve limit must be at least 1")
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if spf[p] == 0:
            spf[p::p][spf[p::p] == 0] = p
    return spf


def distinct_primes(n: int) -> tuple[int, ...]:
    """Sorted distinct prime factors by trial division; () for n = 1."""
    if n < 1:
        raise ValueError("argument must be positive")
    primes = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        primes.append(m)
    return tuple(primes)


def radical(n: int) -> int:
    return math.prod(distinct_primes(n))


def _coprime_mask(n: int, primes: Iterable[int] | None = None) -> np.ndarray:
    """Boolean array over residues 0..n-1, True where the residue class
    consists of integers coprime to n."""
    mask = np.ones(n, dtype=bool)
    for p in (distinct_primes(n) if primes is None else primes):
        mask[::p] = False
    if n == 1:
        mask[0] = True  # every integer is coprime to 1
    return mask


def jacobsthal(n: int, _primes: Iterable[int] | None = None) -> int:
    """Largest gap between consecutive integers coprime to n.

    Coprimality to n is periodic mod n, so one period plus the wrap-around
    gap determines the value exactly.
    """
    if n < 1:
        raise ValueError("argument must be positive")
    residues = np.flatnonzero(_coprime_mask(n, _primes))
    wrap = int(residues[0]) + n - int(residues[-1])
    if len(residues) == 1:
        return wrap
    return max(int(np.diff(residues).max()), wrap)


def jacobsthal_bruteforce(n: int, window_limit: int | None = None) -> int:
    """Definition-level scan: largest distance between consecutive integers
    coprime to n inside [1, window_limit].

    Two full periods suffice to exhibit the extreme gap, so window_limit
    defaults to 2n + 1 and smaller windows are rejected.
    """
    if n < 1:
        raise ValueError("argument must be positive")
    if window_limit is None:
        window_limit = 2 * n + 1
    elif window_limit < 2 * n + 1:
        raise ValueError("window must cover two full periods (>= 2n + 1)")
    xs = np.arange(1, window_limit + 1, dtype=np.int64)
    positions = xs[np.gcd(xs, n) == 1]
    if len(positions) < 2:
        return 1
    return int(np.diff(positions).max())


def jacobsthal_table(limit: int) -> list[int]:
    """j(n) for 1 <= n <= limit, index-aligned (entry 0 is a placeholder).

    j(n) depends only on the set of prime factors, so values are shared
    across equal radicals; with the shared sieve this covers limit = 10^5
    in seconds.
    """
    if limit < 1:
        raise ValueError("table limit must be at least 1")
    spf = smallest_prime_factor_sieve(limit)
    by_radical: dict[int, int] = {1: 1}
    table = [0] * (limit + 1)
    for n in range(1, limit + 1):
        m = n
        primes = []
        while m > 1:
            p = int(spf[m])
            primes.append(p)
            while m % p == 0:
                m //= p
        rad = math.prod(primes) if primes else 1
        j = by_radical.get(rad)
        if j is None:
            j = jacobsthal(rad, primes)
            by_radical[rad] = j
        table[n] = j
    return table


@dataclass(frozen=True)
class JacobsthalFit:
    """Empirical growth constant: max of j(n) / ln(n)^2 over 3 <= n <= limit."""

    limit: int
    constant: float
    argmax: int

    def bound_holds(self, cap: float) -> bool:
        return self.constant <= cap


def jacobsthal_fit(limit: int, table: Sequence[int] | None = None) -> JacobsthalFit:
    if limit < 3:
        raise ValueError("fit needs limit >= 3")
    if table is None:
        table = jacobsthal_table(limit)
    best = 0.0
    arg = 3
    for n in range(3, limit + 1):
        ratio = table[n] / math.log(n) ** 2
        if ratio > best:
            best = ratio
            arg = n
    return JacobsthalFit(limit=limit, constant=best, argmax=arg)


# --- coprime intervals on the ln(n)^2 scale -----------------------------------

@dataclass(frozen=True)
class IntervalCheck:
    """Outcome of scanning the interval ladder for a coprime witness."""

    n: int
    constant: float
    m_max: int
    ok: bool
    first_failure: int | None


def coprime_interval_check(n: int, constant: float, m_max: int = 100) -> IntervalCheck:
    """Check that each rung of the interval ladder holds an integer coprime to n.

    With L = ln(n)^2 and K the constant, the rungs are [L, K*L) for m = 0
    and [m*K*L, (m+1)*K*L) for m = 1..m_max; half-open, integer witnesses.
    Reports the first rung without a witness (an empty rung also fails).
    """
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if constant <= 0:
        raise ValueError("interval constant must be positive")
    if m_max < 0:
        raise ValueError("rung count must be non-negative")
    scale = math.log(n) ** 2
    for m in range(m_max + 1):
        lo = scale if m == 0 else m * constant * scale
        hi = (m + 1) * constant * scale
        a = math.ceil(lo)
        found = False
        while a < hi:
            if math.gcd(a, n) == 1:
                found = True
                break
            a += 1
        if not found:
            return IntervalCheck(n, constant, m_max, False, m)
    return IntervalCheck(n, constant, m_max, True, None)


def min_interval_constant(ns: Iterable[int], m_max: int = 100,
                          step: float = 0.25, limit: float = 64.0) -> float:
    """Smallest constant on the step grid passing coprime_interval_check
    for every modulus in ns.  Purely empirical: a witness value, not a proof."""
    moduli = list(ns)
    if not moduli:
        raise ValueError("need at least one modulus")
    if step <= 0:
        raise ValueError("grid step must be positive")
    i = 1
    while step * i <= limit:
        constant = step * i
        if all(coprime_interval_check(n, constant, m_max).ok for n in moduli):
            return constant
        i += 1
    raise RuntimeError(f"no passing constant on the grid up to {limit}")


# --- near-half residues and the CRT shift -------------------------------------

def coprime_near_half(n: int) -> int:
    """Largest integer <= n/2 that is coprime to n, for n >= 3.

    Closed form by parity: (n-1)/2 for odd n, (n-2)/2 for n divisible by 4,
    (n-4)/2 otherwise.  Both residues +-value stay at distance >= n/6 from 0
    mod n, which is what the girth analysis needs.
    """
    if n < 3:
        raise ValueError("defined for n >= 3")
    if n % 2 == 1:
        value = (n - 1) // 2
    elif n % 4 == 0:
        value = (n - 2) // 2
    else:
        value = (n - 4) // 2
    if math.gcd(n, value) != 1:
        raise AssertionError(f"near-half residue {value} not coprime to {n}")
    return value


def coprime_near_half_array(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """(n, value) arrays for 3 <= n <= limit, vectorized closed form."""
    if limit < 3:
        raise ValueError("limit must be at least 3")
    ns = np.arange(3, limit + 1, dtype=np.int64)
    vals = np.where(ns % 2 == 1, (ns - 1) // 2,
                    np.where(ns % 4 == 0, (ns - 2) // 2, (ns - 4) // 2))
    return ns, vals


def crt_shift(n: int, k: int) -> int:
    """The unique c in [1, nk) with c = (n * kh)^-1 mod k and
    c = (k * nh)^-1 mod n, where nh, kh are the near-half residues.

    Translation by (c, c) on Z_n x Z_k then walks a single cycle through
    all nk residue pairs (c is a unit mod nk).
    """
    if n < 3 or k < 3:
        raise ValueError("both moduli must be at least 3")
    if math.gcd(n, k) != 1:
        raise ValueError("moduli must be coprime")
    kh = coprime_near_half(k)
    nh = coprime_near_half(n)
    residue_k = pow(n % k, -1, k) * pow(kh % k, -1, k) % k
    residue_n = pow(k % n, -1, n) * pow(nh % n, -1, n) % n
    c = (residue_k + k * ((residue_n - residue_k) * pow(k % n, -1, n) % n)) % (n * k)
    if c % k != residue_k or c % n != residue_n or math.gcd(c, n * k) != 1:
        raise AssertionError(f"CRT combination failed for ({n}, {k})")
    return c


# --- coprime-floor sequences and genus values ----------------------------------

FLOOR_N = "floor_n"
FLOOR_LOG2 = "floor_log2"


@dataclass(frozen=True)
class CoprimeSequence:
    """First terms of { a >= floor : gcd(a, n) = 1 } in increasing order.

    ratio_bound is the observed maximum of consecutive-term ratios, not a
    theoretical cap; callers compare it against their cap of interest.
    """

    n: int
    variant: str
    floor: float
    terms: tuple[int, ...]
    ratio_bound: float

    def __post_init__(self) -> None:
        for a in self.terms:
            if a < self.floor or math.gcd(self.n, a) != 1:
                raise ValueError(f"term {a} violates the sequence definition")


def coprime_sequence(n: int, variant: str, count: int) -> CoprimeSequence:
    """First `count` integers coprime to n, at least n (variant floor_n)
    or at least ln(n)^2 (variant floor_log2)."""
    if n < 1:
        raise ValueError("modulus must be positive")
    if count < 1:
        raise ValueError("need at least one term")
    if variant == FLOOR_N:
        floor: float = n
    elif variant == FLOOR_LOG2:
        floor = math.log(n) ** 2
    else:
        raise ValueError(f"unknown variant {variant!r}")
    terms = []
    a = max(1, math.ceil(floor))
    while len(terms) < count:
        if math.gcd(n, a) == 1:
            terms.append(a)
        a += 1
    ratio = 1.0
    for prev, nxt in zip(terms, terms[1:]):
        ratio = max(ratio, nxt / prev)
    return CoprimeSequence(n=n, variant=variant, floor=floor,
                           terms=tuple(terms), ratio_bound=ratio)


def genus_from_terms(n: int, terms: Iterable[int]) -> tuple[int, ...]:
    """Genus values n*(6a - 1) + 1 along the given multiplier terms."""
    if n < 1:
        raise ValueError("modulus must be positive")
    out = []
    for a in terms:
        if a < 1:
            raise ValueError("multiplier terms must be positive")
        out.append(n * (6 * a - 1) + 1)
    return tuple(out)
