"""Exact counting of partitions into distinct parts, stratified by parity difference.

A partition of n into distinct parts is a strictly decreasing tuple of positive
integers summing to n.  For a modulus N and residue classes alpha, beta in
1..N, the parity difference of a partition is

    pd(lambda) = #{parts == alpha (mod N)} - #{parts == beta (mod N)}.

This module computes, with exact big-integer arithmetic, the full distribution
n |-> {k: f(k)} where f(k) is the number of distinct-part partitions of n with
parity difference exactly k, and the derived tail counts
sum_{k >= ceil(c)} f(k).  No floats enter any computation here.

The DP iterates over parts p = 1..n, using each part 0 or 1 times.  The state
is packed: for each difference offset k we keep ONE Python integer whose s-th
W-bit limb holds f_s(k), the count for residual sum s.  Adding a part p then
becomes a single shifted big-integer addition (shift by p*W limbs), and one
pass at n_max yields the exact distribution for EVERY weight s <= n_max.
W is sized from the classical growth bound log2 d(n) ~ pi*sqrt(n/3)*log2(e)
plus guard bits, so limbs never overflow into their neighbours.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

__all__ = [
    "DEFAULT_CEILING",
    "CEILING_ENV_VAR",
    "CeilingExceeded",
    "EnumerationLimitExceeded",
    "Partition",
    "ParitySpec",
    "PdDistribution",
    "m_max",
    "exact_ceiling",
    "enumerate_distinct",
    "pd",
    "pd_distribution",
    "pd_distribution_family",
    "count_at_least",
    "count_distinct",
    "parity_bias",
]

DEFAULT_CEILING = 5000
CEILING_ENV_VAR = "PARITY_LAB_CEILING"


class CeilingExceeded(Exception):
    """The requested n is above the exact-compute budget.

    Exact arithmetic is this module's contract: above the ceiling we refuse
    rather than silently degrade to floating point.
    """


class EnumerationLimitExceeded(Exception):
    """enumerate_distinct was asked for more partitions than its cap."""


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """A partition into distinct parts: strictly decreasing positive parts."""

    parts: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts):
            raise ValueError("all parts must be >= 1")
        if any(a <= b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be strictly decreasing")
        if sum(self.parts) != self.n:
            raise ValueError(f"parts sum to {sum(self.parts)}, not {self.n}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts), sum(parts))


@dataclass(frozen=True)
class ParitySpec:
    """Modulus N >= 2 and the two residue classes alpha != beta in 1..N."""

    N: int
    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.N < 2:
            raise ValueError("modulus N must be >= 2")
        if not (1 <= self.alpha <= self.N and 1 <= self.beta <= self.N):
            raise ValueError("alpha and beta must lie in 1..N")
        if self.alpha == self.beta:
            raise ValueError("alpha and beta must differ")

    def swapped(self) -> "ParitySpec":
        return ParitySpec(self.N, self.beta, self.alpha)


@dataclass(frozen=True)
class PdDistribution:
    """Exact counts f(k) of distinct-part partitions of n by parity difference k.

    Only nonzero counts are stored; keys are in ascending k order.  The counts
    always satisfy sum_k f(k) = d(n) and vanish for |k| > m_max(n).
    """

    n: int
    spec: ParitySpec
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def count(self, k: int) -> int:
        return self.counts.get(k, 0)


# ---------------------------------------------------------------------------
# ceilings and bounds
# ---------------------------------------------------------------------------


def exact_ceiling(override: int | None = None) -> int:
    """Resolve the exact-compute ceiling: explicit arg, else env var, else default."""
    if override is not None:
        return override
    env = os.environ.get(CEILING_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_CEILING


def _check_ceiling(n: int, override: int | None) -> None:
    ceiling = exact_ceiling(override)
    if n > ceiling:
        raise CeilingExceeded(
            f"n = {n} exceeds the exact-compute ceiling {ceiling} "
            f"(set {CEILING_ENV_VAR} or pass a higher ceiling to raise the budget)"
        )


def m_max(n: int) -> int:
    """Maximum number of parts of a distinct-part partition of n.

    The m smallest distinct parts sum to at least 1+2+...+m = m(m+1)/2, so the
    part count is bounded by the integer root floor((sqrt(8n+1)-1)/2).  |pd| is
    bounded by the part count, hence by this value too.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return (math.isqrt(8 * n + 1) - 1) // 2


# ---------------------------------------------------------------------------
# enumeration oracle
# ---------------------------------------------------------------------------


def enumerate_distinct(n: int, limit: int | None = None) -> list[Partition]:
    """All distinct-part partitions of n, largest part first, in descending
    lexicographic order: for n=8 that is (8),(7,1),(6,2),(5,3),(5,2,1),(4,3,1).

    `limit` caps the number of partitions produced; exceeding it raises
    EnumerationLimitExceeded, signalling an infeasible enumeration.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    out: list[Partition] = []

    def rec(remaining: int, max_part: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            if limit is not None and len(out) >= limit:
                raise EnumerationLimitExceeded(
                    f"more than {limit} partitions requested for n = {n}"
                )
            out.append(Partition(prefix, n))
            return
        for p in range(min(remaining, max_part), 0, -1):
            rec(remaining - p, p - 1, prefix + (p,))

    rec(n, n, ())
    return out


def pd(partition: Partition, spec: ParitySpec) -> int:
    """Parity difference: #parts == alpha (mod N) minus #parts == beta (mod N).

    Residues are compared via representatives 1..N, i.e. a part p matches
    alpha iff p % N == alpha % N (so alpha = N matches residue 0).
    """
    ra = spec.alpha % spec.N
    rb = spec.beta % spec.N
    diff = 0
    for p in partition.parts:
        r = p % spec.N
        if r == ra:
            diff += 1
        elif r == rb:
            diff -= 1
    return diff


# ---------------------------------------------------------------------------
# packed big-integer DP
# ---------------------------------------------------------------------------


def _limb_width_bits(n: int) -> int:
    """Bits per packed limb: enough for every count f_s(k) <= d(s) <= d(n).

    log2 d(n) <= pi*sqrt(n/3)/ln 2 + O(log n); 16 guard bits absorb the
    lower-order factor, and the total is rounded up to a whole number of bytes
    so limb extraction is a bytes slice.
    """
    bound = math.pi * math.sqrt(max(n, 1) / 3.0) / math.log(2.0)
    bits = int(bound) + 16
    return ((bits + 7) // 8) * 8


def _run_packed_dp(n: int, spec: ParitySpec) -> tuple[list[int], int, int]:
    """Run the DP over parts 1..n; return (state, offset m, limb width W).

    state[i] is a big integer whose s-th W-bit limb is f_s(i - m): the number
    of partitions of s into distinct parts <= n with parity difference i - m.
    """
    W = _limb_width_bits(n)
    m = m_max(n)
    width = 2 * m + 1
    limbs = n + 1
    mask = (1 << (limbs * W)) - 1
    ra = spec.alpha % spec.N
    rb = spec.beta % spec.N

    state = [0] * width
    state[m] = 1  # the empty partition: sum 0, difference 0
    for p in range(1, n + 1):
        sh = p * W
        r = p % spec.N
        if r == ra:
            # taking p moves k -> k+1; iterate downward so each p is used once
            for i in range(width - 1, 0, -1):
                state[i] = (state[i] + (state[i - 1] << sh)) & mask
        elif r == rb:
            for i in range(width - 1):
                state[i] = (state[i] + (state[i + 1] << sh)) & mask
        else:
            for i in range(width):
                state[i] = (state[i] + (state[i] << sh)) & mask
    return state, m, W


def _extract_rows(
    state: list[int], m: int, W: int, n: int, weights: list[int]
) -> dict[int, dict[int, int]]:
    """Unpack limbs: rows[s] = {k: f_s(k)} for each requested weight s."""
    Wb = W // 8
    limbs = n + 1
    rows: dict[int, dict[int, int]] = {s: {} for s in weights}
    for i, packed in enumerate(state):
        if packed == 0:
            continue
        blob = packed.to_bytes(limbs * Wb, "little")
        k = i - m
        for s in weights:
            c = int.from_bytes(blob[s * Wb : (s + 1) * Wb], "little")
            if c:
                rows[s][k] = c
    return rows


def _sorted_counts(row: dict[int, int]) -> dict[int, int]:
    return {k: row[k] for k in sorted(row)}


def pd_distribution(
    n: int, spec: ParitySpec, ceiling: int | None = None
) -> PdDistribution:
    """Exact parity-difference distribution of the distinct-part partitions of n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_ceiling(n, ceiling)
    if n == 0:
        return PdDistribution(0, spec, {0: 1})
    state, m, W = _run_packed_dp(n, spec)
    row = _extract_rows(state, m, W, n, [n])[n]
    return PdDistribution(n, spec, _sorted_counts(row))


def pd_distribution_family(
    n_max: int, spec: ParitySpec, ceiling: int | None = None
) -> list[PdDistribution]:
    """Distributions for every 0 <= n <= n_max from a single DP pass.

    The packed DP already carries one limb per weight, so the whole family
    costs the same as the single distribution at n_max.  Sweep commands and
    the n-by-n acceptance checks use this instead of n_max separate runs.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    _check_ceiling(n_max, ceiling)
    if n_max == 0:
        return [PdDistribution(0, spec, {0: 1})]
    state, m, W = _run_packed_dp(n_max, spec)
    rows = _extract_rows(state, m, W, n_max, list(range(n_max + 1)))
    return [
        PdDistribution(s, spec, _sorted_counts(rows[s])) for s in range(n_max + 1)
    ]


# ---------------------------------------------------------------------------
# derived counts
# ---------------------------------------------------------------------------


def count_at_least(
    n: int, spec: ParitySpec, c: float, ceiling: int | None = None
) -> int:
    """Number of distinct-part partitions of n with parity difference >= c.

    pd takes integer values, so the real threshold resolves losslessly to
    ceil(c) before anything is counted.
    """
    dist = pd_distribution(n, spec, ceiling)
    return count_at_least_of(dist, c)


def count_at_least_of(dist: PdDistribution, c: float) -> int:
    """Tail count sum_{k >= ceil(c)} f(k) from an already-computed distribution."""
    kc = math.ceil(c)
    return sum(v for k, v in dist.counts.items() if k >= kc)


def count_distinct(n: int, ceiling: int | None = None) -> int:
    """d(n): the number of partitions of n into distinct parts.

    Computed by the plain single-variable recurrence (each part used 0 or 1
    times), independent of the packed parity DP; equals the total of any
    pd_distribution of the same n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_ceiling(n, ceiling)
    dp = [0] * (n + 1)
    dp[0] = 1
    for p in range(1, n + 1):
        for s in range(n, p - 1, -1):
            dp[s] += dp[s - p]
    return dp[n]


def parity_bias(
    n: int, spec: ParitySpec, c: int, ceiling: int | None = None
) -> int:
    """pb(c) = f(c) - f(-c): the asymmetry of the distribution at level c >= 0."""
    if c < 0:
        raise ValueError("bias level c must be >= 0")
    dist = pd_distribution(n, spec, ceiling)
    return dist.count(c) - dist.count(-c)
