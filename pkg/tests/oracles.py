"""Independent reference implementations backing the test suite.

Everything in this file is deliberately written with a different algorithm
and a different code shape from the package under test: include/exclude
subset recursion instead of largest-part-first generation, a dict-of-Counter
DP instead of packed big-integer limbs, and a plain one-dimensional DP for
the distinct-part counting sequence.  If the package and this file agree,
the agreement means something.
"""

from collections import Counter
from typing import Iterator


def distinct_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Distinct-part partitions of n as decreasing tuples (include/exclude)."""

    def go(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        p = min(cap, remaining)
        if p * (p + 1) // 2 < remaining:
            return  # even 1+2+...+p can't reach the remainder
        for rest in go(remaining - p, p - 1):
            yield (p,) + rest
        yield from go(remaining, p - 1)

    yield from go(n, n)


def pd_of_parts(parts: tuple[int, ...], N: int, alpha: int, beta: int) -> int:
    hits_a = sum(1 for p in parts if p % N == alpha % N)
    hits_b = sum(1 for p in parts if p % N == beta % N)
    return hits_a - hits_b


def pd_histogram(n: int, N: int, alpha: int, beta: int) -> dict[int, int]:
    """Exact f(k) by full enumeration; practical up to n around 50."""
    hist: Counter = Counter()
    for parts in distinct_partitions(n):
        hist[pd_of_parts(parts, N, alpha, beta)] += 1
    return dict(hist)


def residue_count_histograms(n: int, moduli: tuple[int, ...]) -> dict[int, Counter]:
    """One enumeration pass shared across moduli.

    Returns, per modulus N, a Counter over tuples (count of parts in residue
    0, ..., count in residue N-1); every (alpha, beta) histogram for that N
    can then be reduced from it without re-enumerating.
    """
    out: dict[int, Counter] = {N: Counter() for N in moduli}
    for parts in distinct_partitions(n):
        for N in moduli:
            cnt = [0] * N
            for p in parts:
                cnt[p % N] += 1
            out[N][tuple(cnt)] += 1
    return out


def reduce_to_pd(residue_hist: Counter, N: int, alpha: int, beta: int) -> dict[int, int]:
    hist: Counter = Counter()
    for cnt, mult in residue_hist.items():
        hist[cnt[alpha % N] - cnt[beta % N]] += mult
    return dict(hist)


def count_distinct_upto(n_max: int) -> list[int]:
    """d(0..n_max): one-dimensional DP, each part usable at most once."""
    row = [0] * (n_max + 1)
    row[0] = 1
    for part in range(1, n_max + 1):
        for s in range(n_max, part - 1, -1):
            row[s] += row[s - part]
    return row


def pd_histograms_upto(n_max: int, N: int, alpha: int, beta: int) -> list[dict[int, int]]:
    """f(k) for every weight <= n_max via a dict-based DP (mid-size oracle)."""
    ra, rb = alpha % N, beta % N
    table: list[Counter] = [Counter() for _ in range(n_max + 1)]
    table[0][0] = 1
    for part in range(1, n_max + 1):
        step = 1 if part % N == ra else -1 if part % N == rb else 0
        for w in range(n_max, part - 1, -1):
            lower = table[w - part]
            if lower:
                tw = table[w]
                for k, v in lower.items():
                    tw[k + step] += v
    return [dict(t) for t in table]
