"""Brute-force reference implementations.

Nothing here touches the bitset DP; every answer comes from listing all
selections explicitly. Used by the verification suite and the tests.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence


def all_selection_sums(elements: Sequence[int], p: int) -> list[tuple[int, int]]:
    """(size, sum mod p) for every one of the 2^n position subsets, empty included."""
    out = [(0, 0)]
    for x in elements:
        out += [(c + 1, (s + x) % p) for c, s in out]
    return out


def brute_sigma(elements: Sequence[int], p: int) -> set[int]:
    return {s for c, s in all_selection_sums(elements, p) if c > 0}


def brute_sigma_l(elements: Sequence[int], p: int, l: int) -> set[int]:
    return {s for c, s in all_selection_sums(elements, p) if c == l}


def brute_sums_by_size(elements: Sequence[int], p: int) -> dict[int, set[int]]:
    out: dict[int, set[int]] = {c: set() for c in range(len(elements) + 1)}
    for c, s in all_selection_sums(elements, p):
        out[c].add(s)
    return out


def brute_zero_sum_free(elements: Sequence[int], p: int) -> bool:
    return 0 not in brute_sigma(elements, p)


def brute_complete(elements: Sequence[int], p: int) -> bool:
    return len(brute_sigma(elements, p)) == p


def brute_knet(xs: Sequence[int], K: int, p: int) -> bool:
    return all(any((n - x) % p <= K for x in xs) for n in range(p))


def brute_longest_ap(residues: set[int], p: int) -> int:
    best = 0
    for d in range(1, p):
        for start in residues:
            length = 0
            while length < p and (start + length * d) % p in residues:
                length += 1
            best = max(best, length)
    return best


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every partition of n as a non-increasing tuple."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def brute_partition_count(n: int, m: int | None = None) -> int:
    total = 0
    for part in partitions(n):
        if m is None or all(part.count(x) <= m for x in set(part)):
            total += 1
    return total


def odd_part_partition_count(n: int) -> int:
    def rec(left: int, max_part: int) -> int:
        if left == 0:
            return 1
        return sum(rec(left - k, k) for k in range(min(left, max_part), 0, -1) if k % 2)
    return rec(n, n)


def brute_census(p: int, m: int) -> tuple[int, int]:
    """(zero-sum-free count, incomplete count) over non-empty multisets with multiplicities <= m."""
    zsf = inc = 0
    for vec in itertools.product(range(m + 1), repeat=p):
        if not any(vec):
            continue
        elements = [a for a, k in enumerate(vec) for _ in range(k)]
        sums = brute_sigma(elements, p)
        zsf += 0 not in sums
        inc += len(sums) < p
    return zsf, inc


def brute_has_zero_p_sum(elements: Sequence[int], p: int) -> bool:
    return any(sum(c) % p == 0 for c in itertools.combinations(elements, p))
