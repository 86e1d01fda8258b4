"""Bounded-multiplicity partitions and exhaustive zero-sum-free / incomplete census."""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from zerosum.classify import is_complete, is_zero_sum_free
from zerosum.core import ResidueSequence, require_prime
from zerosum.errors import PreconditionError, check_budget
from zerosum.sumset import rotate


def partition_table(N: int, m: int | None = None) -> list[int]:
    """[p_m(0), ..., p_m(N)]: partitions where each part occurs at most m times.

    ``m=None`` means unbounded.
    """
    if N < 0:
        raise PreconditionError("N must be non-negative")
    if m is not None and m < 1:
        raise PreconditionError("multiplicity bound must be at least 1")
    dp = [1] + [0] * N
    for part in range(1, N + 1):
        dp = _with_part(dp, part, m, N)
    return dp


def _with_part(old: list[int], part: int, m: int | None, N: int) -> list[int]:
    # new[s] = sum over t <= m of old[s - t*part], as a sliding window
    new = [0] * (N + 1)
    for s in range(N + 1):
        v = old[s]
        if s >= part:
            v += new[s - part]
        if m is not None and s >= (m + 1) * part:
            v -= old[s - (m + 1) * part]
        new[s] = v
    return new


def partition_count(n: int, m: int | None = None) -> int:
    if n < 0:
        raise PreconditionError("n must be non-negative")
    return partition_table(n, m)[n]


@dataclass(frozen=True)
class PartitionTable:
    m: int | None
    values: tuple[int, ...]

    @classmethod
    def build(cls, N: int, m: int | None = None) -> PartitionTable:
        return cls(m, tuple(partition_table(N, m)))

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def to_dict(self) -> dict:
        # big integers go out as decimal strings so JSON readers keep them exact
        return {"m": self.m, "values": [str(v) for v in self.values]}

    @classmethod
    def from_dict(cls, d: dict) -> PartitionTable:
        return cls(d["m"], tuple(int(v) for v in d["values"]))


def meinardus_exponent(n: int, m: int | None = None) -> float:
    """Main term sqrt((1 - 1/(m+1)) * 2/3) * pi * sqrt(n) of log p_m(n)."""
    if n < 1:
        raise PreconditionError("n must be positive")
    frac = 1.0 if m is None else 1 - 1 / (m + 1)
    return math.sqrt(frac * 2 / 3) * math.pi * math.sqrt(n)


@dataclass
class CensusReport:
    p: int
    m: int
    total: int
    count_zero_sum_free: int
    count_incomplete: int

    @property
    def log_ratio_zsf(self) -> float:
        return math.log(self.count_zero_sum_free) / math.sqrt(self.p)

    @property
    def log_ratio_inc(self) -> float:
        return math.log(self.count_incomplete) / math.sqrt(self.p)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "total": self.total,
            "count_zero_sum_free": self.count_zero_sum_free,
            "count_incomplete": self.count_incomplete,
            "log_ratio_zsf": self.log_ratio_zsf,
            "log_ratio_inc": self.log_ratio_inc,
            # comparison constants for the log ratios; reported, not asserted
            "exponent_zsf": meinardus_exponent(1, self.m),
            "exponent_inc": math.sqrt((1 - 1 / (self.m + 1)) * 4 / 3) * math.pi,
        }


def census_budget(p: int, m: int) -> int:
    return (m + 1) ** p


def _census_branch(p: int, m: int, first_mult: int) -> tuple[int, int]:
    """Counts over all multisets whose multiplicity of residue 0 is ``first_mult``."""
    full = (1 << p) - 1
    zsf = inc = 0
    start = 1 if first_mult else 0  # copies of 0 only ever add the sum 0

    def rec(a: int, mask: int) -> None:
        nonlocal zsf, inc
        if mask == full:
            return  # every extension is complete and contains a zero sum
        if a == p:
            if mask:
                inc += 1
                zsf += not mask & 1
            return
        cur = mask
        rec(a + 1, cur)
        for _ in range(m):
            cur |= rotate(cur | 1, a, p)
            rec(a + 1, cur)

    rec(1, start)
    return zsf, inc


def census(p: int, m: int, max_enumeration: int | None = 10**7, workers: int = 1) -> CensusReport:
    """Exact counts of zero-sum-free and incomplete non-empty multisets with all
    multiplicities at most m."""
    require_prime(p)
    if not 1 <= m <= p:
        raise PreconditionError(f"need 1 <= m <= p, got m={m}")
    check_budget(f"census p={p} m={m}: (m+1)^p", census_budget(p, m), max_enumeration)
    branches = range(m + 1)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_census_branch, [p] * len(branches), [m] * len(branches), branches))
    else:
        parts = [_census_branch(p, m, t) for t in branches]
    zsf = sum(z for z, _ in parts)
    inc = sum(i for _, i in parts)
    return CensusReport(p, m, census_budget(p, m) - 1, zsf, inc)


def zsf_from_partition(parts: Iterable[int], p: int) -> ResidueSequence:
    """A partition of at most p-1, read as residues, is zero-sum-free."""
    require_prime(p)
    parts = list(parts)
    if not parts:
        raise PreconditionError("empty partition")
    if any(not 1 <= x <= p - 1 for x in parts):
        raise PreconditionError("parts must lie in [1, p-1]")
    if sum(parts) > p - 1:
        raise PreconditionError(f"parts sum to {sum(parts)} >= p={p}")
    A = ResidueSequence.of(p, parts)
    if not is_zero_sum_free(A):
        raise AssertionError(f"{A} should be zero-sum-free")
    return A


def incomplete_from_two_partitions(parts_pos: Iterable[int], parts_neg: Iterable[int],
                                   p: int) -> ResidueSequence:
    """Union of one partition with the negatives of another; total at most p-2."""
    require_prime(p)
    pos, neg = list(parts_pos), list(parts_neg)
    if not pos and not neg:
        raise PreconditionError("both partitions empty")
    if any(x < 1 for x in pos + neg):
        raise PreconditionError("parts must be positive")
    if sum(pos) + sum(neg) > p - 2:
        raise PreconditionError(f"norm sum {sum(pos) + sum(neg)} exceeds p-2={p - 2}")
    A = ResidueSequence.from_counts(p, Counter([x % p for x in pos] + [-x % p for x in neg]))
    if is_complete(A):
        raise AssertionError(f"{A} should be incomplete")
    return A
