"""Subset-sum sets over Z_p.

Masks are Python ints used as p-bit sets: bit r is set iff r is in the set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from zerosum.core import ResidueSequence
from zerosum.errors import PreconditionError


def rotate(bits: int, shift: int, p: int) -> int:
    """Image of the set under x -> x + shift (mod p)."""
    shift %= p
    if shift == 0:
        return bits
    full = (1 << p) - 1
    return ((bits << shift) | (bits >> (p - shift))) & full


@dataclass(frozen=True)
class SumsetMask:
    p: int
    bits: int

    @classmethod
    def from_residues(cls, p: int, residues: Iterable[int]) -> SumsetMask:
        bits = 0
        for r in residues:
            bits |= 1 << (r % p)
        return cls(p, bits)

    @classmethod
    def full(cls, p: int) -> SumsetMask:
        return cls(p, (1 << p) - 1)

    def __contains__(self, r: int) -> bool:
        return bool(self.bits >> (r % self.p) & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __iter__(self):
        return iter(self.residues())

    def residues(self) -> list[int]:
        return [r for r in range(self.p) if self.bits >> r & 1]

    def is_full(self) -> bool:
        return self.bits == (1 << self.p) - 1

    def __or__(self, other: SumsetMask) -> SumsetMask:
        return SumsetMask(self.p, self.bits | other.bits)

    def __and__(self, other: SumsetMask) -> SumsetMask:
        return SumsetMask(self.p, self.bits & other.bits)

    def shift(self, c: int) -> SumsetMask:
        return SumsetMask(self.p, rotate(self.bits, c, self.p))

    def dilate(self, b: int) -> SumsetMask:
        return SumsetMask.from_residues(self.p, (b * r for r in self.residues()))

    def to_dict(self) -> dict:
        return {"p": self.p, "residues": self.residues()}

    @classmethod
    def from_dict(cls, d: Mapping) -> SumsetMask:
        return cls.from_residues(int(d["p"]), d["residues"])


@dataclass(frozen=True)
class APWitness:
    start: int
    diff: int
    length: int

    def terms(self, p: int) -> list[int]:
        return [(self.start + i * self.diff) % p for i in range(self.length)]

    def to_dict(self) -> dict:
        return {"start": self.start, "diff": self.diff, "length": self.length}


@dataclass(frozen=True)
class IntRange:
    lo: int
    hi: int

    @property
    def length(self) -> int:
        return self.hi - self.lo


def sigma_bits(p: int, items: Iterable[tuple[int, int]]) -> int:
    """Bits of the non-empty subset sums of the multiset ``{a^[m]}``.

    Multiplicities are binary-split, so each distinct residue costs
    O(log m) shift-or steps.
    """
    nonempty = 0
    for a, m in items:
        m = min(m, p)  # p copies of a already sum to 0; more adds nothing
        chunk = 1
        while m > 0:
            take = min(chunk, m)
            m -= take
            chunk <<= 1
            nonempty |= rotate(nonempty | 1, take * a, p)
    return nonempty


def sigma_l_rows(p: int, items: Iterable[tuple[int, int]], l_max: int) -> list[int]:
    """rows[c] = bits of the sums of sub-multisets of size exactly c, c <= l_max."""
    rows = [0] * (l_max + 1)
    rows[0] = 1
    seen = 0
    for a, m in items:
        for _ in range(min(m, l_max)):
            seen += 1
            for c in range(min(seen, l_max), 0, -1):
                if rows[c - 1]:
                    rows[c] |= rotate(rows[c - 1], a, p)
    return rows


def sigma(A: ResidueSequence) -> SumsetMask:
    if len(A) == 0:
        raise PreconditionError("sigma needs a non-empty sequence")
    return SumsetMask(A.p, sigma_bits(A.p, A.items))


def sigma_l(A: ResidueSequence, l: int) -> SumsetMask:
    if not 0 <= l <= len(A):
        raise PreconditionError(f"l={l} outside [0, {len(A)}]")
    return SumsetMask(A.p, sigma_l_rows(A.p, A.items, l)[l])


def sigma_l_window(A: ResidueSequence, l_lo: int, l_hi: int) -> SumsetMask:
    if not 0 <= l_lo <= l_hi <= len(A):
        raise PreconditionError(f"invalid window [{l_lo}, {l_hi}] for |A|={len(A)}")
    rows = sigma_l_rows(A.p, A.items, l_hi)
    bits = 0
    for row in rows[l_lo:]:
        bits |= row
    return SumsetMask(A.p, bits)


def lsum_range_int(values: Sequence[int], l: int) -> IntRange:
    """Exact min and max of l-element sums of an integer multiset."""
    if not 0 <= l <= len(values):
        raise PreconditionError(f"l={l} outside [0, {len(values)}]")
    s = sorted(values)
    return IntRange(sum(s[:l]), sum(s[len(s) - l:]))


def window_range_int(values: Sequence[int], l_lo: int, l_hi: int) -> IntRange:
    """Smallest integer interval containing all l'-sums for l_lo <= l' <= l_hi."""
    if not 0 <= l_lo <= l_hi <= len(values):
        raise PreconditionError(f"invalid window [{l_lo}, {l_hi}] for {len(values)} values")
    s = sorted(values)
    prefix = [0]
    for v in s:
        prefix.append(prefix[-1] + v)
    n = len(s)
    lo = min(prefix[l] for l in range(l_lo, l_hi + 1))
    hi = max(prefix[n] - prefix[n - l] for l in range(l_lo, l_hi + 1))
    return IntRange(lo, hi)


def longest_ap(mask: SumsetMask) -> APWitness:
    """Longest arithmetic progression inside the mask.

    Ties go to the smallest difference, then the smallest start.
    """
    p = mask.p
    if mask.bits == 0:
        raise PreconditionError("empty mask")
    if mask.is_full():
        return APWitness(0, 1, p)
    member = [bool(mask.bits >> r & 1) for r in range(p)]
    best = APWitness(mask.residues()[0], 1, 1)
    for d in range(1, p):
        # walk the full cycle 0, d, 2d, ... and start from a gap so runs don't wrap
        order = [(i * d) % p for i in range(p)]
        first_gap = next(i for i in range(p) if not member[order[i]])
        cycle = order[first_gap + 1:] + order[:first_gap + 1]
        run = 0
        for idx, r in enumerate(cycle):
            if member[r]:
                run += 1
                continue
            if run:
                start = cycle[idx - run]
                if run > best.length or (run == best.length and d == best.diff and start < best.start):
                    best = APWitness(start, d, run)
            run = 0
    return best


def knet_check(X: SumsetMask | Iterable[int], K: int, p: int | None = None) -> bool:
    """True iff every residue lies in [x, x+K] for some x in X."""
    if isinstance(X, SumsetMask):
        p, xs = X.p, X.residues()
    else:
        if p is None:
            raise PreconditionError("p is required for a plain residue set")
        xs = sorted({x % p for x in X})
    if not xs:
        raise PreconditionError("empty set")
    if K < 0:
        raise PreconditionError("K must be non-negative")
    gaps = [b - a for a, b in zip(xs, xs[1:])] + [xs[0] + p - xs[-1]]
    return max(gaps) <= K + 1
