"""Residue arithmetic and the multiset representation used everywhere else."""

from __future__ import annotations

import json
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

import mpmath

from zerosum.errors import PreconditionError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def require_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise PreconditionError(f"modulus must be a prime, got {p!r}")
    return p


def norm(x: int, p: int) -> int:
    """Cyclic distance from ``x`` to 0 in Z_p."""
    if not 0 <= x < p:
        raise PreconditionError(f"{x} is not a residue mod {p}")
    return min(x, p - x)


def signed_rep(x: int, p: int) -> int:
    """Representative of ``x`` in [-(p-1)/2, (p-1)/2]."""
    if not 0 <= x < p:
        raise PreconditionError(f"{x} is not a residue mod {p}")
    return x if x <= (p - 1) // 2 else x - p


def f_control(p: int, m: int) -> int:
    """floor((pm)^(6/13) * log2(p)^2).

    Evaluated with interval arithmetic; when the interval straddles an
    integer the smaller floor is returned.
    """
    if not 1 <= m <= p:
        raise PreconditionError(f"need 1 <= m <= p, got m={m}, p={p}")
    with mpmath.workprec(128):
        iv = mpmath.iv
        val = iv.mpf(p * m) ** (iv.mpf(6) / 13) * (iv.log(p) / iv.log(2)) ** 2
        return int(mpmath.floor(val.a))


@dataclass(frozen=True)
class ResidueSequence:
    """A finite multiset over Z_p stored as sorted ``(residue, multiplicity)`` pairs.

    The maximum multiplicity is capped at ``p``; pass ``capped=False`` for the
    few enumerations (EGZ) that must range over arbitrary multisets.
    """

    p: int
    items: tuple[tuple[int, int], ...] = ()
    capped: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        require_prime(self.p)
        prev = -1
        for a, m in self.items:
            if not prev < a < self.p:
                raise PreconditionError(f"residues must be sorted and in [0, {self.p - 1}]")
            if m < 1:
                raise PreconditionError(f"multiplicity of {a} must be >= 1, got {m}")
            if self.capped and m > self.p:
                raise PreconditionError(
                    f"multiplicity {m} of {a} exceeds p={self.p}")
            prev = a

    @classmethod
    def from_counts(cls, p: int, counts: Mapping[int, int], capped: bool = True) -> ResidueSequence:
        merged: Counter[int] = Counter()
        for a, m in counts.items():
            if m < 0:
                raise PreconditionError(f"negative multiplicity for {a}")
            if m:
                merged[a % p] += m
        return cls(p, tuple(sorted(merged.items())), capped)

    @classmethod
    def of(cls, p: int, elements: Iterable[int], capped: bool = True) -> ResidueSequence:
        """Build from a flat list of integers, reduced mod ``p``."""
        require_prime(p)
        return cls.from_counts(p, Counter(x % p for x in elements), capped)

    def __len__(self) -> int:
        return sum(m for _, m in self.items)

    def __iter__(self) -> Iterator[int]:
        for a, m in self.items:
            for _ in range(m):
                yield a

    def __contains__(self, x: int) -> bool:
        return self.multiplicity(x) > 0

    def counts(self) -> dict[int, int]:
        return dict(self.items)

    def multiplicity(self, x: int) -> int:
        for a, m in self.items:
            if a == x:
                return m
        return 0

    def max_multiplicity(self) -> int:
        return max((m for _, m in self.items), default=0)

    def support(self) -> list[int]:
        return [a for a, _ in self.items]

    def elements(self) -> list[int]:
        return list(self)

    def signed(self) -> list[int]:
        return [signed_rep(a, self.p) for a in self]

    def total(self) -> int:
        return sum(self) % self.p

    def is_set(self) -> bool:
        return all(m == 1 for _, m in self.items)

    def union(self, other: ResidueSequence) -> ResidueSequence:
        """Multiset union (multiplicities add)."""
        _same_modulus(self, other)
        c = Counter(self.counts())
        c.update(other.counts())
        return ResidueSequence.from_counts(self.p, c, self.capped and other.capped)

    def minus(self, other: ResidueSequence) -> ResidueSequence:
        """Remove the sub-multiset ``other``; raises if it is not contained."""
        _same_modulus(self, other)
        if not other.is_submultiset_of(self):
            raise PreconditionError("not a sub-multiset")
        c = Counter(self.counts())
        c.subtract(other.counts())
        return ResidueSequence.from_counts(self.p, +c, self.capped)

    def is_submultiset_of(self, other: ResidueSequence) -> bool:
        oc = other.counts()
        return all(oc.get(a, 0) >= m for a, m in self.items)

    def __str__(self) -> str:
        return format_sequence(self)

    def to_dict(self) -> dict:
        return {"p": self.p, "elements": [[a, m] for a, m in self.items]}

    @classmethod
    def from_dict(cls, d: Mapping) -> ResidueSequence:
        try:
            p = int(d["p"])
            counts: Counter[int] = Counter()
            for a, m in d["elements"]:
                counts[int(a)] += int(m)
        except (KeyError, TypeError, ValueError) as exc:
            raise PreconditionError(f"malformed sequence object: {d!r}") from exc
        require_prime(p)
        return cls.from_counts(p, counts)


def _same_modulus(a: ResidueSequence, b: ResidueSequence) -> None:
    if a.p != b.p:
        raise PreconditionError(f"modulus mismatch: {a.p} vs {b.p}")


def dilate(A: ResidueSequence, b: int) -> ResidueSequence:
    b %= A.p
    if b == 0:
        raise PreconditionError("dilation factor must be non-zero mod p")
    return ResidueSequence(
        A.p, tuple(sorted((a * b % A.p, m) for a, m in A.items)), A.capped)


def translate(A: ResidueSequence, c: int) -> ResidueSequence:
    return ResidueSequence(
        A.p, tuple(sorted(((a + c) % A.p, m) for a, m in A.items)), A.capped)


def decompose_check(A: ResidueSequence, parts: Iterable[ResidueSequence]) -> bool:
    total: Counter[int] = Counter()
    for part in parts:
        _same_modulus(A, part)
        total.update(part.counts())
    return +total == Counter(A.counts())


_TEXT_RE = re.compile(r"^\s*p\s*=\s*(\d+)\s*;\s*A\s*=\s*(.*?)\s*$")


def parse_sequence(text: str) -> ResidueSequence:
    """Parse ``p=11; A=1^2,7``. Elements may be negative; they are reduced mod p."""
    match = _TEXT_RE.match(text)
    if not match:
        raise PreconditionError(f"cannot parse sequence {text!r}; expected 'p=<prime>; A=a^m,...'")
    p = require_prime(int(match.group(1)))
    counts: Counter[int] = Counter()
    body = match.group(2)
    if body:
        for token in body.split(","):
            token = token.strip()
            elem, _, mult = token.partition("^")
            try:
                counts[int(elem) % p] += int(mult) if mult else 1
            except ValueError as exc:
                raise PreconditionError(f"bad element {token!r}") from exc
    return ResidueSequence.from_counts(p, counts)


def format_sequence(A: ResidueSequence) -> str:
    body = ",".join(f"{a}^{m}" if m > 1 else str(a) for a, m in A.items)
    return f"p={A.p}; A={body}"


def load_sequence(text: str) -> ResidueSequence:
    """Accept either the text form or the JSON object form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            return ResidueSequence.from_dict(json.loads(stripped))
        except json.JSONDecodeError as exc:
            raise PreconditionError(f"invalid JSON: {exc}") from exc
    return parse_sequence(stripped)


def multiplicity_vectors(p: int, size: int, max_mult: int | None = None) -> Iterator[tuple[int, ...]]:
    """All length-``p`` vectors of non-negative ints summing to ``size``.

    Lexicographic order with residue 0 varying slowest.
    """
    cap = size if max_mult is None else min(size, max_mult)

    def rec(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if i == p - 1:
            if left <= cap:
                yield (left,)
            return
        for m in range(min(cap, left), -1, -1):
            for rest in rec(i + 1, left - m):
                yield (m,) + rest

    if p < 1:
        raise PreconditionError("need at least one coordinate")
    return rec(0, size)


def multisets_count(p: int, size: int) -> int:
    return math.comb(size + p - 1, p - 1)
