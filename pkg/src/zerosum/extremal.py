"""The extremal families A1 (zero-sum-free), A2 (incomplete), A3 (l-incomplete)."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field

from zerosum.classify import is_complete, is_l_complete, is_zero_sum_free
from zerosum.core import ResidueSequence, dilate, require_prime
from zerosum.errors import PreconditionError, check_budget
from zerosum.sumset import lsum_range_int


@dataclass(frozen=True)
class ExtremalSpec:
    family: str
    p: int
    m: int
    n: int
    k: int
    sequence: ResidueSequence
    l: int | None = None
    degenerate: bool = False
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "p": self.p,
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "l": self.l,
            "degenerate": self.degenerate,
            "cardinality": len(self.sequence),
            "sequence": self.sequence.to_dict(),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> ExtremalSpec:
        return cls(d["family"], d["p"], d["m"], d["n"], d["k"],
                   ResidueSequence.from_dict(d["sequence"]), d["l"],
                   d["degenerate"], tuple(d["notes"]))


def n_of_p(p: int) -> int:
    """Largest n with 1 + 2 + ... + (n-1) < p."""
    if p < 2:
        raise PreconditionError("p must be at least 2")
    n = 1
    while (n + 1) * n // 2 < p:
        n += 1
    return n


def _check_pm(p: int, m: int) -> None:
    require_prime(p)
    if not 1 <= m <= p:
        raise PreconditionError(f"need 1 <= m <= p, got m={m}")


def _symmetric(p: int, m: int, n: int, k: int) -> ResidueSequence:
    counts: Counter[int] = Counter()
    for i in range(-(n - 1), n):
        counts[i % p] += m
    if n >= 1:
        counts[n % p] += k
        counts[-n % p] += k
    return ResidueSequence.from_counts(p, counts)


def build_A1(p: int, m: int) -> ExtremalSpec:
    """{1^[m], ..., (n-1)^[m], n^[k]} of largest size with integer sum <= p - 1."""
    _check_pm(p, m)
    best = None
    n = 1
    while m * n * (n - 1) // 2 + n <= p - 1:
        for k in range(1, m + 1):
            if m * n * (n - 1) // 2 + k * n <= p - 1:
                key = (m * (n - 1) + k, n)
                if best is None or key > best[0]:
                    best = (key, n, k)
        n += 1
    if best is None:
        raise PreconditionError(f"no A1 family for p={p}")
    _, n, k = best
    counts = {i: m for i in range(1, n)}
    counts[n] = k
    seq = ResidueSequence.from_counts(p, counts)
    if not is_zero_sum_free(seq):
        raise AssertionError(f"A1({p},{m}) failed the zero-sum-free oracle")
    return ExtremalSpec("A1", p, m, n, k, seq)


def build_A2(p: int, m: int) -> ExtremalSpec:
    """Symmetric family around 0 of largest size with total norm <= p - 2."""
    _check_pm(p, m)
    best = None
    n = 1
    while 2 * m * n * (n - 1) // 2 + 2 * n <= p - 2:
        for k in range(1, m + 1):
            if 2 * m * n * (n - 1) // 2 + 2 * k * n <= p - 2:
                key = ((2 * n - 1) * m + 2 * k, n)
                if best is None or key > best[0]:
                    best = (key, n, k)
        n += 1
    if best is None:
        seq = ResidueSequence.from_counts(p, {0: m})
        return ExtremalSpec("A2", p, m, 1, 0, seq, degenerate=True,
                            notes=("no k >= 1 fits; returning the zero block only",))
    _, n, k = best
    seq = _symmetric(p, m, n, k)
    if is_complete(seq):
        raise AssertionError(f"A2({p},{m}) failed the incompleteness oracle")
    return ExtremalSpec("A2", p, m, n, k, seq)


def build_A3(p: int, m: int, l: int) -> ExtremalSpec | None:
    """Largest symmetric family whose l-sums span fewer than p integers.

    Returns None when no (n, k) gives a sequence with at least l elements.
    """
    _check_pm(p, m)
    if l < 1:
        raise PreconditionError("l must be positive")
    best = None
    for n in range(1, (p - 1) // 2 + 1):
        any_fit = False
        for k in range(1, m + 1):
            seq = _symmetric(p, m, n, k)
            if len(seq) < l:
                any_fit = True  # larger k or n may still reach l
                continue
            r = lsum_range_int(seq.signed(), l)
            if r.hi - r.lo <= p - 2:
                any_fit = True
                key = (len(seq), n)
                if best is None or key > best[0]:
                    best = (key, n, k, seq)
        if not any_fit:
            break
    if best is None:
        return None
    _, n, k, seq = best
    if is_l_complete(seq, l):
        raise AssertionError(f"A3({p},{m},{l}) failed the l-incompleteness oracle")
    return ExtremalSpec("A3", p, m, n, k, seq, l=l)


def zerofree3_extremal(p: int) -> tuple[ResidueSequence, bool]:
    """The sequence {-2, 1, 3, 4, ..., n(p)} and whether p = n(p)(n(p)+1)/2 - 1.

    For tiny p the residues may collide (p = 5 gives {1, 3, 3}); the result is
    returned as a sequence so that collision stays visible.
    """
    require_prime(p)
    n = n_of_p(p)
    special = p == n * (n + 1) // 2 - 1
    elems = [-2, 1] + list(range(3, n + 1))
    return ResidueSequence.of(p, elems), special


@dataclass
class ZeroFree3Report:
    p: int
    n: int
    special: bool
    checked: int
    zero_sum_free_sets: list[ResidueSequence]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n_p": self.n,
            "special": self.special,
            "checked": self.checked,
            "zero_sum_free_sets": [s.to_dict() for s in self.zero_sum_free_sets],
        }


def zerofree3_scan(p: int, max_enumeration: int | None = 10**6) -> ZeroFree3Report:
    """All n(p)-subsets of Z_p without 0; returns those that are zero-sum-free."""
    require_prime(p)
    n = n_of_p(p)
    check_budget(f"zerofree3 scan p={p}", math.comb(p - 1, n), max_enumeration)
    found = []
    checked = 0
    for subset in itertools.combinations(range(1, p), n):
        checked += 1
        A = ResidueSequence(p, tuple((a, 1) for a in subset))
        if is_zero_sum_free(A):
            found.append(A)
    _, special = zerofree3_extremal(p)
    return ZeroFree3Report(p, n, special, checked, found)


def thm_zerofree1_witness(A: ResidueSequence, m: int, budget: int | None = None
                          ) -> tuple[int, ResidueSequence] | None:
    """Find b minimizing |A_flat| with b.(A - A_flat) inside build_A1(p, m)."""
    if A.max_multiplicity() > m:
        raise PreconditionError(f"m(A)={A.max_multiplicity()} exceeds m={m}")
    if len(A) == 0 or not is_zero_sum_free(A):
        raise PreconditionError("A must be a non-empty zero-sum-free sequence")
    target = build_A1(A.p, m).sequence.counts()
    p = A.p
    best = None
    for b in range(1, p):
        binv = pow(b, -1, p)
        image = dilate(A, b)
        excess = {x: mx - target.get(x, 0) for x, mx in image.items if mx > target.get(x, 0)}
        size = sum(excess.values())
        if best is None or size < best[0]:
            flat = ResidueSequence.from_counts(p, {x * binv % p: e for x, e in excess.items()})
            best = (size, b, flat)
    if budget is not None and best[0] > budget:
        return None
    return best[1], best[2]
