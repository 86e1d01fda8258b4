"""Constructive zero-sum and CRT lemmas over Z_D, plus empirical probes of the
l-sum size bound and the arithmetic-progression theorems."""

from __future__ import annotations

import itertools
import math
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from zerosum.core import ResidueSequence, require_prime
from zerosum.errors import PreconditionError, check_budget
from zerosum.sumset import longest_ap, sigma_l


def zero_subset_mod_D(X: Sequence[int], D: int) -> list[int]:
    """Non-empty block of consecutive terms of X summing to 0 mod D (needs |X| = D)."""
    if D < 1 or len(X) != D:
        raise PreconditionError(f"need |X| = D, got |X|={len(X)}, D={D}")
    first_seen = {0: 0}
    s = 0
    for i, x in enumerate(X, start=1):
        s = (s + x) % D
        if s in first_seen:
            return list(X[first_seen[s]:i])
        first_seen[s] = i
    raise AssertionError("pigeonhole failed")  # D+1 prefixes, D classes


def full_sumset_coprime(X: Sequence[int], D: int, r: int) -> list[int]:
    """Non-empty sub-sequence of X summing to r mod D; X has D terms coprime to D."""
    if len(X) != D:
        raise PreconditionError(f"need |X| = D, got |X|={len(X)}, D={D}")
    for x in X:
        if math.gcd(x, D) != 1:
            raise PreconditionError(f"element {x} is not coprime to D={D}")
    r %= D
    # parent[s] = (previous state, index used); None marks the empty selection
    parent: dict[int, tuple[int | None, int]] = {}
    for i, x in enumerate(X):
        new = {}
        for s in [None] + list(parent):
            t = (x if s is None else s + x) % D
            if t not in parent and t not in new:
                new[t] = (s, i)
        parent.update(new)
        if r in parent:
            break
    if r not in parent:
        raise AssertionError(f"{r} unreachable; coprimality should make Z_D reachable")
    out = []
    state: int | None = r
    while state is not None:
        prev, i = parent[state]
        out.append(X[i])
        state = prev
    return out[::-1]


def lcm(values: Sequence[int]) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def _bezout(coeffs: Sequence[int]) -> list[int]:
    """Integers u with sum(u_i * coeffs_i) = gcd(coeffs)."""
    g, us = 0, []
    for c in coeffs:
        if g == 0:
            g, us = c, [1]
            continue
        # extended Euclid on (g, c)
        old_r, rr, old_s, s, old_t, t = g, c, 1, 0, 0, 1
        while rr:
            q = old_r // rr
            old_r, rr = rr, old_r - q * rr
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        g = old_r
        us = [u * old_s for u in us] + [old_t]
    return us


@dataclass(frozen=True)
class CRTRepresentation:
    d_list: tuple[int, ...]
    D: int
    r: int
    a_list: tuple[int, ...]

    def unit_fraction_ok(self) -> bool:
        return (all(0 <= a < d for a, d in zip(self.a_list, self.d_list))
                and sum(a * (self.D // d) for a, d in zip(self.a_list, self.d_list)) % self.D == self.r)

    def bounded_ok(self) -> bool:
        return (all(a >= 0 for a in self.a_list) and sum(self.a_list) <= self.D
                and sum(a * d for a, d in zip(self.a_list, self.d_list)) % self.D == self.r)

    def to_dict(self) -> dict:
        return {"d_list": list(self.d_list), "D": self.D, "r": self.r, "a_list": list(self.a_list)}

    @classmethod
    def from_dict(cls, d: dict) -> CRTRepresentation:
        return cls(tuple(d["d_list"]), d["D"], d["r"], tuple(d["a_list"]))


def crt_unit_fractions(d_list: Sequence[int], r: int) -> CRTRepresentation:
    """0 <= a_i < d_i with sum a_i/d_i = r/D (mod 1), D = lcm(d_list)."""
    d_list = tuple(d_list)
    if not d_list or any(d < 1 for d in d_list):
        raise PreconditionError("d_list must be positive integers")
    if len(set(d_list)) != len(d_list):
        raise PreconditionError("d_list must be distinct")
    D = lcm(d_list)
    if not 0 <= r < D:
        raise PreconditionError(f"r must lie in [0, {D - 1}]")
    coeffs = [D // d for d in d_list]
    us = _bezout(coeffs)
    a = tuple((r * u) % d for u, d in zip(us, d_list))
    rep = CRTRepresentation(d_list, D, r, a)
    if not rep.unit_fraction_ok():
        raise AssertionError(f"construction failed for {rep}")
    return rep


def crt_bounded(d_list: Sequence[int], D: int, r: int) -> CRTRepresentation:
    """a_i >= 0 with sum a_i <= D and sum a_i d_i = r (mod D), minimizing sum a_i.

    Breadth-first search from 0 in Z_D with steps +d_i.
    """
    d_list = tuple(d_list)
    if D < 1 or not d_list:
        raise PreconditionError("need D >= 1 and a non-empty d_list")
    if math.gcd(D, *d_list) != 1:
        raise PreconditionError("gcd(d_1, ..., d_n, D) must be 1")
    if not 0 <= r < D:
        raise PreconditionError(f"r must lie in [0, {D - 1}]")
    parent: dict[int, tuple[int, int] | None] = {0: None}
    queue = deque([0])
    while queue and r not in parent:
        s = queue.popleft()
        for i, d in enumerate(d_list):
            t = (s + d) % D
            if t not in parent:
                parent[t] = (s, i)
                queue.append(t)
    a = [0] * len(d_list)
    state = r
    while parent[state] is not None:
        state, i = parent[state]
        a[i] += 1
    rep = CRTRepresentation(d_list, D, r, tuple(a))
    if not rep.bounded_ok():
        raise AssertionError(f"construction failed for {rep}")
    return rep


@dataclass
class OlsonProbeReport:
    p: int
    checked: int
    min_ratio: Fraction
    minimizer: ResidueSequence

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "checked": self.checked,
            "min_ratio": str(self.min_ratio),
            "min_ratio_float": float(self.min_ratio),
            "minimizer": self.minimizer.to_dict(),
        }


def olson_lsum_probe(p: int, max_enumeration: int | None = 10**5) -> OlsonProbeReport:
    """min over subsets A (2 <= |A| <= p-1) of |Sigma_{|A|//2}(A)| / |A|^2."""
    require_prime(p)
    if p < 3:
        raise PreconditionError("need p >= 3 for a subset with 2 <= |A| <= p-1")
    check_budget(f"olson probe p={p}", 2 ** p, max_enumeration)
    best = None
    checked = 0
    for s in range(2, p):
        for subset in itertools.combinations(range(p), s):
            checked += 1
            A = ResidueSequence(p, tuple((a, 1) for a in subset))
            ratio = Fraction(len(sigma_l(A, s // 2)), s * s)
            if best is None or ratio < best[0]:
                best = (ratio, A)
    return OlsonProbeReport(p, checked, best[0], best[1])


@dataclass
class APProbeReport:
    p: int
    size: int
    l: int
    d: int
    trials: int
    seed: int
    complete_trials: int
    min_ratio: float | None
    min_ap_length: int | None

    def to_dict(self) -> dict:
        return {
            "p": self.p, "size": self.size, "l": self.l, "d": self.d,
            "trials": self.trials, "seed": self.seed,
            "complete_trials": self.complete_trials,
            "min_ratio": self.min_ratio, "min_ap_length": self.min_ap_length,
        }


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(seed * 1_000_003 + trial)


def ap_theorem_probe(p: int, size: int, l: int, d: int = 1, trials: int = 100,
                     seed: int = 0) -> APProbeReport:
    """Random sets A of the given size: longest AP in Sigma_l(A) over l * |A|^(1/d)."""
    require_prime(p)
    if not 1 <= size <= p or not 1 <= l <= size or d < 1 or trials < 1:
        raise PreconditionError("need 1 <= l <= size <= p, d >= 1, trials >= 1")
    full = 0
    best_ratio = None
    best_len = None
    for t in range(trials):
        elems = trial_rng(seed, t).sample(range(p), size)
        mask = sigma_l(ResidueSequence.of(p, elems), l)
        if mask.is_full():
            full += 1
            continue
        length = longest_ap(mask).length
        ratio = length / (l * size ** (1 / d))
        if best_ratio is None or ratio < best_ratio:
            best_ratio, best_len = ratio, length
    return APProbeReport(p, size, l, d, trials, seed, full, best_ratio, best_len)
