"""Certificates of the form (b, c, A_flat, l1) for the three structure theorems.

Each search is exhaustive over the dilation b and returns a witness whose
inequality is re-checked by :func:`validate` before it is handed back.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Union

from zerosum.classify import is_complete, is_l_complete, is_zero_sum_free
from zerosum.core import ResidueSequence, dilate, f_control, norm, signed_rep, translate
from zerosum.errors import PreconditionError
from zerosum.sumset import window_range_int


@dataclass(frozen=True)
class Thm1Witness:
    b: int
    a_flat: ResidueSequence

    kind = 1

    def to_dict(self) -> dict:
        return {"theorem": 1, "b": self.b, "a_flat": self.a_flat.to_dict()}


@dataclass(frozen=True)
class Thm2Witness:
    b: int
    a_flat: ResidueSequence

    kind = 2

    def to_dict(self) -> dict:
        return {"theorem": 2, "b": self.b, "a_flat": self.a_flat.to_dict()}


@dataclass(frozen=True)
class Thm3Witness:
    b: int
    c: int
    a_flat: ResidueSequence
    l: int
    l1: int
    window: int
    window_clamped: bool = False

    kind = 3

    def to_dict(self) -> dict:
        return {
            "theorem": 3, "b": self.b, "c": self.c, "a_flat": self.a_flat.to_dict(),
            "l": self.l, "l1": self.l1, "window": self.window,
            "window_clamped": self.window_clamped,
        }


Witness = Union[Thm1Witness, Thm2Witness, Thm3Witness]


def witness_from_dict(d: dict) -> Witness:
    flat = ResidueSequence.from_dict(d["a_flat"])
    kind = d.get("theorem")
    if kind == 1:
        return Thm1Witness(d["b"], flat)
    if kind == 2:
        return Thm2Witness(d["b"], flat)
    if kind == 3:
        return Thm3Witness(d["b"], d["c"], flat, d["l"], d["l1"], d["window"],
                           d.get("window_clamped", False))
    raise PreconditionError(f"unknown witness kind {kind!r}")


def _greedy_removal(values: list[tuple[int, int]], bound: int) -> list[int]:
    """Drop the largest keys until their total is below ``bound``.

    ``values`` holds (key, original residue) pairs; returns the dropped residues.
    Removing largest first needs the fewest removals.
    """
    values = sorted(values, reverse=True)
    total = sum(v for v, _ in values)
    removed = []
    for v, a in values:
        if total < bound:
            break
        total -= v
        removed.append(a)
    return removed


def _norm_search(A: ResidueSequence, key, budget: int | None) -> tuple[int, ResidueSequence] | None:
    p = A.p
    best = None
    for b in range(1, p):
        removed = _greedy_removal([(key(b * a % p, p), a) for a in A], p)
        if best is None or len(removed) < len(best[1]):
            best = (b, removed)
            if not removed:
                break
    b, removed = best
    if budget is not None and len(removed) > budget:
        return None
    return b, ResidueSequence.of(p, removed)


def thm1_witness(A: ResidueSequence, budget: int | None = None) -> Thm1Witness | None:
    """b and A_flat with sum of b.(A - A_flat), read in [1, p-1], below p."""
    if len(A) == 0 or not is_zero_sum_free(A):
        raise PreconditionError("thm1 witness needs a non-empty zero-sum-free sequence")
    found = _norm_search(A, lambda x, p: x, budget)
    if found is None:
        return None
    w = Thm1Witness(*found)
    assert validate(w, A), w
    return w


def thm2_witness(A: ResidueSequence, budget: int | None = None) -> Thm2Witness | None:
    """b and A_flat with the total norm of b.(A - A_flat) below p."""
    if len(A) == 0 or is_complete(A):
        raise PreconditionError("thm2 witness needs a non-empty incomplete sequence")
    found = _norm_search(A, norm, budget)
    if found is None:
        return None
    w = Thm2Witness(*found)
    assert validate(w, A), w
    return w


def default_window(p: int, m: int, size: int, l: int) -> int:
    """min(floor((pm)^(3/13)), size - l), with the root taken exactly."""
    base = (p * m) ** 3
    w = int(round(base ** (1 / 13)))
    while w ** 13 > base:
        w -= 1
    while (w + 1) ** 13 <= base:
        w += 1
    return max(0, min(w, size - l))


def _center(values: Counter, p: int) -> int:
    """Translation moving the cyclic weighted median of ``values`` to 0."""
    support = sorted(values)
    if len(support) == 1:
        return (-support[0]) % p
    gaps = [(support[(i + 1) % len(support)] - support[i]) % p for i in range(len(support))]
    cut = max(range(len(support)), key=lambda i: (gaps[i], -i))
    start = support[(cut + 1) % len(support)]
    unrolled = []
    for x in support:
        u = x if x >= start else x + p
        unrolled.extend([u] * values[x])
    unrolled.sort()
    median = unrolled[(len(unrolled) - 1) // 2]
    return (-median) % p


def _c_candidates(c0: int, radius: int, p: int) -> list[int]:
    out = [c0]
    for d in range(1, min(radius, p // 2) + 1):
        out.extend([(c0 - d) % p, (c0 + d) % p])
    seen = set()
    return [c for c in out if not (c in seen or seen.add(c))]


def _fits(values: list[int], l1: int, window: int, p: int) -> tuple[bool, int]:
    w = min(window, len(values) - l1)
    r = window_range_int(values, l1, l1 + w)
    return r.hi - r.lo < p, w


def _removal_search(values: list[int], depth: int, l1: int, window: int, p: int):
    """Depth-limited search removing one of the three largest-|v| values per step.

    ``values`` are signed integers; returns (removed values, effective window) or None.
    """
    seen = set()

    def rec(vals: list[int], removed: tuple[int, ...], left: int):
        if len(vals) < l1:
            return None
        if left == 0:
            ok, w = _fits(vals, l1, window, p)
            return (removed, w) if ok else None
        distinct = sorted(set(vals), key=lambda v: (-abs(v), -v))[:3]
        for v in distinct:
            nxt = tuple(sorted(removed + (v,)))
            if nxt in seen:
                continue
            seen.add(nxt)
            rest = list(vals)
            rest.remove(v)
            hit = rec(rest, nxt, left - 1)
            if hit is not None:
                return hit
        return None

    return rec(values, (), depth)


def thm3_witness(A: ResidueSequence, l: int, window: int | None = None,
                 budget: int = 3) -> Thm3Witness | None:
    """Search b, c, A_flat and l1 so that the l'-sums of b.(A - A_flat) + c,
    l1 <= l' <= l1 + window, fit in an integer interval of length below p.

    Preference order: largest l1, then fewest removals, then smallest b,
    then the c closest to the median-centering translation.
    """
    p = A.p
    if not 1 <= l <= len(A):
        raise PreconditionError(f"l={l} outside [1, {len(A)}]")
    if is_l_complete(A, l):
        raise PreconditionError(f"A is {l}-complete; no witness exists")
    m = A.max_multiplicity()
    full_window = default_window(p, m, len(A), l) if window is None else window
    if full_window < 0:
        raise PreconditionError("window must be non-negative")
    l1_lo = max(0, l - 2 * f_control(p, m))

    images = []
    for b in range(1, p):
        Ab = dilate(A, b)
        c0 = _center(Counter(Ab.counts()), p)
        radius = math.ceil((p - 1) / 2 * full_window / len(A)) if full_window else 0
        images.append((b, Ab, _c_candidates(c0, radius, p)))

    for l1 in range(l, l1_lo - 1, -1):
        for depth in range(0, budget + 1):
            for b, Ab, cands in images:
                for c in cands:
                    shifted = translate(Ab, c)
                    values = [signed_rep(x, p) for x in shifted]
                    hit = _removal_search(values, depth, l1, full_window, p)
                    if hit is None:
                        continue
                    removed, w = hit
                    binv = pow(b, -1, p)
                    flat = ResidueSequence.of(p, [(v - c) * binv for v in removed])
                    wit = Thm3Witness(b, c, flat, l, l1, w, w < full_window)
                    assert validate(wit, A), wit
                    return wit
    return None


def validate(w: Witness, A: ResidueSequence) -> bool:
    """Recompute the witness inequality from scratch."""
    p = A.p
    if not isinstance(w, (Thm1Witness, Thm2Witness, Thm3Witness)):
        raise PreconditionError(f"not a witness: {w!r}")
    if w.a_flat.p != p or not 0 < w.b < p:
        raise PreconditionError("witness fields out of range")
    if not w.a_flat.is_submultiset_of(A):
        raise PreconditionError("A_flat is not a sub-multiset of A")
    rest = A.minus(w.a_flat)
    if isinstance(w, Thm1Witness):
        return sum(b_a for b_a in dilate(rest, w.b)) < p if len(rest) else True
    if isinstance(w, Thm2Witness):
        return sum(norm(x, p) for x in dilate(rest, w.b)) < p if len(rest) else True
    if w.l1 < 0 or w.window < 0 or w.l1 + w.window > len(rest) or not 0 <= w.c < p:
        raise PreconditionError("thm3 witness window out of range")
    if w.l1 < w.l - 2 * f_control(p, max(1, A.max_multiplicity())):
        return False
    image = translate(dilate(rest, w.b), w.c) if len(rest) else rest
    values = [signed_rep(x, p) for x in image]
    r = window_range_int(values, w.l1, w.l1 + w.window)
    return r.hi - r.lo < p


def proofline(w: Witness, A: ResidueSequence) -> str:
    """The defining inequality with the numbers filled in."""
    p = A.p
    rest = A.minus(w.a_flat)
    if isinstance(w, Thm1Witness):
        terms = sorted(dilate(rest, w.b)) if len(rest) else []
        return f"b={w.b}, |A_flat|={len(w.a_flat)}: {' + '.join(map(str, terms)) or '0'} = {sum(terms)} < {p}"
    if isinstance(w, Thm2Witness):
        terms = sorted(norm(x, p) for x in dilate(rest, w.b)) if len(rest) else []
        return f"b={w.b}, |A_flat|={len(w.a_flat)}: sum of norms {' + '.join(map(str, terms)) or '0'} = {sum(terms)} < {p}"
    image = translate(dilate(rest, w.b), w.c) if len(rest) else rest
    values = [signed_rep(x, p) for x in image]
    r = window_range_int(values, w.l1, w.l1 + w.window)
    return (f"b={w.b}, c={w.c}, |A_flat|={len(w.a_flat)}, l1={w.l1}, window={w.window}: "
            f"l'-sums lie in [{r.lo}, {r.hi}], length {r.hi - r.lo} < {p}")


@dataclass
class ZeroFree2Report:
    b: int
    low_sum: int
    high_sum: int

    def to_dict(self) -> dict:
        return {"b": self.b, "low_norm_sum": self.low_sum, "high_norm_sum": self.high_sum}


def zerofree2_report(A: ResidueSequence) -> ZeroFree2Report:
    """For the b minimizing the total norm of b.A, the norm sums below and above p/2."""
    if not A.is_set() or len(A) == 0 or not is_zero_sum_free(A):
        raise PreconditionError("need a non-empty zero-sum-free set")
    p = A.p
    best = None
    for b in range(1, p):
        image = [b * a % p for a in A]
        total = sum(norm(x, p) for x in image)
        if best is None or total < best[0]:
            low = sum(norm(x, p) for x in image if 2 * x < p)
            best = (total, b, low, total - low)
    _, b, low, high = best
    return ZeroFree2Report(b, low, high)
