"""Exhaustive Erdos-Ginzburg-Ziv checks and the greedy p-term zero-sum construction."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from zerosum.classify import is_l_zero_sum_free
from zerosum.core import (
    ResidueSequence, f_control, multiplicity_vectors, multisets_count, require_prime, signed_rep,
)
from zerosum.errors import PreconditionError, check_budget
from zerosum.sumset import sigma_l_rows


def _has_zero_p_sum(p: int, vec: tuple[int, ...]) -> bool:
    items = [(a, m) for a, m in enumerate(vec) if m]
    return bool(sigma_l_rows(p, items, p)[p] & 1)


def _scan_branch(p: int, size: int, zero_mult: int) -> tuple[int, list[tuple[int, ...]]]:
    """Multisets of ``size`` with exactly ``zero_mult`` zeros; returns (count, p-zero-sum-free ones)."""
    count = 0
    bad = []
    for tail in multiplicity_vectors(p - 1, size - zero_mult):
        vec = (zero_mult,) + tail
        count += 1
        if not _has_zero_p_sum(p, vec):
            bad.append(vec)
    return count, bad


def _scan(p: int, size: int, workers: int) -> tuple[int, list[tuple[int, ...]]]:
    branches = list(range(size + 1))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_scan_branch, [p] * len(branches), [size] * len(branches), branches))
    else:
        parts = [_scan_branch(p, size, z) for z in branches]
    total = sum(c for c, _ in parts)
    found = sorted(v for _, vs in parts for v in vs)
    expected = multisets_count(p, size)
    if total != expected:
        raise AssertionError(f"enumerated {total} multisets, expected {expected}")
    return total, found


def _to_seq(p: int, vec: tuple[int, ...]) -> ResidueSequence:
    return ResidueSequence.from_counts(p, dict(enumerate(vec)), capped=False)


@dataclass
class EGZReport:
    p: int
    size: int
    total_multisets: int
    counterexamples: list[ResidueSequence]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "size": self.size,
            "total_multisets": self.total_multisets,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }


def egz_budget(p: int, size: int | None = None) -> int:
    return multisets_count(p, 2 * p - 1 if size is None else size)


def egz_verify(p: int, max_enumeration: int | None = 10**6, workers: int = 1) -> EGZReport:
    """Every multiset of 2p-1 residues has p terms summing to 0; lists any that don't."""
    require_prime(p)
    size = 2 * p - 1
    check_budget(f"EGZ p={p}", egz_budget(p, size), max_enumeration)
    total, bad = _scan(p, size, workers)
    bad_seqs = [_to_seq(p, v) for v in bad]
    for s in bad_seqs:
        if not is_l_zero_sum_free(s, p):
            raise AssertionError(f"counterexample {s} fails re-validation")
    return EGZReport(p, size, total, bad_seqs)


def is_two_block(A: ResidueSequence) -> bool:
    """Shape {a^[p-1], b^[p-1]} with a != b."""
    return len(A.items) == 2 and all(m == A.p - 1 for _, m in A.items)


@dataclass
class EGZExtremalReport:
    p: int
    total_multisets: int
    sequences: list[ResidueSequence]
    deviations: list[ResidueSequence] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "size": 2 * self.p - 2,
            "total_multisets": self.total_multisets,
            "sequences": [s.to_dict() for s in self.sequences],
            "deviations": [s.to_dict() for s in self.deviations],
        }


def _affine_images(p: int, vec: tuple[int, ...]) -> set[tuple[int, ...]]:
    out = set()
    for b in range(1, p):
        for c in range(p):
            img = [0] * p
            for a, m in enumerate(vec):
                img[(b * a + c) % p] += m
            out.add(tuple(img))
    return out


def egz_extremal_classify(p: int, max_enumeration: int | None = 10**6,
                          workers: int = 1, orbit_reduce: bool = False) -> EGZExtremalReport:
    """All p-zero-sum-free multisets of size 2p-2, flagging any not of two-block shape.

    With ``orbit_reduce`` only one multiset per affine orbit x -> bx + c is tested;
    p-zero-sum-freeness is affine invariant, so the orbit is then expanded.
    """
    require_prime(p)
    size = 2 * p - 2
    check_budget(f"EGZ extremal p={p}", egz_budget(p, size), max_enumeration)
    if orbit_reduce:
        total, bad = _scan_orbits(p, size)
    else:
        total, bad = _scan(p, size, workers)
    seqs = [_to_seq(p, v) for v in bad]
    for s in seqs:
        if not is_l_zero_sum_free(s, p):
            raise AssertionError(f"{s} fails p-zero-sum-free re-validation")
    return EGZExtremalReport(p, total, seqs, [s for s in seqs if not is_two_block(s)])


def _scan_orbits(p: int, size: int) -> tuple[int, list[tuple[int, ...]]]:
    total = 0
    found = []
    for vec in multiplicity_vectors(p, size):
        orbit = _affine_images(p, vec)
        if vec != max(orbit):
            continue
        total += len(orbit)
        if not _has_zero_p_sum(p, vec):
            found.extend(orbit)
    if total != multisets_count(p, size):
        raise AssertionError("orbit sizes do not add up to the multiset count")
    return total, sorted(found)


def _normalizer(A: ResidueSequence) -> tuple[int, int]:
    """(a, u) such that x -> (x - a) * u sends the two most frequent residues to 0 and 1."""
    ranked = sorted(A.items, key=lambda am: (-am[1], am[0]))
    if len(ranked) < 2:
        raise PreconditionError("need at least two distinct residues")
    a, b = ranked[0][0], ranked[1][0]
    return a, pow(b - a, -1, A.p)


def greedy_zero_p_subsequence(A: ResidueSequence, normalize: bool = False) -> ResidueSequence | None:
    """A p-term sub-multiset summing to 0, built by the three-case greedy.

    ``A`` must look like {0^[p-k1], 1^[p-k2], a_1..a_l} with |A| = 2p-2 and
    k1, k2 >= 1. With ``normalize`` the two most frequent residues are first
    moved to 0 and 1 by an affine map, and the answer is mapped back.
    Returns None when A has no other elements or no case yields a valid subsequence.
    """
    p = A.p
    if normalize:
        a, u = _normalizer(A)
        moved = ResidueSequence.of(p, [(x - a) * u for x in A], capped=A.capped)
        out = greedy_zero_p_subsequence(moved)
        if out is None:
            return None
        uinv = pow(u, -1, p)
        return ResidueSequence.of(p, [x * uinv + a for x in out], capped=A.capped)

    m0, m1 = A.multiplicity(0), A.multiplicity(1)
    k1, k2 = p - m0, p - m1
    if len(A) != 2 * p - 2 or k1 < 1 or k2 < 1:
        raise PreconditionError(
            "expected {0^[p-k1], 1^[p-k2], ...} of size 2p-2 with k1, k2 >= 1")
    others = sorted(signed_rep(x, p) for x in A if x not in (0, 1))
    if not others:
        return None

    def build(zeros: int, ones: int, picked: list[int]) -> ResidueSequence | None:
        if not (0 <= zeros <= m0 and 0 <= ones <= m1):
            return None
        counts = {0: zeros, 1: ones}
        for v in picked:
            counts[v % p] = counts.get(v % p, 0) + 1
        seq = ResidueSequence.from_counts(p, counts, capped=A.capped)
        if len(seq) == p and seq.total() == 0 and seq.is_submultiset_of(A):
            return seq
        return None

    # Case 1: an element of absolute value at least p/6
    for v in sorted((v for v in others if 6 * abs(v) >= p), key=lambda v: (abs(v), v)):
        t = abs(v)
        out = build(t - 1, p - t, [v]) if v > 0 else build(p - t - 1, t, [v])
        if out is not None:
            return out

    negatives = sorted(v for v in others if v < 0)
    positives = sorted(v for v in others if v > 0)

    # Case 2: enough negatives; take the most negative first until l1 + |sum| >= k1
    if negatives and len(negatives) >= max(1, k1 - 1):
        picked: list[int] = []
        for v in negatives:
            picked.append(v)
            s = -sum(picked)
            if len(picked) + s >= k1:
                out = build(p - len(picked) - s, s, picked)
                if out is not None:
                    return out
                break

    # Case 3: enough positives; smallest-first prefix with sum >= k2
    if positives and len(positives) >= min(len(others), k2):
        picked = []
        for v in positives:
            picked.append(v)
            s = sum(picked)
            if s >= k2:
                out = build(s - len(picked), p - s, picked)
                if out is not None:
                    return out
                break
    return None


@dataclass
class Thm62Report:
    p: int
    size: int
    a: int
    b: int
    m_a: int
    m_b: int
    f_pp: int

    @property
    def excess(self) -> int:
        return self.size - self.p

    def to_dict(self) -> dict:
        return {
            "p": self.p, "size": self.size, "excess": self.excess,
            "a": self.a, "b": self.b, "m_a": self.m_a, "m_b": self.m_b,
            "m_a_plus_m_b": self.m_a + self.m_b, "f_p_p": self.f_pp,
        }


def thm62_structure(A: ResidueSequence) -> Thm62Report:
    """The two residues of highest multiplicity in a p-zero-sum-free sequence."""
    p = A.p
    if not p <= len(A) <= 2 * p - 2:
        raise PreconditionError(f"need p <= |A| <= 2p-2, got |A|={len(A)}")
    if not is_l_zero_sum_free(A, p):
        raise PreconditionError("A is not p-zero-sum-free")
    (a, ma), (b, mb) = sorted(A.items, key=lambda am: (-am[1], am[0]))[:2]
    return Thm62Report(p, len(A), a, b, ma, mb, f_control(p, p))
