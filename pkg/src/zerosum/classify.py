"""Zero-sum-freeness and completeness, plus Olson's completeness threshold."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from zerosum.core import ResidueSequence, norm
from zerosum.errors import PreconditionError, check_budget
from zerosum.sumset import sigma, sigma_l


def is_zero_sum_free(A: ResidueSequence) -> bool:
    return 0 not in sigma(A)


def is_l_zero_sum_free(A: ResidueSequence, l: int) -> bool:
    if not 1 <= l <= len(A):
        raise PreconditionError(f"l={l} outside [1, {len(A)}]")
    return 0 not in sigma_l(A, l)


def is_complete(A: ResidueSequence) -> bool:
    return sigma(A).is_full()


def is_l_complete(A: ResidueSequence, l: int) -> bool:
    if not 1 <= l <= len(A):
        raise PreconditionError(f"l={l} outside [1, {len(A)}]")
    return sigma_l(A, l).is_full()


# Sufficient conditions only. The exact tests above are the ones to rely on.

def small_integer_sum(A: ResidueSequence) -> bool:
    """No zeros and the sum of the elements read in [1, p-1] is below p: implies zero-sum-free."""
    return 0 not in A and sum(A) < A.p


def small_norm_sum(A: ResidueSequence) -> bool:
    """Total norm below p - 1: implies incomplete."""
    return sum(norm(a, A.p) for a in A) < A.p - 1


@dataclass
class ClassificationReport:
    sequence: ResidueSequence
    zero_sum_free: bool
    complete: bool
    l_results: list[tuple[int, bool, bool]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "sequence": self.sequence.to_dict(),
            "zero_sum_free": self.zero_sum_free,
            "complete": self.complete,
            "l_results": [
                {"l": l, "l_zero_sum_free": zsf, "l_complete": comp}
                for l, zsf, comp in self.l_results
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> ClassificationReport:
        return cls(
            ResidueSequence.from_dict(d["sequence"]),
            d["zero_sum_free"],
            d["complete"],
            [(r["l"], r["l_zero_sum_free"], r["l_complete"]) for r in d["l_results"]],
        )


def classify(A: ResidueSequence, ls: list[int] | None = None) -> ClassificationReport:
    mask = sigma(A)
    rows = []
    for l in ls or []:
        if not 1 <= l <= len(A):
            raise PreconditionError(f"l={l} outside [1, {len(A)}]")
        m = sigma_l(A, l)
        rows.append((l, 0 not in m, m.is_full()))
    return ClassificationReport(A, 0 not in mask, mask.is_full(), rows)


def olson_min_size(p: int) -> int:
    """Smallest s with s > sqrt(4p - 3)."""
    return math.isqrt(4 * p - 3) + 1


def olson_budget(p: int) -> int:
    return sum(math.comb(p, s) for s in range(olson_min_size(p), p + 1))


@dataclass
class OlsonReport:
    p: int
    min_size: int
    checked: int
    violations: list[ResidueSequence]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "min_size": self.min_size,
            "checked": self.checked,
            "violations": [v.to_dict() for v in self.violations],
        }


def olson_threshold_check(p: int, max_enumeration: int | None = 10**6) -> OlsonReport:
    """Every subset of Z_p larger than sqrt(4p-3); returns the incomplete ones."""
    s0 = olson_min_size(p)
    check_budget(f"olson threshold p={p}", olson_budget(p), max_enumeration)
    violations = []
    checked = 0
    for s in range(s0, p + 1):
        for subset in itertools.combinations(range(p), s):
            checked += 1
            A = ResidueSequence(p, tuple((a, 1) for a in subset))
            if not is_complete(A):
                violations.append(A)
    return OlsonReport(p, s0, checked, violations)
