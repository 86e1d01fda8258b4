"""The acceptance battery, runnable from the CLI and from pytest.

Each criterion returns a CriterionResult; failures are reported, never raised.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from typing import Callable

from zerosum import oracles
from zerosum.classify import (
    is_complete, is_l_complete, is_zero_sum_free, olson_threshold_check,
)
from zerosum.core import ResidueSequence, dilate, translate
from zerosum.counting import census, partition_count
from zerosum.egz import egz_extremal_classify, egz_verify, is_two_block
from zerosum.extremal import build_A1, build_A2, build_A3, zerofree3_extremal, zerofree3_scan
from zerosum.lemmas import crt_bounded, crt_unit_fractions, lcm, zero_subset_mod_D
from zerosum.sumset import sigma, sigma_l
from zerosum.witness import thm1_witness, thm2_witness, thm3_witness, validate

PRIMES_TO_101 = [p for p in range(2, 102) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.name} ({self.seconds:.2f}s / {self.limit:.0f}s): {self.detail}"

    def to_dict(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed,
                "detail": self.detail, "seconds": round(self.seconds, 3), "limit": self.limit}


def _timed(number: int, name: str, limit: float, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        ok, detail = body()
    except Exception as exc:  # report, don't raise
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    dt = time.perf_counter() - t0
    if ok and dt > limit:
        ok, detail = False, f"{detail}; exceeded time limit"
    return CriterionResult(number, name, ok, detail, dt, limit)


def criterion_1() -> CriterionResult:
    def body():
        A = ResidueSequence.of(11, [1, 1, 7])
        s, s2 = sigma(A).residues(), sigma_l(A, 2).residues()
        ok = s == [1, 2, 7, 8, 9] and s2 == [2, 8]
        return ok, f"Sigma={s}, Sigma_2={s2}"
    return _timed(1, "worked example p=11, A={1,1,7}", 1, body)


def random_sequence(rng: random.Random, p: int, max_size: int) -> ResidueSequence:
    """Uniform elements, redrawn until no residue occurs more than p times."""
    while True:
        size = rng.randint(1, max_size)
        A = ResidueSequence.of(p, [rng.randrange(p) for _ in range(size)], capped=False)
        if A.max_multiplicity() <= p:
            return ResidueSequence(p, A.items)


def criterion_2(sigma_fn=sigma, sigma_l_fn=sigma_l, trials: int = 1000, seed: int = 2) -> CriterionResult:
    def check(A: ResidueSequence) -> str | None:
        by_size = oracles.brute_sums_by_size(A.elements(), A.p)
        nonempty = set().union(*(by_size[c] for c in range(1, len(A) + 1)))
        if set(sigma_fn(A).residues()) != nonempty:
            return f"sigma mismatch on {A}"
        for l in range(len(A) + 1):
            if set(sigma_l_fn(A, l).residues()) != by_size[l]:
                return f"sigma_l mismatch on {A}, l={l}"
        return None

    def body():
        failures = []
        n_exh = 0
        for vec in itertools.product(range(3), repeat=7):
            if 1 <= sum(vec) <= 6:
                n_exh += 1
                msg = check(ResidueSequence.from_counts(7, dict(enumerate(vec))))
                if msg:
                    failures.append((sum(vec), msg))
        rng = random.Random(seed)
        for _ in range(trials):
            msg = check(random_sequence(rng, rng.choice(PRIMES_TO_101), 16))
            if msg:
                failures.append((None, msg))
        if failures:
            smallest = min(failures, key=lambda f: f[0] if f[0] is not None else 99)
            return False, f"{len(failures)} mismatches; smallest: {smallest[1]}"
        return True, f"{n_exh} exhaustive + {trials} random sequences agree"
    return _timed(2, "sumset oracle equivalence", 60, body)


def criterion_3(primes=(2, 3, 5, 7)) -> CriterionResult:
    def body():
        parts = []
        for p in primes:
            r = egz_verify(p)
            if r.counterexamples:
                return False, f"p={p}: counterexample {r.counterexamples[0]}"
            parts.append(f"p={p}: 0/{r.total_multisets}")
        return True, ", ".join(parts)
    return _timed(3, "EGZ exhaustive", 60, body)


def criterion_4(primes=(3, 5, 7)) -> CriterionResult:
    def body():
        parts = []
        for p in primes:
            r = egz_extremal_classify(p)
            two_block = [s for s in r.sequences if is_two_block(s)]
            if len(two_block) != math.comb(p, 2):
                return False, f"p={p}: found {len(two_block)} two-block sequences, expected {math.comb(p, 2)}"
            flagged = [s for s in r.sequences if not is_two_block(s)]
            if flagged != r.deviations:
                return False, f"p={p}: deviation flags inconsistent"
            parts.append(f"p={p}: {len(r.sequences)} found, {len(r.deviations)} deviations"
                         + (f" {[str(d) for d in r.deviations]}" if r.deviations else ""))
        return True, "; ".join(parts)
    return _timed(4, "EGZ extremal shape", 120, body)


def criterion_5(primes=(7, 11, 13)) -> CriterionResult:
    def body():
        parts = []
        for p in primes:
            r = olson_threshold_check(p)
            if r.violations:
                return False, f"p={p}: incomplete set {r.violations[0]}"
            parts.append(f"p={p}: {r.checked} sets of size >= {r.min_size}")
        return True, ", ".join(parts)
    return _timed(5, "Olson completeness threshold", 120, body)


def criterion_6(primes=(11, 13), special=5) -> CriterionResult:
    def body():
        notes = []
        ok = True
        for p in primes:
            r = zerofree3_scan(p)
            if r.zero_sum_free_sets:
                ok = False
                notes.append(f"p={p}: zero-sum-free {r.n}-sets {[str(s) for s in r.zero_sum_free_sets]}")
            else:
                notes.append(f"p={p}: none of {r.checked}")
        ext, is_special = zerofree3_extremal(special)
        expected = sorted({dilate(ext, b) for b in range(1, special)}, key=str)
        found = sorted(zerofree3_scan(special).zero_sum_free_sets, key=str)
        if not is_special or found != expected:
            ok = False
        notes.append(f"p={special} special={is_special}: scan found {[str(s) for s in found]}, "
                     f"dilates of {ext} are {[str(s) for s in expected]}")
        if not ext.is_set():
            notes.append(f"-2 and 3 coincide mod {special}, so the extremal set has a repeated "
                         f"element and no {len(ext)}-subset can match it")
        return ok, "; ".join(notes)
    return _timed(6, "zerofree:3 scan", 60, body)


def criterion_7() -> CriterionResult:
    def body():
        for n in range(51):
            if partition_count(n, 1) != oracles.odd_part_partition_count(n):
                return False, f"Euler identity fails at n={n}"
        for n in range(21):
            for m in (1, 2, 3):
                if partition_count(n, m) != oracles.brute_partition_count(n, m):
                    return False, f"mismatch at n={n}, m={m}"
        fixed = (partition_count(5), partition_count(5, 1), partition_count(4, 2))
        return fixed == (7, 3, 4), f"Euler n<=50, brute n<=20 m<=3; p(5), p1(5), p2(4) = {fixed}"
    return _timed(7, "partition counting", 10, body)


def criterion_8(primes=(3, 5, 7), ms=(1, 2)) -> CriterionResult:
    def body():
        parts = []
        for p in primes:
            for m in ms:
                r = census(p, m)
                brute = oracles.brute_census(p, m)
                if (r.count_zero_sum_free, r.count_incomplete) != brute:
                    return False, f"p={p} m={m}: census {r.count_zero_sum_free, r.count_incomplete} vs brute {brute}"
                lower = partition_count(p - 1, m)
                if r.count_zero_sum_free < lower:
                    return False, f"p={p} m={m}: {r.count_zero_sum_free} < p_m(p-1)={lower}"
                parts.append(f"({p},{m}): zsf={r.count_zero_sum_free} inc={r.count_incomplete}")
        return True, " ".join(parts)
    return _timed(8, "census consistency", 120, body)


def random_zero_sum_free(rng: random.Random) -> ResidueSequence:
    """Small-sum core plus noise, scrambled by a dilation; retried until zero-sum-free."""
    while True:
        p = rng.choice([q for q in PRIMES_TO_101 if q >= 5])
        core, total = [], 0
        while True:
            x = rng.randint(1, max(1, p // 4))
            if total + x >= p:
                break
            core.append(x)
            total += x
        noise = [rng.randrange(1, p) for _ in range(rng.randint(0, 3))]
        A = ResidueSequence.of(p, core + noise, capped=False)
        if A.max_multiplicity() > p:
            continue
        A = dilate(ResidueSequence(p, A.items), rng.randrange(1, p))
        if len(A) and is_zero_sum_free(A):
            return A


def random_incomplete(rng: random.Random) -> ResidueSequence:
    while True:
        p = rng.choice([q for q in PRIMES_TO_101 if q >= 5])
        core, total = [], 0
        while True:
            x = rng.randint(-max(1, p // 8), max(1, p // 8))
            if total + abs(x) >= p - 1:
                break
            core.append(x)
            total += abs(x)
        noise = [rng.randrange(p) for _ in range(rng.randint(0, 3))]
        A = ResidueSequence.of(p, core + noise, capped=False)
        if A.max_multiplicity() > p:
            continue
        A = dilate(ResidueSequence(p, A.items), rng.randrange(1, p))
        if len(A) and not is_complete(A):
            return A


def criterion_9(trials: int = 500, seed: int = 9) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        removed1 = removed2 = 0
        for _ in range(trials):
            A = random_zero_sum_free(rng)
            w = thm1_witness(A)
            if w is None or not validate(w, A):
                return False, f"thm1 failed on {A}"
            removed1 = max(removed1, len(w.a_flat))
            B = random_incomplete(rng)
            w2 = thm2_witness(B)
            if w2 is None or not validate(w2, B):
                return False, f"thm2 failed on {B}"
            removed2 = max(removed2, len(w2.a_flat))
        for p in (5, 7, 11, 13, 31, 101):
            for m in (1, 2, 3):
                if m > p:
                    continue
                A1 = build_A1(p, m).sequence
                w = thm1_witness(A1)
                if w.b != 1 or len(w.a_flat):
                    return False, f"A1({p},{m}) gave {w}"
                A2 = build_A2(p, m).sequence
                w = thm2_witness(A2)
                if w.b != 1 or len(w.a_flat):
                    return False, f"A2({p},{m}) gave {w}"
                for l in (1, 2, 3):
                    spec = build_A3(p, m, l)
                    if spec is None:
                        continue
                    w = thm3_witness(spec.sequence, l, window=0)
                    if w is None or (w.b, w.c, len(w.a_flat), w.l1) != (1, 0, 0, l):
                        return False, f"A3({p},{m},{l}) gave {w}"
        return True, (f"{trials} zero-sum-free + {trials} incomplete witnesses validate "
                      f"(max |A_flat| {removed1}, {removed2}); extremal families give b=1, empty A_flat")
    return _timed(9, "witness validity", 120, body)


def criterion_10(fuzz: int = 1000, seed: int = 10) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        count = 0
        # zero-sum block: exhaustive for D <= 5, then fuzz with D <= 50
        cases = [(D, X) for D in range(1, 6) for X in itertools.product(range(D), repeat=D)]
        for _ in range(fuzz):
            D = rng.randint(1, 50)
            cases.append((D, tuple(rng.randrange(-100, 100) for _ in range(D))))
        for D, X in cases:
            out = zero_subset_mod_D(X, D)
            # output must be a non-empty sub-multiset of X summing to 0
            left = list(X)
            for x in out:
                left.remove(x)
            if not out or sum(out) % D:
                return False, f"zero_subset_mod_D{X, D} -> {out}"
            count += 1
        # unit fractions: every set of distinct d with lcm <= 60, every r
        for dl in _d_lists_lcm_le(60):
            D = lcm(dl)
            for r in range(D):
                if not crt_unit_fractions(dl, r).unit_fraction_ok():
                    return False, f"crt_unit_fractions{dl, r}"
                count += 1
        for _ in range(fuzz):
            dl = tuple(rng.sample(range(1, 200), rng.randint(1, 5)))
            r = rng.randrange(lcm(dl))
            if not crt_unit_fractions(dl, r).unit_fraction_ok():
                return False, f"crt_unit_fractions{dl, r}"
            count += 1
        # bounded: every D <= 60, single generators and pairs from [1, D] with gcd 1
        for D in range(1, 61):
            gens = [(d,) for d in range(1, D + 1)] + list(itertools.combinations(range(1, D + 1), 2))
            for dl in gens:
                if math.gcd(D, *dl) != 1:
                    continue
                for r in range(D) if D <= 20 else (0, 1, D // 2, D - 1):
                    if not crt_bounded(dl, D, r).bounded_ok():
                        return False, f"crt_bounded{dl, D, r}"
                    count += 1
        for _ in range(fuzz):
            D = rng.randint(1, 500)
            dl = tuple(rng.randint(1, 1000) for _ in range(rng.randint(1, 4)))
            if math.gcd(D, *dl) != 1:
                dl = dl + (1,)
            r = rng.randrange(D)
            if not crt_bounded(dl, D, r).bounded_ok():
                return False, f"crt_bounded{dl, D, r}"
            count += 1
        return True, f"{count} lemma postconditions hold"
    return _timed(10, "lemma toolkit", 60, body)


def _d_lists_lcm_le(limit: int) -> list[tuple[int, ...]]:
    """All sets of distinct positive integers (as sorted tuples) whose lcm is at most ``limit``."""
    out = []

    def rec(start: int, cur: tuple[int, ...], L: int):
        if cur:
            out.append(cur)
        for d in range(start, limit + 1):
            L2 = L * d // math.gcd(L, d)
            if L2 <= limit:
                rec(d + 1, cur + (d,), L2)

    rec(1, (), 1)
    return out


def criterion_11(trials: int = 1000, seed: int = 11) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        checks = 0
        for _ in range(trials):
            p = rng.choice(PRIMES_TO_101)
            A = random_sequence(rng, p, 12)
            b, c = rng.randrange(1, p), rng.randrange(p)
            l = rng.randint(1, len(A))
            S, Sl = sigma(A), sigma_l(A, l)
            if sigma(dilate(A, b)) != S.dilate(b):
                return False, f"dilation equivariance of sigma fails: {A}, b={b}"
            if sigma_l(dilate(A, b), l) != Sl.dilate(b):
                return False, f"dilation equivariance of sigma_l fails: {A}, b={b}, l={l}"
            if sigma_l(translate(A, c), l) != Sl.shift(l * c):
                return False, f"translation rule fails: {A}, c={c}, l={l}"
            if S.is_full() and 0 not in S:
                return False, f"complete but zero-sum-free: {A}"
            if 0 not in S and len(S) < len(A):
                return False, f"|Sigma(A)| < |A| for zero-sum-free {A}"
            if is_l_complete(A, l) != is_l_complete(translate(dilate(A, b), c), l):
                return False, f"l-completeness not affine invariant: {A}, b={b}, c={c}, l={l}"
            checks += 6
        return True, f"{checks} property checks over {trials} trials"
    return _timed(11, "invariant battery", 60, body)


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
    11: criterion_11,
}

QUICK_ARGS = {
    3: dict(primes=(2, 3, 5, 7)),
    4: dict(primes=(3, 5)),
    5: dict(primes=(7,)),
    6: dict(primes=(), special=5),
    8: dict(primes=(3, 5), ms=(1, 2)),
}


def verify_suite(level: str = "full") -> list[CriterionResult]:
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    results = []
    for n, fn in CRITERIA.items():
        kwargs = QUICK_ARGS.get(n, {}) if level == "quick" else {}
        results.append(fn(**kwargs))
    return results

