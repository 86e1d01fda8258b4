import pytest

from zerosum.classify import is_complete, is_l_complete, is_zero_sum_free
from zerosum.core import ResidueSequence, dilate
from zerosum.errors import BudgetExceeded, PreconditionError
from zerosum.extremal import (
    ExtremalSpec, build_A1, build_A2, build_A3, n_of_p, thm_zerofree1_witness, zerofree3_extremal,
    zerofree3_scan,
)
from zerosum.suite import PRIMES_TO_101
from zerosum.sumset import lsum_range_int


def seq(p, *elems):
    return ResidueSequence.of(p, elems)


def test_n_of_p_examples():
    assert n_of_p(11) == 5
    assert n_of_p(2) == 2
    assert n_of_p(13) == 5


@pytest.mark.parametrize("p", PRIMES_TO_101)
def test_n_of_p_sandwich(p):
    n = n_of_p(p)
    assert n * (n - 1) // 2 < p <= n * (n + 1) // 2


def test_build_A1_examples():
    s = build_A1(11, 1)
    assert (s.n, s.k, s.sequence) == (4, 1, seq(11, 1, 2, 3, 4))
    s = build_A1(13, 1)
    assert (s.n, s.k, s.sequence) == (4, 1, seq(13, 1, 2, 3, 4))
    s = build_A1(11, 2)
    assert (s.n, s.k, s.sequence) == (3, 1, seq(11, 1, 1, 2, 2, 3))


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 23, 31])
def test_build_A1_zero_sum_free_and_maximal(p):
    for m in sorted({1, 2, 3, p}):
        s = build_A1(p, m)
        A = s.sequence
        assert is_zero_sum_free(A)
        assert sum(A) <= p - 1
        counts = A.counts()
        # any further element from [1, n+1] that keeps multiplicities <= m overflows the sum
        for x in range(1, s.n + 2):
            if counts.get(x, 0) < m:
                assert sum(A) + x >= p


def test_build_A2_examples():
    for p in (11, 13):
        s = build_A2(p, 1)
        assert (s.n, s.k) == (2, 1)
        assert s.sequence == seq(p, -2, -1, 0, 1, 2)
    s = build_A2(3, 1)
    assert s.degenerate and s.sequence == seq(3, 0)


def test_naive_A2_sandwich_is_complete():
    # the n=3, k=1 candidate at p=13 has norm sum p-1 and covers every residue
    assert is_complete(seq(13, -3, -2, -1, 0, 1, 2, 3))


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 29])
def test_build_A2_incomplete(p):
    for m in sorted({1, 2, p}):
        s = build_A2(p, m)
        assert not is_complete(s.sequence)


def test_build_A3_example():
    s = build_A3(7, 3, 3)
    assert s.sequence == ResidueSequence.from_counts(7, {6: 2, 0: 3, 1: 2})
    r = lsum_range_int(s.sequence.signed(), 3)
    assert r.hi - r.lo < 7
    assert not is_l_complete(s.sequence, 3)


def test_build_A3_infeasible():
    assert build_A3(5, 1, 6) is None
    assert build_A3(5, 1, 5).sequence == ResidueSequence.of(5, range(5))
    with pytest.raises(PreconditionError):
        build_A3(5, 1, 0)


@pytest.mark.parametrize("p", PRIMES_TO_101)
def test_build_A3_valid_for_small_primes(p):
    for m, l in [(1, 1), (p, p), (2, max(1, p // 3))]:
        s = build_A3(p, m, l)
        if s is None:
            continue
        assert len(s.sequence) >= l
        r = lsum_range_int(s.sequence.signed(), l)
        assert r.hi - r.lo < p


def test_spec_round_trip():
    for s in (build_A1(11, 2), build_A2(3, 1), build_A3(7, 3, 3)):
        assert ExtremalSpec.from_dict(s.to_dict()) == s


def test_zerofree3_extremal_examples():
    for p in (11, 13):
        A, special = zerofree3_extremal(p)
        assert A == seq(p, -2, 1, 3, 4, 5) and not special
        # outside the special case no n(p)-set is zero-sum-free, this one included
        assert not is_zero_sum_free(A)
    A, special = zerofree3_extremal(5)
    assert special
    # -2 and 3 coincide mod 5, so the "set" is the sequence {1, 3, 3}
    assert A == seq(5, 1, 3, 3)
    assert is_zero_sum_free(A)


@pytest.mark.parametrize("p", [7, 11, 13, 17, 19])
def test_zerofree3_scan_non_special(p):
    r = zerofree3_scan(p)
    assert not r.special
    assert r.zero_sum_free_sets == []


def test_zerofree3_scan_p5():
    r = zerofree3_scan(5)
    assert r.special and r.checked == 4
    # no 3-subset of Z_5 without 0 is zero-sum-free
    assert r.zero_sum_free_sets == []


def test_zerofree3_budget():
    with pytest.raises(BudgetExceeded):
        zerofree3_scan(101, max_enumeration=10)


def test_thm_zerofree1_witness_examples():
    A1 = build_A1(11, 1).sequence
    assert thm_zerofree1_witness(A1, 1) == (1, ResidueSequence(11))
    assert thm_zerofree1_witness(seq(11, 4, 8, 1), 1) == (3, ResidueSequence(11))
    b, flat = thm_zerofree1_witness(seq(11, 1, 2, 5), 1)
    assert len(flat) == 1
    assert dilate(seq(11, 1, 2, 5).minus(flat), b).is_submultiset_of(A1)
    assert thm_zerofree1_witness(seq(11, 1, 2, 5), 1, budget=0) is None
    with pytest.raises(PreconditionError):
        thm_zerofree1_witness(seq(11, 1, 10), 1)
