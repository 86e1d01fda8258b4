import itertools
import math

import pytest
from hypothesis import given, strategies as st

from zerosum import oracles
from zerosum.classify import is_complete, is_zero_sum_free
from zerosum.core import ResidueSequence, dilate
from zerosum.counting import (
    CensusReport, PartitionTable, census, incomplete_from_two_partitions, meinardus_exponent,
    partition_count, partition_table, zsf_from_partition,
)
from zerosum.errors import BudgetExceeded, PreconditionError


def test_partition_examples():
    assert partition_count(5, 1) == 3
    assert partition_count(0, 1) == partition_count(0, 7) == partition_count(0) == 1
    assert partition_count(4, 2) == 4
    assert partition_count(5) == 7
    assert partition_count(10) == 42
    assert partition_count(100) == 190569292


def test_bounded_equals_unbounded_when_m_large():
    for n in range(30):
        assert partition_count(n, max(n, 1)) == partition_count(n)


def test_euler_identity():
    assert partition_table(50, 1) == [oracles.odd_part_partition_count(n) for n in range(51)]


@pytest.mark.parametrize("m", [1, 2, 3, None])
def test_table_matches_brute_force(m):
    assert partition_table(20, m) == [oracles.brute_partition_count(n, m) for n in range(21)]


def test_partition_table_round_trip():
    t = PartitionTable.build(200, 2)
    assert PartitionTable.from_dict(t.to_dict()) == t
    assert t[0] == 1 and t[200] == partition_count(200, 2)


def test_meinardus_exponent():
    assert meinardus_exponent(100, 1) == pytest.approx(math.pi * 10 / math.sqrt(3))
    assert meinardus_exponent(100, 1) == pytest.approx(18.138, abs=1e-3)
    assert meinardus_exponent(50) == pytest.approx(math.pi * math.sqrt(2 * 50 / 3))
    assert meinardus_exponent(50, 10**9) == pytest.approx(meinardus_exponent(50), rel=1e-8)
    with pytest.raises(PreconditionError):
        meinardus_exponent(0)


def test_census_examples():
    r = census(3, 1)
    assert (r.total, r.count_zero_sum_free) == (7, 2)
    assert census(2, 1).count_zero_sum_free == 1
    r = census(5, 1)
    assert r.total == 31


@pytest.mark.parametrize("p,m", [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (7, 2)])
def test_census_matches_brute_force(p, m):
    r = census(p, m)
    zsf, inc = oracles.brute_census(p, m)
    assert (r.count_zero_sum_free, r.count_incomplete) == (zsf, inc)
    assert r.total == (m + 1) ** p - 1


def test_census_workers_agree():
    assert census(7, 2, workers=2) == census(7, 2)


@pytest.mark.parametrize("p", [5, 7, 11])
@pytest.mark.parametrize("m", [1, 2])
def test_census_lower_bound(p, m):
    assert census(p, m).count_zero_sum_free >= partition_count(p - 1, m)


def test_census_dilation_permutes_classes():
    p, m = 5, 2
    zsf = set()
    for vec in itertools.product(range(m + 1), repeat=p):
        if any(vec):
            A = ResidueSequence.from_counts(p, dict(enumerate(vec)))
            if is_zero_sum_free(A):
                zsf.add(A)
    for b in range(1, p):
        assert {dilate(A, b) for A in zsf} == zsf


def test_census_budget_refusal():
    with pytest.raises(BudgetExceeded):
        census(31, 3, max_enumeration=10**6)


def test_census_report_dict():
    d = census(5, 1).to_dict()
    assert d["count_zero_sum_free"] == 8
    assert d["log_ratio_zsf"] == pytest.approx(math.log(8) / math.sqrt(5))
    assert CensusReport(5, 1, 31, 8, 21).log_ratio_inc == pytest.approx(math.log(21) / math.sqrt(5))


def test_zsf_from_partition():
    assert zsf_from_partition([4, 3, 2, 1], 11) == ResidueSequence.of(11, [1, 2, 3, 4])
    assert zsf_from_partition([12], 13) == ResidueSequence.of(13, [12])
    with pytest.raises(PreconditionError):
        zsf_from_partition([6, 5], 11)
    with pytest.raises(PreconditionError):
        zsf_from_partition([], 11)


def test_incomplete_from_two_partitions():
    A = incomplete_from_two_partitions([1, 2], [1, 3], 11)
    assert A == ResidueSequence.of(11, [1, 2, 10, 8])
    with pytest.raises(PreconditionError):
        incomplete_from_two_partitions([], [], 11)
    p = 13
    B = incomplete_from_two_partitions([(p - 3) // 2], [(p - 3) // 2], p)
    assert not is_complete(B)
    with pytest.raises(PreconditionError):
        incomplete_from_two_partitions([7], [5], 13)


@given(st.sampled_from([5, 7, 11, 13, 17]), st.data())
def test_partition_constructions_are_sound(p, data):
    parts = data.draw(st.lists(st.integers(1, p - 1), min_size=1, max_size=p))
    if sum(parts) <= p - 1:
        assert is_zero_sum_free(zsf_from_partition(parts, p))
    cut = data.draw(st.integers(0, len(parts)))
    pos, neg = parts[:cut], parts[cut:]
    if sum(parts) <= p - 2:
        assert not is_complete(incomplete_from_two_partitions(pos, neg, p))
